#include "eacode/rational.hpp"

#include <charconv>

#include "eacode/error.hpp"

namespace eacode {

namespace {

std::int64_t parse_int(std::string_view s, const std::string& whole) {
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || p != s.data() + s.size())
        throw Error(ErrorCode::BadFormat, "not a rational: '" + whole + "'");
    return v;
}

}  // namespace

std::string to_string(const Rational& x) {
    if (x.denominator() == 1) return std::to_string(x.numerator());
    return std::to_string(x.numerator()) + "/" + std::to_string(x.denominator());
}

Rational parse_rational(const std::string& s) {
    std::string_view v = s;
    if (auto slash = v.find('/'); slash != std::string_view::npos) {
        auto den = parse_int(v.substr(slash + 1), s);
        if (den == 0) throw Error(ErrorCode::BadFormat, "zero denominator in '" + s + "'");
        return Rational(parse_int(v.substr(0, slash), s), den);
    }
    if (auto dot = v.find('.'); dot != std::string_view::npos) {
        auto frac = v.substr(dot + 1);
        if (frac.size() > 15) throw Error(ErrorCode::BadFormat, "too many decimals in '" + s + "'");
        bool neg = !v.empty() && v[0] == '-';
        auto ip = v.substr(0, dot);
        std::int64_t whole = (ip.empty() || ip == "-") ? 0 : parse_int(ip, s);
        std::int64_t scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        std::int64_t f = frac.empty() ? 0 : parse_int(frac, s);
        if (f < 0) throw Error(ErrorCode::BadFormat, "not a rational: '" + s + "'");
        Rational r(whole);
        Rational fr(f, scale);
        return neg ? r - fr : r + fr;
    }
    return Rational(parse_int(v, s));
}

std::string to_decimal(const Rational& x, int digits) {
    std::int64_t scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    bool neg = x < Rational(0);
    Rational a = neg ? -x : x;
    // round(a * scale) with ties away from zero
    Rational scaled = a * scale + Rational(1, 2);
    std::int64_t n = scaled.numerator() / scaled.denominator();
    std::string out = (neg && n != 0 ? "-" : "") + std::to_string(n / scale);
    if (digits > 0) {
        std::string frac = std::to_string(n % scale);
        out += "." + std::string(static_cast<std::size_t>(digits) - frac.size(), '0') + frac;
    }
    return out;
}

}  // namespace eacode
