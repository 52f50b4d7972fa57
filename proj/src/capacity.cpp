#include "eacode/capacity.hpp"

#include <algorithm>
#include <sstream>

#include "eacode/error.hpp"

namespace eacode {

namespace {

const Rational kZero(0);

void check_lambda(const Rational& x, const char* what) {
    if (x < kZero) throw Error(ErrorCode::BadFormat, std::string(what) + " must be nonnegative");
}

// a + b * lambdaB
struct Line {
    Rational a, b;
    Rational at(const Rational& x) const { return a + b * x; }
};

Line cut_line(const RegionParams& p) {
    return {Rational(std::max(2 * p.K - p.N, 0)), Rational(std::max(2 * p.KB - p.NB, 0))};
}

Line r1_line(const RegionParams& p) {
    std::int64_t c = std::int64_t{p.K} * (2 * p.KB - p.NB);
    std::int64_t d = std::int64_t{p.N - 2 * p.K} * 2 * p.KB + std::int64_t{p.K} * p.NB;
    return {Rational(c * (p.N - 2 * p.K), d), Rational(c * p.NB, d)};
}

}  // namespace

void RegionParams::validate() const {
    if (K < 0 || K > N || KB < 0 || KB > NB)
        throw Error(ErrorCode::ParamMismatch, "need 0 <= K <= N and 0 <= KB <= NB");
}

std::string to_string(RegionCase c) {
    switch (c) {
        case RegionCase::Case1: return "Case1";
        case RegionCase::Case2: return "Case2";
        case RegionCase::Case3: return "Case3";
    }
    return "?";
}

std::string to_string(Membership m) {
    switch (m) {
        case Membership::InsideInner: return "InsideInner";
        case Membership::OnInnerBoundary: return "OnInnerBoundary";
        case Membership::OpenGap: return "OpenGap";
        case Membership::OutsideOuter: return "OutsideOuter";
    }
    return "?";
}

RegionCase case_of(const RegionParams& p) {
    p.validate();
    if (2 * p.KB <= p.NB) return RegionCase::Case1;
    if (2 * p.K >= p.N) return RegionCase::Case2;
    return RegionCase::Case3;
}

Rational cut_bound(const RegionParams& p, const Rational& lambdaB) {
    p.validate();
    check_lambda(lambdaB, "lambdaB");
    return cut_line(p).at(lambdaB);
}

Rational inf_bound(const RegionParams& p) {
    p.validate();
    if (p.KB == 0) throw Error(ErrorCode::UndefinedForZeroKB, "unlimited-assistance bound needs KB >= 1");
    return Rational(std::min(p.N, 2 * p.K)) - Rational(std::min(p.N - p.K, p.K)) * Rational(p.NB, p.KB);
}

Rational r1_bound(const RegionParams& p, const Rational& lambdaB) {
    if (case_of(p) != RegionCase::Case3) throw Error(ErrorCode::CaseMismatch, "r1 bound is defined in Case 3 only");
    check_lambda(lambdaB, "lambdaB");
    return r1_line(p).at(lambdaB);
}

Rational outer_capacity(const RegionParams& p, const Rational& lambdaB) {
    Rational cut = cut_bound(p, lambdaB);
    if (case_of(p) == RegionCase::Case1) return cut;
    return std::max(kZero, std::min(cut, inf_bound(p)));
}

Rational inner_capacity(const RegionParams& p, const Rational& lambdaB) {
    if (case_of(p) != RegionCase::Case3) return outer_capacity(p, lambdaB);
    return std::max(kZero, std::min({cut_bound(p, lambdaB), inf_bound(p), r1_bound(p, lambdaB)}));
}

std::vector<ExtremePoint> extreme_points(const RegionParams& p) {
    RegionCase c = case_of(p);
    std::vector<ExtremePoint> out{{{Rational(std::max(2 * p.K - p.N, 0)), kZero}, "no-assistance", false}};
    if (c == RegionCase::Case2) {
        out.push_back({{Rational(p.N) - Rational(std::int64_t{p.N - p.K} * p.NB, p.KB), Rational(p.N - p.K, p.KB)},
                       "saturation",
                       false});
    } else if (c == RegionCase::Case3) {
        out.push_back({{Rational(std::int64_t{p.K} * (2 * p.KB - p.NB), 2 * p.KB), Rational(p.K, 2 * p.KB)},
                       "low-corner",
                       true});
        out.push_back({{Rational(2 * p.K) * (Rational(1) - Rational(p.NB, 2 * p.KB)),
                        Rational(p.N - 2 * p.K, p.NB) + Rational(p.K, p.KB)},
                       "high-corner",
                       true});
    }
    return out;
}

MembershipVerdict membership(const RegionParams& p, const RatePoint& x) {
    check_lambda(x.lambda0, "lambda0");
    MembershipVerdict v;
    v.inner_cap = inner_capacity(p, x.lambdaB);
    v.outer_cap = outer_capacity(p, x.lambdaB);
    v.on_outer_boundary = x.lambda0 == v.outer_cap;
    if (x.lambda0 < v.inner_cap) {
        v.status = Membership::InsideInner;
    } else if (x.lambda0 == v.inner_cap) {
        v.status = Membership::OnInnerBoundary;
    } else if (x.lambda0 <= v.outer_cap) {
        v.status = Membership::OpenGap;
    } else {
        v.status = Membership::OutsideOuter;
    }
    return v;
}

std::vector<Rational> breakpoints(const RegionParams& p) {
    RegionCase c = case_of(p);
    std::vector<Line> lines{{kZero, kZero}, cut_line(p)};
    if (c != RegionCase::Case1) lines.push_back({inf_bound(p), kZero});
    if (c == RegionCase::Case3) lines.push_back(r1_line(p));

    std::vector<Rational> cand;
    for (std::size_t i = 0; i < lines.size(); ++i)
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
            if (lines[i].b == lines[j].b) continue;
            Rational x = (lines[j].a - lines[i].a) / (lines[i].b - lines[j].b);
            if (x > kZero) cand.push_back(x);
        }
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    if (cand.empty()) return cand;

    // Both curves are piecewise linear with pieces between candidates, so a
    // probe closer than any gap decides whether the slope changes.
    Rational delta = cand.front() / 4;
    for (std::size_t i = 1; i < cand.size(); ++i) delta = std::min(delta, (cand[i] - cand[i - 1]) / 4);
    std::vector<Rational> out;
    for (const Rational& x : cand) {
        auto kink = [&](auto&& f) { return f(p, x) * 2 != f(p, x - delta) + f(p, x + delta); };
        if (kink(inner_capacity) || kink(outer_capacity)) out.push_back(x);
    }
    return out;
}

std::vector<BoundarySample> boundary_samples(const RegionParams& p, int n_points) {
    if (n_points < 2) throw Error(ErrorCode::BadFormat, "need at least two sample points");
    auto bps = breakpoints(p);
    Rational span = bps.empty() ? Rational(1) : bps.back() * 2;
    std::vector<Rational> xs = bps;
    for (int i = 0; i < n_points; ++i) xs.push_back(span * Rational(i, n_points - 1));
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::vector<BoundarySample> out;
    for (const Rational& x : xs)
        out.push_back({x, inner_capacity(p, x), outer_capacity(p, x), std::binary_search(bps.begin(), bps.end(), x)});
    return out;
}

std::string to_csv(const std::vector<BoundarySample>& samples) {
    std::ostringstream os;
    os << "lambdaB,inner_lambda0,outer_lambda0,lambdaB_decimal,inner_decimal,outer_decimal\n";
    for (auto& s : samples)
        os << to_string(s.lambdaB) << ',' << to_string(s.inner) << ',' << to_string(s.outer) << ','
           << to_decimal(s.lambdaB) << ',' << to_decimal(s.inner) << ',' << to_decimal(s.outer) << '\n';
    return os.str();
}

}  // namespace eacode
