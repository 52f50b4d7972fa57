#include "eacode/gf.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include "eacode/error.hpp"

namespace eacode {
namespace {

using Poly = std::vector<std::uint32_t>;  // low-to-high, trimmed

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    // p is prime, a != 0 mod p
    std::int64_t t = 0, new_t = 1, r = p, new_r = a % p;
    while (new_r != 0) {
        std::int64_t quot = r / new_r;
        std::tie(t, new_t) = std::make_pair(new_t, t - quot * new_t);
        std::tie(r, new_r) = std::make_pair(new_r, r - quot * new_r);
    }
    if (t < 0) t += p;
    return static_cast<std::uint32_t>(t);
}

// Remainder of a modulo b over F_p; b nonzero.
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
    trim(a);
    const std::size_t db = b.size() - 1;
    const std::uint32_t lead_inv = inv_mod(b.back(), p);
    while (a.size() >= b.size()) {
        const std::size_t shift = a.size() - b.size();
        const std::uint64_t f = (std::uint64_t{a.back()} * lead_inv) % p;
        for (std::size_t i = 0; i <= db; ++i) {
            const std::uint64_t sub = (f * b[i]) % p;
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
        }
        trim(a);
    }
    return a;
}

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& mod, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t{a[i]} * b[j]) % p);
    return poly_mod(std::move(r), mod, p);
}

Poly to_poly(std::uint32_t v, std::uint32_t p) {
    Poly r;
    while (v) {
        r.push_back(v % p);
        v /= p;
    }
    return r;
}

std::uint32_t from_poly(const Poly& a, std::uint32_t p) {
    std::uint32_t v = 0;
    for (auto it = a.rbegin(); it != a.rend(); ++it) v = v * p + *it;
    return v;
}

std::vector<std::uint32_t> prime_factors(std::uint32_t n) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace

std::pair<std::uint32_t, std::uint32_t> prime_power_decompose(std::uint32_t q) {
    if (q < 2) return {0, 0};
    std::uint32_t p = 0;
    for (std::uint32_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) return {q, 1};
    std::uint32_t m = 0;
    while (q % p == 0) {
        q /= p;
        ++m;
    }
    if (q != 1) return {0, 0};
    return {p, m};
}

std::uint32_t next_prime_power(std::uint32_t n) {
    if (n < 2) n = 2;
    while (prime_power_decompose(n).first == 0) ++n;
    return n;
}

bool is_irreducible(const std::vector<std::uint32_t>& poly, std::uint32_t p) {
    Poly f = poly;
    trim(f);
    if (f.size() < 2) return false;
    const std::size_t deg = f.size() - 1;
    if (deg == 1) return true;
    // Every monic divisor of degree d <= deg/2 is tried.
    for (std::size_t d = 1; d <= deg / 2; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t low = 0; low < count; ++low) {
            Poly g(d + 1, 0);
            std::uint64_t v = low;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = static_cast<std::uint32_t>(v % p);
                v /= p;
            }
            g[d] = 1;
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

Field Field::make(std::uint32_t q) {
    static std::mutex mu;
    static std::map<std::uint32_t, std::shared_ptr<const Impl>> cache;
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find(q); it != cache.end()) return Field(it->second);
    }
    if (q > kMaxFieldOrder) throw Error(ErrorCode::TooLarge, "field order " + std::to_string(q));
    auto [p, m] = prime_power_decompose(q);
    if (p == 0) throw Error(ErrorCode::NotPrimePower, std::to_string(q) + " is not a prime power");

    auto impl = std::make_shared<Impl>();
    impl->q = q;
    impl->p = p;
    impl->m = m;

    if (m == 1) {
        impl->modulus = {0, 1};  // x
    } else {
        std::uint64_t count = 1;
        for (std::uint32_t i = 0; i < m; ++i) count *= p;
        for (std::uint64_t low = 0; low < count; ++low) {
            Poly cand(m + 1, 0);
            std::uint64_t v = low;
            for (std::uint32_t i = 0; i < m; ++i) {
                cand[i] = static_cast<std::uint32_t>(v % p);
                v /= p;
            }
            cand[m] = 1;
            if (is_irreducible(cand, p)) {
                impl->modulus = cand;
                break;
            }
        }
    }

    // Multiplicative group tables from the smallest primitive element.
    const auto factors = prime_factors(q - 1);
    auto slow_mul = [&](std::uint32_t a, std::uint32_t b) -> std::uint32_t {
        if (m == 1) return static_cast<std::uint32_t>((std::uint64_t{a} * b) % p);
        return from_poly(poly_mul_mod(to_poly(a, p), to_poly(b, p), impl->modulus, p), p);
    };
    auto slow_pow = [&](std::uint32_t a, std::uint64_t e) {
        std::uint32_t r = 1;
        while (e) {
            if (e & 1) r = slow_mul(r, a);
            a = slow_mul(a, a);
            e >>= 1;
        }
        return r;
    };
    std::uint32_t gen = 1;
    if (q > 2) {
        for (gen = 2; gen < q; ++gen) {
            bool primitive = true;
            for (auto r : factors) {
                if (slow_pow(gen, (q - 1) / r) == 1) {
                    primitive = false;
                    break;
                }
            }
            if (primitive) break;
        }
    }
    impl->exp.resize(q - 1);
    impl->log.assign(q, 0);
    std::uint32_t cur = 1;
    for (std::uint32_t i = 0; i + 1 < q; ++i) {
        impl->exp[i] = cur;
        impl->log[cur] = i;
        cur = slow_mul(cur, gen);
    }
    std::lock_guard lock(mu);
    auto& slot = cache[q];
    if (!slot) slot = std::move(impl);
    return Field(slot);
}

Elem Field::add_digits(Elem a, Elem b) const {
    const std::uint32_t p = impl_->p;
    Elem r = 0, scale = 1;
    for (std::uint32_t i = 0; i < impl_->m; ++i) {
        const std::uint32_t d = (a % p + b % p) % p;
        r += d * scale;
        scale *= p;
        a /= p;
        b /= p;
    }
    return r;
}

Elem Field::neg_digits(Elem a) const {
    const std::uint32_t p = impl_->p;
    Elem r = 0, scale = 1;
    for (std::uint32_t i = 0; i < impl_->m; ++i) {
        const std::uint32_t d = a % p;
        r += ((p - d) % p) * scale;
        scale *= p;
        a /= p;
    }
    return r;
}

Elem Field::inv(Elem a) const {
    if (a == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
    if (impl_->m == 1) return inv_mod(a, impl_->p);
    const std::uint32_t l = impl_->log[a];
    return impl_->exp[l == 0 ? 0 : impl_->q - 1 - l];
}

Elem Field::pow(Elem a, std::uint64_t e) const {
    Elem r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

std::string Field::describe() const {
    std::ostringstream os;
    os << "GF(" << q() << ")";
    if (m() > 1) {
        os << " mod ";
        bool first = true;
        for (std::size_t i = modulus().size(); i-- > 0;) {
            const auto c = modulus()[i];
            if (c == 0) continue;
            if (!first) os << " + ";
            first = false;
            if (c != 1 || i == 0) os << c;
            if (i >= 1) os << "x";
            if (i >= 2) os << "^" << i;
        }
    }
    return os.str();
}

}  // namespace eacode
