#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace eacode {

/// Field element: base-p digits of the integer are the polynomial coefficients
/// (lowest digit = constant term).
using Elem = std::uint32_t;

/// Largest supported field order.
inline constexpr std::uint32_t kMaxFieldOrder = 1u << 16;

/// Finite field F_q, q = p^m, with exact arithmetic.
///
/// Copies are cheap: the arithmetic tables live behind a shared immutable
/// block, so a Field can be stored by value in every matrix.
class Field {
public:
    /// Builds F_q with the lowest-lexicographic monic irreducible modulus of
    /// degree m over F_p. Throws NotPrimePower for q that is not p^m, and
    /// TooLarge above kMaxFieldOrder.
    static Field make(std::uint32_t q);

    std::uint32_t q() const { return impl_->q; }
    std::uint32_t p() const { return impl_->p; }
    std::uint32_t m() const { return impl_->m; }
    /// Monic modulus coefficients, low-to-high, length m + 1.
    const std::vector<std::uint32_t>& modulus() const { return impl_->modulus; }

    Elem add(Elem a, Elem b) const {
        if (impl_->p == 2) return a ^ b;
        if (impl_->m == 1) {
            Elem s = a + b;
            return s >= impl_->p ? s - impl_->p : s;
        }
        return add_digits(a, b);
    }
    Elem neg(Elem a) const {
        if (impl_->p == 2 || a == 0) return a;
        if (impl_->m == 1) return impl_->p - a;
        return neg_digits(a);
    }
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem mul(Elem a, Elem b) const {
        if (a == 0 || b == 0) return 0;
        if (impl_->m == 1) return static_cast<Elem>((std::uint64_t{a} * b) % impl_->p);
        std::uint32_t s = impl_->log[a] + impl_->log[b];
        if (s >= impl_->q - 1) s -= impl_->q - 1;
        return impl_->exp[s];
    }
    /// Throws DivisionByZero on a == 0.
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, std::uint64_t e) const;

    /// A fixed generator of the multiplicative group.
    Elem primitive() const { return impl_->exp.size() > 1 ? impl_->exp[1] : 1; }

    bool contains(Elem a) const { return a < impl_->q; }

    std::string describe() const;

    friend bool operator==(const Field& a, const Field& b) {
        return a.impl_ == b.impl_ || (a.q() == b.q() && a.modulus() == b.modulus());
    }
    friend bool operator!=(const Field& a, const Field& b) { return !(a == b); }

private:
    struct Impl {
        std::uint32_t q = 0, p = 0, m = 0;
        std::vector<std::uint32_t> modulus;
        std::vector<Elem> exp;           // exp[i] = g^i, i in [0, q-1)
        std::vector<std::uint32_t> log;  // log[exp[i]] = i
    };

    explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

    Elem add_digits(Elem a, Elem b) const;
    Elem neg_digits(Elem a) const;

    std::shared_ptr<const Impl> impl_;
};

/// Returns (p, m) with q = p^m, or (0, 0) if q is not a prime power.
std::pair<std::uint32_t, std::uint32_t> prime_power_decompose(std::uint32_t q);

/// Smallest prime power >= n.
std::uint32_t next_prime_power(std::uint32_t n);

/// Irreducibility of a monic polynomial over F_p (coefficients low-to-high)
/// by trial division with every monic polynomial of degree <= deg/2.
bool is_irreducible(const std::vector<std::uint32_t>& poly, std::uint32_t p);

}  // namespace eacode
