#pragma once

#include "xring/rational.hpp"

#include <optional>
#include <vector>

namespace xring {

/// Default coefficient field: Q(zeta_4), the Gaussian rationals.
inline constexpr unsigned kDefaultScalarOrder = 4;

unsigned euler_phi(unsigned q);

/// The q-th cyclotomic polynomial, monic with integer coefficients,
/// coeffs[k] belonging to x^k and coeffs[phi(q)] == 1. Cached; thread-safe.
const std::vector<Int>& cyclotomic_polynomial(unsigned q);

/// An element of the cyclotomic field Q(zeta_q), stored as the unique
/// residue of degree < phi(q) modulo the q-th cyclotomic polynomial, so
/// equality is exact and component-wise. Values are immutable and all
/// operations are pure; safe for unrestricted concurrent use.
///
/// Order 4 embeds the Gaussian rationals (zeta_4 = i). Mixing orders is
/// rejected; embed both operands into a common order (divisible by each)
/// first, e.g. via lcm and embedded().
class CycScalar {
public:
    /// Zero in the default order.
    CycScalar();

    static CycScalar zero(unsigned order = kDefaultScalarOrder);
    static CycScalar one(unsigned order = kDefaultScalarOrder);
    static CycScalar from_rational(const Rational& r, unsigned order = kDefaultScalarOrder);
    static CycScalar from_int(long value, unsigned order = kDefaultScalarOrder);
    /// zeta_order^power, reduced.
    static CycScalar root_of_unity(unsigned order, long power);
    /// re + im*i in Q(zeta_4).
    static CycScalar gaussian(const Rational& re, const Rational& im);
    /// Raw residue constructor; coeffs.size() must equal phi(order).
    CycScalar(unsigned order, std::vector<Rational> coeffs);

    unsigned order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;
    /// The rational value when the residue has no zeta-part.
    std::optional<Rational> as_rational() const;

    /// Image in Q(zeta_new_order); requires order() | new_order.
    CycScalar embedded(unsigned new_order) const;

    /// Re-expresses the value at `target` order when possible: rational
    /// values convert to any order, others embed when order() | target.
    /// Throws std::invalid_argument otherwise.
    CycScalar converted(unsigned target) const;

    friend CycScalar operator+(const CycScalar& a, const CycScalar& b);
    friend CycScalar operator-(const CycScalar& a, const CycScalar& b);
    friend CycScalar operator*(const CycScalar& a, const CycScalar& b);
    CycScalar operator-() const;
    friend bool operator==(const CycScalar& a, const CycScalar& b);
    friend bool operator!=(const CycScalar& a, const CycScalar& b) { return !(a == b); }

    std::string str() const;

private:
    unsigned order_;
    std::vector<Rational> coeffs_;  // size phi(order_)
};

/// Complex conjugation zeta_q -> zeta_q^{-1}; an involutive field
/// automorphism fixing the rationals.
CycScalar conj(const CycScalar& a);

/// Multiplicative inverse by extended Euclid in Q[x]/(Phi_q).
/// Throws std::domain_error on zero.
CycScalar inverse(const CycScalar& a);

/// a * conj(a); lies in the real subfield, rational in the Gaussian case.
CycScalar abs_squared(const CycScalar& a);

/// Rational upper bound on |a| (triangle inequality on the power basis,
/// refined to a tight square-root bound when |a|^2 is rational).
Rational abs_upper_bound(const CycScalar& a);

unsigned lcm_order(unsigned a, unsigned b);

}  // namespace xring
