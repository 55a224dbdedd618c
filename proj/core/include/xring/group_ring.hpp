#pragma once

#include "xring/cyclotomic.hpp"
#include "xring/group.hpp"

#include <map>
#include <optional>
#include <utility>

namespace xring {

/// A finitely supported function G -> Q(zeta_q): an element of the group
/// ring with exact cyclotomic coefficients. Canonical sparse form -- no
/// explicit zero coefficients, all keys canonical elements of the group,
/// all scalars sharing one cyclotomic order. Immutable value type; the
/// ring operations are pure functions.
class GroupRingElement {
public:
    using TermMap = std::map<GroupElement, CycScalar>;

    explicit GroupRingElement(Group group, unsigned scalar_order = kDefaultScalarOrder);
    /// Canonicalizes: prunes zeros, verifies membership and scalar orders.
    GroupRingElement(Group group, unsigned scalar_order, TermMap terms);

    static GroupRingElement zero(const Group& group, unsigned scalar_order = kDefaultScalarOrder);
    static GroupRingElement dirac(const Group& group, const GroupElement& at,
                                  CycScalar coeff = CycScalar::one());
    static GroupRingElement identity(const Group& group,
                                     unsigned scalar_order = kDefaultScalarOrder);

    const Group& group() const { return group_; }
    unsigned scalar_order() const { return scalar_order_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    size_t support_size() const { return terms_.size(); }
    /// Coefficient at `g`, zero if absent.
    CycScalar coefficient(const GroupElement& g) const;

    GroupRingElement scaled(const CycScalar& c) const;
    /// Same element with every coefficient re-expressed at `new_order`
    /// (CycScalar::converted term-wise).
    GroupRingElement with_scalar_order(unsigned new_order) const;

    friend GroupRingElement operator+(const GroupRingElement& f, const GroupRingElement& g);
    friend GroupRingElement operator-(const GroupRingElement& f, const GroupRingElement& g);
    /// Convolution: (f * g)(x) = sum over supports of f_a g_b at ab.
    friend GroupRingElement operator*(const GroupRingElement& f, const GroupRingElement& g);
    GroupRingElement operator-() const;
    friend bool operator==(const GroupRingElement& f, const GroupRingElement& g);
    friend bool operator!=(const GroupRingElement& f, const GroupRingElement& g) {
        return !(f == g);
    }

private:
    Group group_;
    unsigned scalar_order_;
    TermMap terms_;
};

/// f* = sum of conj(f_g) delta_{g^{-1}}.
GroupRingElement involute(const GroupRingElement& f);

/// Exact data for the 1-norm ||f||_1 = sum |f_g|. Cyclotomic moduli can be
/// irrational, so the result carries the exact sum of squared moduli and a
/// certified decimal upper bound; `exact` is present when every |f_g| is
/// rational (e.g. real-rational or Pythagorean Gaussian coefficients).
struct OneNorm {
    size_t term_count = 0;
    CycScalar sum_squared_moduli;
    std::optional<Rational> exact;
    Rational upper_bound;
    std::string upper_bound_decimal;
};

OneNorm one_norm(const GroupRingElement& f);

/// (c, g) iff f = c * delta_g with c != 0.
std::optional<std::pair<CycScalar, GroupElement>> trivial_unit(const GroupRingElement& f);

/// Inverse of a trivial unit c * delta_g. Throws std::domain_error when f
/// is not certified as one.
GroupRingElement invert_trivial_unit(const GroupRingElement& f);

}  // namespace xring
