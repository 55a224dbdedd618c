#pragma once

#include "xring/crossed_system.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace xring {

/// An element of the crossed product C[N] x_(S,omega) H: a finitely
/// supported map H -> C[N], written sum of f_h d_h. Canonical form stores
/// no zero coefficients; immutable value type, pure operations.
///
/// Multiplication extends f d_h * f' d_h' = f S(h)(f') omega(h,h') d_{hh'}
/// bilinearly.
class CrossedProductElement {
public:
    using TermMap = std::map<GroupElement, GroupRingElement>;

    explicit CrossedProductElement(CrossedSystem cs);
    /// Canonicalizes: prunes zero coefficients, checks keys and groups.
    CrossedProductElement(CrossedSystem cs, TermMap terms);

    static CrossedProductElement zero(const CrossedSystem& cs);
    /// f d_h.
    static CrossedProductElement monomial(const CrossedSystem& cs, const GroupRingElement& f,
                                          const GroupElement& h);
    /// d_e, the multiplicative identity.
    static CrossedProductElement identity(const CrossedSystem& cs,
                                          unsigned scalar_order = kDefaultScalarOrder);

    const CrossedSystem& system() const { return cs_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t support_size() const { return terms_.size(); }
    /// The cyclotomic order shared by every coefficient (default order for
    /// the zero element).
    unsigned scalar_order() const { return scalar_order_; }
    /// The C[N]-coefficient at h (zero element if absent).
    GroupRingElement coefficient(const GroupElement& h) const;

    CrossedProductElement scaled(const CycScalar& c) const;

    friend CrossedProductElement operator+(const CrossedProductElement& x,
                                           const CrossedProductElement& y);
    friend CrossedProductElement operator-(const CrossedProductElement& x,
                                           const CrossedProductElement& y);
    friend CrossedProductElement operator*(const CrossedProductElement& x,
                                           const CrossedProductElement& y);
    CrossedProductElement operator-() const;
    friend bool operator==(const CrossedProductElement& x, const CrossedProductElement& y);
    friend bool operator!=(const CrossedProductElement& x, const CrossedProductElement& y) {
        return !(x == y);
    }

private:
    CrossedSystem cs_;
    unsigned scalar_order_ = kDefaultScalarOrder;
    TermMap terms_;
};

/// The product of the homogeneous terms f d_h and f' d_h':
/// f * S(h)(f') * omega(h,h'), i.e. the C[N]-coefficient landing at hh'.
GroupRingElement homogeneous_product_coefficient(const CrossedSystem& cs,
                                                 const GroupRingElement& f, const GroupElement& h,
                                                 const GroupRingElement& fp,
                                                 const GroupElement& hp);

/// The isomorphism Phi: C[G] -> C[N] x_(S,omega) H for G the extension
/// group of cs's factor system; delta_{(n,h)} -> delta_n d_h, extended
/// linearly. Throws std::invalid_argument if f is not over that group.
CrossedProductElement phi(const CrossedSystem& cs, const GroupRingElement& f);

/// Exact inverse of phi.
GroupRingElement phi_inverse(const CrossedProductElement& x);

/// The inverse of the homogeneous element f d_h by the closed formula
/// (f d_h)^{-1} = omega(h^{-1},h)^{-1} * S(h^{-1})(f^{-1}) d_{h^{-1}}.
/// Only trivial units of C[N] are certified invertible; the result is
/// machine-verified to be a two-sided inverse before being returned.
CrossedProductElement invert_homogeneous(const CrossedSystem& cs, const GroupRingElement& f,
                                         const GroupElement& h);

/// (f d_h) * x * (f d_h)^{-1}.
CrossedProductElement conjugate(const CrossedProductElement& x, const GroupRingElement& f,
                                const GroupElement& h);

/// The involution (f d_h)* = omega(h^{-1},h)^{-1} * S(h^{-1})(f*) d_{h^{-1}},
/// extended antilinearly.
CrossedProductElement involute(const CrossedProductElement& x);

/// (h, f_h) when x = f_h d_h is supported on a single degree; empty
/// otherwise (including x = 0).
std::optional<std::pair<GroupElement, GroupRingElement>> homogeneous_part(
    const CrossedProductElement& x);

/// Violations of the self-adjoint idempotent relations:
///   family 1:  f_h = sum_k f_k * S(k)(f_{k^{-1}h}) * omega(k, k^{-1}h)
///   family 2:  f_{h^{-1}} = omega(h^{-1},h)^{-1} * S(h^{-1})(f_h*)
/// evaluated over supp(x)*supp(x) and supp(x) u supp(x)^{-1}. The report is
/// empty exactly when x = x* = x*x on those components.
struct RelationReport {
    struct Violation {
        int family;  // 1 = idempotent, 2 = self-adjointness
        GroupElement at;
        GroupRingElement expected;  // right-hand side of the relation
        GroupRingElement actual;    // the stored coefficient
    };
    std::vector<Violation> violations;
    size_t checks_performed = 0;
    bool passed() const { return violations.empty(); }
};

RelationReport idempotent_relations(const CrossedProductElement& x);

}  // namespace xring
