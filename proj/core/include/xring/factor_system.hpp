#pragma once

#include "xring/group.hpp"
#include "xring/int_matrix.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace xring {

/// An invertible structure-respecting map with an explicit inverse.
/// Both closures must be pure.
struct Automorphism {
    std::function<GroupElement(const GroupElement&)> forward;
    std::function<GroupElement(const GroupElement&)> inverse;
};

/// A factor system (S, omega) for groups N and H: S maps H into Aut(N) and
/// omega is an N-valued 2-cocycle on H. Construction does not validate the
/// cocycle identities; validate_factor_system checks them on finite windows.
/// Immutable; evaluation is pure.
class FactorSystem {
public:
    using Action = std::function<Automorphism(const GroupElement&)>;
    using Cocycle = std::function<GroupElement(const GroupElement&, const GroupElement&)>;

    FactorSystem(Group n, Group h, Action action, Cocycle cocycle, std::string descriptor,
                 bool central);

    const Group& normal_group() const;
    const Group& quotient_group() const;
    Automorphism action(const GroupElement& h) const;
    GroupElement cocycle(const GroupElement& h, const GroupElement& hp) const;

    /// Canonical JSON descriptor for the shipped families; "{\"kind\":\"derived\"}"
    /// for factor systems produced by derive_factor_system.
    const std::string& descriptor() const;
    /// True when S is trivial and omega lands in an Abelian N embedded
    /// centrally (holds for the trivial and central_* families).
    bool central() const;

    /// S = id, omega = e; the direct product N x H.
    static FactorSystem trivial(const Group& n, const Group& h);
    /// N = Z^m, H = Z, S(k) = action_matrix^k, omega = e. The matrix must be
    /// unimodular.
    static FactorSystem semidirect_z(const IntMatrix& action_matrix);
    /// N = Z, H = Z^m, S = id, omega(x, y) = x^T B y.
    static FactorSystem central_bilinear(const IntMatrix& b);
    /// N = Z, H = Z^m, S = id, omega(x, y) = <left, x> + <right, y>.
    /// Not a cocycle in general; shipped so defective candidates can be fed
    /// to validate_factor_system.
    static FactorSystem central_split(std::vector<Int> left, std::vector<Int> right);

    static FactorSystem heisenberg_semidirect();
    static FactorSystem heisenberg_central();

    friend bool same_factor_system(const FactorSystem& a, const FactorSystem& b);

private:
    struct Impl;
    std::shared_ptr<const Impl> impl_;
};

/// The discrete Heisenberg group H3 as Z^2 x|_S Z with S(k).(m,n) = (m, km+n).
Group heisenberg_semidirect();
/// H3 as a central extension of Z by Z^2 with the bilinear cocycle
/// beta((k,k'),(l,l')) = k*l'.
Group heisenberg_central();

/// Finite test window for the factor-system identities.
struct ValidationWindow {
    std::vector<GroupElement> quotient_elems;  // subset of H
    std::vector<GroupElement> normal_elems;    // subset of N

    static ValidationWindow from_radius(const FactorSystem& fs, long quotient_radius,
                                        long normal_radius);
};

/// Every identity violation found on a window. Violations are data, not
/// errors: an invalid candidate produces a failing report, not a throw.
struct ValidationReport {
    struct Violation {
        std::string identity;               // which check failed
        std::vector<GroupElement> at;       // the offending tuple
        std::string detail;                 // lhs/rhs rendered for the report
    };
    std::vector<Violation> violations;
    size_t checks_performed = 0;

    bool passed() const { return violations.empty(); }
};

/// Exhaustively checks normalization, the action compatibility identity
/// S(h)S(h') = C_N(omega(h,h')) S(hh'), the cocycle identity
/// omega(h,h') omega(hh',h'') = S(h)(omega(h',h'')) omega(h,h'h''), and
/// automorphism sanity of each S(h), over the supplied window.
ValidationReport validate_factor_system(const FactorSystem& fs, const ValidationWindow& window);

/// A concrete extension 1 -> N -> G -> H -> 1 presented through callbacks,
/// so donors need not be Group values (e.g. the 3x3 integer matrix model).
struct ExtensionData {
    std::function<GroupElement(const GroupElement&, const GroupElement&)> multiply;
    std::function<GroupElement(const GroupElement&)> invert;
    GroupElement identity;
    Group normal;
    Group quotient;
    std::function<GroupElement(const GroupElement&)> embed_normal;  // N -> G
    std::function<std::optional<GroupElement>(const GroupElement&)> restrict_normal;  // G -> N
    std::function<GroupElement(const GroupElement&)> project;  // q : G -> H

    /// Donor view of an extension group: G = N x_(S,omega) H itself.
    static ExtensionData from_extension_group(const Group& g);
    /// The upper-unitriangular 3x3 integer matrix model of H3; elements are
    /// encoded as vectors [a, b, c] for the matrix with first row (1, a, c)
    /// and second row (0, 1, b). N = {b = 0} ~ Z^2 via (m, n) -> [m, 0, -n],
    /// q reads off b, and the section used in tests is k -> [0, k, 0].
    static ExtensionData heisenberg_matrix();
};

/// Derives the factor system of a section: S = C_N . sigma and
/// omega(h,h') = sigma(h) sigma(h') sigma(hh')^{-1}. The section must be
/// normalized and a right inverse of q on the window; omega values are
/// verified to land in N on the window. Violations of these preconditions
/// throw std::invalid_argument.
FactorSystem derive_factor_system(const ExtensionData& ext,
                                  const std::function<GroupElement(const GroupElement&)>& sigma,
                                  const std::vector<GroupElement>& quotient_window);

}  // namespace xring
