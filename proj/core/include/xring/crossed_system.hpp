#pragma once

#include "xring/factor_system.hpp"
#include "xring/group_ring.hpp"

#include <functional>
#include <memory>
#include <optional>

namespace xring {

/// A ring automorphism of C[N] with an explicit inverse; closures are pure.
struct RingAutomorphism {
    std::function<GroupRingElement(const GroupRingElement&)> forward;
    std::function<GroupRingElement(const GroupRingElement&)> inverse;
};

/// A (C[N], H)-crossed system: ring automorphisms of C[N] indexed by H and
/// an invertible-valued 2-cocycle with values in C[N]. When lifted from a
/// factor system, the action permutes Dirac elements along S(h) and the
/// cocycle value is the Dirac element of omega(h, h').
class CrossedSystem {
public:
    using Action = std::function<RingAutomorphism(const GroupElement&)>;
    using Cocycle = std::function<GroupRingElement(const GroupElement&, const GroupElement&)>;

    CrossedSystem(Group n, Group h, Action action, Cocycle cocycle, std::string descriptor,
                  std::optional<FactorSystem> base);

    /// N, the group whose group ring is the coefficient ring.
    const Group& coefficient_group() const;
    /// H, the grading group.
    const Group& quotient_group() const;
    RingAutomorphism action(const GroupElement& h) const;
    GroupRingElement cocycle(const GroupElement& h, const GroupElement& hp) const;

    /// The factor system this crossed system was lifted from, when any.
    const std::optional<FactorSystem>& base_factor_system() const;
    const std::string& descriptor() const;

    friend bool same_crossed_system(const CrossedSystem& a, const CrossedSystem& b);

private:
    struct Impl;
    std::shared_ptr<const Impl> impl_;
};

/// Ring-level lift (S, omega) -> (S-bar, omega-bar).
CrossedSystem lift_to_crossed_system(const FactorSystem& fs);

/// Recovers a group-level factor system when, on the tested window, every
/// action value maps Dirac monomials to coefficient-1 Dirac monomials and
/// every cocycle value is a coefficient-1 Dirac monomial; empty otherwise.
std::optional<FactorSystem> restrict_crossed_system(const CrossedSystem& cs,
                                                    const ValidationWindow& window);

}  // namespace xring
