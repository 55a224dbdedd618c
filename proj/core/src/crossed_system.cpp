#include "xring/crossed_system.hpp"

#include <stdexcept>

namespace xring {

struct CrossedSystem::Impl {
    Group n;
    Group h;
    Action action;
    Cocycle cocycle;
    std::string descriptor;
    std::optional<FactorSystem> base;

    Impl(Group n_, Group h_, Action action_, Cocycle cocycle_, std::string descriptor_,
         std::optional<FactorSystem> base_)
        : n(std::move(n_)),
          h(std::move(h_)),
          action(std::move(action_)),
          cocycle(std::move(cocycle_)),
          descriptor(std::move(descriptor_)),
          base(std::move(base_)) {}
};

CrossedSystem::CrossedSystem(Group n, Group h, Action action, Cocycle cocycle,
                             std::string descriptor, std::optional<FactorSystem> base)
    : impl_(std::make_shared<const Impl>(std::move(n), std::move(h), std::move(action),
                                         std::move(cocycle), std::move(descriptor),
                                         std::move(base))) {}

const Group& CrossedSystem::coefficient_group() const { return impl_->n; }
const Group& CrossedSystem::quotient_group() const { return impl_->h; }

RingAutomorphism CrossedSystem::action(const GroupElement& h) const { return impl_->action(h); }

GroupRingElement CrossedSystem::cocycle(const GroupElement& h, const GroupElement& hp) const {
    return impl_->cocycle(h, hp);
}

const std::optional<FactorSystem>& CrossedSystem::base_factor_system() const {
    return impl_->base;
}

const std::string& CrossedSystem::descriptor() const { return impl_->descriptor; }

bool same_crossed_system(const CrossedSystem& a, const CrossedSystem& b) {
    if (a.impl_ == b.impl_) return true;
    if (a.impl_->base && b.impl_->base) {
        return same_factor_system(*a.impl_->base, *b.impl_->base);
    }
    return false;
}

CrossedSystem lift_to_crossed_system(const FactorSystem& fs) {
    const Group n_grp = fs.normal_group();
    auto action = [fs, n_grp](const GroupElement& h) {
        Automorphism s = fs.action(h);
        auto permute = [n_grp](std::function<GroupElement(const GroupElement&)> map) {
            return [n_grp, map](const GroupRingElement& f) {
                if (!same_group(f.group(), n_grp)) {
                    throw std::invalid_argument("crossed-system action: element is not over C[N]");
                }
                GroupRingElement::TermMap out;
                for (const auto& [g, coeff] : f.terms()) {
                    out.emplace(map(g), coeff);
                }
                return GroupRingElement(f.group(), f.scalar_order(), std::move(out));
            };
        };
        return RingAutomorphism{permute(s.forward), permute(s.inverse)};
    };
    auto cocycle = [fs, n_grp](const GroupElement& h, const GroupElement& hp) {
        return GroupRingElement::dirac(n_grp, fs.cocycle(h, hp));
    };
    return CrossedSystem(n_grp, fs.quotient_group(), std::move(action), std::move(cocycle),
                         fs.descriptor(), fs);
}

std::optional<FactorSystem> restrict_crossed_system(const CrossedSystem& cs,
                                                    const ValidationWindow& window) {
    const Group n_grp = cs.coefficient_group();
    auto as_unit_dirac = [](const GroupRingElement& f) -> std::optional<GroupElement> {
        auto unit = trivial_unit(f);
        if (!unit || !unit->first.is_one()) return std::nullopt;
        return unit->second;
    };

    for (const auto& h : window.quotient_elems) {
        RingAutomorphism s = cs.action(h);
        for (const auto& n : window.normal_elems) {
            if (!as_unit_dirac(s.forward(GroupRingElement::dirac(n_grp, n)))) {
                return std::nullopt;
            }
        }
        for (const auto& hp : window.quotient_elems) {
            if (!as_unit_dirac(cs.cocycle(h, hp))) {
                return std::nullopt;
            }
        }
    }

    auto action = [cs, n_grp, as_unit_dirac](const GroupElement& h) {
        RingAutomorphism s = cs.action(h);
        auto restrict_map = [n_grp, as_unit_dirac](
                                std::function<GroupRingElement(const GroupRingElement&)> map) {
            return [n_grp, as_unit_dirac, map](const GroupElement& n) {
                auto image = as_unit_dirac(map(GroupRingElement::dirac(n_grp, n)));
                if (!image) {
                    throw std::domain_error(
                        "restricted action: value is not a coefficient-1 Dirac monomial");
                }
                return *image;
            };
        };
        return Automorphism{restrict_map(s.forward), restrict_map(s.inverse)};
    };
    auto cocycle = [cs, as_unit_dirac](const GroupElement& h, const GroupElement& hp) {
        auto value = as_unit_dirac(cs.cocycle(h, hp));
        if (!value) {
            throw std::domain_error(
                "restricted cocycle: value is not a coefficient-1 Dirac monomial");
        }
        return *value;
    };
    return FactorSystem(n_grp, cs.quotient_group(), std::move(action), std::move(cocycle),
                        "{\"kind\":\"derived\"}", /*central=*/false);
}

}  // namespace xring
