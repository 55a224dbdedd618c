#include "xring/crossed_product.hpp"

#include <set>
#include <stdexcept>

namespace xring {

namespace {

void require_same_system(const CrossedProductElement& x, const CrossedProductElement& y,
                         const char* op) {
    if (!same_crossed_system(x.system(), y.system())) {
        throw std::invalid_argument(std::string(op) + ": crossed-system mismatch");
    }
}

void add_into(CrossedProductElement::TermMap& acc, const GroupElement& h,
              const GroupRingElement& value) {
    if (value.is_zero()) return;
    auto it = acc.find(h);
    if (it == acc.end()) {
        acc.emplace(h, value);
    } else {
        it->second = it->second + value;
        if (it->second.is_zero()) acc.erase(it);
    }
}

}  // namespace

CrossedProductElement::CrossedProductElement(CrossedSystem cs) : cs_(std::move(cs)) {}

CrossedProductElement::CrossedProductElement(CrossedSystem cs, TermMap terms)
    : cs_(std::move(cs)) {
    bool first = true;
    for (auto it = terms.begin(); it != terms.end();) {
        if (!cs_.quotient_group().contains(it->first)) {
            throw std::invalid_argument("CrossedProductElement: degree outside H");
        }
        if (!same_group(it->second.group(), cs_.coefficient_group())) {
            throw std::invalid_argument("CrossedProductElement: coefficient not over C[N]");
        }
        if (it->second.is_zero()) {
            it = terms.erase(it);
            continue;
        }
        if (first) {
            scalar_order_ = it->second.scalar_order();
            first = false;
        } else if (it->second.scalar_order() != scalar_order_) {
            throw std::invalid_argument("CrossedProductElement: mixed scalar orders");
        }
        ++it;
    }
    terms_ = std::move(terms);
}

CrossedProductElement CrossedProductElement::zero(const CrossedSystem& cs) {
    return CrossedProductElement(cs);
}

CrossedProductElement CrossedProductElement::monomial(const CrossedSystem& cs,
                                                      const GroupRingElement& f,
                                                      const GroupElement& h) {
    TermMap terms;
    if (!f.is_zero()) terms.emplace(h, f);
    return CrossedProductElement(cs, std::move(terms));
}

CrossedProductElement CrossedProductElement::identity(const CrossedSystem& cs,
                                                      unsigned scalar_order) {
    return monomial(cs, GroupRingElement::identity(cs.coefficient_group(), scalar_order),
                    cs.quotient_group().identity());
}

GroupRingElement CrossedProductElement::coefficient(const GroupElement& h) const {
    auto it = terms_.find(h);
    if (it != terms_.end()) return it->second;
    return GroupRingElement::zero(cs_.coefficient_group(), scalar_order_);
}

CrossedProductElement CrossedProductElement::scaled(const CycScalar& c) const {
    TermMap out;
    for (const auto& [h, f] : terms_) {
        GroupRingElement v = f.scaled(c);
        if (!v.is_zero()) out.emplace(h, std::move(v));
    }
    return CrossedProductElement(cs_, std::move(out));
}

CrossedProductElement operator+(const CrossedProductElement& x, const CrossedProductElement& y) {
    require_same_system(x, y, "add");
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    if (x.scalar_order_ != y.scalar_order_) {
        throw std::invalid_argument("add: scalar order mismatch");
    }
    CrossedProductElement::TermMap out = x.terms_;
    for (const auto& [h, f] : y.terms_) add_into(out, h, f);
    return CrossedProductElement(x.cs_, std::move(out));
}

CrossedProductElement operator-(const CrossedProductElement& x, const CrossedProductElement& y) {
    return x + (-y);
}

CrossedProductElement CrossedProductElement::operator-() const {
    TermMap out;
    for (const auto& [h, f] : terms_) out.emplace(h, -f);
    return CrossedProductElement(cs_, std::move(out));
}

GroupRingElement homogeneous_product_coefficient(const CrossedSystem& cs,
                                                 const GroupRingElement& f, const GroupElement& h,
                                                 const GroupRingElement& fp,
                                                 const GroupElement& hp) {
    return f * cs.action(h).forward(fp) * cs.cocycle(h, hp).with_scalar_order(f.scalar_order());
}

CrossedProductElement operator*(const CrossedProductElement& x, const CrossedProductElement& y) {
    require_same_system(x, y, "multiply");
    if (x.is_zero() || y.is_zero()) {
        return CrossedProductElement::zero(x.cs_);
    }
    if (x.scalar_order_ != y.scalar_order_) {
        throw std::invalid_argument("multiply: scalar order mismatch");
    }
    const Group& h_grp = x.cs_.quotient_group();
    CrossedProductElement::TermMap out;
    for (const auto& [h, f] : x.terms_) {
        for (const auto& [hp, fp] : y.terms_) {
            add_into(out, h_grp.mul(h, hp),
                     homogeneous_product_coefficient(x.cs_, f, h, fp, hp));
        }
    }
    return CrossedProductElement(x.cs_, std::move(out));
}

bool operator==(const CrossedProductElement& x, const CrossedProductElement& y) {
    if (!same_crossed_system(x.cs_, y.cs_)) return false;
    return x.terms_ == y.terms_;
}

CrossedProductElement phi(const CrossedSystem& cs, const GroupRingElement& f) {
    const auto& base = cs.base_factor_system();
    if (!base) {
        throw std::invalid_argument("phi: crossed system has no underlying factor system");
    }
    if (f.group().kind() != Group::Kind::Extension ||
        !same_factor_system(f.group().factor_system(), *base)) {
        throw std::invalid_argument("phi: element's group is not the expected extension group");
    }
    // delta_{(n,h)} = delta_{(n,e)} * delta_{(e,h)} -> delta_n d_h.
    CrossedProductElement::TermMap out;
    const Group& n_grp = cs.coefficient_group();
    for (const auto& [g, coeff] : f.terms()) {
        add_into(out, g.quotient_part(), GroupRingElement::dirac(n_grp, g.normal_part(), coeff));
    }
    return CrossedProductElement(cs, std::move(out));
}

GroupRingElement phi_inverse(const CrossedProductElement& x) {
    const auto& base = x.system().base_factor_system();
    if (!base) {
        throw std::invalid_argument("phi_inverse: crossed system has no underlying factor system");
    }
    Group extension = Group::extension(*base);
    unsigned order = x.scalar_order();
    GroupRingElement::TermMap out;
    for (const auto& [h, f] : x.terms()) {
        for (const auto& [n, coeff] : f.terms()) {
            out.emplace(GroupElement::pair_elem(n, h), coeff);
        }
    }
    return GroupRingElement(std::move(extension), order, std::move(out));
}

CrossedProductElement invert_homogeneous(const CrossedSystem& cs, const GroupRingElement& f,
                                         const GroupElement& h) {
    const Group& h_grp = cs.quotient_group();
    GroupElement h_inv = h_grp.inv(h);
    GroupRingElement f_inv = invert_trivial_unit(f);  // throws unless certified
    GroupRingElement omega = cs.cocycle(h_inv, h).with_scalar_order(f.scalar_order());
    GroupRingElement coeff = invert_trivial_unit(omega) * cs.action(h_inv).forward(f_inv);
    CrossedProductElement candidate = CrossedProductElement::monomial(cs, coeff, h_inv);
    CrossedProductElement original = CrossedProductElement::monomial(cs, f, h);
    CrossedProductElement one = CrossedProductElement::identity(cs, f.scalar_order());
    // The formula proves one side; verify both.
    if (candidate * original != one || original * candidate != one) {
        throw std::logic_error("invert_homogeneous: verification of the inverse failed");
    }
    return candidate;
}

CrossedProductElement conjugate(const CrossedProductElement& x, const GroupRingElement& f,
                                const GroupElement& h) {
    CrossedProductElement u = CrossedProductElement::monomial(x.system(), f, h);
    CrossedProductElement u_inv = invert_homogeneous(x.system(), f, h);
    return u * x * u_inv;
}

CrossedProductElement involute(const CrossedProductElement& x) {
    const CrossedSystem& cs = x.system();
    const Group& h_grp = cs.quotient_group();
    CrossedProductElement::TermMap out;
    for (const auto& [h, f] : x.terms()) {
        GroupElement h_inv = h_grp.inv(h);
        GroupRingElement omega_inv =
            invert_trivial_unit(cs.cocycle(h_inv, h).with_scalar_order(f.scalar_order()));
        add_into(out, h_inv, omega_inv * cs.action(h_inv).forward(involute(f)));
    }
    return CrossedProductElement(cs, std::move(out));
}

std::optional<std::pair<GroupElement, GroupRingElement>> homogeneous_part(
    const CrossedProductElement& x) {
    if (x.support_size() != 1) return std::nullopt;
    const auto& [h, f] = *x.terms().begin();
    return std::make_pair(h, f);
}

RelationReport idempotent_relations(const CrossedProductElement& x) {
    RelationReport report;
    if (x.is_zero()) return report;

    const CrossedSystem& cs = x.system();
    const Group& h_grp = cs.quotient_group();
    const unsigned order = x.scalar_order();
    auto coeff_at = [&](const GroupElement& h) { return x.coefficient(h); };

    // Family 1 over supp(x) * supp(x) together with supp(x).
    std::set<GroupElement> square_degrees;
    for (const auto& [k, fk] : x.terms()) {
        square_degrees.insert(k);
        for (const auto& [kp, fkp] : x.terms()) {
            square_degrees.insert(h_grp.mul(k, kp));
        }
    }
    for (const auto& h : square_degrees) {
        GroupRingElement rhs = GroupRingElement::zero(cs.coefficient_group(), order);
        for (const auto& [k, fk] : x.terms()) {
            GroupElement rest = h_grp.mul(h_grp.inv(k), h);
            auto it = x.terms().find(rest);
            if (it == x.terms().end()) continue;
            rhs = rhs + homogeneous_product_coefficient(cs, fk, k, it->second, rest);
        }
        ++report.checks_performed;
        GroupRingElement lhs = coeff_at(h);
        if (lhs != rhs) {
            report.violations.push_back({1, h, rhs, lhs});
        }
    }

    // Family 2 over supp(x) and its inverses.
    std::set<GroupElement> adjoint_degrees;
    for (const auto& [h, fh] : x.terms()) {
        adjoint_degrees.insert(h);
        adjoint_degrees.insert(h_grp.inv(h));
    }
    for (const auto& h : adjoint_degrees) {
        GroupElement h_inv = h_grp.inv(h);
        GroupRingElement omega_inv =
            invert_trivial_unit(cs.cocycle(h_inv, h).with_scalar_order(order));
        GroupRingElement rhs = omega_inv * cs.action(h_inv).forward(involute(coeff_at(h)));
        ++report.checks_performed;
        GroupRingElement lhs = coeff_at(h_inv);
        if (lhs != rhs) {
            report.violations.push_back({2, h, rhs, lhs});
        }
    }

    return report;
}

}  // namespace xring
