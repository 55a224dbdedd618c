#include "xring/group_ring.hpp"

#include <stdexcept>

namespace xring {

namespace {

void require_compatible(const GroupRingElement& f, const GroupRingElement& g, const char* op) {
    if (!same_group(f.group(), g.group())) {
        throw std::invalid_argument(std::string(op) + ": group mismatch");
    }
    // The zero element has no coefficients and is compatible with any order.
    if (!f.is_zero() && !g.is_zero() && f.scalar_order() != g.scalar_order()) {
        throw std::invalid_argument(std::string(op) +
                                    ": scalar order mismatch (embed into a common order first)");
    }
}

}  // namespace

GroupRingElement::GroupRingElement(Group group, unsigned scalar_order)
    : group_(std::move(group)), scalar_order_(scalar_order) {}

GroupRingElement::GroupRingElement(Group group, unsigned scalar_order, TermMap terms)
    : group_(std::move(group)), scalar_order_(scalar_order) {
    for (auto it = terms.begin(); it != terms.end();) {
        if (!group_.contains(it->first)) {
            throw std::invalid_argument("GroupRingElement: key outside the group");
        }
        if (it->second.order() != scalar_order_) {
            throw std::invalid_argument("GroupRingElement: term scalar order mismatch");
        }
        it = it->second.is_zero() ? terms.erase(it) : std::next(it);
    }
    terms_ = std::move(terms);
}

GroupRingElement GroupRingElement::zero(const Group& group, unsigned scalar_order) {
    return GroupRingElement(group, scalar_order);
}

GroupRingElement GroupRingElement::dirac(const Group& group, const GroupElement& at,
                                         CycScalar coeff) {
    TermMap terms;
    if (!coeff.is_zero()) terms.emplace(at, coeff);
    return GroupRingElement(group, coeff.order(), std::move(terms));
}

GroupRingElement GroupRingElement::identity(const Group& group, unsigned scalar_order) {
    return dirac(group, group.identity(), CycScalar::one(scalar_order));
}

CycScalar GroupRingElement::coefficient(const GroupElement& g) const {
    auto it = terms_.find(g);
    return it == terms_.end() ? CycScalar::zero(scalar_order_) : it->second;
}

GroupRingElement GroupRingElement::scaled(const CycScalar& c) const {
    const CycScalar factor = c.converted(scalar_order_);
    TermMap out;
    if (!factor.is_zero()) {
        for (const auto& [g, coeff] : terms_) {
            CycScalar v = coeff * factor;
            if (!v.is_zero()) out.emplace(g, std::move(v));
        }
    }
    return GroupRingElement(group_, scalar_order_, std::move(out));
}

GroupRingElement GroupRingElement::with_scalar_order(unsigned new_order) const {
    TermMap out;
    for (const auto& [g, coeff] : terms_) {
        out.emplace(g, coeff.converted(new_order));
    }
    return GroupRingElement(group_, new_order, std::move(out));
}

GroupRingElement operator+(const GroupRingElement& f, const GroupRingElement& g) {
    require_compatible(f, g, "add");
    if (f.is_zero()) return g;
    if (g.is_zero()) return f;
    GroupRingElement::TermMap out = f.terms_;
    for (const auto& [key, coeff] : g.terms_) {
        auto [it, inserted] = out.emplace(key, coeff);
        if (!inserted) {
            it->second = it->second + coeff;
            if (it->second.is_zero()) out.erase(it);
        }
    }
    return GroupRingElement(f.group_, f.scalar_order_, std::move(out));
}

GroupRingElement operator-(const GroupRingElement& f, const GroupRingElement& g) {
    return f + (-g);
}

GroupRingElement GroupRingElement::operator-() const {
    TermMap out;
    for (const auto& [g, coeff] : terms_) out.emplace(g, -coeff);
    return GroupRingElement(group_, scalar_order_, std::move(out));
}

GroupRingElement operator*(const GroupRingElement& f, const GroupRingElement& g) {
    require_compatible(f, g, "convolve");
    if (f.is_zero() || g.is_zero()) {
        return GroupRingElement::zero(f.group_, f.is_zero() ? g.scalar_order_ : f.scalar_order_);
    }
    GroupRingElement::TermMap out;
    for (const auto& [a, ca] : f.terms_) {
        for (const auto& [b, cb] : g.terms_) {
            GroupElement key = f.group_.mul(a, b);
            CycScalar prod = ca * cb;
            auto it = out.find(key);
            if (it == out.end()) {
                out.emplace(std::move(key), std::move(prod));
            } else {
                it->second = it->second + prod;
            }
        }
    }
    for (auto it = out.begin(); it != out.end();) {
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    }
    return GroupRingElement(f.group_, f.scalar_order_, std::move(out));
}

bool operator==(const GroupRingElement& f, const GroupRingElement& g) {
    if (!same_group(f.group_, g.group_)) return false;
    if (f.is_zero() && g.is_zero()) return true;
    return f.scalar_order_ == g.scalar_order_ && f.terms_ == g.terms_;
}

GroupRingElement involute(const GroupRingElement& f) {
    GroupRingElement::TermMap out;
    for (const auto& [g, coeff] : f.terms()) {
        out.emplace(f.group().inv(g), conj(coeff));
    }
    return GroupRingElement(f.group(), f.scalar_order(), std::move(out));
}

OneNorm one_norm(const GroupRingElement& f) {
    OneNorm result;
    result.term_count = f.support_size();
    result.sum_squared_moduli = CycScalar::zero(f.scalar_order());
    result.upper_bound = Rational(0);
    bool all_exact = true;
    Rational exact_sum(0);
    for (const auto& [g, coeff] : f.terms()) {
        CycScalar sq = abs_squared(coeff);
        result.sum_squared_moduli = result.sum_squared_moduli + sq;
        Rational bound = abs_upper_bound(coeff);
        result.upper_bound += bound;
        auto sq_rational = sq.as_rational();
        bool term_exact = sq_rational &&
                          mpz_perfect_square_p(sq_rational->get_num().get_mpz_t()) &&
                          mpz_perfect_square_p(sq_rational->get_den().get_mpz_t());
        if (term_exact) {
            exact_sum += bound;  // abs_upper_bound is exact for perfect squares
        } else {
            all_exact = false;
        }
    }
    if (all_exact) result.exact = exact_sum;
    result.upper_bound_decimal = decimal_upper(result.upper_bound);
    return result;
}

std::optional<std::pair<CycScalar, GroupElement>> trivial_unit(const GroupRingElement& f) {
    if (f.support_size() != 1) return std::nullopt;
    const auto& [g, c] = *f.terms().begin();
    return std::make_pair(c, g);
}

GroupRingElement invert_trivial_unit(const GroupRingElement& f) {
    auto unit = trivial_unit(f);
    if (!unit) {
        throw std::domain_error("cannot certify invertibility: not a scalar multiple of a group element");
    }
    return GroupRingElement::dirac(f.group(), f.group().inv(unit->second), inverse(unit->first));
}

}  // namespace xring
