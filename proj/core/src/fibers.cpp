#include "xring/fibers.hpp"

#include <stdexcept>

namespace xring {

Character::Character(size_t center_rank, unsigned order, std::vector<Int> exponents)
    : rank_(center_rank), order_(order), exponents_(std::move(exponents)) {
    if (order_ == 0) {
        throw std::invalid_argument("Character: order must be positive");
    }
    if (exponents_.size() != rank_) {
        throw std::invalid_argument("Character: exponent count must equal the center rank");
    }
    for (auto& e : exponents_) {
        Int r;
        mpz_fdiv_r_ui(r.get_mpz_t(), e.get_mpz_t(), order_);
        e = r;
    }
}

Character Character::trivial(size_t center_rank) {
    return Character(center_rank, 1, std::vector<Int>(center_rank, Int(0)));
}

std::vector<Character> Character::all_of_order(size_t center_rank, unsigned order) {
    std::vector<Character> out;
    std::vector<Int> exponents(center_rank, Int(0));
    // Odometer over [0, order)^rank, last coordinate fastest.
    while (true) {
        out.push_back(Character(center_rank, order, exponents));
        size_t i = center_rank;
        while (i > 0) {
            --i;
            exponents[i] += 1;
            if (exponents[i] < order) break;
            exponents[i] = 0;
            if (i == 0) return out;
        }
        if (center_rank == 0) return out;
    }
}

bool Character::is_trivial() const {
    for (const auto& e : exponents_) {
        if (e != 0) return false;
    }
    return true;
}

CycScalar Character::value(const GroupElement& z) const {
    if (z.kind() != GroupElement::Kind::FreeAbelian || z.coords().size() != rank_) {
        throw std::invalid_argument("Character::value: element is not in the center Z^k");
    }
    Int exponent = 0;
    for (size_t i = 0; i < rank_; ++i) {
        exponent += exponents_[i] * z.coords()[i];
    }
    Int reduced;
    mpz_fdiv_r_ui(reduced.get_mpz_t(), exponent.get_mpz_t(), order_);
    return CycScalar::root_of_unity(order_, to_long(reduced));
}

bool operator==(const Character& a, const Character& b) {
    return a.rank_ == b.rank_ && a.order_ == b.order_ && a.exponents_ == b.exponents_;
}

namespace {

void require_central_extension(const Group& g) {
    if (g.kind() != Group::Kind::Extension || !g.factor_system().central() ||
        g.normal_group().kind() != Group::Kind::FreeAbelian) {
        throw std::invalid_argument("expected a central extension of Z^k");
    }
}

void require_compatible(const TwistedAlgebraElement& a, const TwistedAlgebraElement& b,
                        const char* op) {
    if (!same_factor_system(a.factor_system(), b.factor_system()) ||
        !(a.character() == b.character())) {
        throw std::invalid_argument(std::string(op) + ": twisted algebras differ");
    }
    if (!a.is_zero() && !b.is_zero() && a.scalar_order() != b.scalar_order()) {
        throw std::invalid_argument(std::string(op) + ": scalar order mismatch");
    }
}

}  // namespace

TwistedAlgebraElement::TwistedAlgebraElement(FactorSystem fs, Character chi,
                                             unsigned scalar_order, TermMap terms)
    : fs_(std::move(fs)), chi_(std::move(chi)), scalar_order_(scalar_order) {
    if (!fs_.central()) {
        throw std::invalid_argument("TwistedAlgebraElement: factor system is not central");
    }
    if (scalar_order_ % chi_.order() != 0) {
        throw std::invalid_argument(
            "TwistedAlgebraElement: scalar order must absorb the character order");
    }
    for (auto it = terms.begin(); it != terms.end();) {
        if (!fs_.quotient_group().contains(it->first)) {
            throw std::invalid_argument("TwistedAlgebraElement: key outside H");
        }
        if (it->second.order() != scalar_order_) {
            throw std::invalid_argument("TwistedAlgebraElement: term scalar order mismatch");
        }
        it = it->second.is_zero() ? terms.erase(it) : std::next(it);
    }
    terms_ = std::move(terms);
}

TwistedAlgebraElement TwistedAlgebraElement::zero(const FactorSystem& fs, const Character& chi,
                                                  unsigned scalar_order) {
    return TwistedAlgebraElement(fs, chi, scalar_order, {});
}

TwistedAlgebraElement TwistedAlgebraElement::basis(const FactorSystem& fs, const Character& chi,
                                                   const GroupElement& h, unsigned scalar_order,
                                                   CycScalar coeff) {
    TermMap terms;
    CycScalar c = coeff.converted(scalar_order);
    if (!c.is_zero()) terms.emplace(h, std::move(c));
    return TwistedAlgebraElement(fs, chi, scalar_order, std::move(terms));
}

const Group& TwistedAlgebraElement::quotient_group() const { return fs_.quotient_group(); }

CycScalar TwistedAlgebraElement::coefficient(const GroupElement& h) const {
    auto it = terms_.find(h);
    return it == terms_.end() ? CycScalar::zero(scalar_order_) : it->second;
}

CycScalar TwistedAlgebraElement::cocycle_value(const GroupElement& h,
                                               const GroupElement& hp) const {
    return chi_.value(fs_.cocycle(h, hp)).converted(scalar_order_);
}

bool TwistedAlgebraElement::is_trivial() const {
    if (terms_.empty()) return true;
    if (terms_.size() != 1) return false;
    const auto& [h, c] = *terms_.begin();
    return h == fs_.quotient_group().identity() && c.is_one();
}

TwistedAlgebraElement operator+(const TwistedAlgebraElement& a, const TwistedAlgebraElement& b) {
    require_compatible(a, b, "add");
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    TwistedAlgebraElement::TermMap out = a.terms_;
    for (const auto& [h, c] : b.terms_) {
        auto it = out.find(h);
        if (it == out.end()) {
            out.emplace(h, c);
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) out.erase(it);
        }
    }
    return TwistedAlgebraElement(a.fs_, a.chi_, a.scalar_order_, std::move(out));
}

TwistedAlgebraElement operator-(const TwistedAlgebraElement& a, const TwistedAlgebraElement& b) {
    require_compatible(a, b, "subtract");
    TwistedAlgebraElement::TermMap negated;
    for (const auto& [h, c] : b.terms_) negated.emplace(h, -c);
    TwistedAlgebraElement minus_b(b.fs_, b.chi_, b.scalar_order_, std::move(negated));
    if (a.is_zero()) return minus_b;
    return a + minus_b;
}

TwistedAlgebraElement operator*(const TwistedAlgebraElement& a, const TwistedAlgebraElement& b) {
    require_compatible(a, b, "multiply");
    if (a.is_zero() || b.is_zero()) {
        return TwistedAlgebraElement::zero(a.fs_, a.chi_,
                                           a.is_zero() ? b.scalar_order_ : a.scalar_order_);
    }
    const Group& h_grp = a.quotient_group();
    TwistedAlgebraElement::TermMap out;
    for (const auto& [h, c] : a.terms_) {
        for (const auto& [hp, cp] : b.terms_) {
            CycScalar value = c * cp * a.cocycle_value(h, hp);
            if (value.is_zero()) continue;
            GroupElement key = h_grp.mul(h, hp);
            auto it = out.find(key);
            if (it == out.end()) {
                out.emplace(std::move(key), std::move(value));
            } else {
                it->second = it->second + value;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    }
    return TwistedAlgebraElement(a.fs_, a.chi_, a.scalar_order_, std::move(out));
}

bool operator==(const TwistedAlgebraElement& a, const TwistedAlgebraElement& b) {
    if (!same_factor_system(a.fs_, b.fs_) || !(a.chi_ == b.chi_)) return false;
    if (a.is_zero() && b.is_zero()) return true;
    return a.scalar_order_ == b.scalar_order_ && a.terms_ == b.terms_;
}

TwistedAlgebraElement evaluate_fiber(const GroupRingElement& x, const Character& chi) {
    require_central_extension(x.group());
    const FactorSystem& fs = x.group().factor_system();
    if (chi.center_rank() != fs.normal_group().rank()) {
        throw std::invalid_argument("evaluate_fiber: character rank does not match the center");
    }
    const unsigned order = lcm_order(x.scalar_order(), chi.order());
    TwistedAlgebraElement::TermMap out;
    for (const auto& [g, coeff] : x.terms()) {
        CycScalar value = chi.value(g.normal_part()).converted(order) * coeff.converted(order);
        if (value.is_zero()) continue;
        const GroupElement& h = g.quotient_part();
        auto it = out.find(h);
        if (it == out.end()) {
            out.emplace(h, std::move(value));
        } else {
            it->second = it->second + value;
            if (it->second.is_zero()) out.erase(it);
        }
    }
    return TwistedAlgebraElement(fs, chi, order, std::move(out));
}

TwistedAlgebraElement involute(const TwistedAlgebraElement& a) {
    const Group& h_grp = a.quotient_group();
    TwistedAlgebraElement::TermMap out;
    for (const auto& [h, c] : a.terms()) {
        GroupElement h_inv = h_grp.inv(h);
        CycScalar twist = conj(a.cocycle_value(h_inv, h));
        out.emplace(std::move(h_inv), conj(c) * twist);
    }
    return TwistedAlgebraElement(a.factor_system(), a.character(), a.scalar_order(),
                                 std::move(out));
}

GroupRingElement pushforward_to_quotient(const GroupRingElement& x) {
    require_central_extension(x.group());
    const Group& h_grp = x.group().quotient_group();
    GroupRingElement::TermMap out;
    for (const auto& [g, coeff] : x.terms()) {
        const GroupElement& h = g.quotient_part();
        auto it = out.find(h);
        if (it == out.end()) {
            out.emplace(h, coeff);
        } else {
            it->second = it->second + coeff;
        }
    }
    return GroupRingElement(h_grp, x.scalar_order(), std::move(out));
}

bool ScanReport::any_flagged() const {
    for (const auto& e : entries) {
        if (e.flagged) return true;
    }
    return false;
}

bool ScanReport::all_images_idempotent() const {
    for (const auto& e : entries) {
        if (!e.image_idempotent) return false;
    }
    return true;
}

ScanReport fiber_idempotent_scan(const GroupRingElement& x, const std::vector<unsigned>& orders) {
    require_central_extension(x.group());
    const size_t rank = x.group().normal_group().rank();
    ScanReport report;
    report.input_idempotent = (x * x == x);
    for (unsigned q : orders) {
        for (const auto& chi : Character::all_of_order(rank, q)) {
            TwistedAlgebraElement image = evaluate_fiber(x, chi);
            ScanReport::Entry entry{chi, false, false, false};
            entry.image_idempotent = (image * image == image);
            entry.image_trivial = image.is_trivial();
            entry.flagged = entry.image_idempotent && !entry.image_trivial;
            report.entries.push_back(std::move(entry));
        }
    }
    return report;
}

}  // namespace xring
