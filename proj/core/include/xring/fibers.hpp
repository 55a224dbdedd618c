#pragma once

#include "xring/factor_system.hpp"
#include "xring/group_ring.hpp"

#include <map>
#include <vector>

namespace xring {

/// A finite-order character of the central subgroup Z = Z^k:
/// chi(z) = zeta_q^(sum_i a_i z_i). Only root-of-unity characters are
/// representable, since values must live in a cyclotomic field; they are
/// dense in the full dual group and carry all algebraic fiber identities.
class Character {
public:
    Character(size_t center_rank, unsigned order, std::vector<Int> exponents);

    static Character trivial(size_t center_rank);
    /// All q^k characters with exponents in [0, q)^k, canonically ordered.
    static std::vector<Character> all_of_order(size_t center_rank, unsigned order);

    size_t center_rank() const { return rank_; }
    unsigned order() const { return order_; }
    const std::vector<Int>& exponents() const { return exponents_; }
    bool is_trivial() const;

    /// chi(z) for z in Z^k, exact in Q(zeta_order).
    CycScalar value(const GroupElement& z) const;

    friend bool operator==(const Character& a, const Character& b);

private:
    size_t rank_;
    unsigned order_;
    std::vector<Int> exponents_;  // reduced mod order
};

/// An element of the twisted group algebra of H with the scalar 2-cocycle
/// chi(omega(.,.)): basis multiplication u_h u_h' = chi(omega(h,h')) u_{hh'}.
/// The fiber of C[G] over the character chi, realized algebraically.
class TwistedAlgebraElement {
public:
    using TermMap = std::map<GroupElement, CycScalar>;

    TwistedAlgebraElement(FactorSystem fs, Character chi, unsigned scalar_order, TermMap terms);

    static TwistedAlgebraElement zero(const FactorSystem& fs, const Character& chi,
                                      unsigned scalar_order);
    static TwistedAlgebraElement basis(const FactorSystem& fs, const Character& chi,
                                       const GroupElement& h, unsigned scalar_order,
                                       CycScalar coeff);

    const FactorSystem& factor_system() const { return fs_; }
    const Character& character() const { return chi_; }
    const Group& quotient_group() const;
    unsigned scalar_order() const { return scalar_order_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    CycScalar coefficient(const GroupElement& h) const;
    /// chi(omega(h,h')) at this element's scalar order.
    CycScalar cocycle_value(const GroupElement& h, const GroupElement& hp) const;

    /// True when the element is 0 or u_e (a trivial idempotent candidate).
    bool is_trivial() const;

    friend TwistedAlgebraElement operator+(const TwistedAlgebraElement& a,
                                           const TwistedAlgebraElement& b);
    friend TwistedAlgebraElement operator-(const TwistedAlgebraElement& a,
                                           const TwistedAlgebraElement& b);
    friend TwistedAlgebraElement operator*(const TwistedAlgebraElement& a,
                                           const TwistedAlgebraElement& b);
    friend bool operator==(const TwistedAlgebraElement& a, const TwistedAlgebraElement& b);
    friend bool operator!=(const TwistedAlgebraElement& a, const TwistedAlgebraElement& b) {
        return !(a == b);
    }

private:
    FactorSystem fs_;
    Character chi_;
    unsigned scalar_order_;
    TermMap terms_;
};

/// Evaluation of C[G], G a central extension of Z^k by H, onto the fiber at
/// chi: sum f_(z,h) delta_(z,h) -> sum chi(z) f_(z,h) u_h. A unital ring
/// homomorphism compatible with the involutions. Scalar orders are merged
/// into their lcm.
TwistedAlgebraElement evaluate_fiber(const GroupRingElement& x, const Character& chi);

/// The twisted-algebra involution (c u_h)* = conj(c) conj(chi(omega(h^-1,h))) u_{h^-1}.
TwistedAlgebraElement involute(const TwistedAlgebraElement& a);

/// Pushforward of x along q : G -> H (coefficient sums over fibers of q);
/// equals the evaluation at the trivial character, term for term.
GroupRingElement pushforward_to_quotient(const GroupRingElement& x);

/// Per-character verdicts of the idempotent scan.
struct ScanReport {
    struct Entry {
        Character character;
        bool image_idempotent = false;
        bool image_trivial = false;  // image is 0 or u_e
        bool flagged = false;        // non-trivial idempotent image
    };
    bool input_idempotent = false;  // whether x * x == x upstairs
    std::vector<Entry> entries;

    bool any_flagged() const;
    bool all_images_idempotent() const;
};

/// Evaluates x onto every fiber of each listed character order and checks
/// the image for idempotency; flags fibers whose image is a non-trivial
/// idempotent (neither 0 nor u_e).
ScanReport fiber_idempotent_scan(const GroupRingElement& x, const std::vector<unsigned>& orders);

}  // namespace xring
