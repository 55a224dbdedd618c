#include "doctest.h"
#include "support.hpp"

#include "xring/crossed_product.hpp"

using namespace xring;
using testsupport::Rng;

namespace {

GroupElement vec(std::initializer_list<long> v) { return GroupElement::vector_elem(v); }

struct Fixture {
    CrossedSystem semidirect = lift_to_crossed_system(FactorSystem::heisenberg_semidirect());
    CrossedSystem central = lift_to_crossed_system(FactorSystem::heisenberg_central());

    GroupRingElement dirac_n(const CrossedSystem& cs, const GroupElement& n,
                             CycScalar c = CycScalar::one()) const {
        return GroupRingElement::dirac(cs.coefficient_group(), n, c);
    }
};

}  // namespace

TEST_SUITE("crossed_product") {

TEST_CASE("d_e is a two-sided identity") {
    Fixture fx;
    Rng rng(51);
    for (const CrossedSystem& cs : {fx.semidirect, fx.central}) {
        auto n_window = ball(cs.coefficient_group(), 1);
        auto h_window = ball(cs.quotient_group(), 1);
        CrossedProductElement one = CrossedProductElement::identity(cs);
        for (int t = 0; t < 10; ++t) {
            CrossedProductElement x = rng.crossed_element(cs, n_window, h_window, 3);
            CHECK(one * x == x);
            CHECK(x * one == x);
        }
    }
}

TEST_CASE("with a trivial system the product is the convolution over N x H") {
    Group n = Group::free_abelian(1);
    Group h = Group::cyclic(3);
    FactorSystem fs = FactorSystem::trivial(n, h);
    CrossedSystem cs = lift_to_crossed_system(fs);
    Group product_group = Group::extension(fs);

    Rng rng(52);
    auto window = ball(product_group, 2);
    for (int t = 0; t < 15; ++t) {
        GroupRingElement f = rng.ring_element(product_group, window, 4);
        GroupRingElement g = rng.ring_element(product_group, window, 4);
        CHECK(phi(cs, f * g) == phi(cs, f) * phi(cs, g));
    }
}

TEST_CASE("homogeneous products in the semidirect preset: (delta_(0,0) d_1)(delta_(1,0) d_0)") {
    Fixture fx;
    CrossedProductElement lhs = CrossedProductElement::monomial(
        fx.semidirect, fx.dirac_n(fx.semidirect, vec({0, 0})), vec({1}));
    CrossedProductElement rhs = CrossedProductElement::monomial(
        fx.semidirect, fx.dirac_n(fx.semidirect, vec({1, 0})), vec({0}));
    CrossedProductElement expected = CrossedProductElement::monomial(
        fx.semidirect, fx.dirac_n(fx.semidirect, vec({1, 1})), vec({1}));
    CHECK(lhs * rhs == expected);
    CHECK_THROWS_AS(lhs * CrossedProductElement::identity(fx.central), std::invalid_argument);
}

TEST_CASE("phi decomposes Diracs and inverts exactly") {
    Fixture fx;
    Group g_sd = Group::extension(FactorSystem::heisenberg_semidirect());
    CHECK(phi(fx.semidirect, GroupRingElement::identity(g_sd)) ==
          CrossedProductElement::identity(fx.semidirect));

    GroupElement n_only = GroupElement::pair_elem(vec({2, -1}), vec({0}));
    CrossedProductElement image = phi(fx.semidirect, GroupRingElement::dirac(g_sd, n_only));
    CHECK(image == CrossedProductElement::monomial(fx.semidirect,
                                                   fx.dirac_n(fx.semidirect, vec({2, -1})),
                                                   vec({0})));

    Rng rng(53);
    auto window = ball(g_sd, 2);
    for (int t = 0; t < 20; ++t) {
        GroupRingElement f = rng.ring_element(g_sd, window, 5);
        CHECK(phi_inverse(phi(fx.semidirect, f)) == f);
    }
    CHECK_THROWS_AS(phi(fx.semidirect, GroupRingElement::identity(Group::free_abelian(1))),
                    std::invalid_argument);
}

TEST_CASE("phi is a *-isomorphism on random pairs over both presets") {
    Fixture fx;
    Rng rng(54);
    for (const CrossedSystem& cs : {fx.semidirect, fx.central}) {
        Group g = Group::extension(*cs.base_factor_system());
        auto window = ball(g, 2);
        for (int t = 0; t < 25; ++t) {
            GroupRingElement f = rng.ring_element(g, window, 6);
            GroupRingElement gg = rng.ring_element(g, window, 6);
            CHECK(phi(cs, f * gg) == phi(cs, f) * phi(cs, gg));
            CHECK(phi(cs, involute(f)) == involute(phi(cs, f)));
        }
    }
}

TEST_CASE("homogeneous inversion by the closed formula") {
    Fixture fx;

    // (delta_e d_e)^{-1} = d_e.
    CrossedProductElement one = CrossedProductElement::identity(fx.semidirect);
    CHECK(invert_homogeneous(fx.semidirect,
                             GroupRingElement::identity(fx.semidirect.coefficient_group()),
                             vec({0})) == one);

    // (2i delta_(1,0) d_1)^{-1} = (-i/2) delta_(-1,1) d_{-1}.
    CycScalar two_i = CycScalar::gaussian(Rational(0), Rational(2));
    CrossedProductElement inv = invert_homogeneous(
        fx.semidirect, fx.dirac_n(fx.semidirect, vec({1, 0}), two_i), vec({1}));
    CycScalar minus_half_i = CycScalar::gaussian(Rational(0), make_rational(-1, 2));
    CHECK(inv == CrossedProductElement::monomial(
                     fx.semidirect, fx.dirac_n(fx.semidirect, vec({-1, 1}), minus_half_i),
                     vec({-1})));

    // Central preset: the omega-corrected monomial multiplies back to d_e.
    CrossedProductElement central_inv = invert_homogeneous(
        fx.central, fx.dirac_n(fx.central, vec({0})), vec({1, 0}));
    CrossedProductElement central_unit = CrossedProductElement::monomial(
        fx.central, fx.dirac_n(fx.central, vec({0})), vec({1, 0}));
    CHECK(central_inv * central_unit == CrossedProductElement::identity(fx.central));
    auto part = homogeneous_part(central_inv);
    REQUIRE(part.has_value());
    CHECK(part->first == vec({-1, 0}));

    // Non-certified coefficients are rejected.
    GroupRingElement not_a_unit = fx.dirac_n(fx.semidirect, vec({0, 0})) +
                                  fx.dirac_n(fx.semidirect, vec({1, 0}));
    CHECK_THROWS_WITH_AS(invert_homogeneous(fx.semidirect, not_a_unit, vec({0})),
                         doctest::Contains("cannot certify"), std::domain_error);
}

TEST_CASE("random homogeneous units have verified two-sided inverses") {
    Fixture fx;
    Rng rng(55);
    for (const CrossedSystem& cs : {fx.semidirect, fx.central}) {
        auto n_window = ball(cs.coefficient_group(), 2);
        auto h_window = ball(cs.quotient_group(), 2);
        for (int t = 0; t < 25; ++t) {
            GroupRingElement f = GroupRingElement::dirac(
                cs.coefficient_group(), rng.pick(n_window), rng.nonzero_gaussian_grid_value());
            const GroupElement& h = rng.pick(h_window);
            CrossedProductElement u = CrossedProductElement::monomial(cs, f, h);
            CrossedProductElement u_inv = invert_homogeneous(cs, f, h);
            CrossedProductElement one = CrossedProductElement::identity(cs);
            CHECK(u * u_inv == one);
            CHECK(u_inv * u == one);
        }
    }
}

TEST_CASE("conjugation preserves graded subalgebras over normal subgroups") {
    Fixture fx;

    // Conjugating delta_(1,0) d_0 by d_1 moves the fiber: S(1)(1,0) = (1,1).
    CrossedProductElement x = CrossedProductElement::monomial(
        fx.semidirect, fx.dirac_n(fx.semidirect, vec({1, 0})), vec({0}));
    CrossedProductElement conj_x =
        conjugate(x, GroupRingElement::identity(fx.semidirect.coefficient_group()), vec({1}));
    CHECK(conj_x == CrossedProductElement::monomial(
                        fx.semidirect, fx.dirac_n(fx.semidirect, vec({1, 1})), vec({0})));

    // The preset action fixes (0,1), so that Dirac is unchanged.
    CrossedProductElement y = CrossedProductElement::monomial(
        fx.semidirect, fx.dirac_n(fx.semidirect, vec({0, 1})), vec({0}));
    CHECK(conjugate(y, GroupRingElement::identity(fx.semidirect.coefficient_group()),
                    vec({1})) == y);

    // Conjugation by d_e is the identity.
    Rng rng(56);
    auto n_window = ball(fx.semidirect.coefficient_group(), 1);
    auto h_window = ball(fx.semidirect.quotient_group(), 2);
    for (int t = 0; t < 10; ++t) {
        CrossedProductElement z = rng.crossed_element(fx.semidirect, n_window, h_window, 3);
        CHECK(conjugate(z, GroupRingElement::identity(fx.semidirect.coefficient_group()),
                        vec({0})) == z);
    }

    // Support stays in K = 2Z under random homogeneous conjugators.
    std::vector<GroupElement> even_degrees = {vec({-2}), vec({0}), vec({2})};
    for (int t = 0; t < 25; ++t) {
        CrossedProductElement z = rng.crossed_element(fx.semidirect, n_window, even_degrees, 3);
        GroupRingElement f = GroupRingElement::dirac(
            fx.semidirect.coefficient_group(), rng.pick(n_window),
            rng.nonzero_gaussian_grid_value());
        const GroupElement& h = rng.pick(h_window);
        CrossedProductElement image = conjugate(z, f, h);
        for (const auto& [deg, coeff] : image.terms()) {
            CHECK(deg.coords()[0] % 2 == 0);
        }
    }
}

TEST_CASE("the involution is an antilinear involutive anti-homomorphism") {
    Fixture fx;
    Rng rng(57);
    for (const CrossedSystem& cs : {fx.semidirect, fx.central}) {
        CrossedProductElement one = CrossedProductElement::identity(cs);
        CHECK(involute(one) == one);
        auto n_window = ball(cs.coefficient_group(), 1);
        auto h_window = ball(cs.quotient_group(), 1);
        for (int t = 0; t < 15; ++t) {
            CrossedProductElement x = rng.crossed_element(cs, n_window, h_window, 3);
            CrossedProductElement y = rng.crossed_element(cs, n_window, h_window, 3);
            CHECK(involute(involute(x)) == x);
            CHECK(involute(x * y) == involute(y) * involute(x));
        }
    }
}

TEST_CASE("homogeneous part recognition") {
    Fixture fx;
    GroupRingElement f = fx.dirac_n(fx.semidirect, vec({1, 0}), CycScalar::from_int(3));
    CrossedProductElement x = CrossedProductElement::monomial(fx.semidirect, f, vec({2}));
    auto part = homogeneous_part(x);
    REQUIRE(part.has_value());
    CHECK(part->first == vec({2}));
    CHECK(part->second == f);

    CrossedProductElement two_terms =
        x + CrossedProductElement::monomial(fx.semidirect, f, vec({1}));
    CHECK_FALSE(homogeneous_part(two_terms).has_value());
    CHECK_FALSE(homogeneous_part(CrossedProductElement::zero(fx.semidirect)).has_value());
}

TEST_CASE("idempotent relations: clean cases and the torsion example") {
    Fixture fx;
    CHECK(idempotent_relations(CrossedProductElement::zero(fx.semidirect)).passed());
    CHECK(idempotent_relations(CrossedProductElement::identity(fx.semidirect)).passed());

    // Over N = Z/2 with the trivial system, (1/2)(delta_0 + delta_1) d_e is a
    // genuine non-trivial self-adjoint idempotent.
    Group z2 = Group::cyclic(2);
    CrossedSystem cs = lift_to_crossed_system(FactorSystem::trivial(z2, Group::free_abelian(1)));
    CycScalar half = CycScalar::from_rational(make_rational(1, 2), 4);
    GroupRingElement f = GroupRingElement::dirac(z2, z2.reduced_cyclic(0), half) +
                         GroupRingElement::dirac(z2, z2.reduced_cyclic(1), half);
    CrossedProductElement p =
        CrossedProductElement::monomial(cs, f, Group::free_abelian(1).identity());
    RelationReport report = idempotent_relations(p);
    CHECK(report.passed());
    CHECK(p * p == p);
    CHECK(involute(p) == p);
}

TEST_CASE("idempotent relations report violations exactly when x != x*x or x != x*") {
    Fixture fx;
    Rng rng(58);
    auto n_window = ball(fx.semidirect.coefficient_group(), 1);
    auto h_window = ball(fx.semidirect.quotient_group(), 1);
    int violations_seen = 0;
    for (int t = 0; t < 40; ++t) {
        CrossedProductElement x = rng.crossed_element(fx.semidirect, n_window, h_window, 3);
        RelationReport report = idempotent_relations(x);
        bool algebraically_clean = (x * x == x) && (involute(x) == x);
        CHECK(report.passed() == algebraically_clean);
        if (!report.passed()) ++violations_seen;
    }
    CHECK(violations_seen > 0);
}

TEST_CASE("degree bookkeeping: extreme d-degrees add when leading products survive") {
    Fixture fx;
    Rng rng(59);
    for (const CrossedSystem& cs :
         {fx.semidirect, lift_to_crossed_system(FactorSystem::trivial(Group::free_abelian(2),
                                                                      Group::free_abelian(1)))}) {
        auto n_window = ball(cs.coefficient_group(), 1);
        auto h_window = ball(cs.quotient_group(), 2);
        for (int t = 0; t < 30; ++t) {
            CrossedProductElement x = rng.crossed_element(cs, n_window, h_window, 3);
            CrossedProductElement y = rng.crossed_element(cs, n_window, h_window, 3);
            if (x.is_zero() || y.is_zero()) continue;
            const GroupElement& x_lo = x.terms().begin()->first;
            const GroupElement& y_lo = y.terms().begin()->first;
            const GroupElement& x_hi = x.terms().rbegin()->first;
            const GroupElement& y_hi = y.terms().rbegin()->first;
            CrossedProductElement xy = x * y;

            GroupRingElement lo_coeff = homogeneous_product_coefficient(
                cs, x.terms().begin()->second, x_lo, y.terms().begin()->second, y_lo);
            if (!lo_coeff.is_zero()) {
                REQUIRE_FALSE(xy.is_zero());
                CHECK(xy.terms().begin()->first == cs.quotient_group().mul(x_lo, y_lo));
                CHECK(xy.terms().begin()->second == lo_coeff);
            }
            GroupRingElement hi_coeff = homogeneous_product_coefficient(
                cs, x.terms().rbegin()->second, x_hi, y.terms().rbegin()->second, y_hi);
            if (!hi_coeff.is_zero()) {
                REQUIRE_FALSE(xy.is_zero());
                CHECK(xy.terms().rbegin()->first == cs.quotient_group().mul(x_hi, y_hi));
                CHECK(xy.terms().rbegin()->second == hi_coeff);
            }
        }
    }
}

TEST_CASE("associativity of the crossed multiplication on random triples") {
    Fixture fx;
    Rng rng(60);
    for (const CrossedSystem& cs : {fx.semidirect, fx.central}) {
        auto n_window = ball(cs.coefficient_group(), 1);
        auto h_window = ball(cs.quotient_group(), 1);
        for (int t = 0; t < 12; ++t) {
            CrossedProductElement x = rng.crossed_element(cs, n_window, h_window, 3);
            CrossedProductElement y = rng.crossed_element(cs, n_window, h_window, 3);
            CrossedProductElement z = rng.crossed_element(cs, n_window, h_window, 3);
            CHECK((x * y) * z == x * (y * z));
            CHECK(x * (y + z) == x * y + x * z);
        }
    }
}

}  // TEST_SUITE
