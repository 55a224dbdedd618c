#include "doctest.h"
#include "support.hpp"

#include "xring/oracles.hpp"
#include "xring/serialization.hpp"

using namespace xring;

namespace {

std::vector<CycScalar> rational_grid() {
    return {CycScalar::from_int(-1), CycScalar::from_rational(make_rational(-1, 2), 4),
            CycScalar::zero(4), CycScalar::from_rational(make_rational(1, 2), 4),
            CycScalar::from_int(1)};
}

std::vector<CycScalar> pm_one_grid() {
    return {CycScalar::from_int(-1), CycScalar::zero(4), CycScalar::from_int(1)};
}

}  // namespace

TEST_SUITE("oracles") {

TEST_CASE("candidate count follows the a-priori formula") {
    Group z = Group::free_abelian(1);
    SearchSpace space = SearchSpace::for_group(z, ball(z, 2), pm_one_grid(), 3);
    // sum_{s<=3} C(5,s) 2^s = 1 + 10 + 40 + 80.
    CHECK(space.candidate_count() == 131);
    SearchSpace empty_grid = SearchSpace::for_group(z, ball(z, 2), {CycScalar::zero(4)}, 3);
    CHECK(empty_grid.candidate_count() == 1);
}

TEST_CASE("zero divisors: C[Z] window is clean, C[Z/2] has the witness pair") {
    Group z = Group::free_abelian(1);
    SearchReport clean = zero_divisor_search(SearchSpace::for_group(z, ball(z, 2), pm_one_grid(), 3));
    CHECK(clean.witnesses.empty());
    CHECK(clean.verdict == "no_zero_divisors_in_window");
    CHECK(clean.candidate_count == 131);

    Group z2 = Group::cyclic(2);
    SearchReport torsion =
        zero_divisor_search(SearchSpace::for_group(z2, ball(z2, 1), pm_one_grid(), 2));
    CHECK_FALSE(torsion.witnesses.empty());
    CHECK(torsion.verdict == "zero_divisors_found");
    // The classical pair (delta_0 + delta_1, delta_0 - delta_1) appears.
    bool found = false;
    GroupRingElement sum = GroupRingElement::dirac(z2, z2.reduced_cyclic(0)) +
                           GroupRingElement::dirac(z2, z2.reduced_cyclic(1));
    GroupRingElement diff = GroupRingElement::dirac(z2, z2.reduced_cyclic(0)) +
                            GroupRingElement::dirac(z2, z2.reduced_cyclic(1),
                                                    CycScalar::from_int(-1));
    std::string lhs = ring_element_to_json(sum);
    std::string rhs = ring_element_to_json(diff);
    for (const auto& w : torsion.witnesses) {
        if (w.lhs == lhs && w.rhs == rhs) found = true;
    }
    CHECK(found);

    // Every witness recheck is the serialized zero element.
    for (const auto& w : torsion.witnesses) {
        GroupRingElement product = ring_element_from_json(w.recheck);
        CHECK(product.is_zero());
    }

    SearchReport vacuous =
        zero_divisor_search(SearchSpace::for_group(z, ball(z, 1), {CycScalar::zero(4)}, 2));
    CHECK(vacuous.witnesses.empty());
}

TEST_CASE("unit search over C[Z]: every unit is a monomial, delta_e is found") {
    Group z = Group::free_abelian(1);
    SearchReport report = unit_search(SearchSpace::for_group(z, ball(z, 2), rational_grid(), 2));
    CHECK_FALSE(report.witnesses.empty());
    CHECK(report.verdict == "all_units_trivial");
    std::string identity = ring_element_to_json(GroupRingElement::identity(z));
    bool identity_found = false;
    for (const auto& w : report.witnesses) {
        CHECK(w.classification == "trivial");
        if (w.lhs == identity) identity_found = true;
    }
    CHECK(identity_found);
    // +-delta_k for the five window points, and nothing else (1/2 has no
    // inverse inside the grid).
    CHECK(report.witnesses.size() == 10);
}

TEST_CASE("unit search over a small crossed-product window is homogeneous") {
    CrossedSystem cs = lift_to_crossed_system(FactorSystem::heisenberg_semidirect());
    std::vector<GroupElement> window;
    for (const auto& n : ball(cs.coefficient_group(), 1)) {
        for (const auto& h : ball(cs.quotient_group(), 1)) {
            window.push_back(GroupElement::pair_elem(n, h));
        }
    }
    SearchSpace space = SearchSpace::for_crossed(cs, window, pm_one_grid(), 1);
    SearchReport report = unit_search(space);
    CHECK_FALSE(report.witnesses.empty());
    CHECK(report.verdict == "all_units_homogeneous");
    for (const auto& w : report.witnesses) {
        CHECK(w.classification == "homogeneous");
    }
}

TEST_CASE("idempotent search: C[Z] has only 0 and delta_0; C[Z/2] has the averages") {
    Group z = Group::free_abelian(1);
    SearchReport laurent =
        idempotent_search(SearchSpace::for_group(z, ball(z, 2), rational_grid(), 2));
    CHECK(laurent.verdict == "only_trivial_idempotents");
    CHECK(laurent.witnesses.size() == 2);  // 0 and delta_0

    Group z2 = Group::cyclic(2);
    SearchReport torsion =
        idempotent_search(SearchSpace::for_group(z2, ball(z2, 1), rational_grid(), 2));
    CHECK(torsion.verdict == "non_trivial_idempotent_found");
    CycScalar half = CycScalar::from_rational(make_rational(1, 2), 4);
    GroupRingElement average = GroupRingElement::dirac(z2, z2.reduced_cyclic(0), half) +
                               GroupRingElement::dirac(z2, z2.reduced_cyclic(1), half);
    std::string average_json = ring_element_to_json(average);
    bool found = false;
    for (const auto& w : torsion.witnesses) {
        if (w.lhs == average_json) {
            found = true;
            CHECK(w.classification == "non_trivial");
        }
    }
    CHECK(found);

    SearchReport empty_grid =
        idempotent_search(SearchSpace::for_group(z, ball(z, 1), {CycScalar::zero(4)}, 2));
    CHECK(empty_grid.witnesses.size() == 1);  // only the zero element
    CHECK(empty_grid.witnesses[0].classification == "trivial");
}

TEST_CASE("searches are deterministic byte for byte") {
    Group z2 = Group::cyclic(2);
    SearchSpace space = SearchSpace::for_group(z2, ball(z2, 1), rational_grid(), 2);
    SearchReport a = zero_divisor_search(space);
    SearchReport b = zero_divisor_search(space);
    CHECK(search_report_to_json(a, space, false) == search_report_to_json(b, space, false));
    SearchReport u1 = unit_search(space);
    SearchReport u2 = unit_search(space);
    CHECK(search_report_to_json(u1, space, false) == search_report_to_json(u2, space, false));
}

TEST_CASE("matrix oracle: identity word, commutator word, bulk random words") {
    Group sd = heisenberg_semidirect();
    auto elem = [](long m, long n, long k) {
        return GroupElement::pair_elem(GroupElement::vector_elem({m, n}),
                                       GroupElement::vector_elem({k}));
    };
    CHECK(heisenberg_matrix_image_semidirect(sd.identity()) == UpperTriangular::identity());

    // a b a^-1 b^-1 maps to the central matrix with c = 1.
    GroupElement a = elem(1, 0, 0);
    GroupElement b = elem(0, 0, 1);
    GroupElement commutator = sd.mul(sd.mul(a, b), sd.mul(sd.inv(a), sd.inv(b)));
    UpperTriangular image = heisenberg_matrix_image_semidirect(commutator);
    CHECK(image == UpperTriangular{0, 0, 1});

    // The correspondence is a homomorphism on random pairs.
    testsupport::Rng rng(91);
    auto window = ball(sd, 2);
    for (int t = 0; t < 50; ++t) {
        const GroupElement& x = rng.pick(window);
        const GroupElement& y = rng.pick(window);
        CHECK(heisenberg_matrix_image_semidirect(sd.mul(x, y)) ==
              heisenberg_matrix_image_semidirect(x) * heisenberg_matrix_image_semidirect(y));
    }
    Group ce = heisenberg_central();
    auto ce_window = ball(ce, 2);
    for (int t = 0; t < 50; ++t) {
        const GroupElement& x = rng.pick(ce_window);
        const GroupElement& y = rng.pick(ce_window);
        CHECK(heisenberg_matrix_image_central(ce.mul(x, y)) ==
              heisenberg_matrix_image_central(x) * heisenberg_matrix_image_central(y));
    }

    MatrixOracleReport report = matrix_oracle_check(1000, 42);
    CHECK(report.words_checked == 1000);
    CHECK(report.passed());
    CHECK(report.seed == 42);
}

TEST_CASE("iso check: identity map, the two H3 realizations, and a broken map") {
    Group z2 = Group::free_abelian(2);
    GeneratorMap identity_map = {
        {GroupElement::vector_elem({1, 0}), GroupElement::vector_elem({1, 0})},
        {GroupElement::vector_elem({0, 1}), GroupElement::vector_elem({0, 1})},
    };
    CHECK(group_iso_check(z2, z2, identity_map, 3).passed());

    Group sd = heisenberg_semidirect();
    Group ce = heisenberg_central();
    auto sd_elem = [](long m, long n, long k) {
        return GroupElement::pair_elem(GroupElement::vector_elem({m, n}),
                                       GroupElement::vector_elem({k}));
    };
    auto ce_elem = [](long z, long k, long kp) {
        return GroupElement::pair_elem(GroupElement::vector_elem({z}),
                                       GroupElement::vector_elem({k, kp}));
    };
    GeneratorMap h3_map = {
        {sd_elem(1, 0, 0), ce_elem(0, 1, 0)},
        {sd_elem(0, 0, 1), ce_elem(0, 0, 1)},
        {sd_elem(0, -1, 0), ce_elem(1, 0, 0)},
    };
    IsoReport good = group_iso_check(sd, ce, h3_map, 3);
    CHECK(good.passed());

    GeneratorMap broken = {
        {sd_elem(1, 0, 0), ce.identity()},
        {sd_elem(0, 0, 1), ce_elem(0, 0, 1)},
    };
    IsoReport bad = group_iso_check(sd, ce, broken, 2);
    CHECK_FALSE(bad.passed());
    CHECK_FALSE(bad.violations.empty());

    GeneratorMap outside = {
        {sd_elem(1, 0, 0), GroupElement::vector_elem({1})},
    };
    CHECK_THROWS_AS(group_iso_check(sd, ce, outside, 2), std::invalid_argument);
}

TEST_CASE("search spaces validate their windows") {
    Group z = Group::free_abelian(1);
    CHECK_THROWS_AS(
        SearchSpace::for_group(z, {GroupElement::vector_elem({1, 2})}, pm_one_grid(), 1),
        std::invalid_argument);
    CrossedSystem cs = lift_to_crossed_system(FactorSystem::heisenberg_semidirect());
    CHECK_THROWS_AS(
        SearchSpace::for_crossed(cs, {GroupElement::vector_elem({1})}, pm_one_grid(), 1),
        std::invalid_argument);
}

}  // TEST_SUITE
