#include "doctest.h"
#include "support.hpp"

#include "xring/factor_system.hpp"
#include "xring/oracles.hpp"

using namespace xring;
using testsupport::Rng;

TEST_SUITE("groups") {

TEST_CASE("free abelian groups add coordinates") {
    Group z2 = Group::free_abelian(2);
    GroupElement a = GroupElement::vector_elem({1, 2});
    GroupElement b = GroupElement::vector_elem({3, -1});
    CHECK(z2.mul(a, b) == GroupElement::vector_elem({4, 1}));
    CHECK(z2.inv(a) == GroupElement::vector_elem({-1, -2}));
    CHECK(z2.mul(a, z2.identity()) == a);
    CHECK(z2.inv(z2.identity()) == z2.identity());
    CHECK_THROWS_AS(z2.mul(a, GroupElement::vector_elem({1})), std::invalid_argument);
}

TEST_CASE("cyclic groups reduce residues to canonical form") {
    Group z5 = Group::cyclic(5);
    CHECK(z5.reduced_cyclic(Int(7)) == GroupElement::cyclic_elem(Int(2)));
    CHECK(z5.reduced_cyclic(Int(-1)) == GroupElement::cyclic_elem(Int(4)));
    CHECK(z5.mul(z5.reduced_cyclic(3), z5.reduced_cyclic(4)) == z5.reduced_cyclic(2));
    CHECK(z5.inv(z5.reduced_cyclic(2)) == z5.reduced_cyclic(3));
    CHECK_FALSE(z5.contains(GroupElement::cyclic_elem(Int(5))));
    CHECK_FALSE(z5.torsion_free());
    CHECK(Group::free_abelian(3).torsion_free());
}

TEST_CASE("Heisenberg semidirect preset multiplies by the shift action") {
    Group h3 = heisenberg_semidirect();
    auto elem = [](long m, long n, long k) {
        return GroupElement::pair_elem(GroupElement::vector_elem({m, n}),
                                       GroupElement::vector_elem({k}));
    };
    // ((1,0);0)*((0,0);1) = ((1,0);1) but ((0,0);1)*((1,0);0) = ((1,1);1).
    CHECK(h3.mul(elem(1, 0, 0), elem(0, 0, 1)) == elem(1, 0, 1));
    CHECK(h3.mul(elem(0, 0, 1), elem(1, 0, 0)) == elem(1, 1, 1));
    CHECK(h3.mul(elem(2, 3, -1), h3.identity()) == elem(2, 3, -1));
    CHECK(h3.torsion_free());

    // The commutator of the generators is central and non-trivial.
    GroupElement a = elem(1, 0, 0);
    GroupElement b = elem(0, 0, 1);
    GroupElement c = h3.mul(h3.mul(a, b), h3.mul(h3.inv(a), h3.inv(b)));
    CHECK(c == elem(0, -1, 0));
    for (const auto& x : ball(h3, 2)) {
        CHECK(h3.mul(c, x) == h3.mul(x, c));
    }
}

TEST_CASE("Heisenberg inverses verify against the matrix model") {
    Group h3 = heisenberg_semidirect();
    GroupElement x = GroupElement::pair_elem(GroupElement::vector_elem({1, 0}),
                                             GroupElement::vector_elem({1}));
    GroupElement xinv = h3.inv(x);
    CHECK(h3.mul(x, xinv) == h3.identity());
    CHECK(h3.mul(xinv, x) == h3.identity());
    UpperTriangular image = heisenberg_matrix_image_semidirect(x);
    UpperTriangular image_inv = heisenberg_matrix_image_semidirect(xinv);
    CHECK(image * image_inv == UpperTriangular::identity());
}

TEST_CASE("central preset realizes the bilinear commutation relation") {
    Group h3 = heisenberg_central();
    auto elem = [](long z, long k, long kp) {
        return GroupElement::pair_elem(GroupElement::vector_elem({z}),
                                       GroupElement::vector_elem({k, kp}));
    };
    GroupElement lhs = h3.mul(elem(0, 1, 0), elem(0, 0, 1));
    GroupElement rhs = h3.mul(elem(0, 0, 1), elem(0, 1, 0));
    CHECK(lhs == elem(1, 1, 1));
    CHECK(rhs == elem(0, 1, 1));
    // The two orders differ exactly by the central generator (1;(0,0)).
    CHECK(lhs == h3.mul(elem(1, 0, 0), rhs));
    CHECK(h3.mul(h3.identity(), h3.identity()) == h3.identity());
}

TEST_CASE("associativity on random triples in every registered group") {
    Rng rng(21);
    std::vector<Group> groups = {Group::free_abelian(2), Group::cyclic(6),
                                 heisenberg_semidirect(), heisenberg_central(),
                                 Group::extension(FactorSystem::trivial(Group::free_abelian(1),
                                                                        Group::cyclic(4)))};
    for (const auto& g : groups) {
        auto window = ball(g, 2);
        for (int t = 0; t < 25; ++t) {
            const GroupElement& a = rng.pick(window);
            const GroupElement& b = rng.pick(window);
            const GroupElement& c = rng.pick(window);
            CHECK(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)));
            CHECK(g.mul(a, g.inv(a)) == g.identity());
            CHECK(g.mul(g.inv(a), a) == g.identity());
        }
    }
}

TEST_CASE("balls enumerate canonical windows") {
    CHECK(ball(Group::free_abelian(1), 3).size() == 7);
    CHECK(ball(Group::free_abelian(2), 3).size() == 25);
    CHECK(ball(Group::cyclic(2), 3).size() == 2);
    auto b = ball(heisenberg_semidirect(), 1);
    CHECK(b.size() == 5 * 3);
    CHECK(std::is_sorted(b.begin(), b.end()));
}

TEST_CASE("element ordering and debug rendering") {
    GroupElement a = GroupElement::vector_elem({1, -2});
    CHECK(debug_string(a) == "[1,-2]");
    GroupElement p = GroupElement::pair_elem(GroupElement::vector_elem({1, 0}),
                                             GroupElement::vector_elem({2}));
    CHECK(debug_string(p) == "([1,0];[2])");
    CHECK(GroupElement::compare(a, a) == 0);
    CHECK(GroupElement::compare(GroupElement::vector_elem({0, 0}), a) != 0);
}

}  // TEST_SUITE
