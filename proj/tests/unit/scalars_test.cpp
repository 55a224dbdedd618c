#include "doctest.h"
#include "support.hpp"

#include "xring/cyclotomic.hpp"

using namespace xring;
using testsupport::numeric;
using testsupport::numerically_close;
using testsupport::Rng;

TEST_SUITE("scalars") {

TEST_CASE("cyclotomic polynomials match the classical tables") {
    auto as_longs = [](unsigned q) {
        std::vector<long> out;
        for (const auto& c : cyclotomic_polynomial(q)) out.push_back(to_long(c));
        return out;
    };
    CHECK(as_longs(1) == std::vector<long>{-1, 1});
    CHECK(as_longs(2) == std::vector<long>{1, 1});
    CHECK(as_longs(3) == std::vector<long>{1, 1, 1});
    CHECK(as_longs(4) == std::vector<long>{1, 0, 1});
    CHECK(as_longs(6) == std::vector<long>{1, -1, 1});
    CHECK(as_longs(12) == std::vector<long>{1, 0, -1, 0, 1});
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(12) == 4);
}

TEST_CASE("addition: Gaussian units and identities") {
    CycScalar one = CycScalar::one(4);
    CycScalar i = CycScalar::root_of_unity(4, 1);
    CycScalar sum = one + i;
    CHECK(sum == CycScalar::gaussian(Rational(1), Rational(1)));
    CHECK(sum + CycScalar::zero(4) == sum);
    CHECK_THROWS_AS(one + CycScalar::one(3), std::invalid_argument);
}

TEST_CASE("addition reduces through the cyclotomic polynomial: zeta3 + zeta3^2 = -1") {
    CycScalar z = CycScalar::root_of_unity(3, 1);
    CycScalar z2 = CycScalar::root_of_unity(3, 2);
    CHECK(z2 == CycScalar(3, {Rational(-1), Rational(-1)}));
    CHECK(z + z2 == CycScalar::from_int(-1, 3));
}

TEST_CASE("multiplication: i*i = -1, identity, zeta3^2 reduction") {
    CycScalar i = CycScalar::root_of_unity(4, 1);
    CHECK(i * i == CycScalar::from_int(-1, 4));
    Rng rng(11);
    for (int t = 0; t < 20; ++t) {
        CycScalar a = rng.scalar(4);
        CHECK(a * CycScalar::one(4) == a);
    }
    CycScalar z = CycScalar::root_of_unity(3, 1);
    CHECK(z * z == CycScalar(3, {Rational(-1), Rational(-1)}));
}

TEST_CASE("conjugation is the involutive automorphism zeta -> zeta^{-1}") {
    CHECK(conj(CycScalar::root_of_unity(4, 1)) == -CycScalar::root_of_unity(4, 1));
    CHECK(conj(CycScalar::from_rational(make_rational(3, 2), 4)) ==
          CycScalar::from_rational(make_rational(3, 2), 4));
    Rng rng(12);
    for (int t = 0; t < 30; ++t) {
        unsigned q = static_cast<unsigned>(rng.pick<long>({1, 2, 3, 4, 6, 12}));
        CycScalar a = rng.scalar(q);
        CycScalar b = rng.scalar(q);
        CHECK(conj(conj(a)) == a);
        CHECK(conj(a + b) == conj(a) + conj(b));
        CHECK(conj(a * b) == conj(a) * conj(b));
    }
}

TEST_CASE("inverse: frozen values and the 1 + zeta3 example") {
    CHECK(inverse(CycScalar::root_of_unity(4, 1)) == -CycScalar::root_of_unity(4, 1));
    CHECK(inverse(CycScalar::from_int(2, 4)) ==
          CycScalar::from_rational(make_rational(1, 2), 4));
    CycScalar z = CycScalar::root_of_unity(3, 1);
    CycScalar value = CycScalar::one(3) + z;
    CHECK(inverse(value) == -z);
    CHECK(value * inverse(value) == CycScalar::one(3));
    CHECK_THROWS_AS(inverse(CycScalar::zero(4)), std::domain_error);
}

TEST_CASE("field axioms hold exactly on random samples") {
    Rng rng(13);
    for (int t = 0; t < 40; ++t) {
        unsigned q = static_cast<unsigned>(rng.pick<long>({1, 3, 4, 5, 6, 8, 12}));
        CycScalar a = rng.scalar(q);
        CycScalar b = rng.scalar(q);
        CycScalar c = rng.scalar(q);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) {
            CHECK(a * inverse(a) == CycScalar::one(q));
        }
    }
}

TEST_CASE("numeric oracle agrees with the exact arithmetic") {
    Rng rng(14);
    for (int t = 0; t < 40; ++t) {
        unsigned q = static_cast<unsigned>(rng.pick<long>({3, 4, 5, 7, 12}));
        CycScalar a = rng.scalar(q);
        CycScalar b = rng.scalar(q);
        CHECK(numerically_close(numeric(a + b), numeric(a) + numeric(b)));
        CHECK(numerically_close(numeric(a * b), numeric(a) * numeric(b)));
        CHECK(numerically_close(numeric(conj(a)), std::conj(numeric(a))));
        if (!a.is_zero()) {
            CHECK(numerically_close(numeric(inverse(a)), 1.0 / numeric(a)));
        }
    }
}

TEST_CASE("embedding into a larger order is a field homomorphism") {
    Rng rng(15);
    for (int t = 0; t < 30; ++t) {
        CycScalar a = rng.scalar(4);
        CycScalar b = rng.scalar(4);
        CHECK(a.embedded(12) + b.embedded(12) == (a + b).embedded(12));
        CHECK(a.embedded(12) * b.embedded(12) == (a * b).embedded(12));
        CHECK(numerically_close(numeric(a.embedded(12)), numeric(a)));
    }
    CHECK_THROWS_AS(CycScalar::one(4).embedded(6), std::invalid_argument);
    CHECK(CycScalar::from_int(7, 3).converted(4) == CycScalar::from_int(7, 4));
    CHECK_THROWS_AS(CycScalar::root_of_unity(3, 1).converted(4), std::invalid_argument);
}

TEST_CASE("the Gaussian subring is closed under every operation") {
    Rng rng(16);
    auto gaussian_rational = [](const CycScalar& s) {
        return s.order() == 4 && s.coeffs().size() == 2;
    };
    for (int t = 0; t < 30; ++t) {
        CycScalar a = CycScalar::gaussian(rng.rational(), rng.rational());
        CycScalar b = CycScalar::gaussian(rng.rational(), rng.rational());
        CHECK(gaussian_rational(a + b));
        CHECK(gaussian_rational(a * b));
        CHECK(gaussian_rational(conj(a)));
        if (!a.is_zero()) CHECK(gaussian_rational(inverse(a)));
    }
}

TEST_CASE("abs_squared and upper bounds") {
    CycScalar three_plus_4i = CycScalar::gaussian(Rational(3), Rational(4));
    CHECK(abs_squared(three_plus_4i) == CycScalar::from_int(25, 4));
    CHECK(abs_upper_bound(three_plus_4i) == Rational(5));
    CycScalar one_plus_i = CycScalar::gaussian(Rational(1), Rational(1));
    Rational bound = abs_upper_bound(one_plus_i);
    CHECK(bound * bound >= Rational(2));
    CHECK(bound <= make_rational(1414214, 1000000));
}

}  // TEST_SUITE
