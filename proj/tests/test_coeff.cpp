#include <doctest.h>

#include "grlpa/laurent.hpp"
#include "test_util.hpp"

using namespace grlpa;
using testutil::Rng;

namespace {

LaurentPoly random_poly(Rng& rng, const Field& f, int64_t step) {
    LaurentPoly p = LaurentPoly::zero(f, step);
    int terms = rng.below(4);
    for (int t = 0; t < terms; ++t) {
        int64_t k = rng.below(7) - 3;
        Scalar c = Scalar::of_int(f, rng.below(5) - 2);
        p = p + LaurentPoly::monomial(c, k * step, step);
    }
    return p;
}

} // namespace

TEST_CASE("laurent multiplication examples") {
    Field q = Field::rationals();
    auto x2 = LaurentPoly::monomial(Scalar::one(q), 2, 2);
    auto xm2 = LaurentPoly::monomial(Scalar::one(q), -2, 2);
    CHECK(x2 * xm2 == LaurentPoly::one(q, 2));

    Field f2 = Field::prime(2);
    auto a = LaurentPoly::one(f2, 2) + LaurentPoly::monomial(Scalar::one(f2), 2, 2);
    auto sq = a * a;
    auto expected = LaurentPoly::one(f2, 2) + LaurentPoly::monomial(Scalar::one(f2), 4, 2);
    CHECK(sq == expected);

    CHECK((a * LaurentPoly::zero(f2, 2)).is_zero());
}

TEST_CASE("laurent step mismatch is a structural error") {
    Field q = Field::rationals();
    auto a = LaurentPoly::one(q, 2);
    auto b = LaurentPoly::one(q, 3);
    CHECK_THROWS_AS(a * b, StructuralError);
}

TEST_CASE("laurent component reads off the graded part") {
    Field q = Field::rationals();
    auto p = LaurentPoly::monomial(Scalar::of_int(q, 3), 2, 2) +
             LaurentPoly::monomial(Scalar::one(q), 4, 2);
    CHECK(p.component(4) == LaurentPoly::monomial(Scalar::one(q), 4, 2));
    CHECK(p.component(3).is_zero());
    CHECK(LaurentPoly::zero(q, 2).component(0).is_zero());
    CHECK(LaurentPoly::zero(q, 2).component(7).is_zero());
}

TEST_CASE("laurent units are the nonzero monomials") {
    Field q = Field::rationals();
    CHECK(LaurentPoly::monomial(Scalar::of_int(q, 5), -4, 2).is_unit());
    auto not_unit = LaurentPoly::one(q, 2) + LaurentPoly::monomial(Scalar::one(q), 2, 2);
    CHECK(!not_unit.is_unit());
    CHECK(!LaurentPoly::zero(q, 2).is_unit());
}

TEST_CASE("laurent unit inverse multiplies to one") {
    for (int64_t p : {0, 2, 3, 5}) {
        Field f = p == 0 ? Field::rationals() : Field::prime(p);
        Rng rng(11 + p);
        for (int trial = 0; trial < 30; ++trial) {
            int64_t step = 1 + rng.below(3);
            Scalar c = Scalar::of_int(f, 1 + rng.below(4));
            if (c.is_zero()) continue;
            auto u = LaurentPoly::monomial(c, (rng.below(7) - 3) * step, step);
            CHECK(u.is_unit());
            CHECK(u * u.unit_inverse() == LaurentPoly::one(f, step));
        }
    }
}

TEST_CASE("laurent ring identities on random triples") {
    for (int64_t p : {0, 2, 3}) {
        Field f = p == 0 ? Field::rationals() : Field::prime(p);
        Rng rng(101 + p);
        for (int trial = 0; trial < 60; ++trial) {
            int64_t step = 1 + rng.below(3);
            auto a = random_poly(rng, f, step);
            auto b = random_poly(rng, f, step);
            auto c = random_poly(rng, f, step);
            CHECK(a * b == b * a);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
        }
    }
}

TEST_CASE("component sums over the support reconstruct the value") {
    Field f3 = Field::prime(3);
    Rng rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        int64_t step = 1 + rng.below(3);
        auto a = random_poly(rng, f3, step);
        LaurentPoly sum = LaurentPoly::zero(f3, step);
        for (int64_t d = -9; d <= 9; ++d) sum = sum + a.component(d);
        CHECK(sum == a);
    }
}

TEST_CASE("laurent parsing and printing") {
    Field q = Field::rationals();
    auto p = LaurentPoly::parse(q, 2, "2x^-4+1");
    REQUIRE(p.has_value());
    CHECK(p->coefficient(-4) == Scalar::of_int(q, 2));
    CHECK(p->coefficient(0) == Scalar::one(q));
    CHECK(p->to_string() == "2x^-4+1");

    CHECK(LaurentPoly::parse(q, 2, "0").has_value());
    CHECK(LaurentPoly::parse(q, 2, "0")->is_zero());
    CHECK(!LaurentPoly::parse(q, 2, "x^3").has_value()); // not a multiple of the step
    CHECK(LaurentPoly::parse(q, 1, "-1/2x")->coefficient(1) ==
          Scalar::of_rational(Rational(-1, 2)));
}

TEST_CASE("prime field scalars") {
    CHECK_THROWS_AS(Field::prime(4), StructuralError);
    Field f5 = Field::prime(5);
    Scalar three = Scalar::of_int(f5, 3);
    CHECK(three * three.inverse() == Scalar::one(f5));
    CHECK(Scalar::of_int(f5, -1) == Scalar::of_int(f5, 4));
    CHECK_THROWS_AS(Scalar::zero(f5).inverse(), StructuralError);
    CHECK_THROWS_AS(Scalar::one(f5) + Scalar::one(Field::prime(3)), StructuralError);
}
