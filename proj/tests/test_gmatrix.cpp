#include <doctest.h>

#include "grlpa/gmatrix.hpp"
#include "test_util.hpp"

using namespace grlpa;
using testutil::Rng;

namespace {

const Field kQ = Field::rationals();

GMatrix e_unit(const GradedMatrixRing& ring, int i, int j, int64_t exponent = 0) {
    return GMatrix::unit_matrix(
        ring, i, j, LaurentPoly::monomial(Scalar::one(ring.field), exponent, ring.entry_step()));
}

} // namespace

TEST_CASE("matrix unit degrees follow the stored convention") {
    auto ring = GradedMatrixRing::trivial(2, kQ, {0, 1});
    auto e12 = e_unit(ring, 0, 1);
    auto d = gm_degree(e12);
    REQUIRE(d.kind == DegreeResult::Homogeneous);
    CHECK(d.degree == -1); // g_1 - g_2

    auto id = gm_degree(GMatrix::identity(ring));
    REQUIRE(id.kind == DegreeResult::Homogeneous);
    CHECK(id.degree == 0);

    auto mixed = gm_degree(e_unit(ring, 0, 0) + e_unit(ring, 0, 1));
    CHECK(mixed.kind == DegreeResult::Inhomogeneous);

    CHECK(gm_degree(GMatrix::zeros(ring)).kind == DegreeResult::Zero);

    Rng rng(3);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 1 + rng.below(3);
        std::vector<int64_t> shifts;
        for (int i = 0; i < n; ++i) shifts.push_back(rng.below(5) - 2);
        auto r = GradedMatrixRing::laurent(n, kQ, 1 + rng.below(3), shifts);
        int i = rng.below(n), j = rng.below(n);
        auto dd = gm_degree(e_unit(r, i, j));
        REQUIRE(dd.kind == DegreeResult::Homogeneous);
        CHECK(dd.degree == shifts[i] - shifts[j]);
    }
}

TEST_CASE("grading law under multiplication") {
    Rng rng(17);
    for (int trial = 0; trial < 80; ++trial) {
        int n = 1 + rng.below(3);
        std::vector<int64_t> shifts;
        for (int i = 0; i < n; ++i) shifts.push_back(rng.below(4));
        auto ring = GradedMatrixRing::laurent(n, kQ, 1 + rng.below(2), shifts);
        int i = rng.below(n), j = rng.below(n), k = rng.below(n), l = rng.below(n);
        auto a = e_unit(ring, i, j, ring.step * (rng.below(3) - 1));
        auto b = e_unit(ring, k, l, ring.step * (rng.below(3) - 1));
        auto da = gm_degree(a), db = gm_degree(b);
        auto ab = a * b;
        auto dab = gm_degree(ab);
        if (dab.kind == DegreeResult::Homogeneous) {
            REQUIRE(da.kind == DegreeResult::Homogeneous);
            REQUIRE(db.kind == DegreeResult::Homogeneous);
            CHECK(dab.degree == da.degree + db.degree);
        }
    }
}

TEST_CASE("shift normalization") {
    auto a = normalize_shifts(GradedMatrixRing::laurent(2, kQ, 2, {5, 2}));
    CHECK(a.shifts == std::vector<int64_t>{0, 1});

    auto b = normalize_shifts(GradedMatrixRing::trivial(2, kQ, {7, 7}));
    CHECK(b.shifts == std::vector<int64_t>{0, 0});

    auto c = normalize_shifts(GradedMatrixRing::trivial(3, kQ, {2, 0, 1}));
    CHECK(c.shifts == std::vector<int64_t>{0, 1, 2});

    // translation invariance of the canonical form
    Rng rng(23);
    for (int trial = 0; trial < 80; ++trial) {
        int n = 1 + rng.below(3);
        int64_t m = 1 + rng.below(3);
        std::vector<int64_t> shifts;
        for (int i = 0; i < n; ++i) shifts.push_back(rng.below(7) - 3);
        auto ring = GradedMatrixRing::laurent(n, kQ, m, shifts);
        auto canon = normalize_shifts(ring);
        // translate all, translate one by m, permute
        auto translated = ring;
        int64_t delta = rng.below(5) - 2;
        for (auto& s : translated.shifts) s += delta;
        CHECK(normalize_shifts(translated).shifts == canon.shifts);
        auto bumped = ring;
        bumped.shifts[rng.below(n)] += m;
        CHECK(normalize_shifts(bumped).shifts == canon.shifts);
        auto permuted = ring;
        std::swap(permuted.shifts[rng.below(n)], permuted.shifts[rng.below(n)]);
        CHECK(normalize_shifts(permuted).shifts == canon.shifts);
        // idempotence
        CHECK(normalize_shifts(canon).shifts == canon.shifts);
    }
}

TEST_CASE("residue multiplicities") {
    CHECK(residue_multiplicities(GradedMatrixRing::laurent(2, kQ, 2, {0, 1})) ==
          std::vector<int>{1, 1});
    CHECK(residue_multiplicities(GradedMatrixRing::laurent(2, kQ, 2, {0, 0})) ==
          std::vector<int>{2, 0});
    for (int m = 1; m <= 4; ++m) {
        std::vector<int64_t> shifts;
        for (int i = 0; i < m; ++i) shifts.push_back(i);
        auto k = residue_multiplicities(GradedMatrixRing::laurent(m, kQ, m, shifts));
        CHECK(std::all_of(k.begin(), k.end(), [](int v) { return v == 1; }));
    }
    CHECK_THROWS_AS(residue_multiplicities(GradedMatrixRing::trivial(2, kQ, {0, 1})),
                    ContractViolation);
}

TEST_CASE("graded clean ring verdicts") {
    CHECK(is_graded_clean_ring(GradedMatrixRing::trivial(2, kQ, {0, 1})).value == Verdict::No);
    CHECK(is_graded_clean_ring(GradedMatrixRing::trivial(2, kQ, {3, 3})).value == Verdict::Yes);
    CHECK(is_graded_clean_ring(GradedMatrixRing::laurent(1, kQ, 1, {0})).value == Verdict::Yes);
    CHECK(is_graded_clean_ring(GradedMatrixRing::laurent(2, kQ, 2, {0, 1})).value == Verdict::No);
}

TEST_CASE("graded exchange ring verdicts") {
    CHECK(graded_exchange_ring(GradedMatrixRing::trivial(3, kQ, {0, 1, 5})).value == Verdict::Yes);
    CHECK(graded_exchange_ring(GradedMatrixRing::laurent(2, kQ, 2, {0, 1})).value == Verdict::Yes);
    auto open_case = graded_exchange_ring(GradedMatrixRing::laurent(2, kQ, 2, {0, 0}));
    CHECK(open_case.value == Verdict::Unknown);
    CHECK(open_case.citation == "graded_exchange_matrix_open");
}

TEST_CASE("zero component structure") {
    auto a = zero_component_structure(GradedMatrixRing::trivial(3, kQ, {0, 0, 1}));
    CHECK(a.block_sizes == std::vector<int>{2, 1});
    auto b = zero_component_structure(GradedMatrixRing::trivial(2, kQ, {0, 1}));
    CHECK(b.block_sizes == std::vector<int>{1, 1});
    auto c = zero_component_structure(GradedMatrixRing::laurent(2, kQ, 2, {0, 1}));
    CHECK(c.block_sizes == std::vector<int>{1, 1});
    // enumerate admissible degree-zero positions and compare
    auto ring = GradedMatrixRing::trivial(3, kQ, {0, 0, 1});
    int count = 0;
    for (int i = 0; i < ring.n; ++i)
        for (int j = 0; j < ring.n; ++j)
            if (admissible_exponent(ring, 0, i, j)) ++count;
    CHECK(count == 2 * 2 + 1 * 1);
}

TEST_CASE("graded units") {
    auto ring = GradedMatrixRing::laurent(2, kQ, 2, {0, 1});
    CHECK(gm_is_graded_unit(GMatrix::identity(ring)));

    // degree-1 anti-diagonal pattern: x^2 sits where the exponent law puts it
    auto a = GMatrix::zeros(ring)
                 .with_entry(0, 1, LaurentPoly::monomial(Scalar::one(kQ), 2, 2))
                 .with_entry(1, 0, LaurentPoly::one(kQ, 2));
    REQUIRE(gm_degree(a).kind == DegreeResult::Homogeneous);
    CHECK(gm_degree(a).degree == 1);
    CHECK(gm_det(a) == -LaurentPoly::monomial(Scalar::one(kQ), 2, 2));
    CHECK(gm_is_graded_unit(a));
    auto inv = gm_inverse(a);
    REQUIRE(inv.has_value());
    CHECK(a * *inv == GMatrix::identity(ring));
    CHECK(*inv * a == GMatrix::identity(ring));

    CHECK(!gm_is_graded_unit(e_unit(ring, 0, 0)));
    CHECK(!gm_is_graded_unit(GMatrix::zeros(ring)));
}

TEST_CASE("right inverse of one minus a nilpotent pattern") {
    Field f2 = Field::prime(2);
    auto ring = GradedMatrixRing::laurent(2, f2, 2, {0, 1});
    // single entry above the diagonal, degree -1
    auto a = GMatrix::unit_matrix(ring, 0, 1, LaurentPoly::one(f2, 2));
    auto b = right_inverse_one_minus(a);
    auto expected = GMatrix::identity(ring).with_entry(0, 1, LaurentPoly::one(f2, 2));
    CHECK(b == expected);
    CHECK((GMatrix::identity(ring) - a) * b == GMatrix::identity(ring));

    // invertible input: the error carries the closed-form inverse
    auto u = GMatrix::zeros(ring)
                 .with_entry(0, 1, LaurentPoly::monomial(Scalar::one(f2), 2, 2))
                 .with_entry(1, 0, LaurentPoly::one(f2, 2));
    CHECK_THROWS_AS(right_inverse_one_minus(u), MatrixInvertibleError);
    try {
        right_inverse_one_minus(u);
    } catch (const MatrixInvertibleError& e) {
        CHECK(u * e.inverse == GMatrix::identity(ring));
    }

    // zero input: the inverse of 1 - 0 is 1
    CHECK(right_inverse_one_minus(GMatrix::zeros(ring)) == GMatrix::identity(ring));

    // degree divisible by the step is the caller's diagonal case
    auto diag = GMatrix::unit_matrix(ring, 0, 0, LaurentPoly::monomial(Scalar::one(f2), 2, 2));
    CHECK_THROWS_AS(right_inverse_one_minus(diag), ContractViolation);
}

TEST_CASE("right inverse with padding for missing residues") {
    Field f3 = Field::prime(3);
    // residues {0, 2} of step 3: residue 1 is missing
    auto ring = GradedMatrixRing::laurent(2, f3, 3, {0, 2});
    // degree 1: row 0 wants residue (0 - 1) mod 3 = 2 -> column 1; row 1 wants 1 -> absent
    auto a = GMatrix::unit_matrix(ring, 0, 1, LaurentPoly::monomial(Scalar::one(f3), 3, 3));
    REQUIRE(gm_degree(a).degree == 1);
    auto b = right_inverse_one_minus(a);
    CHECK((GMatrix::identity(ring) - a) * b == GMatrix::identity(ring));
}

TEST_CASE("exchange witness on the identity and on zero") {
    auto ring = GradedMatrixRing::laurent(2, kQ, 2, {0, 1});
    auto one = GMatrix::identity(ring);
    auto w = graded_exchange_witness(one);
    CHECK(w.e == one);
    CHECK(w.r == one);
    CHECK(w.s == GMatrix::zeros(ring));

    auto wz = graded_exchange_witness(GMatrix::zeros(ring));
    CHECK(wz.e == GMatrix::zeros(ring));
    CHECK(wz.s == one);
}

TEST_CASE("exchange witness on a monomial diagonal") {
    // diag(x^2, 0) in the (0, 1) ring has degree 2; the witness keeps the
    // nonzero diagonal position
    Field f2 = Field::prime(2);
    auto ring = GradedMatrixRing::laurent(2, f2, 2, {0, 1});
    auto a = GMatrix::unit_matrix(ring, 0, 0, LaurentPoly::monomial(Scalar::one(f2), 2, 2));
    REQUIRE(gm_degree(a).degree == 2);
    auto w = graded_exchange_witness(a);
    CHECK(w.e == e_unit(ring, 0, 0));
    CHECK(w.r == GMatrix::unit_matrix(ring, 0, 0, LaurentPoly::monomial(Scalar::one(f2), -2, 2)));
    CHECK(w.s == e_unit(ring, 1, 1));
}

TEST_CASE("exchange witness in the single-ring Laurent case") {
    auto ring = GradedMatrixRing::laurent(1, kQ, 2, {0});
    auto a = GMatrix::unit_matrix(ring, 0, 0, LaurentPoly::monomial(Scalar::one(kQ), 2, 2));
    auto w = graded_exchange_witness(a);
    CHECK(w.e == GMatrix::identity(ring));
    CHECK(w.r == GMatrix::unit_matrix(ring, 0, 0, LaurentPoly::monomial(Scalar::one(kQ), -2, 2)));
}

TEST_CASE("exchange witness rejects open rings and inhomogeneous input") {
    Field f2 = Field::prime(2);
    auto open_ring = GradedMatrixRing::laurent(2, f2, 2, {0, 0});
    CHECK_THROWS_AS(graded_exchange_witness(GMatrix::identity(open_ring)), ContractViolation);

    auto ring = GradedMatrixRing::trivial(2, kQ, {0, 1});
    auto bad = e_unit(ring, 0, 0) + e_unit(ring, 0, 1);
    CHECK_THROWS_AS(graded_exchange_witness(bad), ContractViolation);
}

TEST_CASE("exchange witness over the trivially graded base handles blocks") {
    // repeated shifts make the degree-zero part a genuine matrix block
    Field f3 = Field::prime(3);
    auto ring = GradedMatrixRing::trivial(3, f3, {0, 1, 1});
    // a = e22 + e23: idempotent, not diagonal
    auto a = e_unit(ring, 1, 1) + e_unit(ring, 1, 2);
    REQUIRE(gm_degree(a).degree == 0);
    auto w = graded_exchange_witness(a); // verified internally
    CHECK(w.e * w.e == w.e);
    CHECK(a * w.r == w.e);

    // nonzero degree over the trivial base is nilpotent
    auto b = e_unit(ring, 0, 1);
    auto wb = graded_exchange_witness(b);
    CHECK(wb.e == GMatrix::zeros(ring));
}

TEST_CASE("exchange witness passes the verifier on full slices") {
    Field f2 = Field::prime(2);
    for (auto ring : {GradedMatrixRing::laurent(2, f2, 2, {0, 1}),
                      GradedMatrixRing::laurent(3, f2, 3, {0, 1, 2}),
                      GradedMatrixRing::laurent(2, f2, 4, {0, 2})}) {
        Rng rng(57);
        for (int64_t d = -3; d <= 3; ++d) {
            // walk the whole degree-d slice for small rings
            std::vector<std::pair<int, int>> positions;
            for (int i = 0; i < ring.n; ++i)
                for (int j = 0; j < ring.n; ++j)
                    if (admissible_exponent(ring, d, i, j)) positions.emplace_back(i, j);
            int combos = 1;
            for (size_t t = 0; t < positions.size(); ++t) combos *= 2;
            for (int mask = 0; mask < combos; ++mask) {
                GMatrix a = GMatrix::zeros(ring);
                for (size_t t = 0; t < positions.size(); ++t)
                    if (mask & (1 << t))
                        a = a.with_entry(
                            positions[t].first, positions[t].second,
                            LaurentPoly::monomial(Scalar::one(f2),
                                                  *admissible_exponent(ring, d, positions[t].first,
                                                                       positions[t].second),
                                                  ring.step));
                graded_exchange_witness(a); // throws if any identity fails
            }
        }
    }
}
