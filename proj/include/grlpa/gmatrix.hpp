#pragma once

#include <optional>
#include <string>
#include <vector>

#include "grlpa/laurent.hpp"
#include "grlpa/scalar_matrix.hpp"

namespace grlpa {

enum class BaseKind { TrivialField, Laurent };

/// The graded matrix ring of size n over K (trivially graded) or over
/// K[x^m, x^-m], with shift vector (g_1, ..., g_n). The stored degree law:
/// entry (i, j) of a degree-d matrix lies in the base component d - g_i + g_j,
/// so the matrix unit e_ij is homogeneous of degree g_i - g_j.
struct GradedMatrixRing {
    int n = 1;
    BaseKind base = BaseKind::TrivialField;
    int64_t step = 1; // m, meaningful for the Laurent base
    Field field = Field::rationals();
    std::vector<int64_t> shifts;

    static GradedMatrixRing trivial(int n, const Field& f, std::vector<int64_t> shifts);
    static GradedMatrixRing laurent(int n, const Field& f, int64_t m, std::vector<int64_t> shifts);

    /// Step of the Laurent entries; trivial base embeds as constants.
    int64_t entry_step() const { return base == BaseKind::Laurent ? step : 1; }
    bool operator==(const GradedMatrixRing& o) const;
    std::string to_string() const;
};

/// Three-valued outcome with the rule that produced it. Unknown is reserved
/// for questions the decision rules genuinely leave open.
struct Verdict {
    enum Value { Yes, No, Unknown };
    Value value = Unknown;
    std::string citation;

    bool operator==(const Verdict& o) const { return value == o.value; }
};

std::string to_string(Verdict::Value v);

/// Result of a degree query: a single degree, the zero matrix, or inhomogeneous.
struct DegreeResult {
    enum Kind { Homogeneous, Zero, Inhomogeneous };
    Kind kind = Zero;
    int64_t degree = 0; // meaningful for Homogeneous

    bool is_zero_or_degree(int64_t d) const {
        return kind == Zero || (kind == Homogeneous && degree == d);
    }
};

/// An n x n matrix over the base ring, tagged with its graded ring.
/// Homogeneity is a checkable predicate, not an invariant.
class GMatrix {
public:
    static GMatrix zeros(const GradedMatrixRing& ring);
    static GMatrix identity(const GradedMatrixRing& ring);
    /// Entry (i, j) set to c x^exponent (exponent 0 for the trivial base).
    static GMatrix unit_matrix(const GradedMatrixRing& ring, int i, int j, const LaurentPoly& value);

    const GradedMatrixRing& ring() const { return ring_; }
    const LaurentPoly& at(int i, int j) const { return entries_[i * ring_.n + j]; }
    /// Returns a copy with entry (i, j) replaced; validates base membership.
    GMatrix with_entry(int i, int j, const LaurentPoly& value) const;

    GMatrix operator+(const GMatrix& o) const;
    GMatrix operator-(const GMatrix& o) const;
    GMatrix operator*(const GMatrix& o) const;
    GMatrix operator-() const;
    bool operator==(const GMatrix& o) const;
    bool operator!=(const GMatrix& o) const { return !(*this == o); }

    bool is_zero() const;
    std::string to_string() const;

private:
    explicit GMatrix(const GradedMatrixRing& ring);
    void check_entry(int i, int j, const LaurentPoly& v) const;
    GradedMatrixRing ring_;
    std::vector<LaurentPoly> entries_;
};

/// Degree of a matrix under the stored convention.
DegreeResult gm_degree(const GMatrix& a);
bool gm_is_homogeneous(const GMatrix& a);

/// The exponent forced on entry (i, j) of a degree-d matrix, when admissible.
std::optional<int64_t> admissible_exponent(const GradedMatrixRing& ring, int64_t d, int i, int j);

/// Canonical representative of the graded-isomorphism class of the ring:
/// shifts reduced mod m (Laurent base), translated by a common integer and
/// sorted ascending. For the Laurent base the representative is the
/// lexicographically least sorted residue vector over all common translations.
GradedMatrixRing normalize_shifts(const GradedMatrixRing& ring);

/// k_i = number of shifts congruent to i mod m, for i = 0..m-1. Laurent only.
std::vector<int> residue_multiplicities(const GradedMatrixRing& ring);

/// Graded cleanness of the ring. Trivial base: all shifts equal (matrix rings
/// over a field are clean). Laurent base: n = 1.
Verdict is_graded_clean_ring(const GradedMatrixRing& ring);

/// Graded exchange. Trivial base: always. Laurent base: every residue
/// multiplicity at most 1; Unknown when some multiplicity is 2 or more.
Verdict graded_exchange_ring(const GradedMatrixRing& ring);

/// Index partition of the degree-zero component into full matrix blocks:
/// by equal shift for the trivial base, by shift residue mod m for Laurent.
struct ZeroComponentStructure {
    std::vector<std::vector<int>> blocks; // index sets
    std::vector<int> block_sizes;
};
ZeroComponentStructure zero_component_structure(const GradedMatrixRing& ring);

/// Exact determinant over the base ring (cofactor expansion; desk scale).
LaurentPoly gm_det(const GMatrix& a);

/// True iff a is homogeneous and invertible: nonzero-monomial determinant over
/// the Laurent base, nonzero determinant over the trivial base.
bool gm_is_graded_unit(const GMatrix& a);

/// Inverse of an invertible matrix (adjugate over the unit determinant).
std::optional<GMatrix> gm_inverse(const GMatrix& a);

/// Conversion helpers for trivial-base matrices.
ScalarMatrix gm_to_scalar_matrix(const GMatrix& a);
GMatrix gm_from_scalar_matrix(const GradedMatrixRing& ring, const ScalarMatrix& m);

// ---- constructive graded exchange (witness.cpp) ----

struct ExchangeWitness {
    GMatrix e, r, s; // e = a r, 1 - e = (1 - a) s, e idempotent of degree 0
};

/// Thrown by right_inverse_one_minus when the input is invertible; carries the
/// closed-form inverse.
struct MatrixInvertibleError : ContractViolation {
    MatrixInvertibleError(std::string msg, GMatrix inv)
        : ContractViolation(std::move(msg)), inverse(std::move(inv)) {}
    GMatrix inverse;
};

/// Right inverse b of 1 - a, obtained by eliminating the coupled entries of
/// (1 - a) b = 1 along the anti-diagonal orbits and back-substituting; rings
/// with missing residues are embedded into the full-residue ring by zero
/// padding and the upper-left block is read off.
/// Requires: Laurent base with distinct shift residues, a homogeneous of
/// degree not divisible by m, a not invertible.
GMatrix right_inverse_one_minus(const GMatrix& a);

/// Constructive witness for a homogeneous element of a ring whose graded
/// exchange verdict is Yes. Follows the right-invertible / nilpotent /
/// diagonal case split of the decision rule, decomposing along the
/// anti-diagonal orbits for the Laurent base and using an exact Fitting
/// construction for degree-zero elements over the trivial base.
/// Every output is verified by exact arithmetic before being returned.
ExchangeWitness graded_exchange_witness(const GMatrix& a);

} // namespace grlpa
