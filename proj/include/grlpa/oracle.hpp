#pragma once

#include <optional>
#include <vector>

#include "grlpa/gmatrix.hpp"

namespace grlpa {

/// Enumeration bounds for the brute-force searches. Homogeneous slices of
/// matrix rings over F_p are finite regardless (each entry component is 0- or
/// 1-dimensional); the degree range limits which slices are visited and how
/// far the componentwise membership iteration reaches.
struct SearchWindow {
    int64_t degree_lo = -2;
    int64_t degree_hi = 2;
    /// Iteration headroom for the componentwise membership check; at
    /// n^2 + 1 steps the check becomes decisive for n x n rings.
    int64_t reach = 40;
};

/// A homogeneous slice of a graded matrix ring over F_p: the admissible
/// positions with their forced exponents. Elements are coefficient vectors.
class HomogeneousSlice {
public:
    HomogeneousSlice(const GradedMatrixRing& ring, int64_t degree);

    int64_t degree() const { return degree_; }
    int dimension() const { return static_cast<int>(positions_.size()); }
    const std::vector<std::pair<int, int>>& positions() const { return positions_; }

    GMatrix materialize(const std::vector<int64_t>& coeffs) const;
    /// Coefficient vector of a matrix that lies in this slice.
    std::vector<Scalar> coordinates(const GMatrix& m) const;

private:
    GradedMatrixRing ring_;
    int64_t degree_;
    std::vector<std::pair<int, int>> positions_;
    std::vector<int64_t> exponents_;
};

/// All degree-d matrices over F_p, in a fixed odometer order (the first
/// position varies fastest); the zero matrix always comes first.
std::vector<GMatrix> enumerate_homogeneous(const GradedMatrixRing& ring, int64_t d);

/// Degree-zero idempotents, in enumeration order. Memoizable by the caller.
std::vector<GMatrix> degree_zero_idempotents(const GradedMatrixRing& ring);

struct CleanDecomposition {
    GMatrix unit, idempotent; // x = unit + idempotent
};

/// Exhausts degree-zero idempotents e and returns the first with x - e a
/// graded unit. Requires x homogeneous.
std::optional<CleanDecomposition> brute_graded_clean(const GradedMatrixRing& ring, const GMatrix& x);

enum class OutcomeKind { Found, None, Inconclusive };

struct ExchangeSearchOutcome {
    OutcomeKind kind = OutcomeKind::None;
    std::optional<GMatrix> witness;
};

/// Decides e in xR by an exact linear solve over the homogeneous slice of
/// degree deg e - deg x (membership of a homogeneous element reduces to a
/// homogeneous factor by degree projection), and 1 - e in (1 - x)R by the
/// componentwise upward iteration, which is certain on success and reported
/// as Inconclusive if the window is exhausted first. Never a false None.
ExchangeSearchOutcome brute_graded_exchange(const GradedMatrixRing& ring, const GMatrix& x,
                                            const SearchWindow& w = {});

/// Membership y in x R for homogeneous x and y: exact.
bool homogeneous_right_membership(const GMatrix& x, const GMatrix& y);

/// Membership y in (1 - x) R for homogeneous x and homogeneous y.
/// Certain when true or false; Inconclusive when the iteration window ends
/// before the canonical solution terminates.
enum class Membership { Yes, No, Inconclusive };
Membership one_minus_membership(const GMatrix& x, const GMatrix& y, int64_t reach);

struct LiftOutcome {
    OutcomeKind kind = OutcomeKind::None;
    std::optional<GMatrix> idempotent;
};

/// Finds a degree-zero idempotent e with e - x in the graded right ideal
/// generated by the homogeneous generators; requires x - x^2 in the ideal.
/// A missing witness would contradict the lifting rule and raises
/// InvariantViolation.
LiftOutcome lift_idempotent_check(const GradedMatrixRing& ring, const GMatrix& x,
                                  const std::vector<GMatrix>& generators);

/// Membership of a (possibly inhomogeneous) y in sum(g_i R) for homogeneous
/// generators: componentwise exact linear solves.
bool graded_ideal_membership(const std::vector<GMatrix>& generators, const GMatrix& y);

} // namespace grlpa
