#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "grlpa/gmatrix.hpp"

namespace grlpa {

/// A finite ring given by complete operation tables over an enumerated
/// carrier. Ring axioms are checked once at construction. Optionally unital
/// and optionally graded (each element decomposes into homogeneous parts over
/// a finite degree support).
class FiniteRing {
public:
    int size() const { return static_cast<int>(names_.size()); }
    int add(int x, int y) const { return add_[idx(x, y)]; }
    int mul(int x, int y) const { return mul_[idx(x, y)]; }
    int neg(int x) const { return neg_[x]; }
    int zero() const { return zero_; }
    std::optional<int> one() const { return one_; }
    const std::string& name(int x) const { return names_[x]; }
    const std::string& description() const { return description_; }

    bool graded() const { return !degrees_.empty(); }
    const std::vector<int64_t>& degree_support() const { return degrees_; }
    /// Component of x in the given degree (zero element when absent).
    int component(int x, int64_t d) const;
    bool is_homogeneous(int x) const;
    /// Degree of a nonzero homogeneous element.
    std::optional<int64_t> degree_of(int x) const;
    /// All homogeneous elements (zero included once).
    std::vector<int> homogeneous_elements() const;
    /// Idempotents of the zero-degree component (all idempotents when ungraded).
    std::vector<int> zero_component_idempotents() const;

    // --- builders -----------------------------------------------------------
    static FiniteRing prime_field(int64_t p);
    /// Full matrix ring over a trivially graded finite prime field, graded by
    /// the shift vector.
    static FiniteRing graded_matrix_ring(const GradedMatrixRing& ring);
    /// Subring of a trivially graded matrix ring supported on degrees in
    /// [d_lo, d_hi]; construction fails unless the window is multiplicatively
    /// closed.
    static FiniteRing truncation(const GradedMatrixRing& ring, int64_t d_lo, int64_t d_hi);
    /// Strictly upper triangular n x n matrices over F_p (nonunital, nilpotent).
    static FiniteRing strictly_upper(int64_t p, int n);
    static FiniteRing product(const FiniteRing& a, const FiniteRing& b);
    /// The corner e R e for an idempotent e.
    static FiniteRing corner(const FiniteRing& r, int idempotent);

private:
    size_t idx(int x, int y) const { return static_cast<size_t>(x) * names_.size() + y; }
    void validate() const;
    static FiniteRing from_matrices(const GradedMatrixRing& ring, const std::vector<GMatrix>& elems,
                                    bool with_one, const std::string& description,
                                    const std::vector<int64_t>& degree_support);

    std::vector<int> add_, mul_, neg_;
    int zero_ = 0;
    std::optional<int> one_;
    std::vector<std::string> names_;
    std::string description_;
    std::vector<int64_t> degrees_;
    std::vector<int> components_; // element x degree-index -> component element
};

/// x * y = x + y + x y (monoid with identity 0).
int star(const FiniteRing& r, int x, int y);
/// x o y = x + y - x y (monoid with identity 0).
int circ(const FiniteRing& r, int x, int y);

/// Invertible elements of the star monoid.
std::vector<int> star_units(const FiniteRing& r);

/// Element of the standard unitization R^u = R + Z with multiplication
/// (x, k)(y, l) = (x y + l x + k y, k l) and identity (0, 1).
struct UnitizationElement {
    int x;
    int64_t k;
    bool operator==(const UnitizationElement& o) const { return x == o.x && k == o.k; }
};

UnitizationElement unitization_mul(const FiniteRing& r, const UnitizationElement& a,
                                   const UnitizationElement& b);

/// The three directly-finite checks: the star monoid, the circle monoid, and
/// the unitization with integer components in {-window..window}. The checks
/// are equivalent; any disagreement raises InvariantViolation.
struct DirectFinitenessReport {
    bool star_df = false;
    bool circ_df = false;
    bool unitization_df = false;
    bool value() const { return star_df; }
};
DirectFinitenessReport is_df_general(const FiniteRing& r, int64_t window = 3);

/// Least idempotent e in the zero component with e in xR and e in x o R, if
/// one exists. Cross-checks the equivalent membership forms
/// (e in -xR and e in x * R; and (-e, 1) in (-x, 1) R^u) and raises
/// InvariantViolation on disagreement. Requires x homogeneous when graded.
std::optional<int> exchange_witness_general(const FiniteRing& r, int x);

/// Least u in U(star) with x = x u x + x^2, if one exists.
std::optional<int> star_unit_regular_check(const FiniteRing& r, int x);

/// Nonunital stable range one in the star form: for all x, y with
/// 0 in x*R + yR there is z with 0 in (x + y z)*R. Exhaustive; small rings only.
bool star_sr1_holds(const FiniteRing& r);

/// Units of R^u with integer component in the window; they are exactly
/// +-(x, 1) for x in U(star), which is asserted.
std::vector<UnitizationElement> unitization_units(const FiniteRing& r, int64_t window = 3);

} // namespace grlpa
