#include "grlpa/gmatrix.hpp"

#include <algorithm>

namespace grlpa {

namespace {

int64_t mod_pos(int64_t v, int64_t m) {
    int64_t r = v % m;
    return r < 0 ? r + m : r;
}

// For a homogeneous degree-d matrix over the Laurent base with distinct shift
// residues, each row i has at most one admissible column: the position whose
// shift residue is (g_i - d) mod m. The partial map is a partial bijection,
// so it decomposes the index set into cycles and chains.
struct SupportMap {
    std::vector<int> next; // -1 when row i has no admissible column
    std::vector<std::vector<int>> cycles;
    std::vector<std::vector<int>> chains;
};

SupportMap support_map(const GradedMatrixRing& ring, int64_t d) {
    int n = ring.n;
    std::vector<int> by_residue(static_cast<size_t>(ring.step), -1);
    for (int i = 0; i < n; ++i) {
        int64_t r = mod_pos(ring.shifts[i], ring.step);
        if (by_residue[r] != -1)
            throw ContractViolation("shift residues must be distinct (residue multiplicity > 1)");
        by_residue[r] = i;
    }
    SupportMap map;
    map.next.assign(n, -1);
    std::vector<int> prev(n, -1);
    for (int i = 0; i < n; ++i) {
        int64_t want = mod_pos(ring.shifts[i] - d, ring.step);
        int j = by_residue[want];
        map.next[i] = j;
        if (j >= 0) prev[j] = i;
    }
    std::vector<bool> seen(n, false);
    // chains start at positions with no predecessor; they cannot feed into a
    // cycle because predecessors are unique
    for (int i = 0; i < n; ++i) {
        if (seen[i] || prev[i] != -1) continue;
        std::vector<int> chain;
        for (int v = i; v != -1 && !seen[v]; v = map.next[v]) {
            seen[v] = true;
            chain.push_back(v);
        }
        map.chains.push_back(std::move(chain));
    }
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        std::vector<int> cycle;
        for (int v = i; !seen[v]; v = map.next[v]) {
            seen[v] = true;
            cycle.push_back(v);
        }
        map.cycles.push_back(std::move(cycle));
    }
    return map;
}

bool orbit_fully_nonzero(const GMatrix& a, const std::vector<int>& orbit, const std::vector<int>& next) {
    for (int i : orbit) {
        int j = next[i];
        if (j < 0 || a.at(i, j).is_zero()) return false;
    }
    return true;
}

// Inverse of the restriction of `a` to a fully nonzero cycle: every entry is a
// unit monomial, so invert entrywise and transpose the support.
void add_cycle_inverse(GMatrix& r, const GMatrix& a, const std::vector<int>& cycle,
                       const std::vector<int>& next) {
    for (int i : cycle) {
        int j = next[i];
        r = r.with_entry(j, i, a.at(i, j).unit_inverse());
    }
}

// Corner inverse of (e_O - a_O) for an orbit on which a is nilpotent: the
// geometric sum terminates, with entry (u, v) the product of the entries along
// the unique support path u -> v.
void add_nilpotent_corner_inverse(GMatrix& s, const GMatrix& a, const std::vector<int>& orbit,
                                  const std::vector<int>& next) {
    const auto& ring = a.ring();
    for (int start : orbit) {
        s = s.with_entry(start, start, LaurentPoly::one(ring.field, ring.entry_step()));
        LaurentPoly acc = LaurentPoly::one(ring.field, ring.entry_step());
        int i = start;
        for (size_t hops = 0; hops < orbit.size(); ++hops) {
            int j = next[i];
            if (j < 0) break;
            acc = acc * a.at(i, j);
            if (acc.is_zero()) break;
            if (j == start) throw InvariantViolation("nilpotent orbit closed with nonzero product");
            s = s.with_entry(start, j, acc);
            i = j;
        }
    }
}

void verify_witness(const GMatrix& a, const ExchangeWitness& w) {
    const GMatrix one = GMatrix::identity(a.ring());
    if (!(w.e * w.e == w.e)) throw InvariantViolation("exchange witness: e is not idempotent");
    DegreeResult d = gm_degree(w.e);
    if (!d.is_zero_or_degree(0))
        throw InvariantViolation("exchange witness: e is not of degree zero");
    if (!(a * w.r == w.e)) throw InvariantViolation("exchange witness: e != a r");
    if (!((one - a) * w.s == one - w.e)) throw InvariantViolation("exchange witness: 1 - e != (1 - a) s");
}

// Degree-zero element over the trivially graded base: block diagonal over the
// partition by equal shifts. The Fitting decomposition of the scalar matrix A
// (image and kernel of A^n) yields the projection e onto the image along the
// kernel; e is block diagonal, hence of degree zero, and e - A = (A - A^2) r0
// with r0 assembled from the invertible part and the nilpotent part. Then
// e = A (1 + (1 - A) r0) and 1 - e = (1 - A)(1 - A r0).
ExchangeWitness fitting_witness(const GMatrix& am) {
    const auto& ring = am.ring();
    const Field& f = ring.field;
    int n = ring.n;
    ScalarMatrix a = gm_to_scalar_matrix(am);

    ScalarMatrix power = ScalarMatrix::identity(n, f);
    for (int i = 0; i < n; ++i) power = power * a;

    std::vector<int> image_cols = power.independent_columns();
    auto kernel = power.kernel_basis();
    if (image_cols.size() + kernel.size() != static_cast<size_t>(n))
        throw InvariantViolation("fitting: rank + nullity mismatch");

    ScalarMatrix basis(n, n, f);
    int col = 0;
    for (int c : image_cols) {
        for (int i = 0; i < n; ++i) basis.at(i, col) = power.at(i, c);
        ++col;
    }
    for (const auto& v : kernel) {
        for (int i = 0; i < n; ++i) basis.at(i, col) = v[i];
        ++col;
    }
    auto basis_inv = basis.inverse();
    if (!basis_inv) throw InvariantViolation("fitting: image + kernel is not a direct sum");

    int rank = static_cast<int>(image_cols.size());
    ScalarMatrix b = *basis_inv * a * basis; // diag(invertible, nilpotent)
    ScalarMatrix r0_adapted(n, n, f);
    if (rank > 0) {
        ScalarMatrix top(rank, rank, f);
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j) top.at(i, j) = b.at(i, j);
        auto top_inv = top.inverse();
        if (!top_inv) throw InvariantViolation("fitting: invertible part is singular");
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j) r0_adapted.at(i, j) = top_inv->at(i, j);
    }
    int nil = n - rank;
    if (nil > 0) {
        ScalarMatrix bottom(nil, nil, f);
        for (int i = 0; i < nil; ++i)
            for (int j = 0; j < nil; ++j) bottom.at(i, j) = b.at(rank + i, rank + j);
        auto inv = (ScalarMatrix::identity(nil, f) - bottom).inverse();
        if (!inv) throw InvariantViolation("fitting: 1 - nilpotent part is singular");
        for (int i = 0; i < nil; ++i)
            for (int j = 0; j < nil; ++j) r0_adapted.at(rank + i, rank + j) = -inv->at(i, j);
    }
    ScalarMatrix proj(n, n, f);
    for (int i = 0; i < rank; ++i) proj.at(i, i) = Scalar::one(f);

    ScalarMatrix e = basis * proj * *basis_inv;
    ScalarMatrix r0 = basis * r0_adapted * *basis_inv;
    ScalarMatrix one = ScalarMatrix::identity(n, f);

    ExchangeWitness w{gm_from_scalar_matrix(ring, e),
                      gm_from_scalar_matrix(ring, one + (one - a) * r0),
                      gm_from_scalar_matrix(ring, one - a * r0)};
    verify_witness(am, w);
    return w;
}

// Trivially graded base, nonzero degree: the support is strictly shift
// increasing, so the element is nilpotent; e = 0 and the geometric sum
// inverts 1 - a.
ExchangeWitness nilpotent_witness(const GMatrix& a) {
    const GMatrix one = GMatrix::identity(a.ring());
    GMatrix sum = one;
    GMatrix power = a;
    for (int k = 0; k < a.ring().n + 1 && !power.is_zero(); ++k) {
        sum = sum + power;
        power = power * a;
    }
    if (!power.is_zero()) throw InvariantViolation("expected a nilpotent element");
    ExchangeWitness w{GMatrix::zeros(a.ring()), GMatrix::zeros(a.ring()), sum};
    verify_witness(a, w);
    return w;
}

GMatrix restrict_to(const GradedMatrixRing& ring, const GMatrix& big) {
    GMatrix small = GMatrix::zeros(ring);
    for (int i = 0; i < ring.n; ++i)
        for (int j = 0; j < ring.n; ++j)
            if (!big.at(i, j).is_zero()) small = small.with_entry(i, j, big.at(i, j));
    return small;
}

} // namespace

GMatrix right_inverse_one_minus(const GMatrix& a) {
    const auto& ring = a.ring();
    if (ring.base != BaseKind::Laurent)
        throw ContractViolation("right_inverse_one_minus requires the Laurent base");
    DegreeResult deg = gm_degree(a);
    if (deg.kind == DegreeResult::Inhomogeneous)
        throw ContractViolation("right_inverse_one_minus requires a homogeneous input");
    if (deg.kind == DegreeResult::Zero) return GMatrix::identity(ring);
    if (mod_pos(deg.degree, ring.step) == 0)
        throw ContractViolation("degree divisible by the step: diagonal case handled by caller");

    auto k = residue_multiplicities(ring);
    if (std::any_of(k.begin(), k.end(), [](int v) { return v > 1; }))
        throw ContractViolation("right_inverse_one_minus requires residue multiplicities at most 1");

    // Embed into the full-residue ring by zero padding so the support map
    // becomes a permutation; solve there and read off the original block.
    GradedMatrixRing full = ring;
    for (int64_t r = 0; r < ring.step; ++r)
        if (k[static_cast<size_t>(r)] == 0) {
            full.shifts.push_back(r);
            full.n += 1;
        }
    GMatrix padded = GMatrix::zeros(full);
    for (int i = 0; i < ring.n; ++i)
        for (int j = 0; j < ring.n; ++j)
            if (!a.at(i, j).is_zero()) padded = padded.with_entry(i, j, a.at(i, j));

    SupportMap map = support_map(full, deg.degree);
    if (!map.chains.empty()) throw InvariantViolation("padded support map must be a permutation");

    bool invertible = true;
    for (const auto& cycle : map.cycles)
        if (!orbit_fully_nonzero(padded, cycle, map.next)) { invertible = false; break; }
    if (invertible) {
        GMatrix inv = GMatrix::zeros(full);
        for (const auto& cycle : map.cycles) add_cycle_inverse(inv, padded, cycle, map.next);
        throw MatrixInvertibleError("input is invertible; 1 - a has no right inverse here",
                                    restrict_to(ring, inv));
    }
    for (const auto& cycle : map.cycles)
        if (orbit_fully_nonzero(padded, cycle, map.next))
            throw ContractViolation(
                "one minus the input is not right invertible: an orbit has all entries nonzero");

    // Elimination per orbit: each diagonal entry of the inverse solves
    // b_jj (1 - product around the orbit) = 1 with vanishing product, so
    // b_jj = 1 and the off-diagonal entries are the back-substituted chain
    // products.
    GMatrix b = GMatrix::zeros(full);
    for (const auto& cycle : map.cycles) add_nilpotent_corner_inverse(b, padded, cycle, map.next);

    if (!((GMatrix::identity(full) - padded) * b == GMatrix::identity(full)))
        throw InvariantViolation("right_inverse_one_minus: verification failed");
    return restrict_to(ring, b);
}

ExchangeWitness graded_exchange_witness(const GMatrix& a) {
    const auto& ring = a.ring();
    Verdict verdict = graded_exchange_ring(ring);
    if (verdict.value != Verdict::Yes)
        throw ContractViolation("no constructive procedure available: ring verdict is " +
                                to_string(verdict.value));
    DegreeResult deg = gm_degree(a);
    if (deg.kind == DegreeResult::Inhomogeneous)
        throw ContractViolation("graded_exchange_witness requires a homogeneous input");

    const GMatrix one = GMatrix::identity(ring);
    if (deg.kind == DegreeResult::Zero) {
        ExchangeWitness w{GMatrix::zeros(ring), GMatrix::zeros(ring), one};
        verify_witness(a, w);
        return w;
    }

    if (ring.base == BaseKind::TrivialField) {
        if (deg.degree != 0) return nilpotent_witness(a);
        return fitting_witness(a);
    }

    SupportMap map = support_map(ring, deg.degree);
    bool any_invertible_orbit = false;
    for (const auto& cycle : map.cycles)
        if (orbit_fully_nonzero(a, cycle, map.next)) any_invertible_orbit = true;

    if (!any_invertible_orbit && mod_pos(deg.degree, ring.step) != 0) {
        // 1 - a is right invertible: e = 0 via the explicit elimination
        GMatrix b = right_inverse_one_minus(a);
        ExchangeWitness w{GMatrix::zeros(ring), GMatrix::zeros(ring), b};
        verify_witness(a, w);
        return w;
    }

    // General decomposition along the support orbits: invertible cycles
    // contribute diagonal idempotents and corner inverses (all of them:
    // e = 1, r = a^{-1}); the rest contributes corner inverses of 1 - a.
    GMatrix e = GMatrix::zeros(ring);
    GMatrix r = GMatrix::zeros(ring);
    GMatrix s = GMatrix::zeros(ring);
    for (const auto& cycle : map.cycles) {
        if (orbit_fully_nonzero(a, cycle, map.next)) {
            for (int i : cycle)
                e = e.with_entry(i, i, LaurentPoly::one(ring.field, ring.entry_step()));
            add_cycle_inverse(r, a, cycle, map.next);
        } else {
            add_nilpotent_corner_inverse(s, a, cycle, map.next);
        }
    }
    for (const auto& chain : map.chains) add_nilpotent_corner_inverse(s, a, chain, map.next);

    ExchangeWitness w{e, r, s};
    verify_witness(a, w);
    return w;
}

} // namespace grlpa
