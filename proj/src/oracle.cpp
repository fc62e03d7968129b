#include "grlpa/oracle.hpp"

#include <algorithm>
#include <set>

namespace grlpa {

namespace {

void require_prime_field(const GradedMatrixRing& ring) {
    if (ring.field.is_rational())
        throw ContractViolation("brute-force enumeration requires a prime field");
}

} // namespace

HomogeneousSlice::HomogeneousSlice(const GradedMatrixRing& ring, int64_t degree)
    : ring_(ring), degree_(degree) {
    for (int i = 0; i < ring.n; ++i)
        for (int j = 0; j < ring.n; ++j) {
            auto e = admissible_exponent(ring, degree, i, j);
            if (e) {
                positions_.emplace_back(i, j);
                exponents_.push_back(*e);
            }
        }
}

GMatrix HomogeneousSlice::materialize(const std::vector<int64_t>& coeffs) const {
    GMatrix m = GMatrix::zeros(ring_);
    for (size_t t = 0; t < positions_.size(); ++t) {
        if (coeffs[t] == 0) continue;
        Scalar c = Scalar::of_int(ring_.field, coeffs[t]);
        if (c.is_zero()) continue;
        m = m.with_entry(positions_[t].first, positions_[t].second,
                         LaurentPoly::monomial(c, exponents_[t], ring_.entry_step()));
    }
    return m;
}

std::vector<Scalar> HomogeneousSlice::coordinates(const GMatrix& m) const {
    std::vector<Scalar> out;
    out.reserve(positions_.size());
    std::set<std::pair<int, int>> allowed(positions_.begin(), positions_.end());
    for (int i = 0; i < ring_.n; ++i)
        for (int j = 0; j < ring_.n; ++j)
            if (!m.at(i, j).is_zero() && !allowed.count({i, j}))
                throw StructuralError("matrix does not lie in the slice");
    for (size_t t = 0; t < positions_.size(); ++t)
        out.push_back(m.at(positions_[t].first, positions_[t].second).coefficient(exponents_[t]));
    return out;
}

std::vector<GMatrix> enumerate_homogeneous(const GradedMatrixRing& ring, int64_t d) {
    require_prime_field(ring);
    HomogeneousSlice slice(ring, d);
    int64_t p = ring.field.characteristic();
    std::vector<GMatrix> out;
    std::vector<int64_t> digits(static_cast<size_t>(slice.dimension()), 0);
    for (;;) {
        out.push_back(slice.materialize(digits));
        size_t t = 0;
        while (t < digits.size() && ++digits[t] == p) digits[t++] = 0;
        if (t == digits.size()) break;
    }
    return out;
}

std::vector<GMatrix> degree_zero_idempotents(const GradedMatrixRing& ring) {
    std::vector<GMatrix> out;
    for (const GMatrix& e : enumerate_homogeneous(ring, 0))
        if (e * e == e) out.push_back(e);
    return out;
}

std::optional<CleanDecomposition> brute_graded_clean(const GradedMatrixRing& ring, const GMatrix& x) {
    if (!gm_is_homogeneous(x)) throw ContractViolation("brute_graded_clean requires homogeneous input");
    for (const GMatrix& e : degree_zero_idempotents(ring)) {
        GMatrix u = x - e;
        if (gm_is_graded_unit(u)) return CleanDecomposition{u, e};
    }
    return std::nullopt;
}

bool homogeneous_right_membership(const GMatrix& x, const GMatrix& y) {
    DegreeResult dx = gm_degree(x), dy = gm_degree(y);
    if (dx.kind == DegreeResult::Inhomogeneous || dy.kind == DegreeResult::Inhomogeneous)
        throw ContractViolation("homogeneous membership requires homogeneous matrices");
    if (dy.kind == DegreeResult::Zero) return true; // y = 0 = x * 0
    if (dx.kind == DegreeResult::Zero) return false;

    const auto& ring = x.ring();
    // Solve x s = y over the slice of degree dy - dx: if y = x t for any t,
    // the degree-(dy - dx) component of t already works.
    HomogeneousSlice s_slice(ring, dy.degree - dx.degree);
    HomogeneousSlice y_slice(ring, dy.degree);
    if (s_slice.dimension() == 0) return false;

    ScalarMatrix system(y_slice.dimension(), s_slice.dimension(), ring.field);
    for (int col = 0; col < s_slice.dimension(); ++col) {
        std::vector<int64_t> unit(static_cast<size_t>(s_slice.dimension()), 0);
        unit[static_cast<size_t>(col)] = 1;
        GMatrix image = x * s_slice.materialize(unit);
        auto coords = y_slice.coordinates(image);
        for (int row = 0; row < y_slice.dimension(); ++row) system.at(row, col) = coords[row];
    }
    auto rhs = y_slice.coordinates(y);
    return system.solve(rhs).has_value();
}

Membership one_minus_membership(const GMatrix& x, const GMatrix& y, int64_t reach) {
    DegreeResult dx = gm_degree(x), dy = gm_degree(y);
    if (dx.kind == DegreeResult::Inhomogeneous || dy.kind == DegreeResult::Inhomogeneous)
        throw ContractViolation("one_minus_membership requires homogeneous matrices");
    if (dy.kind == DegreeResult::Zero) return Membership::Yes;
    if (dx.kind == DegreeResult::Zero || dx.degree == 0) {
        // 1 - x is homogeneous of degree zero: project t to the degree of y.
        const auto& ring = x.ring();
        GMatrix one_minus = GMatrix::identity(ring) - x;
        HomogeneousSlice t_slice(ring, dy.degree);
        HomogeneousSlice y_slice(ring, dy.degree);
        if (t_slice.dimension() == 0) return Membership::No;
        ScalarMatrix system(y_slice.dimension(), t_slice.dimension(), ring.field);
        for (int col = 0; col < t_slice.dimension(); ++col) {
            std::vector<int64_t> unit(static_cast<size_t>(t_slice.dimension()), 0);
            unit[static_cast<size_t>(col)] = 1;
            auto coords = y_slice.coordinates(one_minus * t_slice.materialize(unit));
            for (int row = 0; row < y_slice.dimension(); ++row) system.at(row, col) = coords[row];
        }
        return system.solve(y_slice.coordinates(y)) ? Membership::Yes : Membership::No;
    }

    // (1 - x) t = y componentwise: t_d = y_d + x t_{d - dx}. Any finite
    // solution is supported on the chain starting at deg y and is uniquely
    // determined upward as t = y, x y, x^2 y, ...; membership holds iff the
    // sequence reaches zero. The kernels of left multiplication by x^k on the
    // slice of y ascend, so they stabilize within (slice dimension) steps:
    // surviving that long certifies a genuine No.
    int64_t decisive = static_cast<int64_t>(x.ring().n) * x.ring().n + 1;
    GMatrix t = y;
    for (int64_t steps = 0; steps <= reach; ++steps) {
        if (t.is_zero()) return Membership::Yes;
        if (steps >= decisive) return Membership::No;
        t = x * t;
    }
    return Membership::Inconclusive;
}

ExchangeSearchOutcome brute_graded_exchange(const GradedMatrixRing& ring, const GMatrix& x,
                                            const SearchWindow& w) {
    if (!gm_is_homogeneous(x))
        throw ContractViolation("brute_graded_exchange requires homogeneous input");
    const GMatrix one = GMatrix::identity(ring);
    bool saw_inconclusive = false;
    for (const GMatrix& e : degree_zero_idempotents(ring)) {
        if (!homogeneous_right_membership(x, e)) continue;
        Membership m = one_minus_membership(x, one - e, w.reach);
        if (m == Membership::Yes) return {OutcomeKind::Found, e};
        if (m == Membership::Inconclusive) saw_inconclusive = true;
    }
    if (saw_inconclusive) return {OutcomeKind::Inconclusive, std::nullopt};
    return {OutcomeKind::None, std::nullopt};
}

bool graded_ideal_membership(const std::vector<GMatrix>& generators, const GMatrix& y) {
    if (y.is_zero()) return true;
    if (generators.empty()) return false;
    const auto& ring = y.ring();

    // Graded ideal: membership splits over the homogeneous components of y.
    std::set<int64_t> degrees;
    for (int i = 0; i < ring.n; ++i)
        for (int j = 0; j < ring.n; ++j)
            for (int64_t e : y.at(i, j).support()) degrees.insert(e + ring.shifts[i] - ring.shifts[j]);

    for (int64_t d : degrees) {
        // component of y in degree d
        GMatrix yd = GMatrix::zeros(ring);
        for (int i = 0; i < ring.n; ++i)
            for (int j = 0; j < ring.n; ++j) {
                auto e = admissible_exponent(ring, d, i, j);
                if (!e) continue;
                LaurentPoly comp = y.at(i, j).component(*e);
                if (!comp.is_zero()) yd = yd.with_entry(i, j, comp);
            }
        if (yd.is_zero()) continue;

        HomogeneousSlice y_slice(ring, d);
        std::vector<HomogeneousSlice> t_slices;
        int total = 0;
        for (const GMatrix& g : generators) {
            DegreeResult dg = gm_degree(g);
            if (dg.kind == DegreeResult::Inhomogeneous)
                throw ContractViolation("ideal generators must be homogeneous");
            int64_t want = dg.kind == DegreeResult::Zero ? 0 : d - dg.degree;
            t_slices.emplace_back(ring, want);
            total += t_slices.back().dimension();
        }
        if (total == 0) return false;
        ScalarMatrix system(y_slice.dimension(), total, ring.field);
        int col = 0;
        for (size_t gi = 0; gi < generators.size(); ++gi) {
            for (int c = 0; c < t_slices[gi].dimension(); ++c) {
                std::vector<int64_t> unit(static_cast<size_t>(t_slices[gi].dimension()), 0);
                unit[static_cast<size_t>(c)] = 1;
                auto coords = y_slice.coordinates(generators[gi] * t_slices[gi].materialize(unit));
                for (int row = 0; row < y_slice.dimension(); ++row) system.at(row, col) = coords[row];
                ++col;
            }
        }
        if (!system.solve(y_slice.coordinates(yd))) return false;
    }
    return true;
}

LiftOutcome lift_idempotent_check(const GradedMatrixRing& ring, const GMatrix& x,
                                  const std::vector<GMatrix>& generators) {
    DegreeResult dx = gm_degree(x);
    if (dx.kind == DegreeResult::Inhomogeneous)
        throw ContractViolation("lift_idempotent_check requires homogeneous input");
    if (!graded_ideal_membership(generators, x - x * x))
        throw ContractViolation("x - x^2 must lie in the generated graded right ideal");

    if (dx.kind == DegreeResult::Homogeneous && dx.degree != 0) {
        // both components of x - x^2 lie in the graded ideal, so x does; e = 0
        GMatrix zero = GMatrix::zeros(ring);
        if (!graded_ideal_membership(generators, zero - x))
            throw InvariantViolation("homogeneous component of an ideal member escaped the ideal");
        return {OutcomeKind::Found, zero};
    }
    for (const GMatrix& e : degree_zero_idempotents(ring)) {
        if (graded_ideal_membership(generators, e - x)) return {OutcomeKind::Found, e};
    }
    throw InvariantViolation("no idempotent lift found; this contradicts the lifting rule");
}

} // namespace grlpa
