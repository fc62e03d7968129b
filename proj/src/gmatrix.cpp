#include "grlpa/gmatrix.hpp"

#include <algorithm>

namespace grlpa {

namespace {

int64_t mod_pos(int64_t v, int64_t m) {
    int64_t r = v % m;
    return r < 0 ? r + m : r;
}

} // namespace

GradedMatrixRing GradedMatrixRing::trivial(int n, const Field& f, std::vector<int64_t> shifts) {
    if (n < 1 || static_cast<int>(shifts.size()) != n)
        throw StructuralError("ring size and shift count must agree");
    GradedMatrixRing r;
    r.n = n;
    r.base = BaseKind::TrivialField;
    r.step = 1;
    r.field = f;
    r.shifts = std::move(shifts);
    return r;
}

GradedMatrixRing GradedMatrixRing::laurent(int n, const Field& f, int64_t m, std::vector<int64_t> shifts) {
    if (n < 1 || static_cast<int>(shifts.size()) != n)
        throw StructuralError("ring size and shift count must agree");
    if (m < 1) throw StructuralError("Laurent step must be positive");
    GradedMatrixRing r;
    r.n = n;
    r.base = BaseKind::Laurent;
    r.step = m;
    r.field = f;
    r.shifts = std::move(shifts);
    return r;
}

bool GradedMatrixRing::operator==(const GradedMatrixRing& o) const {
    return n == o.n && base == o.base && (base != BaseKind::Laurent || step == o.step) &&
           field == o.field && shifts == o.shifts;
}

std::string GradedMatrixRing::to_string() const {
    std::string s = "M" + std::to_string(n) + "(";
    s += base == BaseKind::Laurent ? field.to_string() + "[x^" + std::to_string(step) + ",x^-" +
                                          std::to_string(step) + "]"
                                   : field.to_string();
    s += ")(";
    for (int i = 0; i < n; ++i) {
        if (i) s += ",";
        s += std::to_string(shifts[i]);
    }
    return s + ")";
}

std::string to_string(Verdict::Value v) {
    switch (v) {
        case Verdict::Yes: return "Yes";
        case Verdict::No: return "No";
        default: return "Unknown";
    }
}

GMatrix::GMatrix(const GradedMatrixRing& ring)
    : ring_(ring),
      entries_(static_cast<size_t>(ring.n) * ring.n, LaurentPoly::zero(ring.field, ring.entry_step())) {}

GMatrix GMatrix::zeros(const GradedMatrixRing& ring) { return GMatrix(ring); }

GMatrix GMatrix::identity(const GradedMatrixRing& ring) {
    GMatrix m(ring);
    for (int i = 0; i < ring.n; ++i)
        m.entries_[i * ring.n + i] = LaurentPoly::one(ring.field, ring.entry_step());
    return m;
}

GMatrix GMatrix::unit_matrix(const GradedMatrixRing& ring, int i, int j, const LaurentPoly& value) {
    return zeros(ring).with_entry(i, j, value);
}

void GMatrix::check_entry(int i, int j, const LaurentPoly& v) const {
    if (i < 0 || i >= ring_.n || j < 0 || j >= ring_.n)
        throw StructuralError("matrix index out of bounds");
    if (v.field() != ring_.field) throw StructuralError("entry field mismatch");
    if (ring_.base == BaseKind::TrivialField && !v.is_constant())
        throw StructuralError("trivially graded base admits constant entries only");
    if (v.step() != ring_.entry_step()) throw StructuralError("entry step mismatch");
}

GMatrix GMatrix::with_entry(int i, int j, const LaurentPoly& value) const {
    check_entry(i, j, value);
    GMatrix m = *this;
    m.entries_[i * ring_.n + j] = value;
    return m;
}

GMatrix GMatrix::operator+(const GMatrix& o) const {
    if (!(ring_ == o.ring_)) throw StructuralError("ring mismatch");
    GMatrix m = *this;
    for (size_t i = 0; i < entries_.size(); ++i) m.entries_[i] = entries_[i] + o.entries_[i];
    return m;
}

GMatrix GMatrix::operator-(const GMatrix& o) const {
    if (!(ring_ == o.ring_)) throw StructuralError("ring mismatch");
    GMatrix m = *this;
    for (size_t i = 0; i < entries_.size(); ++i) m.entries_[i] = entries_[i] - o.entries_[i];
    return m;
}

GMatrix GMatrix::operator*(const GMatrix& o) const {
    if (!(ring_ == o.ring_)) throw StructuralError("ring mismatch");
    GMatrix m(ring_);
    int n = ring_.n;
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const LaurentPoly& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < n; ++j) {
                if (o.at(k, j).is_zero()) continue;
                m.entries_[i * n + j] = m.entries_[i * n + j] + aik * o.at(k, j);
            }
        }
    return m;
}

GMatrix GMatrix::operator-() const {
    GMatrix m = *this;
    for (auto& e : m.entries_) e = -e;
    return m;
}

bool GMatrix::operator==(const GMatrix& o) const {
    return ring_ == o.ring_ && entries_ == o.entries_;
}

bool GMatrix::is_zero() const {
    for (const auto& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

std::string GMatrix::to_string() const {
    std::string s = "[";
    for (int i = 0; i < ring_.n; ++i) {
        if (i) s += ";";
        for (int j = 0; j < ring_.n; ++j) {
            if (j) s += ",";
            s += at(i, j).to_string();
        }
    }
    return s + "]";
}

std::optional<int64_t> admissible_exponent(const GradedMatrixRing& ring, int64_t d, int i, int j) {
    int64_t e = d - ring.shifts[i] + ring.shifts[j];
    if (ring.base == BaseKind::TrivialField) {
        if (e != 0) return std::nullopt;
        return 0;
    }
    if (mod_pos(e, ring.step) != 0) return std::nullopt;
    return e;
}

DegreeResult gm_degree(const GMatrix& a) {
    const auto& ring = a.ring();
    std::optional<int64_t> degree;
    for (int i = 0; i < ring.n; ++i)
        for (int j = 0; j < ring.n; ++j) {
            const LaurentPoly& v = a.at(i, j);
            if (v.is_zero()) continue;
            auto mono = v.monomial_degree();
            if (!mono) return {DegreeResult::Inhomogeneous, 0};
            // entry exponent mono = d - g_i + g_j forces a unique candidate d
            int64_t d = *mono + ring.shifts[i] - ring.shifts[j];
            if (degree && *degree != d) return {DegreeResult::Inhomogeneous, 0};
            degree = d;
        }
    if (!degree) return {DegreeResult::Zero, 0};
    return {DegreeResult::Homogeneous, *degree};
}

bool gm_is_homogeneous(const GMatrix& a) {
    return gm_degree(a).kind != DegreeResult::Inhomogeneous;
}

GradedMatrixRing normalize_shifts(const GradedMatrixRing& ring) {
    GradedMatrixRing out = ring;
    if (ring.base == BaseKind::TrivialField) {
        std::sort(out.shifts.begin(), out.shifts.end());
        int64_t lo = out.shifts.front();
        for (auto& s : out.shifts) s -= lo;
        return out;
    }
    // Laurent base: residues are adjustable by a common translation, so take
    // the lexicographically least sorted residue vector over all of them.
    std::optional<std::vector<int64_t>> best;
    for (int64_t delta = 0; delta < ring.step; ++delta) {
        std::vector<int64_t> candidate;
        candidate.reserve(ring.shifts.size());
        for (int64_t s : ring.shifts) candidate.push_back(mod_pos(s + delta, ring.step));
        std::sort(candidate.begin(), candidate.end());
        if (!best || candidate < *best) best = std::move(candidate);
    }
    out.shifts = *best;
    return out;
}

std::vector<int> residue_multiplicities(const GradedMatrixRing& ring) {
    if (ring.base != BaseKind::Laurent)
        throw ContractViolation("residue_multiplicities requires the Laurent base");
    std::vector<int> k(static_cast<size_t>(ring.step), 0);
    for (int64_t s : ring.shifts) k[mod_pos(s, ring.step)] += 1;
    return k;
}

Verdict is_graded_clean_ring(const GradedMatrixRing& ring) {
    if (ring.base == BaseKind::TrivialField) {
        bool all_equal = std::all_of(ring.shifts.begin(), ring.shifts.end(),
                                     [&](int64_t s) { return s == ring.shifts[0]; });
        if (all_equal) return {Verdict::Yes, "graded_clean_matrix_trivial_base(1)"};
        return {Verdict::No, "graded_clean_matrix_trivial_base(1)"};
    }
    if (ring.n == 1) return {Verdict::Yes, "graded_clean_matrix_laurent_base(2)"};
    return {Verdict::No, "graded_clean_matrix_laurent_base(2)"};
}

Verdict graded_exchange_ring(const GradedMatrixRing& ring) {
    if (ring.base == BaseKind::TrivialField)
        return {Verdict::Yes, "graded_exchange_matrix_trivial_base(1)"};
    auto k = residue_multiplicities(ring);
    bool small = std::all_of(k.begin(), k.end(), [](int v) { return v <= 1; });
    if (small) return {Verdict::Yes, "graded_exchange_matrix_residue_multiplicity(2)"};
    return {Verdict::Unknown, "graded_exchange_matrix_open"};
}

ZeroComponentStructure zero_component_structure(const GradedMatrixRing& ring) {
    ZeroComponentStructure out;
    std::vector<int64_t> keys;
    for (int i = 0; i < ring.n; ++i) {
        int64_t key = ring.base == BaseKind::Laurent ? mod_pos(ring.shifts[i], ring.step)
                                                     : ring.shifts[i];
        auto it = std::find(keys.begin(), keys.end(), key);
        if (it == keys.end()) {
            keys.push_back(key);
            out.blocks.push_back({i});
        } else {
            out.blocks[it - keys.begin()].push_back(i);
        }
    }
    // blocks ordered by key value
    std::vector<size_t> order(keys.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return keys[a] < keys[b]; });
    ZeroComponentStructure sorted;
    for (size_t idx : order) {
        sorted.blocks.push_back(out.blocks[idx]);
        sorted.block_sizes.push_back(static_cast<int>(out.blocks[idx].size()));
    }
    return sorted;
}

LaurentPoly gm_det(const GMatrix& a) {
    int n = a.ring().n;
    const Field& f = a.ring().field;
    int64_t step = a.ring().entry_step();
    std::vector<int> cols(n);
    for (int i = 0; i < n; ++i) cols[i] = i;
    // cofactor expansion along rows over the active column set
    struct Expand {
        const GMatrix& a;
        int n;
        Field f;
        int64_t step;
        LaurentPoly go(int row, std::vector<int>& cols) {
            if (cols.empty()) return LaurentPoly::one(f, step);
            LaurentPoly acc = LaurentPoly::zero(f, step);
            for (size_t ci = 0; ci < cols.size(); ++ci) {
                const LaurentPoly& v = a.at(row, cols[ci]);
                if (v.is_zero()) continue;
                std::vector<int> rest;
                rest.reserve(cols.size() - 1);
                for (size_t k = 0; k < cols.size(); ++k)
                    if (k != ci) rest.push_back(cols[k]);
                LaurentPoly sub = go(row + 1, rest);
                LaurentPoly term = v * sub;
                acc = (ci % 2 == 0) ? acc + term : acc - term;
            }
            return acc;
        }
    } expand{a, n, f, step};
    return expand.go(0, cols);
}

bool gm_is_graded_unit(const GMatrix& a) {
    if (!gm_is_homogeneous(a)) return false;
    if (a.is_zero()) return false;
    LaurentPoly d = gm_det(a);
    return d.is_unit();
}

std::optional<GMatrix> gm_inverse(const GMatrix& a) {
    LaurentPoly d = gm_det(a);
    if (!d.is_unit()) return std::nullopt;
    int n = a.ring().n;
    LaurentPoly dinv = d.unit_inverse();
    GMatrix inv = GMatrix::zeros(a.ring());
    // adjugate via minors
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            // minor deleting row j, column i (transposed for the adjugate)
            GradedMatrixRing sub_ring = a.ring();
            sub_ring.n = n - 1;
            sub_ring.shifts.assign(static_cast<size_t>(n - 1), 0);
            GMatrix sub = GMatrix::zeros(sub_ring);
            if (n == 1) {
                inv = inv.with_entry(0, 0, dinv);
                continue;
            }
            int ri = 0;
            for (int r = 0; r < n; ++r) {
                if (r == j) continue;
                int cj = 0;
                for (int c = 0; c < n; ++c) {
                    if (c == i) continue;
                    sub = sub.with_entry(ri, cj, a.at(r, c));
                    ++cj;
                }
                ++ri;
            }
            LaurentPoly minor = gm_det(sub);
            LaurentPoly cof = ((i + j) % 2 == 0) ? minor : -minor;
            inv = inv.with_entry(i, j, cof * dinv);
        }
    }
    return inv;
}

ScalarMatrix gm_to_scalar_matrix(const GMatrix& a) {
    if (a.ring().base != BaseKind::TrivialField)
        throw ContractViolation("scalar view requires the trivially graded base");
    int n = a.ring().n;
    ScalarMatrix m(n, n, a.ring().field);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = a.at(i, j).coefficient(0);
    return m;
}

GMatrix gm_from_scalar_matrix(const GradedMatrixRing& ring, const ScalarMatrix& m) {
    GMatrix a = GMatrix::zeros(ring);
    for (int i = 0; i < ring.n; ++i)
        for (int j = 0; j < ring.n; ++j)
            if (!m.at(i, j).is_zero())
                a = a.with_entry(i, j, LaurentPoly::constant(m.at(i, j), ring.entry_step()));
    return a;
}

} // namespace grlpa
