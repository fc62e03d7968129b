#include "grlpa/nonunital.hpp"

#include <algorithm>
#include <map>

namespace grlpa {

void FiniteRing::validate() const {
    int n = size();
    if (n == 0) throw StructuralError("empty carrier");
    for (int x = 0; x < n; ++x) {
        if (add(zero_, x) != x || add(x, zero_) != x) throw StructuralError("zero is not neutral");
        if (add(x, neg(x)) != zero_) throw StructuralError("negation is not inverse");
        if (one_ && (mul(*one_, x) != x || mul(x, *one_) != x))
            throw StructuralError("one is not neutral");
    }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (add(x, y) != add(y, x)) throw StructuralError("addition is not commutative");
            for (int z = 0; z < n; ++z) {
                if (add(add(x, y), z) != add(x, add(y, z)))
                    throw StructuralError("addition is not associative");
                if (mul(mul(x, y), z) != mul(x, mul(y, z)))
                    throw StructuralError("multiplication is not associative");
                if (mul(x, add(y, z)) != add(mul(x, y), mul(x, z)))
                    throw StructuralError("left distributivity fails");
                if (mul(add(x, y), z) != add(mul(x, z), mul(y, z)))
                    throw StructuralError("right distributivity fails");
            }
        }
    if (graded()) {
        // components decompose each element and multiply into the right degrees
        for (int x = 0; x < n; ++x) {
            int sum = zero_;
            for (size_t di = 0; di < degrees_.size(); ++di)
                sum = add(sum, components_[x * degrees_.size() + di]);
            if (sum != x) throw StructuralError("graded components do not sum back");
        }
    }
}

int FiniteRing::component(int x, int64_t d) const {
    if (!graded()) throw ContractViolation("ring is not graded");
    auto it = std::find(degrees_.begin(), degrees_.end(), d);
    if (it == degrees_.end()) return zero_;
    return components_[static_cast<size_t>(x) * degrees_.size() + (it - degrees_.begin())];
}

bool FiniteRing::is_homogeneous(int x) const {
    if (!graded()) return true;
    if (x == zero_) return true;
    for (size_t di = 0; di < degrees_.size(); ++di)
        if (components_[static_cast<size_t>(x) * degrees_.size() + di] == x) return true;
    return false;
}

std::optional<int64_t> FiniteRing::degree_of(int x) const {
    if (!graded() || x == zero_) return std::nullopt;
    for (size_t di = 0; di < degrees_.size(); ++di)
        if (components_[static_cast<size_t>(x) * degrees_.size() + di] == x) return degrees_[di];
    return std::nullopt;
}

std::vector<int> FiniteRing::homogeneous_elements() const {
    std::vector<int> out;
    for (int x = 0; x < size(); ++x)
        if (is_homogeneous(x)) out.push_back(x);
    return out;
}

std::vector<int> FiniteRing::zero_component_idempotents() const {
    std::vector<int> out;
    for (int x = 0; x < size(); ++x) {
        if (mul(x, x) != x) continue;
        if (graded() && x != zero_ && degree_of(x) != std::optional<int64_t>(0)) continue;
        out.push_back(x);
    }
    return out;
}

FiniteRing FiniteRing::prime_field(int64_t p) {
    Field f = Field::prime(p);
    FiniteRing r;
    int n = static_cast<int>(p);
    r.names_.reserve(n);
    for (int i = 0; i < n; ++i) r.names_.push_back(std::to_string(i));
    r.add_.resize(static_cast<size_t>(n) * n);
    r.mul_.resize(static_cast<size_t>(n) * n);
    r.neg_.resize(n);
    for (int i = 0; i < n; ++i) {
        r.neg_[i] = static_cast<int>((p - i) % p);
        for (int j = 0; j < n; ++j) {
            r.add_[static_cast<size_t>(i) * n + j] = static_cast<int>((i + j) % p);
            r.mul_[static_cast<size_t>(i) * n + j] = static_cast<int>((static_cast<int64_t>(i) * j) % p);
        }
    }
    r.zero_ = 0;
    r.one_ = 1;
    r.description_ = f.to_string();
    r.validate();
    return r;
}

namespace {

std::vector<GMatrix> enumerate_window_elements(const GradedMatrixRing& ring, int64_t d_lo,
                                               int64_t d_hi) {
    if (ring.base != BaseKind::TrivialField)
        throw ContractViolation("finite carriers require the trivially graded base");
    if (ring.field.is_rational()) throw ContractViolation("finite carriers require a prime field");
    int64_t p = ring.field.characteristic();
    // admissible positions: degree g_i - g_j within the window
    std::vector<std::pair<int, int>> positions;
    for (int i = 0; i < ring.n; ++i)
        for (int j = 0; j < ring.n; ++j) {
            int64_t d = ring.shifts[i] - ring.shifts[j];
            if (d >= d_lo && d <= d_hi) positions.emplace_back(i, j);
        }
    std::vector<GMatrix> out;
    std::vector<int64_t> digits(positions.size(), 0);
    for (;;) {
        GMatrix m = GMatrix::zeros(ring);
        for (size_t t = 0; t < positions.size(); ++t)
            if (digits[t] != 0)
                m = m.with_entry(positions[t].first, positions[t].second,
                                 LaurentPoly::constant(Scalar::of_int(ring.field, digits[t]), 1));
        out.push_back(std::move(m));
        size_t t = 0;
        while (t < digits.size() && ++digits[t] == p) digits[t++] = 0;
        if (t == digits.size()) break;
        if (positions.empty()) break;
    }
    return out;
}

} // namespace

FiniteRing FiniteRing::from_matrices(const GradedMatrixRing& ring, const std::vector<GMatrix>& elems,
                                     bool with_one, const std::string& description,
                                     const std::vector<int64_t>& degree_support) {
    if (elems.size() > 512) throw ContractViolation("finite-ring carrier too large for exhaustive use");
    std::map<std::string, int> index;
    for (size_t i = 0; i < elems.size(); ++i) index[elems[i].to_string()] = static_cast<int>(i);

    FiniteRing r;
    size_t n = elems.size();
    r.add_.resize(n * n);
    r.mul_.resize(n * n);
    r.neg_.resize(n);
    r.names_.reserve(n);
    for (const auto& m : elems) r.names_.push_back(m.to_string());
    auto find = [&](const GMatrix& m) {
        auto it = index.find(m.to_string());
        if (it == index.end()) throw StructuralError("carrier is not closed under the operations");
        return it->second;
    };
    for (size_t i = 0; i < n; ++i) {
        r.neg_[i] = find(-elems[i]);
        for (size_t j = 0; j < n; ++j) {
            r.add_[i * n + j] = find(elems[i] + elems[j]);
            r.mul_[i * n + j] = find(elems[i] * elems[j]);
        }
    }
    r.zero_ = find(GMatrix::zeros(ring));
    if (with_one) r.one_ = find(GMatrix::identity(ring));
    r.description_ = description;
    if (!degree_support.empty()) {
        r.degrees_ = degree_support;
        r.components_.resize(n * degree_support.size());
        for (size_t i = 0; i < n; ++i)
            for (size_t di = 0; di < degree_support.size(); ++di) {
                int64_t d = degree_support[di];
                GMatrix comp = GMatrix::zeros(ring);
                for (int a = 0; a < ring.n; ++a)
                    for (int b = 0; b < ring.n; ++b)
                        if (ring.shifts[a] - ring.shifts[b] == d && !elems[i].at(a, b).is_zero())
                            comp = comp.with_entry(a, b, elems[i].at(a, b));
                r.components_[i * degree_support.size() + di] = find(comp);
            }
    }
    r.validate();
    return r;
}

namespace {

std::vector<int64_t> full_degree_support(const GradedMatrixRing& ring) {
    std::vector<int64_t> ds;
    for (int i = 0; i < ring.n; ++i)
        for (int j = 0; j < ring.n; ++j) {
            int64_t d = ring.shifts[i] - ring.shifts[j];
            if (std::find(ds.begin(), ds.end(), d) == ds.end()) ds.push_back(d);
        }
    std::sort(ds.begin(), ds.end());
    return ds;
}

} // namespace

FiniteRing FiniteRing::graded_matrix_ring(const GradedMatrixRing& ring) {
    int64_t span = 0;
    for (int64_t s : ring.shifts) span = std::max({span, s, -s});
    auto elems = enumerate_window_elements(ring, -2 * span - 1, 2 * span + 1);
    return from_matrices(ring, elems, true, ring.to_string(), full_degree_support(ring));
}

FiniteRing FiniteRing::truncation(const GradedMatrixRing& ring, int64_t d_lo, int64_t d_hi) {
    auto elems = enumerate_window_elements(ring, d_lo, d_hi);
    std::vector<int64_t> ds;
    for (int64_t d : full_degree_support(ring))
        if (d >= d_lo && d <= d_hi) ds.push_back(d);
    bool has_one = d_lo <= 0 && 0 <= d_hi;
    std::string desc = ring.to_string() + "|deg[" + std::to_string(d_lo) + "," +
                       std::to_string(d_hi) + "]";
    return from_matrices(ring, elems, has_one, desc, ds);
}

FiniteRing FiniteRing::strictly_upper(int64_t p, int n) {
    std::vector<int64_t> shifts(n);
    for (int i = 0; i < n; ++i) shifts[i] = n - 1 - i; // degree of e_ij is g_i - g_j = j - i
    GradedMatrixRing ring = GradedMatrixRing::trivial(n, Field::prime(p), shifts);
    auto elems = enumerate_window_elements(ring, 1, n - 1);
    std::vector<int64_t> ds;
    for (int64_t d = 1; d <= n - 1; ++d) ds.push_back(d);
    return from_matrices(ring, elems, false,
                         "strictly_upper_" + std::to_string(n) + "x" + std::to_string(n) + "(F" +
                             std::to_string(p) + ")",
                         ds);
}

FiniteRing FiniteRing::product(const FiniteRing& a, const FiniteRing& b) {
    FiniteRing r;
    int na = a.size(), nb = b.size();
    int n = na * nb;
    auto pack = [&](int x, int y) { return x * nb + y; };
    r.names_.reserve(n);
    for (int x = 0; x < na; ++x)
        for (int y = 0; y < nb; ++y) r.names_.push_back("(" + a.name(x) + "," + b.name(y) + ")");
    r.add_.resize(static_cast<size_t>(n) * n);
    r.mul_.resize(static_cast<size_t>(n) * n);
    r.neg_.resize(n);
    for (int x1 = 0; x1 < na; ++x1)
        for (int y1 = 0; y1 < nb; ++y1) {
            int i = pack(x1, y1);
            r.neg_[i] = pack(a.neg(x1), b.neg(y1));
            for (int x2 = 0; x2 < na; ++x2)
                for (int y2 = 0; y2 < nb; ++y2) {
                    int j = pack(x2, y2);
                    r.add_[static_cast<size_t>(i) * n + j] = pack(a.add(x1, x2), b.add(y1, y2));
                    r.mul_[static_cast<size_t>(i) * n + j] = pack(a.mul(x1, x2), b.mul(y1, y2));
                }
        }
    r.zero_ = pack(a.zero(), b.zero());
    if (a.one() && b.one()) r.one_ = pack(*a.one(), *b.one());
    r.description_ = a.description() + "+" + b.description();
    r.validate();
    return r;
}

FiniteRing FiniteRing::corner(const FiniteRing& big, int idempotent) {
    if (big.mul(idempotent, idempotent) != idempotent)
        throw ContractViolation("corner requires an idempotent");
    std::vector<int> carrier;
    std::vector<int> where(big.size(), -1);
    for (int x = 0; x < big.size(); ++x) {
        int exe = big.mul(big.mul(idempotent, x), idempotent);
        if (where[exe] == -1) {
            where[exe] = static_cast<int>(carrier.size());
            carrier.push_back(exe);
        }
    }
    FiniteRing r;
    size_t n = carrier.size();
    r.names_.reserve(n);
    for (int x : carrier) r.names_.push_back(big.name(x));
    r.add_.resize(n * n);
    r.mul_.resize(n * n);
    r.neg_.resize(n);
    for (size_t i = 0; i < n; ++i) {
        r.neg_[i] = where[big.neg(carrier[i])];
        for (size_t j = 0; j < n; ++j) {
            r.add_[i * n + j] = where[big.add(carrier[i], carrier[j])];
            r.mul_[i * n + j] = where[big.mul(carrier[i], carrier[j])];
        }
    }
    r.zero_ = where[big.zero()];
    r.one_ = where[idempotent];
    r.description_ = big.description() + "|corner(" + big.name(idempotent) + ")";
    r.validate();
    return r;
}

int star(const FiniteRing& r, int x, int y) { return r.add(r.add(x, y), r.mul(x, y)); }

int circ(const FiniteRing& r, int x, int y) {
    return r.add(r.add(x, y), r.neg(r.mul(x, y)));
}

std::vector<int> star_units(const FiniteRing& r) {
    std::vector<int> out;
    for (int x = 0; x < r.size(); ++x)
        for (int y = 0; y < r.size(); ++y)
            if (star(r, x, y) == r.zero() && star(r, y, x) == r.zero()) {
                out.push_back(x);
                break;
            }
    return out;
}

UnitizationElement unitization_mul(const FiniteRing& r, const UnitizationElement& a,
                                   const UnitizationElement& b) {
    int xy = r.mul(a.x, b.x);
    int lx = a.x, ky = b.x;
    // l x means the integer multiple; reduce by repeated addition of +-x
    auto int_multiple = [&](int64_t c, int v) {
        int acc = r.zero();
        int step = c >= 0 ? v : r.neg(v);
        for (int64_t i = 0; i < (c >= 0 ? c : -c); ++i) acc = r.add(acc, step);
        return acc;
    };
    int val = r.add(xy, r.add(int_multiple(b.k, lx), int_multiple(a.k, ky)));
    return UnitizationElement{val, a.k * b.k};
}

DirectFinitenessReport is_df_general(const FiniteRing& r, int64_t window) {
    DirectFinitenessReport rep;
    rep.star_df = true;
    rep.circ_df = true;
    rep.unitization_df = true;
    for (int x = 0; x < r.size() && rep.star_df; ++x)
        for (int y = 0; y < r.size(); ++y)
            if (star(r, x, y) == r.zero() && star(r, y, x) != r.zero()) {
                rep.star_df = false;
                break;
            }
    for (int x = 0; x < r.size() && rep.circ_df; ++x)
        for (int y = 0; y < r.size(); ++y)
            if (circ(r, x, y) == r.zero() && circ(r, y, x) != r.zero()) {
                rep.circ_df = false;
                break;
            }
    UnitizationElement id{r.zero(), 1};
    for (int x = 0; x < r.size() && rep.unitization_df; ++x)
        for (int64_t k = -window; k <= window && rep.unitization_df; ++k)
            for (int y = 0; y < r.size(); ++y)
                for (int64_t l = -window; l <= window; ++l) {
                    UnitizationElement a{x, k}, b{y, l};
                    if (unitization_mul(r, a, b) == id && !(unitization_mul(r, b, a) == id)) {
                        rep.unitization_df = false;
                        break;
                    }
                }
    if (rep.star_df != rep.circ_df || rep.star_df != rep.unitization_df)
        throw InvariantViolation("directly-finite checks disagree on " + r.description());
    return rep;
}

std::optional<int> exchange_witness_general(const FiniteRing& r, int x) {
    if (r.graded() && !r.is_homogeneous(x))
        throw ContractViolation("exchange_witness_general requires a homogeneous element");
    auto in_set = [&](int target, auto&& gen) {
        for (int t = 0; t < r.size(); ++t)
            if (gen(t) == target) return true;
        return false;
    };
    std::optional<int> found;
    for (int e : r.zero_component_idempotents()) {
        bool c2 = in_set(e, [&](int t) { return r.mul(x, t); }) &&
                  in_set(e, [&](int t) { return circ(r, x, t); });
        bool c1 = in_set(e, [&](int t) { return r.mul(r.neg(x), t); }) &&
                  in_set(e, [&](int t) { return star(r, x, t); });
        // (-e, 1) in (-x, 1) R^u with the integer component forced to 1
        bool c3_member = false;
        UnitizationElement target{r.neg(e), 1};
        for (int t = 0; t < r.size() && !c3_member; ++t)
            if (unitization_mul(r, UnitizationElement{r.neg(x), 1}, UnitizationElement{t, 1}) ==
                target)
                c3_member = true;
        bool c3 = in_set(e, [&](int t) { return r.mul(x, t); }) && c3_member;
        if (c1 != c2 || c2 != c3)
            throw InvariantViolation("exchange membership forms disagree on " + r.description());
        if (c2 && !found) found = e;
    }
    return found;
}

std::optional<int> star_unit_regular_check(const FiniteRing& r, int x) {
    for (int u : star_units(r)) {
        int xux = r.mul(r.mul(x, u), x);
        if (r.add(xux, r.mul(x, x)) == x) return u;
    }
    return std::nullopt;
}

bool star_sr1_holds(const FiniteRing& r) {
    if (r.size() > 256) throw ContractViolation("star_sr1_holds is exhaustive; carrier too large");
    auto zero_in_star_coset = [&](int x) {
        for (int t = 0; t < r.size(); ++t)
            if (star(r, x, t) == r.zero()) return true;
        return false;
    };
    for (int x = 0; x < r.size(); ++x)
        for (int y = 0; y < r.size(); ++y) {
            bool premise = false;
            for (int u = 0; u < r.size() && !premise; ++u) {
                int xs = star(r, x, u);
                for (int v = 0; v < r.size(); ++v)
                    if (r.add(xs, r.mul(y, v)) == r.zero()) {
                        premise = true;
                        break;
                    }
            }
            if (!premise) continue;
            bool ok = false;
            for (int z = 0; z < r.size() && !ok; ++z)
                if (zero_in_star_coset(r.add(x, r.mul(y, z)))) ok = true;
            if (!ok) return false;
        }
    return true;
}

std::vector<UnitizationElement> unitization_units(const FiniteRing& r, int64_t window) {
    std::vector<UnitizationElement> out;
    UnitizationElement id{r.zero(), 1};
    for (int x = 0; x < r.size(); ++x)
        for (int64_t k = -window; k <= window; ++k) {
            UnitizationElement a{x, k};
            for (int y = 0; y < r.size(); ++y) {
                bool inv = false;
                for (int64_t l = -window; l <= window; ++l) {
                    UnitizationElement b{y, l};
                    if (unitization_mul(r, a, b) == id && unitization_mul(r, b, a) == id) {
                        inv = true;
                        break;
                    }
                }
                if (inv) {
                    out.push_back(a);
                    break;
                }
            }
        }
    // invertibility forces the integer component to be +-1
    for (const auto& u : out)
        if (u.k != 1 && u.k != -1)
            throw InvariantViolation("unitization unit with integer component != +-1");
    // and the units are exactly +-(x, 1) for x in U(star)
    auto su = star_units(r);
    for (const auto& u : out) {
        int x = u.k == 1 ? u.x : r.neg(u.x);
        if (std::find(su.begin(), su.end(), x) == su.end())
            throw InvariantViolation("unitization unit outside +-(U(star), 1)");
    }
    return out;
}

} // namespace grlpa
