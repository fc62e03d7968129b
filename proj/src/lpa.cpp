#include "grlpa/lpa.hpp"

#include <algorithm>
#include <deque>

namespace grlpa {

bool Monomial::operator<(const Monomial& o) const {
    if (p.size() != o.p.size()) return p.size() < o.p.size();
    if (q.size() != o.q.size()) return q.size() < o.q.size();
    if (p != o.p) return p < o.p;
    if (q != o.q) return q < o.q;
    return range_vertex < o.range_vertex;
}

bool is_valid_path(const Graph& g, const std::vector<int>& edges) {
    for (size_t i = 0; i < edges.size(); ++i) {
        if (edges[i] < 0 || edges[i] >= g.edge_count()) return false;
        if (i > 0 && g.edge(edges[i - 1]).dst != g.edge(edges[i]).src) return false;
    }
    return true;
}

std::optional<int> special_edge(const Graph& g, int v) {
    const auto& out = g.out_edges(v);
    if (out.empty()) return std::nullopt;
    int best = out[0];
    for (int e : out)
        if (g.edge(e).id > g.edge(best).id) best = e;
    return best;
}

namespace {

void check_monomial(const Graph& g, const Monomial& m) {
    if (m.range_vertex < 0 || m.range_vertex >= g.vertex_count())
        throw StructuralError("monomial range vertex out of bounds");
    if (!is_valid_path(g, m.p) || !is_valid_path(g, m.q))
        throw StructuralError("monomial component is not a path");
    if (!m.p.empty() && g.edge(m.p.back()).dst != m.range_vertex)
        throw StructuralError("monomial p does not end at the range vertex");
    if (!m.q.empty() && g.edge(m.q.back()).dst != m.range_vertex)
        throw StructuralError("monomial q does not end at the range vertex");
}

// True when the oriented CK2 rule applies at the tail of the monomial.
bool tail_reducible(const Graph& g, const Monomial& m, int& out_edge) {
    if (m.p.empty() || m.q.empty()) return false;
    int ep = m.p.back(), eq = m.q.back();
    if (ep != eq) return false;
    auto sp = special_edge(g, g.edge(ep).src);
    if (!sp || *sp != ep) return false;
    out_edge = ep;
    return true;
}

} // namespace

LpaElement LpaElement::zero(const Graph& g, const Field& f) { return LpaElement(g, f); }

LpaElement LpaElement::vertex(const Graph& g, const Field& f, int v) {
    return monomial(g, f, Scalar::one(f), Monomial{v, {}, {}});
}

LpaElement LpaElement::edge(const Graph& g, const Field& f, int e) {
    return monomial(g, f, Scalar::one(f), Monomial{g.edge(e).dst, {e}, {}});
}

LpaElement LpaElement::ghost_edge(const Graph& g, const Field& f, int e) {
    return monomial(g, f, Scalar::one(f), Monomial{g.edge(e).dst, {}, {e}});
}

LpaElement LpaElement::path(const Graph& g, const Field& f, const std::vector<int>& edges) {
    if (edges.empty()) throw StructuralError("path element needs at least one edge; use vertex()");
    return monomial(g, f, Scalar::one(f), Monomial{g.edge(edges.back()).dst, edges, {}});
}

LpaElement LpaElement::monomial(const Graph& g, const Field& f, const Scalar& c, const Monomial& m) {
    return lpa_normalize(g, f, {RawTerm{c, m}});
}

LpaElement LpaElement::operator+(const LpaElement& o) const {
    if (graph_ != o.graph_) throw StructuralError("graph mismatch in path-algebra arithmetic");
    if (field_ != o.field_) throw StructuralError("field mismatch in path-algebra arithmetic");
    LpaElement r = *this;
    for (const auto& [m, c] : o.terms_) {
        auto it = r.terms_.find(m);
        if (it == r.terms_.end()) {
            r.terms_.emplace(m, c);
        } else {
            Scalar s = it->second + c;
            if (s.is_zero())
                r.terms_.erase(it);
            else
                it->second = s;
        }
    }
    return r;
}

LpaElement LpaElement::operator-(const LpaElement& o) const { return *this + (-o); }

LpaElement LpaElement::operator-() const {
    LpaElement r(*graph_, field_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

LpaElement LpaElement::scaled(const Scalar& c) const {
    LpaElement r(*graph_, field_);
    if (c.is_zero()) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

bool LpaElement::operator==(const LpaElement& o) const {
    return graph_ == o.graph_ && field_ == o.field_ && terms_ == o.terms_;
}

std::string LpaElement::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        std::string coeff = c.to_string();
        bool negative = coeff[0] == '-';
        if (negative) coeff = coeff.substr(1);
        if (first) {
            if (negative) out += "-";
            first = false;
        } else {
            out += negative ? " - " : " + ";
        }
        std::string body;
        for (int e : m.p) body += graph_->edge(e).id + " ";
        for (auto it = m.q.rbegin(); it != m.q.rend(); ++it) body += graph_->edge(*it).id + "* ";
        if (body.empty())
            body = graph_->vertex_id(m.range_vertex);
        else
            body.pop_back();
        if (coeff != "1") out += coeff + " ";
        out += body;
    }
    return out;
}

LpaElement lpa_normalize(const Graph& g, const Field& f, const std::vector<RawTerm>& raw) {
    LpaElement result(g, f);
    std::deque<RawTerm> work;
    for (const RawTerm& t : raw) {
        check_monomial(g, t.mono);
        if (t.coeff.field() != f) throw StructuralError("coefficient field mismatch");
        work.push_back(t);
    }
    while (!work.empty()) {
        RawTerm t = std::move(work.front());
        work.pop_front();
        if (t.coeff.is_zero()) continue;
        int e;
        if (!tail_reducible(g, t.mono, e)) {
            auto it = result.terms_.find(t.mono);
            if (it == result.terms_.end()) {
                result.terms_.emplace(t.mono, t.coeff);
            } else {
                Scalar s = it->second + t.coeff;
                if (s.is_zero())
                    result.terms_.erase(it);
                else
                    it->second = s;
            }
            continue;
        }
        // p = p0 g, q = q0 g with g special at v = s(g):
        //   p q* = p0 q0* - sum over the other edges e' of v of (p0 e')(q0 e')*.
        int v = g.edge(e).src;
        Monomial base{v, std::vector<int>(t.mono.p.begin(), t.mono.p.end() - 1),
                      std::vector<int>(t.mono.q.begin(), t.mono.q.end() - 1)};
        work.push_back(RawTerm{t.coeff, base});
        for (int other : g.out_edges(v)) {
            if (other == e) continue;
            Monomial m2{g.edge(other).dst, base.p, base.q};
            m2.p.push_back(other);
            m2.q.push_back(other);
            work.push_back(RawTerm{-t.coeff, m2});
        }
    }
    return result;
}

namespace {

// (p q*)(r s*): p r' s* when r = q r', p (s q')* when q = r q', zero otherwise.
std::optional<Monomial> monomial_product(const Graph& g, const Monomial& a, const Monomial& b) {
    const auto& q = a.q;
    const auto& r = b.p;
    size_t common = std::min(q.size(), r.size());
    for (size_t i = 0; i < common; ++i)
        if (q[i] != r[i]) return std::nullopt;
    if (q.size() <= r.size()) {
        // r = q r'
        if (q.empty() && !r.empty() && a.range_vertex != g.edge(r[0]).src) return std::nullopt;
        if (q.empty() && r.empty() && a.range_vertex != b.range_vertex) return std::nullopt;
        Monomial m{b.range_vertex, a.p, b.q};
        m.p.insert(m.p.end(), r.begin() + common, r.end());
        return m;
    }
    // q = r q'
    if (r.empty() && b.range_vertex != g.edge(q[0]).src) return std::nullopt;
    // p (s q')* has ghost part s q' and range r(q') = r(q).
    Monomial m{a.range_vertex, a.p, b.q};
    m.q.insert(m.q.end(), q.begin() + common, q.end());
    return m;
}

} // namespace

LpaElement lpa_mul(const LpaElement& a, const LpaElement& b) {
    if (&a.graph() != &b.graph()) throw StructuralError("graph mismatch in lpa_mul");
    if (a.field() != b.field()) throw StructuralError("field mismatch in lpa_mul");
    LpaElement acc = LpaElement::zero(a.graph(), a.field());
    for (const auto& [ma, ca] : a.terms()) {
        std::vector<RawTerm> raw;
        for (const auto& [mb, cb] : b.terms()) {
            auto prod = monomial_product(a.graph(), ma, mb);
            if (prod) raw.push_back(RawTerm{ca * cb, *prod});
        }
        acc = acc + lpa_normalize(a.graph(), a.field(), raw);
    }
    return acc;
}

LpaElement lpa_involution(const LpaElement& a) {
    std::vector<RawTerm> raw;
    for (const auto& [m, c] : a.terms()) raw.push_back(RawTerm{c, m.star()});
    return lpa_normalize(a.graph(), a.field(), raw);
}

LpaElement lpa_component(const LpaElement& a, int64_t d) {
    LpaElement r = LpaElement::zero(a.graph(), a.field());
    std::vector<RawTerm> raw;
    for (const auto& [m, c] : a.terms())
        if (m.degree() == d) raw.push_back(RawTerm{c, m});
    return lpa_normalize(a.graph(), a.field(), raw);
}

std::optional<int64_t> lpa_degree(const LpaElement& a) {
    std::optional<int64_t> d;
    for (const auto& [m, c] : a.terms()) {
        if (d && *d != m.degree()) return std::nullopt;
        d = m.degree();
    }
    return d;
}

bool lpa_is_homogeneous(const LpaElement& a) {
    return a.is_zero() || lpa_degree(a).has_value();
}

bool lpa_is_idempotent(const LpaElement& a) { return lpa_mul(a, a) == a; }

LpaElement lpa_corner(const LpaElement& a, const LpaElement& idem) {
    if (!lpa_is_idempotent(idem)) throw ContractViolation("lpa_corner requires an idempotent");
    return lpa_mul(lpa_mul(idem, a), idem);
}

std::vector<PathListEntry> enumerate_paths(const Graph& g, int max_len) {
    std::vector<PathListEntry> out;
    for (int v = 0; v < g.vertex_count(); ++v) out.push_back({{}, v});
    size_t frontier_begin = 0;
    for (int len = 1; len <= max_len; ++len) {
        size_t frontier_end = out.size();
        for (size_t i = frontier_begin; i < frontier_end; ++i) {
            if (static_cast<int>(out[i].edges.size()) != len - 1) continue;
            for (int e : g.out_edges(out[i].range)) {
                PathListEntry next = out[i];
                next.edges.push_back(e);
                next.range = g.edge(e).dst;
                out.push_back(std::move(next));
            }
        }
        frontier_begin = frontier_end;
    }
    return out;
}

int64_t count_basis_monomials(const Graph& g, int64_t d) {
    int bound = g.vertex_count() + static_cast<int>(d < 0 ? -d : d) + 1;
    auto paths = enumerate_paths(g, bound);
    int64_t count = 0;
    for (const auto& p : paths) {
        for (const auto& q : paths) {
            if (p.range != q.range) continue;
            if (static_cast<int64_t>(p.edges.size()) - static_cast<int64_t>(q.edges.size()) != d)
                continue;
            if (!p.edges.empty() && !q.edges.empty() && p.edges.back() == q.edges.back()) {
                auto sp = special_edge(g, g.edge(p.edges.back()).src);
                if (sp && *sp == p.edges.back()) continue;
            }
            ++count;
        }
    }
    return count;
}

} // namespace grlpa
