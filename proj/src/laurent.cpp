#include "grlpa/laurent.hpp"

#include <cctype>

namespace grlpa {

LaurentPoly LaurentPoly::zero(const Field& f, int64_t step) {
    if (step < 1) throw StructuralError("Laurent step must be positive");
    return LaurentPoly(f, step);
}

LaurentPoly LaurentPoly::constant(const Scalar& c, int64_t step) {
    LaurentPoly p = zero(c.field(), step);
    p.add_term(0, c);
    return p;
}

LaurentPoly LaurentPoly::monomial(const Scalar& c, int64_t exponent, int64_t step) {
    LaurentPoly p = zero(c.field(), step);
    if (exponent % step != 0)
        throw StructuralError("exponent " + std::to_string(exponent) + " is not a multiple of step " +
                              std::to_string(step));
    p.add_term(exponent / step, c);
    return p;
}

bool LaurentPoly::is_constant() const {
    return coeffs_.empty() || (coeffs_.size() == 1 && coeffs_.begin()->first == 0);
}

void LaurentPoly::add_term(int64_t k, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = coeffs_.find(k);
    if (it == coeffs_.end()) {
        coeffs_.emplace(k, c);
        return;
    }
    Scalar sum = it->second + c;
    if (sum.is_zero())
        coeffs_.erase(it);
    else
        it->second = sum;
}

void LaurentPoly::check_compatible(const LaurentPoly& o) const {
    if (field_ != o.field_) throw StructuralError("Laurent field mismatch");
    if (step_ != o.step_)
        throw StructuralError("Laurent step mismatch: " + std::to_string(step_) + " vs " +
                              std::to_string(o.step_));
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    check_compatible(o);
    LaurentPoly r = *this;
    for (const auto& [k, c] : o.coeffs_) r.add_term(k, c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    check_compatible(o);
    LaurentPoly r = *this;
    for (const auto& [k, c] : o.coeffs_) r.add_term(k, -c);
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    check_compatible(o);
    LaurentPoly r = zero(field_, step_);
    for (const auto& [ka, ca] : coeffs_)
        for (const auto& [kb, cb] : o.coeffs_) r.add_term(ka + kb, ca * cb);
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = zero(field_, step_);
    for (const auto& [k, c] : coeffs_) r.add_term(k, -c);
    return r;
}

LaurentPoly LaurentPoly::scaled(const Scalar& c) const {
    LaurentPoly r = zero(field_, step_);
    for (const auto& [k, v] : coeffs_) r.add_term(k, v * c);
    return r;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
    return field_ == o.field_ && step_ == o.step_ && coeffs_ == o.coeffs_;
}

bool LaurentPoly::operator<(const LaurentPoly& o) const {
    check_compatible(o);
    auto a = coeffs_.begin(), b = o.coeffs_.begin();
    for (; a != coeffs_.end() && b != o.coeffs_.end(); ++a, ++b) {
        if (a->first != b->first) return a->first < b->first;
        if (a->second != b->second) return a->second < b->second;
    }
    return a == coeffs_.end() && b != o.coeffs_.end();
}

LaurentPoly LaurentPoly::component(int64_t d) const {
    LaurentPoly r = zero(field_, step_);
    if (d % step_ != 0) return r;
    auto it = coeffs_.find(d / step_);
    if (it != coeffs_.end()) r.add_term(it->first, it->second);
    return r;
}

Scalar LaurentPoly::coefficient(int64_t exponent) const {
    if (exponent % step_ != 0) return Scalar::zero(field_);
    auto it = coeffs_.find(exponent / step_);
    return it == coeffs_.end() ? Scalar::zero(field_) : it->second;
}

LaurentPoly LaurentPoly::unit_inverse() const {
    if (!is_unit()) throw ContractViolation("unit_inverse: not a unit (must be a nonzero monomial)");
    const auto& [k, c] = *coeffs_.begin();
    LaurentPoly r = zero(field_, step_);
    r.add_term(-k, c.inverse());
    return r;
}

std::optional<int64_t> LaurentPoly::monomial_degree() const {
    if (!is_monomial()) return std::nullopt;
    return coeffs_.begin()->first * step_;
}

std::vector<int64_t> LaurentPoly::support() const {
    std::vector<int64_t> v;
    v.reserve(coeffs_.size());
    for (const auto& [k, c] : coeffs_) v.push_back(k * step_);
    return v;
}

std::string LaurentPoly::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : coeffs_) {
        int64_t e = k * step_;
        std::string cs = c.to_string();
        std::string term;
        if (e == 0) {
            term = cs;
        } else {
            if (cs == "1")
                term = "";
            else if (cs == "-1")
                term = "-";
            else
                term = cs;
            term += "x";
            if (e != 1) term += "^" + std::to_string(e);
        }
        if (!out.empty() && term[0] != '-') out += "+";
        out += term;
    }
    return out;
}

std::optional<LaurentPoly> LaurentPoly::parse(const Field& f, int64_t step, std::string_view text) {
    LaurentPoly result = zero(f, step);
    size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skip_ws();
    if (i >= text.size()) return std::nullopt;
    bool first = true;
    while (i < text.size()) {
        skip_ws();
        int sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
            skip_ws();
        } else if (!first) {
            return std::nullopt;
        }
        // coefficient (optional when an x-part follows)
        size_t start = i;
        while (i < text.size() && (isdigit(static_cast<unsigned char>(text[i])) || text[i] == '/')) ++i;
        std::string_view coeff_text = text.substr(start, i - start);
        skip_ws();
        bool has_x = i < text.size() && text[i] == 'x';
        Scalar c = Scalar::one(f);
        if (!coeff_text.empty()) {
            auto parsed = Scalar::parse(f, coeff_text);
            if (!parsed) return std::nullopt;
            c = *parsed;
        } else if (!has_x) {
            return std::nullopt;
        }
        if (sign < 0) c = -c;
        int64_t exponent = 0;
        if (has_x) {
            ++i;
            exponent = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                bool eneg = false;
                if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
                    eneg = text[i] == '-';
                    ++i;
                }
                if (i >= text.size() || !isdigit(static_cast<unsigned char>(text[i]))) return std::nullopt;
                exponent = 0;
                while (i < text.size() && isdigit(static_cast<unsigned char>(text[i])))
                    exponent = exponent * 10 + (text[i++] - '0');
                if (eneg) exponent = -exponent;
            }
            if (exponent % step != 0) return std::nullopt;
        }
        if (has_x)
            result = result + monomial(c, exponent, step);
        else
            result = result + constant(c, step);
        first = false;
        skip_ws();
    }
    return result;
}

} // namespace grlpa
