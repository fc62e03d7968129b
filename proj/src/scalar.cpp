#include "grlpa/scalar.hpp"

namespace grlpa {

namespace {

bool is_prime(int64_t p) {
    if (p < 2) return false;
    for (int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

int64_t mod_positive(int64_t v, int64_t p) {
    int64_t r = v % p;
    return r < 0 ? r + p : r;
}

// Extended Euclid on (a, p) with gcd 1; returns a^{-1} mod p.
int64_t mod_inverse(int64_t a, int64_t p) {
    int64_t old_r = a, r = p;
    int64_t old_s = 1, s = 0;
    while (r != 0) {
        int64_t q = old_r / r;
        int64_t t = old_r - q * r;
        old_r = r; r = t;
        t = old_s - q * s;
        old_s = s; s = t;
    }
    return mod_positive(old_s, p);
}

} // namespace

Field Field::prime(int64_t p) {
    if (!is_prime(p)) throw StructuralError("field characteristic must be prime, got " + std::to_string(p));
    return Field(p);
}

std::string Field::to_string() const {
    return is_rational() ? "Q" : "F" + std::to_string(p_);
}

Scalar Scalar::of_int(const Field& f, int64_t v) {
    if (f.is_rational()) return Scalar(f, Rational(v), 0);
    return Scalar(f, Rational(), mod_positive(v, f.characteristic()));
}

Scalar Scalar::of_rational(Rational v) {
    return Scalar(Field::rationals(), std::move(v), 0);
}

Scalar Scalar::of_residue(const Field& f, int64_t v) {
    if (f.is_rational()) throw StructuralError("of_residue requires a prime field");
    return Scalar(f, Rational(), mod_positive(v, f.characteristic()));
}

bool Scalar::is_zero() const {
    return field_.is_rational() ? q_.is_zero() : r_ == 0;
}

bool Scalar::is_one() const {
    return field_.is_rational() ? q_ == 1 : r_ == 1;
}

void Scalar::check_same_field(const Scalar& o) const {
    if (field_ != o.field_)
        throw StructuralError("scalar field mismatch: " + field_.to_string() + " vs " + o.field_.to_string());
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_field(o);
    if (field_.is_rational()) return Scalar(field_, q_ + o.q_, 0);
    return Scalar(field_, Rational(), mod_positive(r_ + o.r_, field_.characteristic()));
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_same_field(o);
    if (field_.is_rational()) return Scalar(field_, q_ - o.q_, 0);
    return Scalar(field_, Rational(), mod_positive(r_ - o.r_, field_.characteristic()));
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_field(o);
    if (field_.is_rational()) return Scalar(field_, q_ * o.q_, 0);
    return Scalar(field_, Rational(), mod_positive(r_ * o.r_, field_.characteristic()));
}

Scalar Scalar::operator-() const {
    if (field_.is_rational()) return Scalar(field_, -q_, 0);
    return Scalar(field_, Rational(), mod_positive(-r_, field_.characteristic()));
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw StructuralError("inverse of zero");
    if (field_.is_rational()) return Scalar(field_, Rational(1) / q_, 0);
    return Scalar(field_, Rational(), mod_inverse(r_, field_.characteristic()));
}

bool Scalar::operator==(const Scalar& o) const {
    if (field_ != o.field_) return false;
    return field_.is_rational() ? q_ == o.q_ : r_ == o.r_;
}

bool Scalar::operator<(const Scalar& o) const {
    check_same_field(o);
    return field_.is_rational() ? q_ < o.q_ : r_ < o.r_;
}

std::string Scalar::to_string() const {
    if (field_.is_rational()) return q_.str();
    return std::to_string(r_);
}

std::optional<Scalar> Scalar::parse(const Field& f, std::string_view text) {
    if (text.empty()) return std::nullopt;
    bool neg = false;
    size_t i = 0;
    if (text[0] == '-') { neg = true; i = 1; }
    else if (text[0] == '+') { i = 1; }
    if (i >= text.size()) return std::nullopt;

    auto scan_int = [&](int64_t& out) -> bool {
        if (i >= text.size() || !isdigit(static_cast<unsigned char>(text[i]))) return false;
        int64_t v = 0;
        while (i < text.size() && isdigit(static_cast<unsigned char>(text[i]))) {
            v = v * 10 + (text[i] - '0');
            if (v > (int64_t(1) << 60)) return false;
            ++i;
        }
        out = v;
        return true;
    };

    int64_t num = 0;
    if (!scan_int(num)) return std::nullopt;
    int64_t den = 1;
    if (i < text.size() && text[i] == '/') {
        ++i;
        if (!scan_int(den) || den == 0) return std::nullopt;
    }
    if (i != text.size()) return std::nullopt;

    if (f.is_rational()) {
        Rational q(num, den);
        return of_rational(neg ? -q : q);
    }
    if (den != 1) {
        Scalar s = of_int(f, num) * of_int(f, den).inverse();
        return neg ? -s : s;
    }
    return of_int(f, neg ? -num : num);
}

int64_t Scalar::residue() const {
    if (field_.is_rational()) throw StructuralError("residue() on a rational scalar");
    return r_;
}

const Rational& Scalar::rational() const {
    if (!field_.is_rational()) throw StructuralError("rational() on a prime-field scalar");
    return q_;
}

} // namespace grlpa
