#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "grlpa/error.hpp"

namespace grlpa {

using Rational = boost::multiprecision::cpp_rational;

/// A coefficient field: the rationals or a prime field F_p.
class Field {
public:
    static Field rationals() { return Field(0); }
    static Field prime(int64_t p);

    bool is_rational() const { return p_ == 0; }
    /// 0 for the rationals, p for F_p.
    int64_t characteristic() const { return p_; }

    bool operator==(const Field& o) const { return p_ == o.p_; }
    bool operator!=(const Field& o) const { return p_ != o.p_; }

    std::string to_string() const;

private:
    explicit Field(int64_t p) : p_(p) {}
    int64_t p_;
};

/// An exact field element: an arbitrary-precision rational or a residue mod p.
/// Immutable after construction; all operations are pure.
class Scalar {
public:
    static Scalar zero(const Field& f) { return of_int(f, 0); }
    static Scalar one(const Field& f) { return of_int(f, 1); }
    static Scalar of_int(const Field& f, int64_t v);
    static Scalar of_rational(Rational v);
    static Scalar of_residue(const Field& f, int64_t v);

    const Field& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator-() const;
    /// Multiplicative inverse; throws StructuralError on zero.
    Scalar inverse() const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    /// Total order used only for canonical enumeration / printing.
    bool operator<(const Scalar& o) const;

    std::string to_string() const;

    /// Parses "3", "-2", "5/4" (rationals only for '/'). Empty optional on bad syntax.
    static std::optional<Scalar> parse(const Field& f, std::string_view text);

    /// Residue value in [0, p) for prime fields; throws for rationals.
    int64_t residue() const;
    /// Rational value; throws for prime fields.
    const Rational& rational() const;

private:
    Scalar(Field f, Rational q, int64_t r) : field_(f), q_(std::move(q)), r_(r) {}
    void check_same_field(const Scalar& o) const;

    Field field_;
    Rational q_;  // used when field is the rationals
    int64_t r_;   // used when field is F_p
};

} // namespace grlpa
