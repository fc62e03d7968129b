#pragma once

#include <map>
#include <optional>
#include <string>

#include "grlpa/scalar.hpp"

namespace grlpa {

/// Exact element of K[x^m, x^-m], stored sparse and keyed by k for the term
/// c_k x^{km}. Only nonzero coefficients are stored; the zero polynomial is
/// the empty map. The step m is part of the value; mixing steps is an error.
/// Grading: the component of degree km is K x^{km}, all others vanish.
class LaurentPoly {
public:
    static LaurentPoly zero(const Field& f, int64_t step);
    static LaurentPoly constant(const Scalar& c, int64_t step);
    static LaurentPoly one(const Field& f, int64_t step) { return constant(Scalar::one(f), step); }
    /// c x^exponent; exponent must be a multiple of step.
    static LaurentPoly monomial(const Scalar& c, int64_t exponent, int64_t step);

    const Field& field() const { return field_; }
    int64_t step() const { return step_; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const;
    /// Exactly one nonzero term.
    bool is_monomial() const { return coeffs_.size() == 1; }

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly scaled(const Scalar& c) const;

    bool operator==(const LaurentPoly& o) const;
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }
    /// Canonical total order (for deterministic enumeration only).
    bool operator<(const LaurentPoly& o) const;

    /// The homogeneous component of degree d: c_k x^{km} when d = km and the
    /// coefficient is present, otherwise zero.
    LaurentPoly component(int64_t d) const;
    /// Coefficient of x^exponent (zero scalar if absent or not a multiple of step).
    Scalar coefficient(int64_t exponent) const;

    /// Units of K[x^m,x^-m] are exactly the nonzero monomials c x^{km}.
    bool is_unit() const { return is_monomial(); }
    /// Inverse of a unit; throws ContractViolation otherwise.
    LaurentPoly unit_inverse() const;

    /// Degree of the single term if this is a monomial.
    std::optional<int64_t> monomial_degree() const;
    /// Support as exponents (ascending).
    std::vector<int64_t> support() const;

    const std::map<int64_t, Scalar>& terms() const { return coeffs_; }

    std::string to_string() const;

    /// Parses literals like "0", "3", "-1/2", "x^2", "2x^-4+1".
    /// Exponents must be multiples of step.
    static std::optional<LaurentPoly> parse(const Field& f, int64_t step, std::string_view text);

private:
    LaurentPoly(Field f, int64_t step) : field_(f), step_(step) {}
    void add_term(int64_t k, const Scalar& c);
    void check_compatible(const LaurentPoly& o) const;

    Field field_;
    int64_t step_;
    std::map<int64_t, Scalar> coeffs_;
};

} // namespace grlpa
