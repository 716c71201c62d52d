#pragma once

#include <memory>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "prime_scope/exact/qpoly.hpp"
#include "prime_scope/exact/rational.hpp"

namespace prime_scope {

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

/// K = Q(alpha) for a monic irreducible integer polynomial. Immutable.
class NumberField {
public:
    const QPoly& defining_poly() const { return poly_; }
    int degree() const { return poly_.degree(); }
    const Integer& poly_discriminant() const { return discriminant_; }
    std::string to_string() const { return poly_.to_string(); }

    /// Use nf_create; public only for make_shared.
    NumberField(QPoly poly, Integer discriminant);

private:
    QPoly poly_;
    Integer discriminant_;
};

/// Certifies irreducibility and returns a field handle. Errors: NotMonic,
/// Reducible (detail carries the factorization), UncertifiedIrreducibility.
FieldPtr nf_create(const QPoly& f);
FieldPtr nf_create(std::string_view text);
/// The field Q presented by the defining polynomial X.
FieldPtr rationals();

/// Element of K in the power basis 1, alpha, ..., alpha^{n-1}.
class FieldElement {
public:
    FieldElement() = default;
    FieldElement(FieldPtr field, std::vector<Rational> coords);
    FieldElement(FieldPtr field, const Rational& value);
    FieldElement(FieldPtr field, long value) : FieldElement(std::move(field), Rational(value)) {}
    /// h(alpha) for an arbitrary rational polynomial h.
    static FieldElement from_poly(FieldPtr field, const QPoly& h);
    static FieldElement alpha(FieldPtr field);
    /// Accepts a rational `a/b` or a coordinate vector `[c0, c1, ...]`.
    static FieldElement parse(FieldPtr field, std::string_view text);

    const FieldPtr& field() const { return field_; }
    const std::vector<Rational>& coords() const { return coords_; }
    QPoly as_poly() const { return QPoly(coords_); }
    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    /// Precondition: is_rational().
    const Rational& rational_value() const { return coords_[0]; }
    /// Least common denominator of the coordinates.
    Integer denominator() const;
    /// Largest coordinate height.
    Integer height() const;

    FieldElement operator-() const;
    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
    friend bool operator==(const FieldElement& a, const FieldElement& b);
    FieldElement pow(long exponent) const;
    /// N_{K/Q}(x) = Res(f, h) for x = h(alpha).
    Rational norm() const;

    /// `[c0, c1, ...]`, or the bare rational when the field has degree 1.
    std::string to_string() const;
    /// Always the bracketed coordinate form.
    std::string to_vector_string() const;

private:
    FieldPtr field_;
    std::vector<Rational> coords_;
};

/// Inverse; DivisionByZero on zero.
FieldElement nf_inv(const FieldElement& x);
std::ostream& operator<<(std::ostream& os, const FieldElement& x);

} // namespace prime_scope
