#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "prime_scope/field/number_field.hpp"

namespace prime_scope {

/// Dense polynomial over a number field, lowest degree first.
class KPoly {
public:
    explicit KPoly(FieldPtr field) : field_(std::move(field)) {}
    KPoly(FieldPtr field, std::vector<FieldElement> coefficients);
    KPoly(FieldPtr field, const QPoly& q);

    /// Coefficients are rationals or `[c0, ...]` vectors.
    static KPoly parse(FieldPtr field, std::string_view text);
    static KPoly x(FieldPtr field);

    const FieldPtr& field() const { return field_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }
    const std::vector<FieldElement>& coefficients() const { return c_; }
    FieldElement coeff(std::size_t i) const;
    const FieldElement& leading() const { return c_.back(); }
    bool has_rational_coefficients() const;
    /// Precondition: has_rational_coefficients().
    QPoly to_qpoly() const;

    FieldElement operator()(const FieldElement& x) const;
    FieldElement operator()(const Rational& x) const;
    KPoly derivative() const;
    KPoly monic() const;

    friend KPoly operator+(const KPoly& a, const KPoly& b);
    friend KPoly operator-(const KPoly& a, const KPoly& b);
    friend KPoly operator*(const KPoly& a, const KPoly& b);
    friend KPoly operator*(const FieldElement& c, const KPoly& a);
    friend bool operator==(const KPoly& a, const KPoly& b);

    std::pair<KPoly, KPoly> divmod(const KPoly& d) const;
    KPoly operator/(const KPoly& d) const { return divmod(d).first; }
    KPoly operator%(const KPoly& d) const { return divmod(d).second; }

    std::string to_string() const;

private:
    void normalize();
    FieldPtr field_;
    std::vector<FieldElement> c_;
};

KPoly gcd(const KPoly& a, const KPoly& b);
KPoly squarefree_part(const KPoly& g);
FieldElement resultant(const KPoly& a, const KPoly& b);
FieldElement discriminant(const KPoly& g);
/// Substitution X -> X / c followed by scaling with c^deg: c^n g(X/c).
KPoly scale_roots(const KPoly& g, const FieldElement& c);
std::ostream& operator<<(std::ostream& os, const KPoly& p);

} // namespace prime_scope
