#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "prime_scope/exact/rational.hpp"

namespace prime_scope {

/// Dense univariate polynomial over Q, coefficients lowest degree first.
/// The leading coefficient is nonzero unless the polynomial is zero.
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(std::vector<Rational> coefficients);
    QPoly(std::initializer_list<long> coefficients);

    static QPoly constant(const Rational& c);
    static QPoly x();
    static QPoly monomial(const Rational& c, std::size_t degree);
    static QPoly parse(std::string_view text);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
    bool has_integer_coefficients() const;
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
    const Rational& leading() const { return coeffs_.back(); }

    Rational operator()(const Rational& x) const;
    QPoly derivative() const;
    QPoly monic() const;
    /// Least common multiple of denominators times the polynomial, made primitive.
    QPoly primitive_integer() const;

    QPoly operator-() const;
    friend QPoly operator+(const QPoly& a, const QPoly& b);
    friend QPoly operator-(const QPoly& a, const QPoly& b);
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    friend QPoly operator*(const Rational& c, const QPoly& a);
    friend bool operator==(const QPoly& a, const QPoly& b) { return a.coeffs_ == b.coeffs_; }

    /// Euclidean division; divisor must be nonzero.
    std::pair<QPoly, QPoly> divmod(const QPoly& divisor) const;
    QPoly operator/(const QPoly& d) const { return divmod(d).first; }
    QPoly operator%(const QPoly& d) const { return divmod(d).second; }

    std::string to_string() const;

private:
    void normalize();
    std::vector<Rational> coeffs_;
};

/// Monic gcd (zero if both inputs are zero).
QPoly gcd(const QPoly& a, const QPoly& b);
/// Extended gcd: returns (g, s, t) with s*a + t*b = g monic.
struct QPolyXgcd {
    QPoly g, s, t;
};
QPolyXgcd xgcd(const QPoly& a, const QPoly& b);
/// p / gcd(p, p'), made monic.
QPoly squarefree_part(const QPoly& p);
Rational resultant(const QPoly& a, const QPoly& b);
Rational discriminant(const QPoly& p);
QPoly pow(const QPoly& p, unsigned exponent);
std::ostream& operator<<(std::ostream& os, const QPoly& p);

} // namespace prime_scope
