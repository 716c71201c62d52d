#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "prime_scope/exact/qpoly.hpp"
#include "prime_scope/exact/rational.hpp"

namespace prime_scope {

/// Dense polynomial over F_p for a word-size prime p, lowest degree first.
class FpPoly {
public:
    FpPoly() = default;
    FpPoly(std::uint64_t p, std::vector<std::uint64_t> coefficients);

    static FpPoly constant(std::uint64_t p, std::uint64_t c);
    static FpPoly x(std::uint64_t p);
    /// Reduction of a p-integral rational polynomial; NotPIntegral otherwise.
    static FpPoly reduce(const QPoly& q, std::uint64_t p);

    std::uint64_t modulus() const { return p_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    const std::vector<std::uint64_t>& coefficients() const { return c_; }
    std::uint64_t coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    std::uint64_t leading() const { return c_.back(); }

    std::uint64_t operator()(std::uint64_t x) const;
    FpPoly derivative() const;
    FpPoly monic() const;
    /// Integer lift with coefficients in [0, p).
    QPoly lift() const;

    friend FpPoly operator+(const FpPoly& a, const FpPoly& b);
    friend FpPoly operator-(const FpPoly& a, const FpPoly& b);
    friend FpPoly operator*(const FpPoly& a, const FpPoly& b);
    friend FpPoly operator*(std::uint64_t c, const FpPoly& a);
    friend bool operator==(const FpPoly& a, const FpPoly& b) { return a.p_ == b.p_ && a.c_ == b.c_; }
    /// Canonical order: degree first, then coefficient vectors lowest degree first.
    friend bool operator<(const FpPoly& a, const FpPoly& b);

    std::pair<FpPoly, FpPoly> divmod(const FpPoly& divisor) const;
    FpPoly operator/(const FpPoly& d) const { return divmod(d).first; }
    FpPoly operator%(const FpPoly& d) const { return divmod(d).second; }

    std::string to_string() const;

private:
    void normalize();
    std::uint64_t p_ = 2;
    std::vector<std::uint64_t> c_;
};

FpPoly gcd(const FpPoly& a, const FpPoly& b);
struct FpXgcd {
    FpPoly g, s, t;
};
FpXgcd xgcd(const FpPoly& a, const FpPoly& b);
FpPoly pow_mod(const FpPoly& base, const Integer& exponent, const FpPoly& modulus);
bool is_irreducible(const FpPoly& f);

struct FpFactor {
    FpPoly factor;
    unsigned multiplicity;
};

/// Complete factorization of a nonzero polynomial into monic irreducibles,
/// sorted canonically. The leading coefficient is dropped (a unit).
std::vector<FpFactor> factor(const FpPoly& f);

/// Factorization of a p-integral rational polynomial modulo p.
std::vector<FpFactor> poly_factor_mod_p(const QPoly& g, std::uint64_t p);

/// Lexicographically least monic irreducible polynomial of degree d over
/// F_p, comparing coefficient vectors lowest degree first.
FpPoly irreducible_poly_mod_p(std::uint64_t p, unsigned d);
/// Integer lift of irreducible_poly_mod_p.
QPoly irreducible_poly(std::uint64_t p, unsigned d);

QPoly cyclotomic(unsigned n);
std::ostream& operator<<(std::ostream& os, const FpPoly& p);

} // namespace prime_scope
