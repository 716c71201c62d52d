#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "prime_scope/exact/fp_poly.hpp"

namespace prime_scope {

/// F_{p^f} presented as F_p[Y]/(m) with m = irreducible_poly_mod_p(p, f).
class FiniteField {
public:
    static std::shared_ptr<const FiniteField> get(std::uint64_t p, unsigned f);

    std::uint64_t characteristic() const { return p_; }
    unsigned degree() const { return f_; }
    const FpPoly& modulus() const { return modulus_; }
    Integer order() const; // p^f

    FiniteField(std::uint64_t p, unsigned f);

private:
    std::uint64_t p_;
    unsigned f_;
    FpPoly modulus_;
};

class FFieldElement {
public:
    FFieldElement(std::shared_ptr<const FiniteField> field, std::vector<std::uint64_t> coords);
    FFieldElement(std::shared_ptr<const FiniteField> field, std::uint64_t value);
    FFieldElement(std::shared_ptr<const FiniteField> field, const FpPoly& representative);

    const std::shared_ptr<const FiniteField>& field() const { return field_; }
    std::uint64_t p() const { return field_->characteristic(); }
    unsigned f() const { return field_->degree(); }
    /// Length-f coordinate vector in the basis 1, Y, ..., Y^{f-1}.
    std::vector<std::uint64_t> coords() const;
    const FpPoly& representative() const { return value_; }
    bool is_zero() const { return value_.is_zero(); }
    bool is_one() const { return value_.is_one(); }

    friend FFieldElement operator+(const FFieldElement& a, const FFieldElement& b);
    friend FFieldElement operator-(const FFieldElement& a, const FFieldElement& b);
    friend FFieldElement operator*(const FFieldElement& a, const FFieldElement& b);
    friend bool operator==(const FFieldElement& a, const FFieldElement& b);
    friend bool operator<(const FFieldElement& a, const FFieldElement& b);
    FFieldElement operator-() const;
    FFieldElement inverse() const;
    FFieldElement pow(const Integer& exponent) const;

    std::string to_string() const;

private:
    std::shared_ptr<const FiniteField> field_;
    FpPoly value_;
};

/// Multiplicative order of a nonzero element; divides p^f - 1.
Integer ffield_order(const FFieldElement& s);

/// Enumerates all p^f elements in canonical (coordinate) order.
std::vector<FFieldElement> all_elements(const std::shared_ptr<const FiniteField>& field);

/// Roots in the given field of a polynomial with F_p coefficients, sorted.
std::vector<FFieldElement> roots_in(const FpPoly& h, const std::shared_ptr<const FiniteField>& field);

/// Evaluate a polynomial with F_p coefficients at a field element.
FFieldElement evaluate(const FpPoly& h, const FFieldElement& x);

} // namespace prime_scope
