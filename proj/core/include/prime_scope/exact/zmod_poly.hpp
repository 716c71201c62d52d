#pragma once

#include <utility>
#include <vector>

#include "prime_scope/exact/fp_poly.hpp"
#include "prime_scope/exact/rational.hpp"

namespace prime_scope {

// Polynomials over Z/mZ as integer vectors, lowest degree first, with
// coefficients kept in [0, m). Used for p-adic lifting at a fixed precision.
using ZPoly = std::vector<Integer>;

ZPoly zp_reduce(ZPoly a, const Integer& m);
ZPoly zp_from(const FpPoly& a);
ZPoly zp_add(const ZPoly& a, const ZPoly& b, const Integer& m);
ZPoly zp_sub(const ZPoly& a, const ZPoly& b, const Integer& m);
ZPoly zp_mul(const ZPoly& a, const ZPoly& b, const Integer& m);
ZPoly zp_scale(const ZPoly& a, const Integer& c, const Integer& m);
/// Division by a monic divisor modulo m.
std::pair<ZPoly, ZPoly> zp_divmod(const ZPoly& a, const ZPoly& monic_divisor, const Integer& m);
inline ZPoly zp_rem(const ZPoly& a, const ZPoly& monic_divisor, const Integer& m)
{
    return zp_divmod(a, monic_divisor, m).second;
}
/// Determinant of the multiplication-by-h map on (Z/m)[X]/(F), i.e. the
/// resultant Res(F, h) modulo m, for monic F.
Integer zp_resultant(const ZPoly& monic_f, const ZPoly& h, const Integer& m);

struct HenselLift {
    ZPoly a, b; // f = a * b mod m, a monic
    ZPoly s, t; // s * b + t * a = 1 mod m
};

/// Lifts a coprime factorization f = a * b mod p (a, b monic) to modulus
/// p^(2^k) >= p^n, returning the result reduced modulo p^n.
HenselLift hensel_lift(const ZPoly& f, const FpPoly& a, const FpPoly& b, std::uint64_t p, unsigned n);

} // namespace prime_scope
