#include "prime_scope/exact/zmod_poly.hpp"

#include "prime_scope/errors.hpp"

namespace prime_scope {

namespace {

void trim(ZPoly& a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

Integer mod(const Integer& x, const Integer& m)
{
    Integer r = x % m;
    if (r < 0)
        r += m;
    return r;
}

} // namespace

ZPoly zp_reduce(ZPoly a, const Integer& m)
{
    for (Integer& c : a)
        c = mod(c, m);
    trim(a);
    return a;
}

ZPoly zp_from(const FpPoly& a)
{
    ZPoly out;
    for (std::uint64_t c : a.coefficients())
        out.emplace_back(static_cast<unsigned long>(c));
    return out;
}

ZPoly zp_add(const ZPoly& a, const ZPoly& b, const Integer& m)
{
    ZPoly r(std::max(a.size(), b.size()), Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i)
        r[i] += b[i];
    return zp_reduce(std::move(r), m);
}

ZPoly zp_sub(const ZPoly& a, const ZPoly& b, const Integer& m)
{
    ZPoly r(std::max(a.size(), b.size()), Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i)
        r[i] -= b[i];
    return zp_reduce(std::move(r), m);
}

ZPoly zp_mul(const ZPoly& a, const ZPoly& b, const Integer& m)
{
    if (a.empty() || b.empty())
        return {};
    ZPoly r(a.size() + b.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    }
    return zp_reduce(std::move(r), m);
}

ZPoly zp_scale(const ZPoly& a, const Integer& c, const Integer& m)
{
    ZPoly r(a);
    for (Integer& x : r)
        x *= c;
    return zp_reduce(std::move(r), m);
}

std::pair<ZPoly, ZPoly> zp_divmod(const ZPoly& a, const ZPoly& d, const Integer& m)
{
    if (d.empty() || d.back() != 1)
        raise(ErrorCode::InvalidArgument, "division by a non-monic polynomial modulo m");
    ZPoly r = zp_reduce(a, m);
    if (r.size() < d.size())
        return {{}, r};
    std::size_t dd = d.size() - 1;
    ZPoly q(r.size() - dd, Integer(0));
    for (std::size_t i = r.size(); i-- > dd;) {
        Integer c = mod(r[i], m);
        if (c == 0)
            continue;
        q[i - dd] = c;
        for (std::size_t j = 0; j <= dd; ++j)
            r[i - dd + j] -= c * d[j];
    }
    r.resize(dd);
    return {zp_reduce(std::move(q), m), zp_reduce(std::move(r), m)};
}

Integer zp_resultant(const ZPoly& f, const ZPoly& h, const Integer& m)
{
    std::size_t n = f.size() - 1;
    if (n == 0)
        return mod(Integer(1), m);
    ZPoly col = zp_rem(h, f, m);
    if (n == 1)
        return col.empty() ? Integer(0) : col[0];
    // matrix of multiplication by h in the basis 1, X, ..., X^{n-1}
    std::vector<std::vector<Integer>> M(n, std::vector<Integer>(n, Integer(0)));
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < col.size(); ++i)
            M[i][j] = col[i];
        ZPoly shifted(col.size() + 1, Integer(0));
        for (std::size_t i = 0; i < col.size(); ++i)
            shifted[i + 1] = col[i];
        col = zp_rem(shifted, f, m);
    }
    // Bareiss fraction-free elimination over Z
    Integer sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (M[k][k] == 0) {
            std::size_t piv = k + 1;
            while (piv < n && M[piv][k] == 0)
                ++piv;
            if (piv == n)
                return Integer(0);
            std::swap(M[k], M[piv]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) / prev;
            M[i][k] = 0;
        }
        prev = M[k][k];
    }
    return mod(sign * M[n - 1][n - 1], m);
}

HenselLift hensel_lift(const ZPoly& f, const FpPoly& a, const FpPoly& b, std::uint64_t p, unsigned n)
{
    FpXgcd bez = xgcd(b, a); // s*b + t*a = 1
    if (!bez.g.is_one())
        raise(ErrorCode::InvalidArgument, "Hensel lifting needs coprime factors");
    Integer pz(static_cast<unsigned long>(p));
    HenselLift L{zp_from(a), zp_from(b), zp_from(bez.s), zp_from(bez.t)};
    Integer m = pz;
    Integer target = pow_int(pz, n);
    while (m < target) {
        Integer m2 = m * m;
        // g = b (cofactor), h = a (monic factor); quadratic step modulo m^2
        ZPoly e = zp_sub(f, zp_mul(L.b, L.a, m2), m2);
        auto [q, r] = zp_divmod(zp_mul(L.s, e, m2), L.a, m2);
        ZPoly b2 = zp_add(zp_add(L.b, zp_mul(L.t, e, m2), m2), zp_mul(q, L.b, m2), m2);
        ZPoly a2 = zp_add(L.a, r, m2);
        ZPoly one{Integer(1)};
        ZPoly beta = zp_sub(zp_add(zp_mul(L.s, b2, m2), zp_mul(L.t, a2, m2), m2), one, m2);
        auto [c, d] = zp_divmod(zp_mul(L.s, beta, m2), a2, m2);
        ZPoly s2 = zp_sub(L.s, d, m2);
        ZPoly t2 = zp_sub(zp_sub(L.t, zp_mul(L.t, beta, m2), m2), zp_mul(c, b2, m2), m2);
        L = {std::move(a2), std::move(b2), std::move(s2), std::move(t2)};
        m = m2;
    }
    L.a = zp_reduce(L.a, target);
    L.b = zp_reduce(L.b, target);
    L.s = zp_reduce(L.s, target);
    L.t = zp_reduce(L.t, target);
    return L;
}

} // namespace prime_scope
