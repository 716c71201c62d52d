#include "prime_scope/exact/fp_poly.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <random>

#include "prime_scope/errors.hpp"
#include "prime_scope/exact/poly_text.hpp"

namespace prime_scope {

FpPoly::FpPoly(std::uint64_t p, std::vector<std::uint64_t> coefficients)
    : p_(p), c_(std::move(coefficients))
{
    for (auto& c : c_)
        c %= p_;
    normalize();
}

FpPoly FpPoly::constant(std::uint64_t p, std::uint64_t c) { return FpPoly(p, {c}); }
FpPoly FpPoly::x(std::uint64_t p) { return FpPoly(p, {0, 1}); }

FpPoly FpPoly::reduce(const QPoly& q, std::uint64_t p)
{
    Integer pz(static_cast<unsigned long>(p));
    std::vector<std::uint64_t> v;
    for (const Rational& c : q.coefficients()) {
        if (mpz_divisible_p(c.get_den().get_mpz_t(), pz.get_mpz_t()))
            raise(ErrorCode::NotPIntegral, "coefficient " + prime_scope::to_string(c) + " is not "
                                               + std::to_string(p) + "-integral");
        v.push_back(rational_mod(c, pz).get_ui());
    }
    return FpPoly(p, std::move(v));
}

void FpPoly::normalize()
{
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

std::uint64_t FpPoly::operator()(std::uint64_t x) const
{
    std::uint64_t acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = (mul_mod(acc, x, p_) + *it) % p_;
    return acc;
}

FpPoly FpPoly::derivative() const
{
    if (c_.size() <= 1)
        return FpPoly(p_, {});
    std::vector<std::uint64_t> v(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
        v[i - 1] = mul_mod(c_[i], i % p_, p_);
    return FpPoly(p_, std::move(v));
}

FpPoly FpPoly::monic() const
{
    if (is_zero())
        return *this;
    return inv_mod(leading(), p_) * *this;
}

QPoly FpPoly::lift() const
{
    std::vector<Rational> v;
    for (auto c : c_)
        v.emplace_back(static_cast<unsigned long>(c));
    return QPoly(std::move(v));
}

FpPoly operator+(const FpPoly& a, const FpPoly& b)
{
    std::vector<std::uint64_t> v(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        v[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i)
        v[i] = (v[i] + b.c_[i]) % a.p_;
    return FpPoly(a.p_, std::move(v));
}

FpPoly operator-(const FpPoly& a, const FpPoly& b)
{
    std::vector<std::uint64_t> v(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        v[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i)
        v[i] = (v[i] + a.p_ - b.c_[i]) % a.p_;
    return FpPoly(a.p_, std::move(v));
}

FpPoly operator*(const FpPoly& a, const FpPoly& b)
{
    if (a.is_zero() || b.is_zero())
        return FpPoly(a.p_, {});
    std::vector<std::uint64_t> v(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            v[i + j] = (v[i + j] + mul_mod(a.c_[i], b.c_[j], a.p_)) % a.p_;
    }
    return FpPoly(a.p_, std::move(v));
}

FpPoly operator*(std::uint64_t c, const FpPoly& a)
{
    std::vector<std::uint64_t> v(a.c_);
    for (auto& x : v)
        x = mul_mod(x, c % a.p_, a.p_);
    return FpPoly(a.p_, std::move(v));
}

bool operator<(const FpPoly& a, const FpPoly& b)
{
    if (a.degree() != b.degree())
        return a.degree() < b.degree();
    return a.c_ < b.c_;
}

std::pair<FpPoly, FpPoly> FpPoly::divmod(const FpPoly& divisor) const
{
    if (divisor.is_zero())
        raise(ErrorCode::DivisionByZero, "polynomial division by zero mod p");
    int dd = divisor.degree();
    if (degree() < dd)
        return {FpPoly(p_, {}), *this};
    std::vector<std::uint64_t> r(c_);
    std::vector<std::uint64_t> q(static_cast<std::size_t>(degree() - dd + 1), 0);
    std::uint64_t inv = inv_mod(divisor.leading(), p_);
    for (int i = degree(); i >= dd; --i) {
        std::uint64_t c = mul_mod(r[static_cast<std::size_t>(i)], inv, p_);
        if (c == 0)
            continue;
        q[static_cast<std::size_t>(i - dd)] = c;
        for (int j = 0; j <= dd; ++j) {
            auto k = static_cast<std::size_t>(i - dd + j);
            r[k] = (r[k] + p_ - mul_mod(c, divisor.c_[static_cast<std::size_t>(j)], p_)) % p_;
        }
    }
    r.resize(static_cast<std::size_t>(dd));
    return {FpPoly(p_, std::move(q)), FpPoly(p_, std::move(r))};
}

std::string FpPoly::to_string() const
{
    return render_poly(c_.size(), [this](std::size_t i) {
        RenderedCoefficient rc;
        rc.zero = c_[i] == 0;
        rc.is_one = c_[i] == 1;
        rc.magnitude = std::to_string(c_[i]);
        return rc;
    });
}

FpPoly gcd(const FpPoly& a, const FpPoly& b)
{
    FpPoly x = a, y = b;
    while (!y.is_zero()) {
        FpPoly r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

FpXgcd xgcd(const FpPoly& a, const FpPoly& b)
{
    std::uint64_t p = a.modulus();
    FpPoly r0 = a, r1 = b, s0 = FpPoly::constant(p, 1), s1(p, {}), t0(p, {}), t1 = FpPoly::constant(p, 1);
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        FpPoly s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        FpPoly t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero())
        return {r0, s0, t0};
    std::uint64_t inv = inv_mod(r0.leading(), p);
    return {inv * r0, inv * s0, inv * t0};
}

FpPoly pow_mod(const FpPoly& base, const Integer& exponent, const FpPoly& modulus)
{
    FpPoly result = FpPoly::constant(base.modulus(), 1) % modulus;
    FpPoly b = base % modulus;
    std::size_t bits = mpz_sizeinbase(exponent.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        result = (result * result) % modulus;
        if (mpz_tstbit(exponent.get_mpz_t(), i))
            result = (result * b) % modulus;
    }
    return result;
}

bool is_irreducible(const FpPoly& f)
{
    int n = f.degree();
    if (n <= 0)
        return false;
    if (n == 1)
        return true;
    std::uint64_t p = f.modulus();
    FpPoly g = f.monic();
    Integer pz(static_cast<unsigned long>(p));
    FpPoly x = FpPoly::x(p);
    // Rabin: X^{p^n} = X mod g and gcd(X^{p^{n/r}} - X, g) = 1 for primes r | n
    if (pow_mod(x, pow_int(pz, static_cast<unsigned long>(n)), g) != x % g)
        return false;
    for (auto& [r, e] : factor_integer(Integer(n))) {
        (void)e;
        unsigned long k = static_cast<unsigned long>(n) / r.get_ui();
        FpPoly h = pow_mod(x, pow_int(pz, k), g) - x;
        if (gcd(h, g).degree() != 0)
            return false;
    }
    return true;
}

namespace {

FpPoly pth_root(const FpPoly& f)
{
    std::uint64_t p = f.modulus();
    std::vector<std::uint64_t> v;
    for (std::size_t i = 0; i < f.coefficients().size(); i += p)
        v.push_back(f.coefficients()[i]);
    return FpPoly(p, std::move(v));
}

// Square-free decomposition of a monic polynomial (Yun, characteristic p).
void squarefree_decomposition(const FpPoly& f, unsigned scale, std::vector<FpFactor>& out)
{
    if (f.degree() <= 0)
        return;
    std::uint64_t p = f.modulus();
    FpPoly d = f.derivative();
    if (d.is_zero()) {
        squarefree_decomposition(pth_root(f), scale * static_cast<unsigned>(p), out);
        return;
    }
    FpPoly c = gcd(f, d);
    FpPoly w = f / c;
    unsigned i = 1;
    while (w.degree() > 0) {
        FpPoly y = gcd(w, c);
        FpPoly z = w / y;
        if (z.degree() > 0)
            out.push_back({z.monic(), i * scale});
        ++i;
        w = y;
        c = c / y;
    }
    if (c.degree() > 0)
        squarefree_decomposition(pth_root(c.monic()), scale * static_cast<unsigned>(p), out);
}

std::vector<std::pair<FpPoly, unsigned>> distinct_degree(FpPoly f)
{
    std::uint64_t p = f.modulus();
    Integer pz(static_cast<unsigned long>(p));
    std::vector<std::pair<FpPoly, unsigned>> out;
    FpPoly x = FpPoly::x(p);
    FpPoly h = x % f;
    for (unsigned d = 1; 2 * d <= static_cast<unsigned>(f.degree()); ++d) {
        h = pow_mod(h, pz, f);
        FpPoly g = gcd(h - x, f);
        if (g.degree() > 0) {
            out.emplace_back(g, d);
            f = f / g;
            h = h % f;
        }
    }
    if (f.degree() > 0)
        out.emplace_back(f.monic(), static_cast<unsigned>(f.degree()));
    return out;
}

std::uint64_t seed_of(const FpPoly& f)
{
    std::uint64_t h = 1469598103934665603ULL ^ f.modulus();
    for (auto c : f.coefficients())
        h = (h ^ c) * 1099511628211ULL;
    return h;
}

void equal_degree(const FpPoly& g, unsigned d, std::mt19937_64& rng, std::vector<FpPoly>& out)
{
    if (static_cast<unsigned>(g.degree()) == d) {
        out.push_back(g.monic());
        return;
    }
    std::uint64_t p = g.modulus();
    Integer pz(static_cast<unsigned long>(p));
    for (;;) {
        std::vector<std::uint64_t> coeffs(static_cast<std::size_t>(g.degree()));
        for (auto& c : coeffs)
            c = rng() % p;
        FpPoly a(p, std::move(coeffs));
        if (a.degree() <= 0)
            continue;
        FpPoly b(p, {});
        if (p == 2) {
            FpPoly t = a % g;
            b = t;
            for (unsigned i = 1; i < d; ++i) {
                t = (t * t) % g;
                b = b + t;
            }
        } else {
            Integer e = (pow_int(pz, d) - 1) / 2;
            b = pow_mod(a, e, g) - FpPoly::constant(p, 1);
        }
        FpPoly h = gcd(b, g);
        if (h.degree() > 0 && h.degree() < g.degree()) {
            equal_degree(h, d, rng, out);
            equal_degree((g / h).monic(), d, rng, out);
            return;
        }
    }
}

} // namespace

std::vector<FpFactor> factor(const FpPoly& f)
{
    if (f.is_zero())
        raise(ErrorCode::ZeroElement, "factorization of the zero polynomial");
    std::vector<FpFactor> squarefree;
    squarefree_decomposition(f.monic(), 1, squarefree);
    std::map<FpPoly, unsigned> merged;
    std::mt19937_64 rng(seed_of(f.monic()));
    for (const auto& [part, mult] : squarefree) {
        for (const auto& [g, d] : distinct_degree(part)) {
            std::vector<FpPoly> pieces;
            equal_degree(g, d, rng, pieces);
            for (auto& piece : pieces)
                merged[piece] += mult;
        }
    }
    std::vector<FpFactor> out;
    for (auto& [poly, mult] : merged)
        out.push_back({poly, mult});
    return out;
}

std::vector<FpFactor> poly_factor_mod_p(const QPoly& g, std::uint64_t p)
{
    if (!is_prime(p))
        raise(ErrorCode::InvalidArgument, std::to_string(p) + " is not prime");
    FpPoly r = FpPoly::reduce(g, p);
    if (r.is_zero())
        raise(ErrorCode::PreconditionViolated, "polynomial vanishes modulo " + std::to_string(p),
              "g nonzero mod p");
    return factor(r);
}

FpPoly irreducible_poly_mod_p(std::uint64_t p, unsigned d)
{
    if (d == 0)
        raise(ErrorCode::InvalidArgument, "degree must be positive");
    if (!is_prime(p))
        raise(ErrorCode::InvalidArgument, std::to_string(p) + " is not prime");
    // counter over (c0, ..., c_{d-1}) with c0 the most significant digit
    std::vector<std::uint64_t> digits(d, 0);
    for (;;) {
        std::vector<std::uint64_t> coeffs(digits);
        coeffs.push_back(1);
        FpPoly candidate(p, std::move(coeffs));
        if (is_irreducible(candidate))
            return candidate;
        std::size_t i = d;
        while (i-- > 0) {
            if (++digits[i] < p)
                break;
            digits[i] = 0;
        }
    }
}

QPoly irreducible_poly(std::uint64_t p, unsigned d) { return irreducible_poly_mod_p(p, d).lift(); }

QPoly cyclotomic(unsigned n)
{
    if (n == 0)
        raise(ErrorCode::InvalidArgument, "cyclotomic index must be positive");
    QPoly result = QPoly::monomial(1, n) - QPoly::constant(1);
    for (unsigned d = 1; d < n; ++d)
        if (n % d == 0)
            result = result / cyclotomic(d);
    return result;
}

std::ostream& operator<<(std::ostream& os, const FpPoly& x) { return os << x.to_string(); }

} // namespace prime_scope
