#include "prime_scope/exact/ffield.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>

#include "prime_scope/errors.hpp"

namespace prime_scope {

FiniteField::FiniteField(std::uint64_t p, unsigned f)
    : p_(p), f_(f), modulus_(irreducible_poly_mod_p(p, f))
{
}

std::shared_ptr<const FiniteField> FiniteField::get(std::uint64_t p, unsigned f)
{
    static std::mutex mutex;
    static std::map<std::pair<std::uint64_t, unsigned>, std::shared_ptr<const FiniteField>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto key = std::make_pair(p, f);
    auto it = cache.find(key);
    if (it != cache.end())
        return it->second;
    auto field = std::make_shared<const FiniteField>(p, f);
    cache.emplace(key, field);
    return field;
}

Integer FiniteField::order() const { return pow_int(Integer(static_cast<unsigned long>(p_)), f_); }

FFieldElement::FFieldElement(std::shared_ptr<const FiniteField> field, std::vector<std::uint64_t> coords)
    : field_(std::move(field))
{
    value_ = FpPoly(field_->characteristic(), std::move(coords)) % field_->modulus();
}

FFieldElement::FFieldElement(std::shared_ptr<const FiniteField> field, std::uint64_t value)
    : FFieldElement(std::move(field), std::vector<std::uint64_t>{value})
{
}

FFieldElement::FFieldElement(std::shared_ptr<const FiniteField> field, const FpPoly& representative)
    : field_(std::move(field)), value_(representative % field_->modulus())
{
}

std::vector<std::uint64_t> FFieldElement::coords() const
{
    std::vector<std::uint64_t> v(f(), 0);
    for (std::size_t i = 0; i < value_.coefficients().size(); ++i)
        v[i] = value_.coefficients()[i];
    return v;
}

FFieldElement operator+(const FFieldElement& a, const FFieldElement& b)
{
    return FFieldElement(a.field_, a.value_ + b.value_);
}

FFieldElement operator-(const FFieldElement& a, const FFieldElement& b)
{
    return FFieldElement(a.field_, a.value_ - b.value_);
}

FFieldElement operator*(const FFieldElement& a, const FFieldElement& b)
{
    return FFieldElement(a.field_, a.value_ * b.value_);
}

bool operator==(const FFieldElement& a, const FFieldElement& b)
{
    return a.p() == b.p() && a.f() == b.f() && a.value_ == b.value_;
}

bool operator<(const FFieldElement& a, const FFieldElement& b) { return a.coords() < b.coords(); }

FFieldElement FFieldElement::operator-() const
{
    return FFieldElement(field_, FpPoly(p(), {}) - value_);
}

FFieldElement FFieldElement::inverse() const
{
    if (is_zero())
        raise(ErrorCode::ZeroElement, "inverse of zero in a finite field");
    FpXgcd r = xgcd(value_, field_->modulus());
    return FFieldElement(field_, r.s);
}

FFieldElement FFieldElement::pow(const Integer& exponent) const
{
    if (exponent < 0)
        return inverse().pow(-exponent);
    return FFieldElement(field_, pow_mod(value_, exponent, field_->modulus()));
}

std::string FFieldElement::to_string() const
{
    std::string out = "[";
    auto c = coords();
    for (std::size_t i = 0; i < c.size(); ++i)
        out += (i ? "," : "") + std::to_string(c[i]);
    return out + "]";
}

Integer ffield_order(const FFieldElement& s)
{
    if (s.is_zero())
        raise(ErrorCode::ZeroElement, "multiplicative order of zero");
    Integer group = s.field()->order() - 1;
    Integer order = group;
    for (const auto& [r, e] : factor_integer(group)) {
        (void)e;
        while (order % r == 0 && s.pow(order / r).is_one())
            order /= r;
    }
    return order;
}

std::vector<FFieldElement> all_elements(const std::shared_ptr<const FiniteField>& field)
{
    std::uint64_t p = field->characteristic();
    unsigned f = field->degree();
    std::vector<FFieldElement> out;
    std::vector<std::uint64_t> digits(f, 0);
    for (;;) {
        out.emplace_back(field, digits);
        std::size_t i = f;
        bool carry = true;
        while (carry && i-- > 0) {
            if (++digits[i] < p)
                carry = false;
            else
                digits[i] = 0;
        }
        if (carry)
            break;
    }
    return out;
}

FFieldElement evaluate(const FpPoly& h, const FFieldElement& x)
{
    FFieldElement acc(x.field(), std::uint64_t{0});
    const auto& c = h.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        acc = acc * x + FFieldElement(x.field(), *it);
    return acc;
}

namespace {

// Polynomials over F_q, lowest degree first, used only for root finding.
using FqPoly = std::vector<FFieldElement>;

void trim(FqPoly& a)
{
    while (!a.empty() && a.back().is_zero())
        a.pop_back();
}

FqPoly fq_sub(FqPoly a, const FqPoly& b)
{
    if (a.size() < b.size())
        a.resize(b.size(), FFieldElement(b.front().field(), std::uint64_t{0}));
    for (std::size_t i = 0; i < b.size(); ++i)
        a[i] = a[i] - b[i];
    trim(a);
    return a;
}

FqPoly fq_mul(const FqPoly& a, const FqPoly& b)
{
    if (a.empty() || b.empty())
        return {};
    FqPoly r(a.size() + b.size() - 1, FFieldElement(a.front().field(), std::uint64_t{0}));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = r[i + j] + a[i] * b[j];
    trim(r);
    return r;
}

std::pair<FqPoly, FqPoly> fq_divmod(FqPoly a, const FqPoly& b)
{
    if (a.size() < b.size())
        return {{}, a};
    FqPoly q(a.size() - b.size() + 1, FFieldElement(b.front().field(), std::uint64_t{0}));
    FFieldElement inv = b.back().inverse();
    for (std::size_t i = a.size(); i-- >= b.size();) {
        FFieldElement c = a[i] * inv;
        q[i - (b.size() - 1)] = c;
        for (std::size_t j = 0; j < b.size(); ++j)
            a[i - (b.size() - 1) + j] = a[i - (b.size() - 1) + j] - c * b[j];
        if (i == b.size() - 1)
            break;
    }
    a.resize(b.size() - 1, FFieldElement(b.front().field(), std::uint64_t{0}));
    trim(a);
    trim(q);
    return {q, a};
}

FqPoly fq_monic(FqPoly a)
{
    if (a.empty())
        return a;
    FFieldElement inv = a.back().inverse();
    for (auto& c : a)
        c = c * inv;
    return a;
}

FqPoly fq_gcd(FqPoly a, FqPoly b)
{
    while (!b.empty()) {
        FqPoly r = fq_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return fq_monic(a);
}

FqPoly fq_powmod(const FqPoly& base, const Integer& e, const FqPoly& mod)
{
    auto field = mod.front().field();
    FqPoly result{FFieldElement(field, std::uint64_t{1})};
    FqPoly b = fq_divmod(base, mod).second;
    std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        result = fq_divmod(fq_mul(result, result), mod).second;
        if (mpz_tstbit(e.get_mpz_t(), i))
            result = fq_divmod(fq_mul(result, b), mod).second;
    }
    return result;
}

void split_linear(const FqPoly& g, std::mt19937_64& rng, std::vector<FFieldElement>& roots)
{
    auto field = g.front().field();
    if (g.size() == 2) {
        roots.push_back(-(g[0] * g[1].inverse()));
        return;
    }
    Integer q = field->order();
    std::uint64_t p = field->characteristic();
    for (;;) {
        FqPoly a;
        for (std::size_t i = 0; i + 1 < g.size(); ++i) {
            std::vector<std::uint64_t> c(field->degree());
            for (auto& x : c)
                x = rng() % p;
            a.emplace_back(field, c);
        }
        trim(a);
        if (a.size() < 2)
            continue;
        FqPoly b;
        if (p == 2) {
            // absolute trace map a + a^2 + ... + a^{q/2}
            FqPoly t = fq_divmod(a, g).second;
            b = t;
            std::size_t k = mpz_sizeinbase(q.get_mpz_t(), 2) - 1;
            for (std::size_t i = 1; i < k; ++i) {
                t = fq_divmod(fq_mul(t, t), g).second;
                FqPoly neg_t;
                for (auto& c : t)
                    neg_t.push_back(-c);
                b = fq_sub(b, neg_t);
            }
        } else {
            b = fq_sub(fq_powmod(a, (q - 1) / 2, g), FqPoly{FFieldElement(field, std::uint64_t{1})});
        }
        FqPoly h = fq_gcd(g, b);
        if (h.size() > 1 && h.size() < g.size()) {
            split_linear(h, rng, roots);
            split_linear(fq_monic(fq_divmod(g, h).first), rng, roots);
            return;
        }
    }
}

} // namespace

std::vector<FFieldElement> roots_in(const FpPoly& h, const std::shared_ptr<const FiniteField>& field)
{
    if (h.is_zero())
        raise(ErrorCode::ZeroElement, "roots of the zero polynomial");
    FqPoly g;
    for (auto c : h.coefficients())
        g.emplace_back(field, c);
    g = fq_monic(g);
    if (g.size() <= 1)
        return {};
    // restrict to the product of distinct linear factors: gcd(g, Y^q - Y)
    FqPoly y{FFieldElement(field, std::uint64_t{0}), FFieldElement(field, std::uint64_t{1})};
    FqPoly yq = fq_powmod(y, field->order(), g);
    FqPoly lin = fq_gcd(g, fq_sub(yq, y));
    std::vector<FFieldElement> roots;
    if (lin.size() > 1) {
        std::mt19937_64 rng(0x5eed0000ULL ^ h.modulus() ^ (static_cast<std::uint64_t>(h.degree()) << 32));
        split_linear(lin, rng, roots);
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

} // namespace prime_scope
