#include "prime_scope/primes/pvaluation.hpp"

#include <map>
#include <mutex>

#include "prime_scope/errors.hpp"

namespace prime_scope {

bool type_le(const PrimeType& lower, const PrimeType& upper)
{
    return lower.e <= upper.e && upper.f % lower.f == 0;
}

std::string to_string(const PrimeType& t)
{
    return "(" + std::to_string(t.e) + "," + std::to_string(t.f) + ")";
}

namespace detail {

struct FactorData {
    FpPoly h;
    unsigned e;
    FpPoly a; // h^e
    FpPoly b; // cofactor modulo p
    std::optional<FieldElement> uniformizer;
    std::shared_ptr<const FiniteField> residue_field;
    std::optional<FFieldElement> beta;
};

struct Splitting {
    FieldPtr field;
    std::uint64_t p;
    Integer pz;
    ZPoly f; // defining polynomial as integers
    std::vector<FactorData> factors;

    std::mutex mutex;
    unsigned lifted = 0;
    std::vector<HenselLift> lifts;

    HenselLift lift(std::size_t i, unsigned n)
    {
        std::lock_guard<std::mutex> lock(mutex);
        if (n > lifted || lifts.empty()) {
            unsigned target = std::max({n, 2 * lifted, 32u});
            lifts.clear();
            for (const FactorData& fd : factors)
                lifts.push_back(hensel_lift(f, fd.a, fd.b, p, target));
            lifted = target;
        }
        if (n == lifted)
            return lifts[i];
        Integer m = pow_int(pz, n);
        const HenselLift& L = lifts[i];
        return {zp_reduce(L.a, m), zp_reduce(L.b, m), zp_reduce(L.s, m), zp_reduce(L.t, m)};
    }
};

} // namespace detail

const FieldPtr& PValuation::field() const { return split_->field; }
std::uint64_t PValuation::p() const { return split_->p; }
unsigned PValuation::e() const { return split_->factors[index_].e; }
unsigned PValuation::f() const { return static_cast<unsigned>(split_->factors[index_].h.degree()); }
const FpPoly& PValuation::local_factor() const { return split_->factors[index_].h; }
const FieldElement& PValuation::uniformizer() const { return *split_->factors[index_].uniformizer; }

const std::shared_ptr<const FiniteField>& PValuation::residue_field() const
{
    return split_->factors[index_].residue_field;
}

const FFieldElement& PValuation::alpha_residue() const { return *split_->factors[index_].beta; }

std::vector<PValuation> PValuation::siblings() const
{
    std::vector<PValuation> out;
    for (std::size_t i = 0; i < split_->factors.size(); ++i)
        out.emplace_back(split_, i);
    return out;
}

ZPoly PValuation::lifted_factor(unsigned n) const { return split_->lift(index_, n).a; }

ZPoly PValuation::idempotent(unsigned n) const
{
    HenselLift L = split_->lift(index_, n);
    Integer m = pow_int(split_->pz, n);
    return zp_rem(zp_mul(L.s, L.b, m), split_->f, m);
}

namespace {

constexpr unsigned kMaxPrecision = 1u << 14;

ZPoly integer_poly(const FieldElement& x, const Integer& scale)
{
    ZPoly out;
    for (const Rational& c : x.coords()) {
        Rational s = c * scale;
        out.push_back(s.get_num());
    }
    while (!out.empty() && out.back() == 0)
        out.pop_back();
    return out;
}

// v of a nonzero h(alpha) with h integral and not divisible by p.
long unit_content_valuation(const PValuation& P, const ZPoly& h)
{
    Integer pz(static_cast<unsigned long>(P.p()));
    for (unsigned n = 32; n <= kMaxPrecision; n *= 2) {
        Integer m = pow_int(pz, n);
        ZPoly F = P.lifted_factor(n);
        Integer r = zp_resultant(F, zp_reduce(h, m), m);
        if (r != 0)
            return padic_valuation(r, pz) / static_cast<long>(P.f());
    }
    raise(ErrorCode::PrecisionOverflow, "valuation exceeds the working precision cap");
}

std::map<std::pair<const NumberField*, std::uint64_t>, std::weak_ptr<detail::Splitting>>& splitting_cache()
{
    static std::map<std::pair<const NumberField*, std::uint64_t>, std::weak_ptr<detail::Splitting>> cache;
    return cache;
}

std::mutex& splitting_cache_mutex()
{
    static std::mutex m;
    return m;
}

FpPoly fp_pow(const FpPoly& a, unsigned e)
{
    FpPoly r = FpPoly::constant(a.modulus(), 1);
    for (unsigned i = 0; i < e; ++i)
        r = r * a;
    return r;
}

} // namespace

long valuation_of_nonzero(const PValuation& P, const FieldElement& x)
{
    if (x.is_zero())
        raise(ErrorCode::ZeroElement, "valuation of zero");
    Integer pz(static_cast<unsigned long>(P.p()));
    long e = static_cast<long>(P.e());
    if (x.is_rational())
        return e * padic_valuation(x.rational_value(), pz);
    Integer d = x.denominator();
    ZPoly h = integer_poly(x, d);
    Integer content = 0;
    for (const Integer& c : h)
        content = gcd(content, c);
    long vc = padic_valuation(content, pz);
    Integer pc = pow_int(pz, static_cast<unsigned long>(vc));
    for (Integer& c : h)
        c /= pc;
    return e * (vc - padic_valuation(d, pz)) + unit_content_valuation(P, h);
}

Valuation valuation(const PValuation& P, const FieldElement& x)
{
    if (x.is_zero())
        return std::nullopt;
    return valuation_of_nonzero(P, x);
}

ZPoly local_image(const PValuation& P, const FieldElement& x, unsigned n)
{
    if (n == 0)
        return {};
    Integer pz(static_cast<unsigned long>(P.p()));
    Integer d = x.denominator();
    long a = padic_valuation(d, pz);
    Integer pa = pow_int(pz, static_cast<unsigned long>(a));
    Integer dprime = d / pa;
    unsigned n2 = n + static_cast<unsigned>(a);
    Integer m2 = pow_int(pz, n2);
    ZPoly r = zp_rem(integer_poly(x, d), P.lifted_factor(n2), m2);
    for (Integer& c : r) {
        if (c % pa != 0)
            raise(ErrorCode::NegativeValuation, "element " + x.to_string() + " is not integral at the prime");
        c /= pa;
    }
    Integer m = pow_int(pz, n);
    Integer inv;
    if (mpz_invert(inv.get_mpz_t(), dprime.get_mpz_t(), m.get_mpz_t()) == 0)
        raise(ErrorCode::InvalidArgument, "denominator not invertible modulo p^n");
    return zp_scale(r, inv, m);
}

FFieldElement residue(const PValuation& P, const FieldElement& x)
{
    if (x.is_zero())
        return FFieldElement(P.residue_field(), std::uint64_t{0});
    if (valuation_of_nonzero(P, x) < 0)
        raise(ErrorCode::NegativeValuation, "residue of " + x.to_string() + " with negative valuation");
    ZPoly r = local_image(P, x, 1);
    std::vector<std::uint64_t> c;
    for (const Integer& v : r)
        c.push_back(v.get_ui());
    FpPoly red = FpPoly(P.p(), c) % P.local_factor();
    return evaluate(red, P.alpha_residue());
}

FieldElement local_crt(const std::vector<std::pair<PValuation, FieldElement>>& targets, unsigned n)
{
    if (targets.empty())
        raise(ErrorCode::InvalidArgument, "local_crt needs at least one target");
    const PValuation& first = targets.front().first;
    Integer pz(static_cast<unsigned long>(first.p()));
    Integer m = pow_int(pz, n);
    ZPoly fz;
    for (const Rational& c : first.field()->defining_poly().coefficients())
        fz.push_back(c.get_num());
    ZPoly acc;
    if (n == 0)
        return FieldElement(first.field(), 0);
    std::vector<std::size_t> seen;
    for (const auto& [P, x] : targets) {
        if (!P.same_splitting(first))
            raise(ErrorCode::InvalidArgument, "local_crt targets must lie above one rational prime");
        for (std::size_t s : seen)
            if (s == P.index())
                raise(ErrorCode::NonDisjoint, "prime listed twice in local_crt");
        seen.push_back(P.index());
        ZPoly r = local_image(P, x, n);
        acc = zp_add(acc, zp_rem(zp_mul(P.idempotent(n), r, m), fz, m), m);
    }
    std::vector<Rational> coords;
    for (const Integer& c : acc)
        coords.emplace_back(c);
    return FieldElement(first.field(), std::move(coords));
}

FieldElement truncate(const PValuation& P, const FieldElement& x, unsigned n)
{
    return local_crt({{P, x}}, n);
}

bool operator==(const PValuation& a, const PValuation& b)
{
    if (a.split_ == b.split_)
        return a.index_ == b.index_;
    return a.index_ == b.index_ && a.p() == b.p() &&
           (a.field() == b.field() || a.field()->defining_poly() == b.field()->defining_poly());
}

std::vector<PValuation> primes_above(const FieldPtr& field, std::uint64_t p)
{
    if (!is_prime(p))
        raise(ErrorCode::InvalidArgument, std::to_string(p) + " is not prime");
    auto key = std::make_pair(field.get(), p);
    {
        std::lock_guard<std::mutex> lock(splitting_cache_mutex());
        auto it = splitting_cache().find(key);
        if (it != splitting_cache().end()) {
            if (auto s = it->second.lock()) {
                std::vector<PValuation> out;
                for (std::size_t i = 0; i < s->factors.size(); ++i)
                    out.emplace_back(s, i);
                return out;
            }
        }
    }

    const QPoly& f = field->defining_poly();
    Integer pz(static_cast<unsigned long>(p));
    FpPoly fbar = FpPoly::reduce(f, p);
    std::vector<FpFactor> fac = factor(fbar);

    // Dedekind's criterion for p not dividing [O_K : Z[alpha]]
    QPoly lifted_product = QPoly::constant(1);
    for (const FpFactor& x : fac)
        lifted_product = lifted_product * pow(x.factor.lift(), x.multiplicity);
    QPoly f1 = Rational(1, 1) / Rational(pz) * (f - lifted_product);
    FpPoly f1bar = FpPoly::reduce(f1, p);
    for (const FpFactor& x : fac) {
        if (x.multiplicity >= 2 && (f1bar % x.factor).is_zero())
            raise(ErrorCode::IndexDivisible, "p = " + std::to_string(p) + " divides the index of Z[alpha]",
                  "Dedekind criterion fails at factor " + x.factor.to_string());
    }

    auto split = std::make_shared<detail::Splitting>();
    split->field = field;
    split->p = p;
    split->pz = pz;
    for (const Rational& c : f.coefficients())
        split->f.push_back(c.get_num());
    for (const FpFactor& x : fac) {
        detail::FactorData fd;
        fd.h = x.factor;
        fd.e = x.multiplicity;
        fd.a = fp_pow(x.factor, x.multiplicity);
        fd.b = fbar.monic() / fd.a;
        fd.residue_field = FiniteField::get(p, static_cast<unsigned>(x.factor.degree()));
        fd.beta = roots_in(x.factor, fd.residue_field).front();
        split->factors.push_back(std::move(fd));
    }
    for (std::size_t i = 0; i < split->factors.size(); ++i) {
        detail::FactorData& fd = split->factors[i];
        if (fd.e == 1) {
            fd.uniformizer = FieldElement(field, Rational(pz));
            continue;
        }
        PValuation P(split, i);
        FieldElement u = FieldElement::from_poly(field, fd.h.lift());
        fd.uniformizer = u; // provisional, so valuation() can run
        if (valuation_of_nonzero(P, u) != 1)
            u = u + FieldElement(field, Rational(pz));
        if (valuation_of_nonzero(P, u) != 1)
            raise(ErrorCode::IndexDivisible, "no uniformizer of the form h(alpha) or h(alpha) + p");
        fd.uniformizer = u;
    }
    {
        std::lock_guard<std::mutex> lock(splitting_cache_mutex());
        splitting_cache()[key] = split;
    }
    std::vector<PValuation> out;
    for (std::size_t i = 0; i < split->factors.size(); ++i)
        out.emplace_back(split, i);
    return out;
}

} // namespace prime_scope
