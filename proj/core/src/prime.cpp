#include "prime_scope/primes/prime.hpp"

#include <algorithm>

#include "prime_scope/errors.hpp"
#include "prime_scope/field/enumerate.hpp"
#include "prime_scope/field/kpoly.hpp"

namespace prime_scope {

const FieldPtr& field_of(const Prime& P)
{
    return std::visit([](const auto& x) -> const FieldPtr& { return x.field(); }, P);
}

std::string describe(const Prime& P)
{
    if (const auto* o = std::get_if<Ordering>(&P))
        return "ordering " + std::to_string(o->index());
    const auto& v = std::get<PValuation>(P);
    return "prime " + std::to_string(v.index()) + " above " + std::to_string(v.p());
}

bool in_ring(const Prime& P, const FieldElement& x)
{
    if (const auto* o = std::get_if<Ordering>(&P))
        return sign_at(*o, x) >= 0;
    Valuation v = valuation(std::get<PValuation>(P), x);
    return !v || *v >= 0;
}

std::vector<Prime> primes_of_type(const FieldPtr& field, Place place, PrimeType tau, bool exact)
{
    std::vector<Prime> out;
    if (place.infinite()) {
        for (const Ordering& o : real_embeddings(field))
            out.emplace_back(o);
        return out;
    }
    for (const PValuation& P : primes_above(field, place.p)) {
        bool keep = exact ? P.type() == tau : type_le(P.type(), tau);
        if (keep)
            out.emplace_back(P);
    }
    return out;
}

namespace {

bool is_unit(const PValuation& P, const FieldElement& x)
{
    Valuation v = valuation(P, x);
    return v && *v == 0;
}

std::vector<Integer> proper_divisors(const Integer& n)
{
    std::vector<Integer> out{1};
    for (const auto& [q, e] : factor_integer(n)) {
        std::size_t size = out.size();
        Integer power = 1;
        for (unsigned k = 1; k <= e; ++k) {
            power *= q;
            for (std::size_t i = 0; i < size; ++i)
                out.push_back(out[i] * power);
        }
    }
    std::sort(out.begin(), out.end());
    out.pop_back(); // n itself
    return out;
}

} // namespace

bool chi_member(const Prime& P, PrimeType tau, const FieldElement& t, const FieldElement& s)
{
    if (std::holds_alternative<Ordering>(P))
        return true;
    const PValuation& v = std::get<PValuation>(P);
    const FieldPtr& K = v.field();
    FieldElement pz(K, Rational(Integer(static_cast<unsigned long>(v.p()))));
    if (!is_unit(v, t.pow(tau.e) / pz) || !is_unit(v, s))
        return false;
    // s is a unit, so s^n - 1 is a unit iff the residue of s^n is not 1
    FFieldElement sbar = residue(v, s);
    Integer q1 = pow_int(Integer(static_cast<unsigned long>(v.p())), tau.f) - 1;
    if (q1 == 0)
        return true;
    for (const Integer& n : proper_divisors(q1))
        if (sbar.pow(n).is_one())
            return false;
    return true;
}

bool holomorphy_member(const FieldPtr& field, Place place, PrimeType tau, const FieldElement& x)
{
    for (const Prime& P : primes_of_type(field, place, tau, false))
        if (!in_ring(P, x))
            return false;
    return true;
}

std::string to_string(LocalBehavior b)
{
    switch (b) {
    case LocalBehavior::Split:
        return "split";
    case LocalBehavior::Inert:
        return "inert";
    case LocalBehavior::Ramified:
        return "ramified";
    }
    return "split";
}

LocalBehavior parse_local_behavior(const std::string& text)
{
    if (text == "split")
        return LocalBehavior::Split;
    if (text == "inert")
        return LocalBehavior::Inert;
    if (text == "ramified")
        return LocalBehavior::Ramified;
    raise(ErrorCode::SyntaxError, "expected split, inert or ramified, got '" + text + "'");
}

LocalBehavior quadratic_behavior(const PValuation& P, const FieldElement& d)
{
    long v = valuation_of_nonzero(P, d);
    if (v % 2 != 0)
        return LocalBehavior::Ramified;
    FieldElement unit = d / P.uniformizer().pow(v);
    FFieldElement u = residue(P, unit);
    Integer half = (P.residue_field()->order() - 1) / 2;
    return u.pow(half).is_one() ? LocalBehavior::Split : LocalBehavior::Inert;
}

namespace {

// Lagrange interpolation through (x_j, y_j) over Q.
QPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys)
{
    QPoly out;
    for (std::size_t j = 0; j < xs.size(); ++j) {
        QPoly basis = QPoly::constant(1);
        Rational denom = 1;
        for (std::size_t m = 0; m < xs.size(); ++m) {
            if (m == j)
                continue;
            basis = basis * QPoly(std::vector<Rational>{-xs[m], Rational(1)});
            denom *= xs[j] - xs[m];
        }
        out = out + (ys[j] / denom) * basis;
    }
    return out;
}

// Minimal polynomial candidate of alpha + k sqrt(d): Res_Y(f(Y), (X - Y)^2 - k^2 d(Y)).
QPoly primitive_element_poly(const FieldPtr& K, const FieldElement& d, long k)
{
    const QPoly& f = K->defining_poly();
    int n = 2 * f.degree();
    QPoly dk = Rational(k * k) * d.as_poly();
    std::vector<Rational> xs, ys;
    for (int j = 0; j <= n; ++j) {
        Rational x(j);
        // (x - Y)^2 - k^2 d(Y)
        QPoly g = QPoly(std::vector<Rational>{x * x, -2 * x, Rational(1)}) - dk;
        xs.push_back(x);
        ys.push_back(resultant(f, g));
    }
    return interpolate(xs, ys);
}

struct Verified {
    FieldPtr L;
    long k;
    std::vector<std::size_t> counts;
};

// Splits p in K(sqrt d) and checks every constraint; nullopt if no
// primitive element k = 1..3 gives a usable presentation.
std::optional<Verified> verify_step(const FieldPtr& K, std::uint64_t p, const FieldElement& d,
                                    const std::vector<StepConstraint>& constraints)
{
    std::vector<PValuation> base = primes_above(K, p);
    for (long k = 1; k <= 3; ++k) {
        FieldPtr L;
        std::vector<PValuation> above;
        try {
            L = nf_create(primitive_element_poly(K, d, k));
            above = primes_above(L, p);
        } catch (const DomainError&) {
            continue;
        }
        // alpha inside L
        FieldElement alpha_L(L, 0);
        if (K->degree() == 1) {
            alpha_L = FieldElement(L, -K->defining_poly().coeff(0));
        } else {
            FieldElement theta = FieldElement::alpha(L);
            std::vector<FieldElement> dc;
            for (const Rational& c : d.coords())
                dc.emplace_back(L, c * Rational(k * k));
            KPoly dY(L, dc);
            KPoly y = KPoly::x(L);
            KPoly lin = KPoly(L, std::vector<FieldElement>{theta}) - y;
            KPoly g = gcd(KPoly(L, K->defining_poly()), lin * lin - dY);
            if (g.degree() != 1)
                continue;
            alpha_L = -g.coeff(0);
        }
        auto to_L = [&](const FieldElement& x) {
            FieldElement acc(L, 0);
            for (std::size_t i = x.coords().size(); i-- > 0;)
                acc = acc * alpha_L + FieldElement(L, x.coords()[i]);
            return acc;
        };
        bool ok = true;
        std::vector<std::size_t> counts;
        for (const StepConstraint& c : constraints) {
            const PValuation& P = base[c.prime_index];
            std::vector<std::pair<PValuation, FieldElement>> targets{{P, P.uniformizer()}};
            for (const PValuation& other : base)
                if (!(other == P))
                    targets.emplace_back(other, FieldElement(K, 1));
            FieldElement xP = local_crt(targets, 2);
            FieldElement xL = to_L(xP);
            std::vector<PValuation> over;
            for (const PValuation& Q : above)
                if (valuation_of_nonzero(Q, xL) > 0)
                    over.push_back(Q);
            counts.push_back(over.size());
            switch (c.behavior) {
            case LocalBehavior::Split:
                ok = ok && over.size() == 2;
                break;
            case LocalBehavior::Inert:
                ok = ok && over.size() == 1 && over[0].f() == 2 * P.f() && over[0].e() == P.e();
                break;
            case LocalBehavior::Ramified:
                ok = ok && over.size() == 1 && over[0].e() == 2 * P.e();
                break;
            }
        }
        if (ok)
            return Verified{L, k, counts};
        return std::nullopt;
    }
    return std::nullopt;
}

} // namespace

QuadraticStep quadratic_step_search(const FieldPtr& field, std::uint64_t p,
                                    const std::vector<StepConstraint>& constraints, long height_bound)
{
    if (field->degree() > 4)
        raise(ErrorCode::Unsupported, "quadratic step search supports degree at most 4");
    if (p == 2)
        raise(ErrorCode::InvalidArgument, "quadratic step search needs an odd prime");
    std::vector<PValuation> base = primes_above(field, p);
    for (const StepConstraint& c : constraints)
        if (c.prime_index >= base.size())
            raise(ErrorCode::InvalidArgument, "constraint refers to prime index " + std::to_string(c.prime_index)
                                                  + " but only " + std::to_string(base.size()) + " primes lie above p");
    long examined = 0;
    std::optional<QuadraticStep> result;
    enumerate_elements(field, height_bound, true, [&](const FieldElement& d) {
        if (d.is_zero())
            return false;
        ++examined;
        for (const StepConstraint& c : constraints)
            if (quadratic_behavior(base[c.prime_index], d) != c.behavior)
                return false;
        auto v = verify_step(field, p, d, constraints);
        if (!v)
            return false;
        result = QuadraticStep{d, v->L, v->k, v->counts, examined};
        return true;
    });
    if (!result)
        raise(ErrorCode::NoneWithinBound, "no d of height <= " + std::to_string(height_bound)
                                              + " realizes the requested splitting");
    return *result;
}

} // namespace prime_scope
