#include "prime_scope/squares/squares.hpp"

#include <set>

#include "prime_scope/errors.hpp"
#include "prime_scope/field/enumerate.hpp"

namespace prime_scope {

namespace {

Integer isqrt(const Integer& n)
{
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

bool is_square(const Integer& n) { return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0; }

// Legendre: n is a sum of three squares unless n = 4^a (8b + 7).
bool sum_of_three(Integer n)
{
    if (n == 0)
        return true;
    while (n % 4 == 0)
        n /= 4;
    return n % 8 != 7;
}

bool sum_of_two(const Integer& n)
{
    if (n == 0)
        return true;
    for (const auto& [q, k] : factor_integer(n))
        if (q % 4 == 3 && k % 2 == 1)
            return false;
    return true;
}

// p prime, p = 1 mod 4: a^2 + b^2 = p by Hermite-Serret.
std::pair<Integer, Integer> prime_two_squares(const Integer& p, gmp_randclass& rng)
{
    Integer t;
    for (;;) {
        Integer c = rng.get_z_range(p - 2) + 2;
        Integer e = (p - 1) / 4;
        mpz_powm(t.get_mpz_t(), c.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
        if ((t * t) % p == p - 1)
            break;
    }
    Integer a = p, b = t, root = isqrt(p);
    while (b > root) {
        Integer r = a % b;
        a = b;
        b = r;
    }
    Integer other = isqrt(p - b * b);
    return {std::max(b, other), std::min(b, other)};
}

} // namespace

std::optional<std::pair<Integer, Integer>> two_squares(const Integer& n)
{
    if (n < 0 || !sum_of_two(n))
        return std::nullopt;
    for (Integer a = isqrt(n); 2 * a * a >= n; --a) {
        Integer rest = n - a * a;
        if (is_square(rest))
            return std::make_pair(a, isqrt(rest));
    }
    return std::nullopt;
}

std::vector<Integer> four_squares_integer(const Integer& n, std::uint64_t seed)
{
    if (n < 0)
        raise(ErrorCode::Negative, "negative input " + to_string(n));
    static const Integer kGreedyLimit("1000000000000");
    if (n <= kGreedyLimit) {
        for (Integer a = isqrt(n); a >= 0; --a) {
            Integer r = n - a * a;
            if (!sum_of_three(r))
                continue;
            for (Integer b = isqrt(r); b >= 0; --b) {
                if (auto two = two_squares(r - b * b))
                    return {a, b, two->first, two->second};
            }
        }
    }
    // n = 4^k m, then m - a^2 - b^2 a prime = 1 mod 4 (or 0, 1, 2) for random a, b
    Integer m = n;
    Integer scale = 1;
    while (m != 0 && m % 4 == 0) {
        m /= 4;
        scale *= 2;
    }
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(static_cast<unsigned long>(seed));
    for (;;) {
        Integer a = rng.get_z_range(isqrt(m) + 1);
        Integer rest = m - a * a;
        Integer b = rng.get_z_range(isqrt(rest) + 1);
        Integer r = rest - b * b;
        std::pair<Integer, Integer> cd;
        if (r <= 2)
            cd = r == 2 ? std::make_pair(Integer(1), Integer(1)) : std::make_pair(r, Integer(0));
        else if (r % 4 == 1 && is_probable_prime(r))
            cd = prime_two_squares(r, rng);
        else
            continue;
        return {a * scale, b * scale, cd.first * scale, cd.second * scale};
    }
}

SquareDecomposition four_squares(const Rational& q, std::uint64_t seed)
{
    if (q < 0)
        raise(ErrorCode::Negative, "negative input " + to_string(q));
    SquareDecomposition out{q, {}};
    if (q == 0)
        return out;
    // q = (num * den) / den^2
    Integer den = q.get_den();
    for (const Integer& t : four_squares_integer(Integer(q.get_num()) * den, seed))
        out.parts.push_back(make_rational(t, den));
    return out;
}

bool r_infinity_member(const FieldPtr& field, const FieldElement& x)
{
    for (const Ordering& O : real_embeddings(field))
        if (sign_at(O, x) < 0)
            return false;
    return true;
}

KochenValue kochen(std::uint64_t p, const FieldElement& x)
{
    if (!is_prime(p))
        raise(ErrorCode::InvalidArgument, std::to_string(p) + " is not prime");
    const FieldPtr& K = x.field();
    FieldElement y = x.pow(static_cast<long>(p)) - x;
    FieldElement den = y * y - FieldElement(K, 1);
    KochenValue out{p, x, std::nullopt};
    if (!den.is_zero())
        out.value = y / (FieldElement(K, Rational(static_cast<unsigned long>(p))) * den);
    return out;
}

unsigned level_finite_field(std::uint64_t p, unsigned f)
{
    if (!is_prime(p))
        raise(ErrorCode::InvalidArgument, std::to_string(p) + " is not prime");
    if (f == 0)
        raise(ErrorCode::InvalidArgument, "f must be positive");
    if (p == 2)
        return 1;
    auto F = FiniteField::get(p, f);
    FFieldElement minus_one = -FFieldElement(F, std::uint64_t{1});
    for (const FFieldElement& x : all_elements(F))
        if (x * x == minus_one)
            return 1;
    return 2;
}

std::string to_string(ShortRepresentation r)
{
    return r == ShortRepresentation::Certified ? "certified" : "counterexample-found";
}

ShortRepresentationReport no_short_representation_check(const PValuation& P, const KPoly& g, const FieldElement& eps,
                                                        unsigned s, long height_bound)
{
    const FieldPtr& K = P.field();
    for (const FieldElement& c : g.coefficients()) {
        Valuation v = valuation(P, c);
        if (v && *v < 0)
            raise(ErrorCode::PreconditionViolated, "g has a coefficient that is not P-integral", "g-integral");
    }
    std::vector<FFieldElement> gbar;
    for (const FieldElement& c : g.coefficients())
        gbar.push_back(residue(P, c));
    for (const FFieldElement& x : all_elements(P.residue_field())) {
        FFieldElement acc(P.residue_field(), std::uint64_t{0});
        for (auto it = gbar.rbegin(); it != gbar.rend(); ++it)
            acc = acc * x + *it;
        if (acc.is_zero())
            raise(ErrorCode::PreconditionViolated, "the reduction of g has the root " + x.to_string(), "g-rootless");
    }
    Valuation ve = valuation(P, eps);
    if (!ve || *ve <= 0)
        raise(ErrorCode::PreconditionViolated, "eps must have positive valuation", "eps-valuation");
    ShortRepresentationReport report;
    report.residue_level = level_finite_field(P.p(), P.f());
    if (s < 2)
        raise(ErrorCode::PreconditionViolated, "s must be at least 2", "s-range");
    if (s > report.residue_level)
        raise(ErrorCode::PreconditionViolated,
              "s = " + std::to_string(s) + " exceeds the level " + std::to_string(report.residue_level)
                  + " of the residue field",
              "s-level");
    // s <= level <= 2, so s = 2: eps^2 - g(x)^2 must be a single square
    FieldElement e2 = eps * eps;
    if (K->degree() == 1) {
        enumerate_elements(K, height_bound, false, [&](const FieldElement& x) {
            ++report.candidates;
            FieldElement gx = g(x);
            Rational r = (e2 - gx * gx).rational_value();
            if (r >= 0 && is_rational_square(r)) {
                report.outcome = ShortRepresentation::CounterexampleFound;
                report.counterexample = {x, FieldElement(K, rational_sqrt(r))};
                return true;
            }
            return false;
        });
        return report;
    }
    std::vector<FieldElement> ys;
    std::set<std::string> squares;
    enumerate_elements(K, height_bound, false, [&](const FieldElement& y) {
        ys.push_back(y);
        squares.insert((y * y).to_vector_string());
        return false;
    });
    for (const FieldElement& x : ys) {
        ++report.candidates;
        FieldElement gx = g(x);
        FieldElement r = e2 - gx * gx;
        if (!squares.count(r.to_vector_string()))
            continue;
        for (const FieldElement& y : ys)
            if (y * y == r) {
                report.outcome = ShortRepresentation::CounterexampleFound;
                report.counterexample = {x, y};
                return report;
            }
    }
    return report;
}

WitnessReport d_sos_witness(const FieldPtr& field, const KPoly& g, const FieldElement& eps, const DenseOptions& options)
{
    if (g.degree() < 1 || g.degree() % 2 == 0)
        raise(ErrorCode::InvalidArgument, "g must have odd degree");
    if (eps.is_zero())
        raise(ErrorCode::ZeroElement, "eps must be nonzero");
    // a monic g is required by the root search; scaling by the leading
    // coefficient keeps the real roots
    KPoly h = g.monic();
    FieldElement a = eps / g.leading();
    std::vector<Ordering> orderings = real_embeddings(field);
    WitnessReport report;
    try {
        if (orderings.size() == 1) {
            report = d_witness(orderings.front(), h, a, options);
        } else {
            std::vector<Prime> S(orderings.begin(), orderings.end());
            report = ud_witness(field, S, h, a, options);
        }
    } catch (const DomainError& e) {
        if (e.code() == ErrorCode::PrecisionOverflow)
            raise(ErrorCode::NoneWithinBound, e.detail());
        throw;
    }
    FieldElement gx = g(*report.witness);
    FieldElement value = eps * eps - gx * gx;
    report.verified_at.clear();
    for (const Ordering& O : orderings)
        report.verified_at.push_back({describe(O), value, sign_at(O, value) >= 0});
    if (!r_infinity_member(field, value))
        raise(ErrorCode::NoneWithinBound, "merged witness is not totally nonnegative");
    return report;
}

} // namespace prime_scope
