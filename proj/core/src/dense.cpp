#include "prime_scope/dense/dense.hpp"

#include <algorithm>
#include <map>

#include "prime_scope/errors.hpp"
#include "prime_scope/field/enumerate.hpp"

namespace prime_scope {

bool same_prime(const Prime& a, const Prime& b)
{
    if (a.index() != b.index())
        return false;
    if (const auto* o = std::get_if<Ordering>(&a)) {
        const auto& ob = std::get<Ordering>(b);
        return o->index() == ob.index() &&
               (o->field() == ob.field() || o->field()->defining_poly() == ob.field()->defining_poly());
    }
    return std::get<PValuation>(a) == std::get<PValuation>(b);
}

bool ball_member(const Ball& b, const FieldElement& x)
{
    if (b.radius.is_zero())
        raise(ErrorCode::InvalidArgument, "ball radius must be nonzero");
    FieldElement diff = x - b.center;
    if (const auto* o = std::get_if<Ordering>(&b.prime))
        return sign_at(*o, b.radius * b.radius - diff * diff) > 0;
    const auto& P = std::get<PValuation>(b.prime);
    Valuation v = valuation(P, diff);
    return !v || *v > valuation_of_nonzero(P, b.radius);
}

bool d_condition(const Prime& P, const KPoly& g, const FieldElement& a, const FieldElement& x)
{
    FieldElement gx = g(x);
    FieldElement one(a.field(), 1);
    return in_ring(P, one - gx * gx / (a * a));
}

std::optional<FieldElement> RationalFunction::operator()(const FieldElement& x) const
{
    if (!den)
        return num(x);
    FieldElement d = (*den)(x);
    if (d.is_zero())
        return std::nullopt;
    return num(x) / d;
}

namespace {

PrimeCheck check_d(const Prime& P, const KPoly& g, const FieldElement& a, const FieldElement& x)
{
    FieldElement gx = g(x);
    FieldElement value = FieldElement(a.field(), 1) - gx * gx / (a * a);
    return {describe(P), value, in_ring(P, value)};
}

Integer integer_part(const Rational& q)
{
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

// Stern-Brocot descent toward the root isolated by (lo, hi]; s is the
// squarefree part, which changes sign at the root.
std::optional<Rational> descend(const Ordering& O, const KPoly& g, const KPoly& s, const FieldElement& a2,
                                const RationalInterval& root, long& steps, long budget)
{
    Integer ln = -1, ld = 0, rn = 1, rd = 0;
    int s_hi = sign_at(O, s(root.hi));
    for (;;) {
        if (++steps > budget)
            return std::nullopt;
        Integer mn = ln + rn, md = ld + rd;
        if (md == 0)
            md = 1; // the first mediant, between -infinity and +infinity, is 0/1
        Rational m = make_rational(mn, md);
        FieldElement gm = g(m);
        if (sign_at(O, a2 - gm * gm) >= 0)
            return m;
        bool right;
        if (m <= root.lo)
            right = true;
        else if (m > root.hi)
            right = false;
        else if (s_hi == 0)
            right = m < root.hi;
        else
            right = sign_at(O, s(m)) != s_hi;
        if (right) {
            ln = mn;
            ld = md;
        } else {
            rn = mn;
            rd = md;
        }
    }
}

} // namespace

WitnessReport d_witness(const Prime& P, const KPoly& g, const FieldElement& a, const DenseOptions& options)
{
    if (a.is_zero())
        raise(ErrorCode::ZeroElement, "a must be nonzero");
    RootReport root = has_root_in_closure(P, g, options.closure);
    if (!root.has_root)
        raise(ErrorCode::NoRootInClosure, g.to_string() + " has no root in the closure at " + describe(P));
    WitnessReport report;
    if (const auto* v = std::get_if<PValuation>(&P)) {
        long k = valuation_of_nonzero(*v, a);
        report.witness = padic_root(*v, g, k, options.closure);
        report.stats = {k, 1};
    } else {
        const Ordering& O = std::get<Ordering>(P);
        FieldElement a2 = a * a;
        std::optional<Rational> best;
        long steps = 0;
        for (const RationalInterval& r : isolate_real_roots(O, root.squarefree)) {
            std::optional<Rational> m = descend(O, g, root.squarefree, a2, r, steps, options.step_budget);
            if (!m)
                raise(ErrorCode::PrecisionOverflow, "descent toward a real root exceeded the step budget");
            // least height; ties broken as in the canonical enumeration
            if (!best || height(*m) < height(*best)
                || (height(*m) == height(*best)
                    && std::make_pair(Integer(m->get_den()), Integer(abs(m->get_num())))
                           < std::make_pair(Integer(best->get_den()), Integer(abs(best->get_num()))))
                || (height(*m) == height(*best) && abs(*m) == abs(*best) && *m > 0))
                best = m;
        }
        report.witness = FieldElement(g.field(), *best);
        report.stats = {options.step_budget, steps};
    }
    PrimeCheck c = check_d(P, g, a, *report.witness);
    if (!c.passed)
        raise(ErrorCode::LocalWitnessInvalid, "witness failed exact re-verification at " + c.prime);
    report.verified_at.push_back(std::move(c));
    return report;
}

FieldElement weak_approx_valuations(const FieldPtr& field, const std::vector<std::pair<PValuation, long>>& targets,
                                    const DenseOptions& options)
{
    if (targets.empty())
        return FieldElement(field, 1);
    const PValuation& first = targets.front().first;
    for (std::size_t i = 0; i < targets.size(); ++i) {
        if (!targets[i].first.same_splitting(first))
            raise(ErrorCode::InvalidArgument, "value approximation needs primes above one p");
        for (std::size_t j = 0; j < i; ++j)
            if (targets[j].first == targets[i].first)
                raise(ErrorCode::NonDisjoint, "prime listed twice: index " + std::to_string(targets[i].first.index()));
    }
    // shift by p^m so that every prescription is nonnegative
    long m = 0;
    for (const auto& [P, n] : targets) {
        long e = static_cast<long>(P.e());
        if (n < 0)
            m = std::max(m, (-n + e - 1) / e);
    }
    std::vector<std::pair<PValuation, long>> shifted;
    for (const auto& [P, n] : targets)
        shifted.emplace_back(P, n + m * static_cast<long>(P.e()));
    Rational pm = pow_rational(Rational(static_cast<unsigned long>(first.p())), m);

    auto fits = [&](const FieldElement& w) {
        if (w.is_zero())
            return false;
        for (const auto& [P, n] : shifted)
            if (valuation_of_nonzero(P, w) != n)
                return false;
        return true;
    };
    // largest level L with (2L + 1)^n candidates within the search budget
    long level = 0;
    for (;;) {
        long count = 1;
        for (int i = 0; i < field->degree() && count <= options.search_elements; ++i)
            count *= 2 * (level + 1) + 1;
        if (count > options.search_elements)
            break;
        ++level;
    }
    std::optional<FieldElement> found;
    if (level >= 1)
        enumerate_elements(field, level, true, [&](const FieldElement& w) {
            if (!fits(w))
                return false;
            found = w;
            return true;
        });
    if (!found) {
        unsigned N = 1;
        std::vector<std::pair<PValuation, FieldElement>> crt;
        for (const auto& [P, n] : shifted) {
            N = std::max(N, static_cast<unsigned>(n / static_cast<long>(P.e()) + 1));
            crt.emplace_back(P, P.uniformizer().pow(n));
        }
        found = local_crt(crt, N);
    }
    return *found / FieldElement(field, pm);
}

FieldElement weak_approx_value(const FieldPtr& field, const std::vector<ValuePart>& parts, const DenseOptions& options)
{
    std::vector<std::pair<PValuation, long>> targets;
    for (const ValuePart& part : parts)
        for (const PValuation& P : part.primes) {
            for (const auto& t : targets)
                if (t.first == P)
                    raise(ErrorCode::NonDisjoint, "prime " + std::to_string(P.index()) + " above "
                                                      + std::to_string(P.p()) + " lies in two parts");
            targets.emplace_back(P, valuation_of_nonzero(P, part.target));
        }
    return weak_approx_valuations(field, targets, options);
}

namespace {

// Solves V c = b over Q by Gaussian elimination; V is invertible.
std::vector<Rational> solve(std::vector<std::vector<Rational>> V, std::vector<Rational> b)
{
    std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (V[piv][col] == 0)
            ++piv;
        std::swap(V[piv], V[col]);
        std::swap(b[piv], b[col]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || V[r][col] == 0)
                continue;
            Rational f = V[r][col] / V[col][col];
            for (std::size_t k = col; k < n; ++k)
                V[r][k] -= f * V[col][k];
            b[r] -= f * b[col];
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        b[i] /= V[i][i];
    return b;
}

Rational midpoint(const RationalInterval& I) { return (I.lo + I.hi) / 2; }

Integer round_to_integer(const Rational& q) { return integer_part(q + Rational(1, 2)); }

} // namespace

WitnessReport simultaneous_ball(const FieldPtr& field, const std::vector<BallConstraint>& constraints,
                                const std::vector<std::pair<Prime, FieldElement>>& local,
                                const DenseOptions& options)
{
    WitnessReport report;
    report.stats.bound = options.refinement_rounds;
    if (constraints.empty()) {
        report.witness = FieldElement(field, 0);
        return report;
    }
    std::vector<Prime> primes;
    for (const BallConstraint& c : constraints)
        if (std::none_of(primes.begin(), primes.end(), [&](const Prime& q) { return same_prime(q, c.ball.prime); }))
            primes.push_back(c.ball.prime);
    std::vector<FieldElement> xs;
    for (const Prime& P : primes) {
        auto it = std::find_if(local.begin(), local.end(), [&](const auto& l) { return same_prime(l.first, P); });
        if (it != local.end()) {
            xs.push_back(it->second);
            continue;
        }
        if (!local.empty())
            raise(ErrorCode::LocalWitnessInvalid, "no local solution supplied", describe(P));
        for (const BallConstraint& c : constraints)
            if (same_prime(c.ball.prime, P)) {
                if (c.gamma.den || !(c.gamma.num == KPoly::x(field)))
                    raise(ErrorCode::LocalWitnessInvalid, "local solution needed for a non-identity function",
                          describe(P));
                xs.push_back(c.ball.center);
                break;
            }
    }
    auto satisfies = [&](const BallConstraint& c, const FieldElement& x) {
        std::optional<FieldElement> v = c.gamma(x);
        return v && ball_member(c.ball, *v);
    };
    for (std::size_t i = 0; i < primes.size(); ++i)
        for (const BallConstraint& c : constraints)
            if (same_prime(c.ball.prime, primes[i]) && !satisfies(c, xs[i]))
                raise(ErrorCode::LocalWitnessInvalid, "local solution " + xs[i].to_string() + " is not in the ball",
                      describe(primes[i]));
    auto all_ok = [&](const FieldElement& x) {
        return std::all_of(constraints.begin(), constraints.end(),
                           [&](const BallConstraint& c) { return satisfies(c, x); });
    };
    auto finish = [&](const FieldElement& x) {
        report.witness = x;
        for (const BallConstraint& c : constraints)
            report.verified_at.push_back({describe(c.ball.prime), *c.gamma(x) - c.ball.center, true});
        return report;
    };

    // p-adic primes grouped by p, orderings kept in input order
    std::map<std::uint64_t, std::vector<std::size_t>> by_p;
    std::vector<std::size_t> orderings;
    Integer d = 1;
    for (std::size_t i = 0; i < primes.size(); ++i) {
        if (const auto* v = std::get_if<PValuation>(&primes[i])) {
            by_p[v->p()].push_back(i);
            d = lcm(d, xs[i].denominator());
        } else {
            orderings.push_back(i);
        }
    }
    const int n = field->degree();
    const std::size_t R = orderings.size();

    for (int r = 1; r <= options.refinement_rounds; ++r) {
        ++report.stats.steps;
        std::vector<Integer> X(static_cast<std::size_t>(n), Integer(0));
        Integer M = 1;
        for (const auto& [p, idx] : by_p) {
            Integer pz(static_cast<unsigned long>(p));
            unsigned np = static_cast<unsigned>(r + padic_valuation(d, pz));
            std::vector<std::pair<PValuation, FieldElement>> targets;
            for (std::size_t i : idx)
                targets.emplace_back(std::get<PValuation>(primes[i]), FieldElement(field, Rational(d)) * xs[i]);
            FieldElement c = local_crt(targets, np);
            Integer pn = pow_int(pz, np);
            // combine X mod M with c mod p^np
            Integer inv;
            mpz_invert(inv.get_mpz_t(), M.get_mpz_t(), pn.get_mpz_t());
            for (int l = 0; l < n; ++l) {
                Integer cl = c.coords()[static_cast<std::size_t>(l)].get_num();
                Integer t = ((cl - X[static_cast<std::size_t>(l)]) * inv) % pn;
                if (t < 0)
                    t += pn;
                X[static_cast<std::size_t>(l)] += M * t;
            }
            M *= pn;
        }
        std::vector<Rational> xc(X.begin(), X.end());
        FieldElement X0(field, xc);
        FieldElement base = X0 / FieldElement(field, Rational(d));
        if (all_ok(base))
            return finish(base);
        if (R == 0)
            continue;

        // translate by M m / d with m in Z[1/q][alpha] to move every
        // ordering image toward its local solution
        Rational width = pow_rational(Rational(2), -(r + 8));
        std::vector<std::vector<Rational>> V(R, std::vector<Rational>(R));
        std::vector<Rational> rhs(R);
        Rational bound = 1;
        for (std::size_t j = 0; j < R; ++j) {
            const Ordering& O = std::get<Ordering>(primes[orderings[j]]);
            Rational aj = midpoint(enclose(O, FieldElement::alpha(field), width));
            bound = std::max(bound, Rational(abs(aj) + 1));
            Rational pw = 1;
            for (std::size_t l = 0; l < R; ++l) {
                V[j][l] = pw;
                pw *= aj;
            }
            FieldElement gap = FieldElement(field, Rational(d)) * xs[orderings[j]] - X0;
            rhs[j] = midpoint(enclose(O, gap, width * M)) / Rational(M);
        }
        std::vector<Rational> c = solve(V, rhs);
        Integer q = 2;
        while (M % q == 0 || d % q == 0)
            mpz_nextprime(q.get_mpz_t(), q.get_mpz_t());
        Rational need = pow_rational(Rational(2), r + 8) * Rational(M) * static_cast<long>(R)
                        * pow_rational(bound, static_cast<long>(R));
        Integer qk = 1;
        while (Rational(qk) < need)
            qk *= q;
        std::vector<Rational> mc(static_cast<std::size_t>(n), Rational(0));
        for (std::size_t l = 0; l < R; ++l)
            mc[l] = make_rational(round_to_integer(c[l] * Rational(qk)), qk);
        FieldElement x = (X0 + FieldElement(field, Rational(M)) * FieldElement(field, mc)) / FieldElement(field, Rational(d));
        if (all_ok(x))
            return finish(x);
    }
    raise(ErrorCode::NoneWithinBound, "simultaneous approximation not reached within "
                                          + std::to_string(options.refinement_rounds) + " refinement rounds");
}

WitnessReport ud_witness(const FieldPtr& field, const std::vector<Prime>& S, const KPoly& g, const FieldElement& a,
                         const DenseOptions& options)
{
    if (a.is_zero())
        raise(ErrorCode::ZeroElement, "a must be nonzero");
    std::vector<BallConstraint> constraints;
    std::vector<std::pair<Prime, FieldElement>> local;
    std::vector<Prime> Sg;
    long steps = 0;
    for (const Prime& P : S) {
        if (!has_root_in_closure(P, g, options.closure).has_root)
            continue;
        Sg.push_back(P);
        FieldElement zero(field, 0);
        if (const auto* v = std::get_if<PValuation>(&P)) {
            // v(g(x)) > v(a) - 1 is the p-adic ball around 0 of radius a / pi
            WitnessReport w = d_witness(P, g, a, options);
            steps += w.stats.steps;
            local.emplace_back(P, *w.witness);
            constraints.push_back({Ball{P, zero, a / v->uniformizer()}, RationalFunction{g, std::nullopt}});
        } else {
            // halve a so that the local solution lies in the open ball |g(x)| < |a|
            WitnessReport w = d_witness(P, g, a / FieldElement(field, 2), options);
            steps += w.stats.steps;
            local.emplace_back(P, *w.witness);
            constraints.push_back({Ball{P, zero, a}, RationalFunction{g, std::nullopt}});
        }
    }
    WitnessReport merged = simultaneous_ball(field, constraints, local, options);
    WitnessReport report;
    report.witness = merged.witness;
    report.stats = {merged.stats.bound, steps + merged.stats.steps};
    for (const Prime& P : Sg) {
        PrimeCheck c = check_d(P, g, a, *report.witness);
        if (!c.passed)
            raise(ErrorCode::LocalWitnessInvalid, "merged witness failed exact re-verification at " + c.prime);
        report.verified_at.push_back(std::move(c));
    }
    return report;
}

ZGroupWitness zgroup_witness(const FieldPtr& field, std::uint64_t p, PrimeType tau, unsigned n, const FieldElement& y,
                             const DenseOptions& options)
{
    if (n == 0)
        raise(ErrorCode::InvalidArgument, "n must be positive");
    if (y.is_zero())
        raise(ErrorCode::ZeroElement, "y must be nonzero");
    ZGroupWitness out;
    long efact = 1;
    for (unsigned i = 2; i <= tau.e; ++i)
        efact *= static_cast<long>(i);
    for (const Prime& P : primes_of_type(field, Place::finite(p), tau, false))
        out.primes.push_back(std::get<PValuation>(P));
    const long nn = static_cast<long>(n);
    auto ceil_div = [](long a, long b) { return a >= 0 ? (a + b - 1) / b : -((-a) / b); };
    std::vector<std::vector<std::pair<PValuation, long>>> targets(n);
    for (const PValuation& P : out.primes) {
        long eP = static_cast<long>(P.e());
        long vy = valuation_of_nonzero(P, y);
        long base = efact * vy;
        long iP = ((-(efact / eP) * vy) % nn + nn) % nn;
        for (long i = 0; i < nn; ++i) {
            long low = -base - i * eP; // n v(x_i) >= low, equality at i = iP
            targets[static_cast<std::size_t>(i)].emplace_back(P, i == iP ? low / nn : ceil_div(low, nn));
        }
    }
    FieldElement pe(field, Rational(static_cast<unsigned long>(p)));
    FieldElement ye = y.pow(efact);
    for (unsigned i = 0; i < n; ++i)
        out.x.push_back(weak_approx_valuations(field, targets[i], options));
    for (const PValuation& P : out.primes) {
        std::vector<long> row;
        for (unsigned i = 0; i < n; ++i)
            row.push_back(valuation_of_nonzero(P, ye * pe.pow(i) * out.x[i].pow(n)));
        out.valuations.push_back(std::move(row));
    }
    return out;
}

} // namespace prime_scope
