#include "prime_scope/suite/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <random>

#include "prime_scope/suite/oracles.hpp"

namespace prime_scope::suite {

namespace {

using io::Json;
using Rng = std::mt19937_64;

Rng rng_for(const SuiteOptions& o, int id) { return Rng(o.seed * 1000003u + static_cast<std::uint64_t>(id)); }

template <class T>
const T& pick(Rng& rng, const std::vector<T>& v)
{
    return v[rng() % v.size()];
}

long uniform(Rng& rng, long lo, long hi) { return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); }

FieldElement rat(const FieldPtr& K, const Rational& q) { return FieldElement(K, q); }

Rational p_power(std::uint64_t p, long k) { return pow_rational(Rational(static_cast<unsigned long>(p)), k); }

std::vector<std::uint64_t> primes_up_to(std::uint64_t n)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; p <= n; ++p)
        if (is_prime(p))
            out.push_back(p);
    return out;
}

std::vector<std::int64_t> integer_coefficients(const QPoly& f)
{
    std::vector<std::int64_t> c;
    for (const Rational& q : f.coefficients())
        c.push_back(q.get_num().get_si());
    return c;
}

// 1 - g(x)^2 a^-2 in O_P, checked from scratch at either kind of prime
bool d_membership(const Prime& P, const KPoly& g, const FieldElement& a, const FieldElement& x)
{
    FieldElement r = g(x) / a;
    FieldElement z = FieldElement(a.field(), 1) - r * r;
    if (const auto* o = std::get_if<Ordering>(&P))
        return sign_at(*o, z) >= 0;
    Valuation v = valuation(std::get<PValuation>(P), z);
    return !v || *v >= 0;
}

KPoly random_monic(Rng& rng, const FieldPtr& K, int max_degree, long coefficient_bound)
{
    int deg = static_cast<int>(uniform(rng, 1, max_degree));
    std::vector<Rational> c;
    for (int i = 0; i < deg; ++i)
        c.emplace_back(uniform(rng, -coefficient_bound, coefficient_bound));
    c.emplace_back(1);
    return KPoly(K, QPoly(c));
}

Json splitting(const SuiteOptions&)
{
    const std::vector<std::string> polys{
        "X^2 + 1",  "X^2 - 2",     "X^2 + 2",          "X^2 + 3",         "X^2 - 3",
        "X^2 + 5",  "X^2 - 5",     "X^2 + 7",          "X^2 - 10",        "X^3 - 2",
        "X^3 + 2",  "X^3 + X + 1", "X^3 - 3*X + 1",    "X^3 - X - 1",     "X^3 - X^2 - 2*X + 1",
        "X^4 + 1",  "X^4 - 2",     "X^4 - X - 1",      "X^4 - 10*X^2 + 1", "X^4 + X^3 + X^2 + X + 1"};
    long pairs = 0, skipped = 0, degree_failures = 0, oracle_failures = 0;
    for (const std::string& text : polys) {
        FieldPtr K = nf_create(text);
        std::vector<std::int64_t> c = integer_coefficients(K->defining_poly());
        for (std::uint64_t p : primes_up_to(50)) {
            std::vector<PValuation> Ps;
            try {
                Ps = primes_above(K, p);
            } catch (const DomainError& e) {
                if (e.code() != ErrorCode::IndexDivisible)
                    throw;
                ++skipped;
                continue;
            }
            ++pairs;
            unsigned sum = 0;
            int degree_one = 0;
            bool ramified = false;
            for (const PValuation& P : Ps) {
                sum += P.e() * P.f();
                degree_one += P.f() == 1;
                ramified = ramified || P.e() > 1;
            }
            degree_failures += sum != static_cast<unsigned>(K->degree());
            bool divides = K->poly_discriminant() % static_cast<unsigned long>(p) == 0;
            oracle_failures += degree_one != oracle::distinct_roots_mod_p(c, static_cast<std::int64_t>(p)) ||
                               ramified != divides;
        }
    }

    FieldPtr Ki = nf_create("X^2 + 1");
    struct Row {
        std::uint64_t p;
        std::vector<PrimeType> types;
    };
    const std::vector<Row> table{{2, {{2, 1}}}, {3, {{1, 2}}}, {5, {{1, 1}, {1, 1}}}, {13, {{1, 1}, {1, 1}}}};
    long table_mismatches = 0;
    for (const Row& row : table) {
        std::vector<PrimeType> got;
        for (const PValuation& P : primes_above(Ki, row.p))
            got.push_back(P.type());
        table_mismatches += got != row.types;
    }
    return Json{{"fields", polys.size()},
                {"pairs", pairs},
                {"index_divisible_skipped", skipped},
                {"degree_sum_failures", degree_failures},
                {"oracle_failures", oracle_failures},
                {"gaussian_table_mismatches", table_mismatches},
                {"passed", degree_failures == 0 && oracle_failures == 0 && table_mismatches == 0 && pairs > 0}};
}

Json denseness(const SuiteOptions& o)
{
    Rng rng = rng_for(o, 2);
    DenseOptions opt;
    opt.closure.precision_cap = o.precision_cap;
    const std::vector<FieldPtr> padic_fields{rationals(), nf_create("X^2 + 1")};
    const std::vector<std::uint64_t> primes = primes_up_to(50);
    long cases = 0, verified = 0, attempts = 0;
    while (cases < 100 && attempts < 20000) {
        ++attempts;
        const FieldPtr& K = padic_fields[static_cast<std::size_t>(attempts) % padic_fields.size()];
        std::uint64_t p = pick(rng, primes);
        std::vector<PValuation> Ps = primes_above(K, p);
        const PValuation& P = pick(rng, Ps);
        KPoly g = random_monic(rng, K, 4, 10);
        RootReport root = has_root_in_closure(Prime(P), g, opt.closure);
        if (!root.has_root)
            continue;
        FieldElement a = rat(K, p_power(p, uniform(rng, -3, 12)) * Rational(uniform(rng, 1, 9)));
        if (valuation_of_nonzero(P, a) > 12)
            continue;
        ++cases;
        WitnessReport r = d_witness(Prime(P), g, a, opt);
        verified += r.witness && d_membership(Prime(P), g, a, *r.witness);
    }

    const std::vector<FieldPtr> real_fields{rationals(), nf_create("X^2 - 2"), nf_create("X^3 - 3*X + 1")};
    long ordering_cases = 0, ordering_verified = 0;
    attempts = 0;
    while (ordering_cases < 50 && attempts < 20000) {
        ++attempts;
        const FieldPtr& K = pick(rng, real_fields);
        std::vector<Ordering> orderings = real_embeddings(K);
        const Ordering& O = pick(rng, orderings);
        KPoly g = random_monic(rng, K, 4, 10);
        if (count_real_roots(O, g) == 0)
            continue;
        long sign = rng() % 2 ? 1 : -1;
        FieldElement a = rat(K, Rational(sign * uniform(rng, 1, 9)) / p_power(10, uniform(rng, 0, 6)));
        ++ordering_cases;
        WitnessReport r = d_witness(Prime(O), g, a, opt);
        ordering_verified += r.witness && d_membership(Prime(O), g, a, *r.witness);
    }
    return Json{{"padic_cases", cases},
                {"padic_verified", verified},
                {"ordering_cases", ordering_cases},
                {"ordering_verified", ordering_verified},
                {"passed", cases == 100 && verified == cases && ordering_cases == 50 && ordering_verified == 50}};
}

Json phi_law(const SuiteOptions& o)
{
    Rng rng = rng_for(o, 3);
    const std::vector<FieldPtr> fields{rationals(), nf_create("X^2 + 1")};
    const std::vector<std::uint64_t> primes{2, 3, 5};
    long samples = 0, law_violations = 0, identity_checks = 0, identity_violations = 0;
    for (int trial = 0; trial < 10000; ++trial) {
        const FieldPtr& F = fields[static_cast<std::size_t>(trial) % 2];
        std::uint64_t p = pick(rng, primes);
        std::vector<PValuation> Ps = primes_above(F, p);
        const PValuation& P = pick(rng, Ps);
        unsigned n = static_cast<unsigned>(uniform(rng, 1, 4));
        PhiN phi = build_phi_n(p, P.f(), n);
        std::vector<FieldElement> x;
        long minv = 0;
        for (unsigned i = 0; i < n; ++i) {
            std::vector<Rational> c;
            for (int k = 0; k < F->degree(); ++k)
                c.push_back(make_rational(uniform(rng, -20, 20), uniform(rng, 1, 12)));
            FieldElement xi(F, c);
            if (xi.is_zero())
                xi = FieldElement(F, 1);
            xi = xi * rat(F, p_power(p, uniform(rng, -2, 2)));
            long v = valuation_of_nonzero(P, xi);
            minv = i == 0 ? v : std::min(minv, v);
            x.push_back(xi);
        }
        ++samples;
        Valuation v = valuation(P, evaluate_phi(phi, x));
        law_violations += (v && *v == 0) != (minv == 0);
        if (n == 2) {
            ++identity_checks;
            identity_violations += !v || *v != phi.g.degree() * minv;
        }
    }
    return Json{{"samples", samples},
                {"law_violations", law_violations},
                {"phi2_identity_checks", identity_checks},
                {"phi2_identity_violations", identity_violations},
                {"passed", law_violations == 0 && identity_violations == 0}};
}

Json zgroup_axioms(const SuiteOptions& o)
{
    DenseOptions opt;
    opt.closure.precision_cap = o.precision_cap;
    FieldPtr Q = rationals();
    Json sentences = Json::array();
    bool all = true;
    for (std::uint64_t p : {2u, 3u, 5u})
        for (unsigned n = 1; n <= 4; ++n) {
            NuProof proof = prove_nu(Q, p, {1, 1}, n, opt);
            all = all && proof.verdict == Verdict::Proven;
            sentences.push_back(Json{{"p", p}, {"n", n}, {"verdict", to_string(proof.verdict)},
                                     {"classes", proof.cases.size()}});
        }

    // worked instance p = 5, n = 2, y = 5
    FieldElement y = rat(Q, 5);
    ZGroupWitness w = zgroup_witness(Q, 5, {1, 1}, 2, y, opt);
    PhiN phi = build_phi_n(5, 1, 2);
    std::vector<FieldElement> args{y * w.x[0].pow(2), y * rat(Q, 5) * w.x[1].pow(2)};
    FieldElement value = evaluate_phi(phi, args);
    long v5 = valuation_of_nonzero(primes_above(Q, 5)[0], value);
    bool worked = value == rat(Q, 31) && v5 == 0;
    return Json{{"sentences", sentences},
                {"worked_instance", Json{{"x", Json::array({w.x[0].to_string(), w.x[1].to_string()})},
                                         {"phi_value", value.to_string()},
                                         {"v5", v5}}},
                {"passed", all && worked}};
}

Json closure_oracle(const SuiteOptions& o)
{
    ClosureOptions opt;
    opt.precision_cap = o.precision_cap;
    FieldPtr Q = rationals();
    long cases = 0, disagreements = 0, roots = 0;
    Json first_disagreements = Json::array();
    for (std::int64_t p : {2, 3, 5, 7}) {
        Prime P = primes_above(Q, static_cast<std::uint64_t>(p))[0];
        for (int deg = 1; deg <= 3; ++deg) {
            std::vector<std::int64_t> c(static_cast<std::size_t>(deg) + 1, -5);
            c.back() = 1;
            for (;;) {
                std::vector<Rational> q(c.begin(), c.end());
                bool got = has_root_in_closure(P, KPoly(Q, QPoly(q)), opt).has_root;
                bool expected = oracle::padic_root_mod_p12(c, p);
                ++cases;
                roots += got;
                if (got != expected) {
                    ++disagreements;
                    if (first_disagreements.size() < 5)
                        first_disagreements.push_back(Json{{"p", p}, {"poly", QPoly(q).to_string()}});
                }
                std::size_t i = 0;
                while (i < static_cast<std::size_t>(deg) && c[i] == 5)
                    c[i++] = -5;
                if (i == static_cast<std::size_t>(deg))
                    break;
                ++c[i];
            }
        }
    }
    return Json{{"cases", cases},
                {"with_root", roots},
                {"disagreements", disagreements},
                {"examples", first_disagreements},
                {"passed", disagreements == 0 && cases == 4 * (11 + 121 + 1331)}};
}

Json ud_merge(const SuiteOptions& o)
{
    DenseOptions opt;
    opt.closure.precision_cap = o.precision_cap;
    FieldPtr K = nf_create("X^2 + 1");
    std::vector<Prime> S;
    for (const PValuation& P : primes_above(K, 13))
        S.push_back(P);
    KPoly g = KPoly::parse(K, "X^2 - 3");
    FieldElement a = rat(K, 169);
    WitnessReport r = ud_witness(K, S, g, a, opt);
    bool example = r.witness && std::all_of(S.begin(), S.end(), [&](const Prime& P) {
                       return d_membership(P, g, a, *r.witness);
                   });
    bool no_larger = r.witness && r.witness->height() <= 108;

    Rng rng = rng_for(o, 6);
    long cases = 0, verified = 0, attempts = 0;
    while (cases < 20 && attempts < 5000) {
        ++attempts;
        std::uint64_t p = pick(rng, std::vector<std::uint64_t>{5, 13, 17, 29, 37});
        std::vector<Prime> T;
        for (const PValuation& P : primes_above(K, p))
            T.push_back(P);
        KPoly h(K, QPoly({uniform(rng, -30, 30), uniform(rng, -3, 3), 1}));
        if (!std::all_of(T.begin(), T.end(), [&](const Prime& P) { return has_root_in_closure(P, h).has_root; }))
            continue;
        FieldElement b = rat(K, p_power(p, uniform(rng, -1, 4)));
        ++cases;
        WitnessReport w = ud_witness(K, T, h, b, opt);
        verified += w.witness && std::all_of(T.begin(), T.end(), [&](const Prime& P) {
                        return d_membership(P, h, b, *w.witness);
                    });
    }
    return Json{{"witness", r.witness ? r.witness->to_string() : ""},
                {"example_verified", example},
                {"random_cases", cases},
                {"random_verified", verified},
                {"passed", example && no_larger && cases == 20 && verified == 20}};
}

Json kochen_integrality(const SuiteOptions& o)
{
    Rng rng = rng_for(o, 7);
    FieldPtr Q = rationals();
    const std::vector<std::uint64_t> primes{2, 3, 5, 7};
    long defined = 0, undefined = 0, violations = 0, formula_mismatches = 0;
    for (int trial = 0; trial < 10000; ++trial) {
        std::uint64_t p = pick(rng, primes);
        Rational x = make_rational(uniform(rng, -1000, 1000), uniform(rng, 1, 500)) * p_power(p, uniform(rng, -3, 3));
        KochenValue k = kochen(p, rat(Q, x));
        // gamma recomputed directly in Q
        Rational u = pow_rational(x, static_cast<long>(p)) - x;
        Rational den = Rational(static_cast<unsigned long>(p)) * (u * u - 1);
        if (!k.value) {
            ++undefined;
            formula_mismatches += den != 0;
            continue;
        }
        ++defined;
        Rational gamma = u / den;
        formula_mismatches += k.value->rational_value() != gamma;
        violations += gamma != 0 && padic_valuation(gamma, Integer(static_cast<unsigned long>(p))) < 0;
    }
    return Json{{"defined", defined},
                {"undefined", undefined},
                {"violations", violations},
                {"formula_mismatches", formula_mismatches},
                {"passed", violations == 0 && formula_mismatches == 0 && defined >= 9900}};
}

Json four_squares_check(const SuiteOptions& o)
{
    long failures = 0;
    for (long n = 0; n <= 10000; ++n) {
        SquareDecomposition d = four_squares(Rational(n), o.seed);
        Rational s = 0;
        for (const Rational& x : d.parts)
            s += x * x;
        failures += s != n || d.parts.size() > 4;
    }
    return Json{{"integers", 10001}, {"failures", failures}, {"passed", failures == 0}};
}

Json short_representation(const SuiteOptions& o)
{
    FieldPtr Q = rationals();
    ShortRepresentationReport r = no_short_representation_check(primes_above(Q, 3)[0], KPoly::parse(Q, "X^2 + 1"),
                                                                rat(Q, 3), 2, o.height_bound);
    long level_mismatches = 0, odd_primes = 0;
    for (std::uint64_t p = 3; p < 500; p += 2)
        if (is_prime(p)) {
            ++odd_primes;
            level_mismatches += (level_finite_field(p, 1) == 1) != (p % 4 == 1);
        }
    return Json{{"outcome", to_string(r.outcome)},
                {"height_bound", o.height_bound},
                {"candidates", r.candidates},
                {"counterexamples", r.counterexample.empty() ? 0 : 1},
                {"level_primes", odd_primes},
                {"level_mismatches", level_mismatches},
                {"passed", r.outcome == ShortRepresentation::Certified && r.counterexample.empty() &&
                               level_mismatches == 0}};
}

Json chi_consistency(const SuiteOptions& o)
{
    Rng rng = rng_for(o, 10);
    const std::vector<FieldPtr> fields{rationals(), nf_create("X^2 + 1"), nf_create("X^2 - 2"), nf_create("X^3 - 2")};
    const std::vector<std::uint64_t> primes{3, 5, 7, 11};
    long cases = 0, excluded = 0, disagreements = 0, members = 0;
    while (cases < 200) {
        const FieldPtr& K = pick(rng, fields);
        std::uint64_t p = pick(rng, primes);
        std::vector<PValuation> Ps = primes_above(K, p);
        const PValuation& P = pick(rng, Ps);
        PrimeType tau = P.type();
        std::vector<Rational> tc, sc;
        for (int k = 0; k < K->degree(); ++k) {
            tc.push_back(make_rational(uniform(rng, -15, 15), uniform(rng, 1, 4)));
            sc.push_back(Rational(uniform(rng, -15, 15)));
        }
        FieldElement t = FieldElement(K, tc) * rat(K, Rational(static_cast<unsigned long>(p)));
        FieldElement s(K, sc);
        if (t.is_zero() || s.is_zero())
            continue;
        if (s.is_one()) {
            ++excluded;
            continue;
        }
        ++cases;
        bool direct = chi_member(P, tau, t, s);
        FormulaPtr f = instantiate(emit_chi(Place::finite(p), tau), {{"t", t}, {"s", s}});
        bool via_formula = false;
        try {
            via_formula = eval_qf(prime_interpretation(P), *f);
        } catch (const DomainError& e) {
            if (e.code() != ErrorCode::InverseOfZero)
                throw;
        }
        members += direct;
        disagreements += direct != via_formula;
    }
    return Json{{"cases", cases},
                {"members", members},
                {"excluded_s_degenerate", excluded},
                {"disagreements", disagreements},
                {"passed", disagreements == 0}};
}

using Runner = Json (*)(const SuiteOptions&);

struct Entry {
    CriterionInfo info;
    Runner run;
};

const std::vector<Entry>& entries()
{
    static const std::vector<Entry> e{
        {{1, "splitting correctness", 10}, splitting},
        {{2, "denseness witnesses", 60}, denseness},
        {{3, "phi_n valuation law", 30}, phi_law},
        {{4, "Z-group axioms", 10}, zgroup_axioms},
        {{5, "closure-root oracle equivalence", 300}, closure_oracle},
        {{6, "UD merge", 30}, ud_merge},
        {{7, "Kochen integrality", 10}, kochen_integrality},
        {{8, "four squares", 30}, four_squares_check},
        {{9, "short representation check", 60}, short_representation},
        {{10, "chi consistency", 10}, chi_consistency},
    };
    return e;
}

} // namespace

const std::vector<CriterionInfo>& criteria()
{
    static const std::vector<CriterionInfo> out = [] {
        std::vector<CriterionInfo> v;
        for (const Entry& e : entries())
            v.push_back(e.info);
        return v;
    }();
    return out;
}

CriterionResult run_criterion(int id, const SuiteOptions& options)
{
    for (const Entry& e : entries()) {
        if (e.info.id != id)
            continue;
        CriterionResult r{id, e.info.name, false, Json::object(), 0, e.info.limit_seconds};
        auto start = std::chrono::steady_clock::now();
        try {
            r.metrics = e.run(options);
            r.passed = r.metrics.at("passed").get<bool>();
            r.metrics.erase("passed");
        } catch (const DomainError& err) {
            r.metrics = Json{{"exception", io::to_json(err)}};
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return r;
    }
    raise(ErrorCode::InvalidArgument, "no criterion " + std::to_string(id));
}

std::vector<CriterionResult> run_all(const SuiteOptions& options, const std::vector<int>& ids)
{
    std::vector<CriterionResult> out;
    for (const CriterionInfo& c : criteria())
        if (ids.empty() || std::find(ids.begin(), ids.end(), c.id) != ids.end())
            out.push_back(run_criterion(c.id, options));
    return out;
}

Json transcript(const std::vector<CriterionResult>& results, const SuiteOptions& options)
{
    Json cases = Json::array();
    long passed = 0;
    for (const CriterionResult& r : results) {
        passed += r.passed;
        cases.push_back(Json{{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"metrics", r.metrics}});
    }
    return Json{{"config", Json{{"seed", options.seed},
                                {"height_bound", options.height_bound},
                                {"precision_cap", options.precision_cap}}},
                {"cases", cases},
                {"passed", passed},
                {"failed", static_cast<long>(results.size()) - passed}};
}

} // namespace prime_scope::suite
