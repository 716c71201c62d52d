#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "prime_scope/errors.hpp"
#include "prime_scope/formula/emit.hpp"

using namespace prime_scope;

namespace {

FieldElement q(const FieldPtr& K, long n, long d = 1) { return FieldElement(K, make_rational(n, d)); }

TermPtr random_term(std::mt19937_64& rng, int depth)
{
    int pick = depth <= 0 ? static_cast<int>(rng() % 2) : static_cast<int>(rng() % 7);
    switch (pick) {
    case 0:
        if (rng() % 3 == 0)
            return Term::constant(std::vector<Rational>{make_rational(static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 3)),
                                                        Rational(static_cast<long>(rng() % 5) + 1)});
        return Term::constant(make_rational(static_cast<long>(rng() % 21) - 10, 1 + static_cast<long>(rng() % 4)));
    case 1:
        return Term::variable(std::string(1, "xyzts"[rng() % 5]));
    case 2:
        return Term::add({random_term(rng, depth - 1), random_term(rng, depth - 1), random_term(rng, depth - 1)});
    case 3:
        return Term::sub(random_term(rng, depth - 1), random_term(rng, depth - 1));
    case 4:
        return Term::mul({random_term(rng, depth - 1), random_term(rng, depth - 1)});
    case 5:
        return Term::inv(random_term(rng, depth - 1));
    default:
        return Term::pow(random_term(rng, depth - 1), static_cast<unsigned>(rng() % 5));
    }
}

FormulaPtr random_formula(std::mt19937_64& rng, int depth)
{
    int pick = depth <= 0 ? static_cast<int>(rng() % 4) : static_cast<int>(rng() % 11);
    switch (pick) {
    case 0:
        return Formula::truth(rng() % 2 == 0);
    case 1:
        return Formula::eq(random_term(rng, 2), random_term(rng, 2));
    case 2:
        return Formula::r(random_term(rng, 2));
    case 3:
        return Formula::unit(random_term(rng, 2));
    case 4:
        return Formula::negation(random_formula(rng, depth - 1));
    case 5:
        return Formula::conjunction({random_formula(rng, depth - 1), random_formula(rng, depth - 1)});
    case 6:
        return Formula::disjunction({random_formula(rng, depth - 1), random_formula(rng, depth - 1), random_formula(rng, depth - 1)});
    case 7:
        return Formula::implies(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
    case 8:
        return Formula::forall("x", random_formula(rng, depth - 1));
    case 9:
        return Formula::exists("y", random_formula(rng, depth - 1));
    default:
        return Formula::hat(5, {1, 2}, random_formula(rng, depth - 1));
    }
}

std::string read_golden(const std::string& name)
{
    std::ifstream in(std::string(PRIME_SCOPE_GOLDEN_DIR) + "/formulas/" + name);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST(Formula, ParsePrintExamples)
{
    EXPECT_EQ(print(*parse_formula("(R (inv 5))")), "(R (inv 5))");
    EXPECT_EQ(print(*parse_formula("(forall y (not (= y 0)))")), "(forall y (not (= y 0)))");
    EXPECT_EQ(print(*parse_formula("  (Rx\n [1, -1/2] )")), "(Rx [1,-1/2])");
    try {
        parse_formula("(and");
        FAIL();
    } catch (const DomainError& e) {
        EXPECT_EQ(e.code(), ErrorCode::SyntaxError);
        EXPECT_NE(e.detail().find("position 4"), std::string::npos);
    }
    for (const char* bad : {"(R)", "(= x)", "(foo x)", "(R x) extra", "(^ x -1)", "(forall 1 true)", "(R 1/0)"}) {
        try {
            parse_formula(bad);
            ADD_FAILURE() << bad;
        } catch (const DomainError& e) {
            EXPECT_EQ(e.code(), ErrorCode::SyntaxError) << bad;
        }
    }
}

TEST(Formula, RandomRoundTrip)
{
    std::mt19937_64 rng(101);
    for (int i = 0; i < 100; ++i) {
        FormulaPtr f = random_formula(rng, 4);
        std::string text = print(*f);
        FormulaPtr g = parse_formula(text);
        EXPECT_TRUE(*f == *g);
        EXPECT_EQ(print(*g), text);
    }
}

TEST(Formula, FreeVariablesAndInstantiate)
{
    FormulaPtr f = parse_formula("(forall y (implies (not (= y 0)) (exists x (Rx (* y x t)))))");
    EXPECT_EQ(free_variables(*f), std::vector<std::string>{"t"});
    EXPECT_EQ(quantifier_count(*f), 2u);
    FieldPtr Q = rationals();
    FormulaPtr g = instantiate(f, {{"y", q(Q, 5)}, {"x", q(Q, 1, 5)}, {"t", q(Q, 3)}});
    EXPECT_TRUE(is_quantifier_free(*g));
    EXPECT_EQ(print(*g), "(implies (not (= 5 0)) (Rx (* 5 1/5 3)))");
}

TEST(EvalQf, Examples)
{
    FieldPtr Q = rationals();
    Place five = Place::finite(5);
    EXPECT_TRUE(eval_qf(Q, five, {1, 1}, *parse_formula("(R (inv 2))")));
    EXPECT_FALSE(eval_qf(Q, five, {1, 1}, *parse_formula("(R (inv 5))")));
    EXPECT_TRUE(eval_qf(Q, five, {1, 1}, *parse_formula("(Rx 31)")));
    try {
        eval_qf(Q, five, {1, 1}, *parse_formula("(R (inv (- 2 2)))"));
        FAIL();
    } catch (const DomainError& e) {
        EXPECT_EQ(e.code(), ErrorCode::InverseOfZero);
    }
    FieldPtr K = nf_create("X^2 + 1");
    EXPECT_TRUE(eval_qf(K, five, {1, 1}, *parse_formula("(= (* [0,1] [0,1]) -1)")));
    EXPECT_FALSE(eval_qf(K, five, {1, 1}, *parse_formula("(R (inv [2,1]))")));
}

TEST(EvalBounded, Examples)
{
    FieldPtr Q = rationals();
    Interpretation I = holomorphy_interpretation(Q, Place::finite(5), {1, 1});
    EvalVerdict sq = eval_bounded(I, *parse_formula("(exists x (= (* x x) 2))"), 30);
    EXPECT_EQ(sq.verdict, Verdict::Unknown);
    EvalVerdict all = eval_bounded(I, *parse_formula("(forall x (R x))"), 30);
    EXPECT_EQ(all.verdict, Verdict::Refuted);
    ASSERT_EQ(all.evidence.size(), 1u);
    EXPECT_EQ(all.evidence[0].second, q(Q, 1, 5));
    EvalVerdict half = eval_bounded(I, *parse_formula("(exists x (= (* 2 x) 1))"), 30);
    EXPECT_EQ(half.verdict, Verdict::Proven);
    EXPECT_EQ(half.evidence[0].second, q(Q, 1, 2));

    FormulaPtr nu = instantiate(emit_nu(5, {1, 1}, 2), {{"y", q(Q, 5)}, {"x0", q(Q, 1)}, {"x1", q(Q, 1, 5)}});
    EXPECT_EQ(eval_bounded(I, *nu, 1).verdict, Verdict::Proven);
}

TEST(Phi, BuildExamples)
{
    PhiN a = build_phi_n(2, 1, 2);
    EXPECT_EQ(a.g.to_string(), QPoly({1, 1, 1}).to_string());
    EXPECT_EQ(a.phi.to_string(), "X1^2 + X1*X2 + X2^2");
    EXPECT_EQ(build_phi_n(7, 3, 1).phi.to_string(), "X1");
    PhiN c = build_phi_n(2, 1, 3);
    EXPECT_EQ(c.phi.total_degree(), 4u);
    EXPECT_EQ(build_phi_n(3, 2, 2).g.degree(), 3);

    FieldPtr Q = rationals();
    PhiN five = build_phi_n(5, 1, 2);
    EXPECT_EQ(evaluate_phi(five, {q(Q, 5), q(Q, 1)}), q(Q, 31));
    EXPECT_EQ(five.phi({q(Q, 5), q(Q, 1)}), q(Q, 31));
}

TEST(Phi, MinValuationLaw)
{
    std::mt19937_64 rng(3);
    FieldPtr Q = rationals();
    FieldPtr K = nf_create("X^2 + 1");
    for (int trial = 0; trial < 1500; ++trial) {
        FieldPtr F = trial % 2 ? K : Q;
        std::uint64_t p = std::vector<std::uint64_t>{2, 3, 5}[rng() % 3];
        auto Ps = primes_above(F, p);
        const PValuation& P = Ps[rng() % Ps.size()];
        unsigned n = 1 + static_cast<unsigned>(rng() % 4);
        PhiN phi = build_phi_n(p, P.f(), n);
        std::vector<FieldElement> x;
        long minv = 1 << 20;
        for (unsigned i = 0; i < n; ++i) {
            std::vector<Rational> c;
            for (int k = 0; k < F->degree(); ++k)
                c.push_back(make_rational(static_cast<long>(rng() % 41) - 20, 1 + static_cast<long>(rng() % 12)));
            FieldElement xi(F, c);
            if (xi.is_zero())
                xi = FieldElement(F, 1);
            xi = xi * FieldElement(F, pow_rational(Rational(static_cast<unsigned long>(p)), static_cast<long>(rng() % 5) - 2));
            minv = std::min(minv, valuation_of_nonzero(P, xi));
            x.push_back(xi);
        }
        Valuation v = valuation(P, evaluate_phi(phi, x));
        EXPECT_EQ(v && *v == 0, minv == 0);
        if (n == 2)
            EXPECT_EQ(*v, phi.g.degree() * minv);
    }
}

TEST(Chi, EmitExamples)
{
    EXPECT_EQ(print(*emit_chi(Place::finite(5), {1, 1})),
              "(and (Rx (* t (inv 5))) (Rx s) (Rx (- s 1)) (Rx (- (^ s 2) 1)))");
    EXPECT_EQ(print(*emit_chi(Place::infinity(), {1, 1})), "(= t t)");
    EXPECT_EQ(print(*emit_chi(Place::finite(2), {1, 1})), "(and (Rx (* t (inv 2))) (Rx s))");
    EXPECT_EQ(print(*emit_chi(Place::finite(3), {2, 1})), "(and (Rx (* (^ t 2) (inv 3))) (Rx s) (Rx (- s 1)))");
}

TEST(Chi, AgreesWithMembership)
{
    std::mt19937_64 rng(5);
    std::vector<FieldPtr> fields{rationals(), nf_create("X^2 + 1"), nf_create("X^2 - 2"), nf_create("X^3 - 2")};
    int checked = 0;
    for (int trial = 0; trial < 200; ++trial) {
        FieldPtr K = fields[rng() % fields.size()];
        std::uint64_t p = std::vector<std::uint64_t>{3, 5, 7, 11}[rng() % 4];
        auto Ps = primes_above(K, p);
        const PValuation& P = Ps[rng() % Ps.size()];
        PrimeType tau = P.type();
        std::vector<Rational> tc, sc;
        for (int k = 0; k < K->degree(); ++k) {
            tc.push_back(make_rational(static_cast<long>(rng() % 31) - 15, 1 + static_cast<long>(rng() % 4)));
            sc.push_back(Rational(static_cast<long>(rng() % 31) - 15));
        }
        FieldElement t = FieldElement(K, tc) * FieldElement(K, Rational(static_cast<unsigned long>(p)));
        FieldElement s(K, sc);
        if (t.is_zero() || s.is_zero() || s.is_one())
            continue;
        bool direct = chi_member(P, tau, t, s);
        FormulaPtr f = instantiate(emit_chi(Place::finite(p), tau), {{"t", t}, {"s", s}});
        bool via_formula;
        try {
            via_formula = eval_qf(prime_interpretation(P), *f);
        } catch (const DomainError& e) {
            ASSERT_EQ(e.code(), ErrorCode::InverseOfZero);
            via_formula = false;
        }
        EXPECT_EQ(direct, via_formula) << describe(P) << " t=" << t << " s=" << s;
        ++checked;
    }
    EXPECT_GT(checked, 150);
}

TEST(Nu, EmitExamples)
{
    EXPECT_EQ(print(*emit_nu(5, {1, 1}, 1)), "(forall y (implies (not (= y 0)) (exists x0 (Rx (* y x0)))))");
    std::string two = print(*emit_nu(2, {2, 1}, 2));
    EXPECT_NE(two.find("(^ y 2)"), std::string::npos);
    EXPECT_EQ(print(*emit_nu(5, {1, 1}, 2)) + "\n", read_golden("nu_5_1_1_2.sexp"));
    EXPECT_EQ(print(*emit_chi(Place::finite(5), {1, 1})) + "\n", read_golden("chi_5_1_1.sexp"));
}

TEST(Nu, ProvenOnRationals)
{
    FieldPtr Q = rationals();
    for (std::uint64_t p : {2u, 3u, 5u})
        for (unsigned n = 1; n <= 4; ++n) {
            NuProof proof = prove_nu(Q, p, {1, 1}, n);
            EXPECT_EQ(proof.verdict, Verdict::Proven) << p << " " << n;
            EXPECT_EQ(proof.cases.size(), n);
        }
}

TEST(Nu, ProvenOnGaussianRationals)
{
    FieldPtr K = nf_create("X^2 + 1");
    EXPECT_EQ(prove_nu(K, 5, {1, 1}, 3).verdict, Verdict::Proven);
    EXPECT_EQ(prove_nu(K, 2, {2, 1}, 2).verdict, Verdict::Proven);
    EXPECT_EQ(prove_nu(K, 3, {1, 2}, 2).verdict, Verdict::Proven);
}

TEST(Psi, MarkerIsNotEvaluated)
{
    FormulaPtr psi = emit_psi(5, {1, 1}, 2);
    std::string text = print(*psi);
    EXPECT_NE(text.find("(hat 5 1 1"), std::string::npos);
    EXPECT_TRUE(*parse_formula(text) == *psi);
    EXPECT_TRUE(free_variables(*psi).empty());
    FieldPtr Q = rationals();
    FormulaPtr hat = parse_formula("(hat 5 1 1 true)");
    try {
        eval_qf(Q, Place::finite(5), {1, 1}, *hat);
        FAIL();
    } catch (const DomainError& e) {
        EXPECT_EQ(e.code(), ErrorCode::Unsupported);
    }
}
