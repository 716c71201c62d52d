#include <gtest/gtest.h>

#include "prime_scope/io/json.hpp"

using namespace prime_scope;
using io::Json;

namespace {

// each record goes through text, as the CLI prints it
Json reparse(const Json& j) { return Json::parse(j.dump(2)); }

FieldElement q(const FieldPtr& K, long n, long d = 1) { return FieldElement(K, make_rational(n, d)); }

} // namespace

TEST(JsonRoundTrip, FieldsElementsAndPrimes)
{
    for (const char* text : {"X", "X^2 + 1", "X^3 - 2", "X^4 - 10*X^2 + 1"}) {
        FieldPtr K = nf_create(text);
        FieldPtr back = io::field_from_json(reparse(io::to_json(K)));
        EXPECT_EQ(back->defining_poly(), K->defining_poly());
        FieldElement x = FieldElement::alpha(K) * q(K, 3, 7) + q(K, -2);
        EXPECT_EQ(io::element_from_json(K, reparse(io::to_json(x))), x);
        for (std::uint64_t p : {3u, 5u, 7u})
            for (const PValuation& P : primes_above(K, p)) {
                Prime back_prime = io::prime_from_json(reparse(io::to_json(Prime(P))));
                EXPECT_TRUE(same_prime(back_prime, Prime(P)));
            }
        for (const Ordering& o : real_embeddings(K))
            EXPECT_TRUE(same_prime(io::prime_from_json(reparse(io::to_json(Prime(o)))), Prime(o)));
    }
    PrimeType t{2, 3};
    EXPECT_EQ(io::type_from_json(reparse(io::to_json(t))), t);
}

TEST(JsonRoundTrip, Reports)
{
    FieldPtr K = nf_create("X^2 + 1");
    auto P = primes_above(K, 13);
    KPoly g = KPoly::parse(K, "X^2 - 3");

    RootReport root = has_root_in_closure(Prime(P[0]), g);
    RootReport root_back = io::root_report_from_json(reparse(io::to_json(root)));
    EXPECT_EQ(root_back.has_root, root.has_root);
    EXPECT_EQ(root_back.squarefree, root.squarefree);
    EXPECT_EQ(io::to_json(root_back), io::to_json(root));

    WitnessReport w = ud_witness(K, {P[0], P[1]}, g, q(K, 169));
    WitnessReport w_back = io::witness_report_from_json(K, reparse(io::to_json(w)));
    EXPECT_EQ(*w_back.witness, *w.witness);
    ASSERT_EQ(w_back.verified_at.size(), w.verified_at.size());
    EXPECT_EQ(w_back.verified_at[1].value, w.verified_at[1].value);
    EXPECT_EQ(w_back.stats.steps, w.stats.steps);

    ZGroupWitness z = zgroup_witness(K, 5, {1, 1}, 3, FieldElement(K, {Rational(2), Rational(1)}));
    ZGroupWitness z_back = io::zgroup_from_json(reparse(io::to_json(z)));
    EXPECT_EQ(z_back.x, z.x);
    EXPECT_EQ(z_back.primes, z.primes);
    EXPECT_EQ(z_back.valuations, z.valuations);

    SquareDecomposition d = four_squares(Rational(31, 6));
    SquareDecomposition d_back = io::squares_from_json(reparse(io::to_json(d)));
    EXPECT_EQ(d_back.input, d.input);
    EXPECT_EQ(d_back.parts, d.parts);

    for (KochenValue k : {kochen(5, FieldElement::alpha(K)), kochen(3, q(K, 0))}) {
        KochenValue k_back = io::kochen_from_json(reparse(io::to_json(k)));
        EXPECT_EQ(k_back.p, k.p);
        EXPECT_EQ(k_back.input, k.input);
        EXPECT_EQ(k_back.value, k.value);
    }

    FieldPtr Q = rationals();
    ShortRepresentationReport s =
        no_short_representation_check(primes_above(Q, 3)[0], KPoly::parse(Q, "X^2 + 1"), q(Q, 3), 2, 5);
    ShortRepresentationReport s_back = io::short_report_from_json(Q, reparse(io::to_json(s)));
    EXPECT_EQ(s_back.outcome, s.outcome);
    EXPECT_EQ(s_back.candidates, s.candidates);
    EXPECT_EQ(s_back.residue_level, s.residue_level);
}

TEST(JsonRoundTrip, FormulasAndProofs)
{
    FieldPtr Q = rationals();
    FormulaPtr nu = emit_nu(3, {1, 1}, 3);
    EXPECT_TRUE(*io::formula_from_json(reparse(io::to_json(*nu))) == *nu);

    EvalVerdict v = eval_bounded(Q, Place::finite(5), {1, 1}, *parse_formula("(exists x (= (* 5 x) 1))"), 20);
    EvalVerdict v_back = io::verdict_from_json(Q, reparse(io::to_json(v)));
    EXPECT_EQ(v_back.verdict, v.verdict);
    EXPECT_EQ(v_back.evidence, v.evidence);

    PhiN phi = build_phi_n(5, 1, 3);
    PhiN phi_back = io::phi_from_json(reparse(io::to_json(phi)));
    EXPECT_EQ(phi_back.g, phi.g);
    EXPECT_EQ(phi_back.phi.terms, phi.phi.terms);
    Json tampered = io::to_json(phi);
    tampered["n"] = 2;
    EXPECT_THROW(io::phi_from_json(tampered), DomainError);

    NuProof proof = prove_nu(Q, 5, {1, 1}, 2);
    NuProof proof_back = io::nu_proof_from_json(reparse(io::to_json(proof, Q)));
    EXPECT_EQ(proof_back.verdict, proof.verdict);
    EXPECT_TRUE(*proof_back.sentence == *proof.sentence);
    ASSERT_EQ(proof_back.cases.size(), proof.cases.size());
    EXPECT_EQ(proof_back.cases[1].x, proof.cases[1].x);
    EXPECT_EQ(proof_back.cases[1].phi_value, proof.cases[1].phi_value);

    QuadraticStep step = quadratic_step_search(Q, 5, {{0, LocalBehavior::Inert}}, 50);
    QuadraticStep step_back = io::step_from_json(Q, reparse(io::to_json(step)));
    EXPECT_EQ(step_back.d, step.d);
    EXPECT_EQ(step_back.extension->defining_poly(), step.extension->defining_poly());
    EXPECT_EQ(step_back.primes_above_in_extension, step.primes_above_in_extension);
}

TEST(JsonRoundTrip, Errors)
{
    DomainError e(ErrorCode::PreconditionViolated, "level too small", "s-level");
    Json j = io::to_json(e);
    EXPECT_EQ(j.dump(), R"({"error":"PreconditionViolated","detail":"level too small","clause":"s-level"})");
    DomainError back = io::error_from_json(reparse(j));
    EXPECT_EQ(back.code(), e.code());
    EXPECT_EQ(back.detail(), e.detail());
    EXPECT_EQ(back.clause(), e.clause());
    EXPECT_FALSE(io::to_json(DomainError(ErrorCode::NoRoot, "x")).contains("clause"));
    EXPECT_THROW(io::error_from_json(Json{{"error", "Nope"}, {"detail", ""}}), DomainError);
}
