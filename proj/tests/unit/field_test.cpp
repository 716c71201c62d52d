#include <gtest/gtest.h>

#include <random>

#include "prime_scope/errors.hpp"
#include "prime_scope/field/kpoly.hpp"
#include "prime_scope/field/number_field.hpp"
#include "prime_scope/field/ordering.hpp"

using namespace prime_scope;

namespace {

FieldElement random_element(const FieldPtr& K, std::mt19937_64& rng, long range = 7)
{
    std::vector<Rational> c;
    for (int i = 0; i < K->degree(); ++i)
        c.emplace_back(static_cast<long>(rng() % (2 * range + 1)) - range, static_cast<long>(1 + rng() % 4));
    return FieldElement(K, c);
}

ErrorCode code_of(const std::function<void()>& fn)
{
    try {
        fn();
    } catch (const DomainError& e) {
        return e.code();
    }
    return ErrorCode::InvalidArgument;
}

} // namespace

TEST(NumberField, CreateExamples)
{
    EXPECT_EQ(nf_create("X^2 + 1")->degree(), 2);
    EXPECT_EQ(nf_create("X^2 - 2")->degree(), 2);
    EXPECT_EQ(nf_create("X^2 + 1")->poly_discriminant(), -4);
    try {
        nf_create("X^2 - 1");
        FAIL();
    } catch (const DomainError& e) {
        EXPECT_EQ(e.code(), ErrorCode::Reducible);
        EXPECT_EQ(e.detail(), "(-1 + X)(1 + X)");
    }
    EXPECT_EQ(code_of([] { nf_create("2*X^2 + 1"); }), ErrorCode::NotMonic);
    EXPECT_EQ(code_of([] { nf_create("X^2 + 1/2"); }), ErrorCode::NotMonic);
}

TEST(NumberField, CertifiesHarderPolynomials)
{
    // irreducible but reducible modulo every prime
    EXPECT_EQ(nf_create("X^4 + 1")->degree(), 4);
    EXPECT_EQ(nf_create("X^4 - 10*X^2 + 1")->degree(), 4);
    EXPECT_EQ(nf_create("X^3 - 2")->degree(), 3);
    // product of two irreducible quadratics
    EXPECT_EQ(code_of([] { nf_create("X^4 + 5*X^2 + 6"); }), ErrorCode::Reducible);
    EXPECT_EQ(code_of([] { nf_create("X^4 + 4"); }), ErrorCode::Reducible);
    EXPECT_EQ(code_of([] { nf_create("X^3 + X^2"); }), ErrorCode::Reducible);
}

TEST(NumberField, InverseExamples)
{
    FieldPtr K = nf_create("X^2 + 1");
    FieldElement x = FieldElement::parse(K, "[1, 1]");
    EXPECT_EQ(nf_inv(x), FieldElement::parse(K, "[1/2, -1/2]"));
    EXPECT_EQ(nf_inv(FieldElement(K, 1)), FieldElement(K, 1));
    EXPECT_EQ(code_of([&] { nf_inv(FieldElement(K, 0)); }), ErrorCode::DivisionByZero);
}

TEST(NumberField, InverseIsTwoSided)
{
    std::mt19937_64 rng(3);
    for (const char* f : {"X^2 + 1", "X^3 - 2", "X^4 - 10*X^2 + 1"}) {
        FieldPtr K = nf_create(f);
        for (int i = 0; i < 200; ++i) {
            FieldElement x = random_element(K, rng);
            if (x.is_zero())
                continue;
            EXPECT_TRUE((x * nf_inv(x)).is_one());
            EXPECT_TRUE((nf_inv(x) * x).is_one());
        }
    }
}

TEST(NumberField, RingAxioms)
{
    std::mt19937_64 rng(5);
    FieldPtr K = nf_create("X^3 - X - 1");
    for (int i = 0; i < 200; ++i) {
        FieldElement a = random_element(K, rng), b = random_element(K, rng), c = random_element(K, rng);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ((a * b).norm(), a.norm() * b.norm());
    }
}

TEST(NumberField, ParseErrors)
{
    FieldPtr K = nf_create("X^2 + 1");
    EXPECT_EQ(code_of([&] { FieldElement::parse(K, "[1, 2"); }), ErrorCode::SyntaxError);
    EXPECT_EQ(code_of([&] { FieldElement::parse(K, "[1, 2, 3]"); }), ErrorCode::InvalidArgument);
    EXPECT_EQ(FieldElement::parse(K, "[0, 1]").to_string(), "[0, 1]");
}

TEST(Ordering, EmbeddingCounts)
{
    EXPECT_EQ(real_embeddings(nf_create("X^2 - 2")).size(), 2u);
    EXPECT_EQ(real_embeddings(nf_create("X^2 + 1")).size(), 0u);
    EXPECT_EQ(real_embeddings(rationals()).size(), 1u);
    for (const char* f : {"X^3 - 2", "X^4 - 10*X^2 + 1", "X^3 - 3*X + 1", "X^4 + 1"}) {
        FieldPtr K = nf_create(f);
        EXPECT_EQ(real_embeddings(K).size(), sturm_root_count(K->defining_poly())) << f;
    }
}

TEST(Ordering, SignExamples)
{
    FieldPtr K = nf_create("X^2 - 2");
    auto P = real_embeddings(K);
    ASSERT_EQ(P.size(), 2u);
    // sorted by interval: index 0 is the negative root
    FieldElement a = FieldElement::alpha(K);
    EXPECT_EQ(sign_at(P[1], a - FieldElement(K, 1)), 1);
    EXPECT_EQ(sign_at(P[0], a), -1);
    EXPECT_EQ(sign_at(P[0], FieldElement(K, 0)), 0);
    // 17/12 > sqrt 2 > 7/5
    EXPECT_EQ(sign_at(P[1], FieldElement(K, Rational(17, 12)) - a), 1);
    EXPECT_EQ(sign_at(P[1], FieldElement(K, Rational(7, 5)) - a), -1);
}

TEST(Ordering, SignIsMultiplicative)
{
    std::mt19937_64 rng(9);
    FieldPtr K = nf_create("X^3 - 3*X + 1");
    for (const Ordering& P : real_embeddings(K)) {
        for (int i = 0; i < 100; ++i) {
            FieldElement x = random_element(K, rng), y = random_element(K, rng);
            EXPECT_GE(sign_at(P, x * x), 0);
            EXPECT_EQ(sign_at(P, x * y), sign_at(P, x) * sign_at(P, y));
        }
    }
}

TEST(Ordering, RealRootsOverK)
{
    FieldPtr K = nf_create("X^2 - 2");
    auto P = real_embeddings(K);
    // X^2 - alpha has real roots only where alpha > 0
    KPoly g = KPoly::parse(K, "X^2 - [0, 1]");
    EXPECT_EQ(count_real_roots(P[0], g), 0u);
    EXPECT_EQ(count_real_roots(P[1], g), 2u);
    auto roots = isolate_real_roots(P[1], g);
    ASSERT_EQ(roots.size(), 2u);
    EXPECT_LE(roots[0].hi, 0);
    EXPECT_GE(roots[1].lo, 0);
    // double root counts once
    EXPECT_EQ(count_real_roots(P[1], g * g), 2u);
}
