#include <gtest/gtest.h>

#include <random>

#include "prime_scope/suite/oracles.hpp"
#include "prime_scope/closure/closure.hpp"
#include "prime_scope/errors.hpp"

using namespace prime_scope;

namespace {

Prime above(const FieldPtr& K, std::uint64_t p, std::size_t i = 0) { return primes_above(K, p)[i]; }

KPoly poly(const FieldPtr& K, const char* text) { return KPoly::parse(K, text); }

} // namespace

TEST(Closure, PadicExamples)
{
    FieldPtr Q = rationals();
    auto r5 = has_root_in_closure(above(Q, 5), poly(Q, "X^2 + 1"));
    EXPECT_TRUE(r5.has_root);
    EXPECT_EQ(r5.certificate.kind, CertificateKind::Hensel);
    EXPECT_EQ(*r5.certificate.residue, FieldElement(Q, 2));
    EXPECT_EQ(r5.certificate.precision, 1);

    auto r3 = has_root_in_closure(above(Q, 3), poly(Q, "X^2 + 1"));
    EXPECT_FALSE(r3.has_root);
    EXPECT_EQ(r3.certificate.kind, CertificateKind::Exhausted);

    auto r55 = has_root_in_closure(above(Q, 5), poly(Q, "X^2 - 5"));
    EXPECT_FALSE(r55.has_root);
    EXPECT_EQ(r55.certificate.kind, CertificateKind::SlopeObstruction);
}

TEST(Closure, OrderingExamples)
{
    FieldPtr Q = rationals();
    Prime inf = real_embeddings(Q)[0];
    for (const char* a : {"X^3 - 2", "X^3 + 7", "X^3 - 1/3"}) {
        auto r = has_root_in_closure(inf, poly(Q, a));
        EXPECT_TRUE(r.has_root);
        EXPECT_EQ(r.certificate.kind, CertificateKind::Sturm);
    }
    EXPECT_FALSE(has_root_in_closure(inf, poly(Q, "X^2 + 1")).has_root);
    EXPECT_TRUE(has_root_in_closure(inf, poly(Q, "X^4 - 2*X^2 + 1")).has_root);
}

TEST(Closure, Errors)
{
    FieldPtr Q = rationals();
    try {
        has_root_in_closure(above(Q, 5), poly(Q, "2*X^2 + 1"));
        FAIL();
    } catch (const DomainError& e) {
        EXPECT_EQ(e.code(), ErrorCode::NonMonic);
    }
    try {
        padic_root(primes_above(Q, 3)[0], poly(Q, "X^2 + 1"), 1);
        FAIL();
    } catch (const DomainError& e) {
        EXPECT_EQ(e.code(), ErrorCode::NoRoot);
    }
}

TEST(Closure, PadicRootExamples)
{
    FieldPtr Q = rationals();
    PValuation P5 = primes_above(Q, 5)[0];
    EXPECT_EQ(padic_root(P5, poly(Q, "X^2 + 1"), 3), FieldElement(Q, 57));
    EXPECT_EQ(padic_root(P5, poly(Q, "X^2 + 1"), 1), FieldElement(Q, 2));
    EXPECT_EQ(padic_root(P5, poly(Q, "X^2 + 1"), 2), FieldElement(Q, 7));
}

TEST(Closure, PadicRootPostcondition)
{
    FieldPtr K = nf_create("X^2 + 1");
    KPoly g = poly(K, "X^2 - 3");
    for (const PValuation& P : primes_above(K, 13)) {
        for (long k = 1; k <= 8; ++k) {
            FieldElement x = padic_root(P, g, k);
            Valuation v = valuation(P, g(x));
            EXPECT_TRUE(!v || *v >= k);
        }
    }
    // non-integral roots: X^2 - 36/25 has roots 6/5 and -6/5 at 7
    FieldPtr Q = rationals();
    PValuation P7 = primes_above(Q, 7)[0];
    KPoly h = poly(Q, "X^2 - 36/25");
    EXPECT_TRUE(has_root_in_closure(Prime(P7), h).has_root);
    // at 5 the roots have valuation -1 and the search runs on a scaled polynomial
    PValuation P5 = primes_above(Q, 5)[0];
    auto r = has_root_in_closure(Prime(P5), h);
    EXPECT_TRUE(r.has_root);
    EXPECT_EQ(r.certificate.scale_exponent, 1);
    FieldElement x = padic_root(P5, h, 4);
    EXPECT_GE(*valuation(P5, h(x)), 4);
}

TEST(Closure, MonotonePrefixes)
{
    FieldPtr Q = rationals();
    for (std::uint64_t p : {5u, 13u}) {
        PValuation P = primes_above(Q, p)[0];
        FieldElement prev(Q, 0);
        for (long k = 1; k <= 6; ++k) {
            FieldElement x = padic_root(P, poly(Q, "X^2 + 1"), k);
            if (k > 1) {
                Valuation v = valuation(P, x - prev);
                EXPECT_TRUE(!v || *v >= k - 1);
            }
            prev = x;
        }
    }
}

TEST(Closure, ExtensionFieldPrimes)
{
    FieldPtr K = nf_create("X^2 + 1");
    // i is a square in Q_p(i) iff ... check X^2 - i at the split primes above 5 and 13 against Q
    for (std::uint64_t p : {5u, 13u, 17u}) {
        for (const PValuation& P : primes_above(K, p)) {
            auto r = has_root_in_closure(Prime(P), poly(K, "X^2 - [0, 1]"));
            // completion is Q_p with i -> r, r a root of X^2 + 1 mod p
            FFieldElement ibar = residue(P, FieldElement::alpha(K));
            bool square = ibar.pow((P.residue_field()->order() - 1) / 2).is_one();
            EXPECT_EQ(r.has_root, square);
        }
    }
    // inert prime 3: residue field F_9 where every element of F_3 is a square
    PValuation P3 = primes_above(K, 3)[0];
    EXPECT_TRUE(has_root_in_closure(Prime(P3), poly(K, "X^2 + 1")).has_root);
    EXPECT_TRUE(has_root_in_closure(Prime(P3), poly(K, "X^2 - 2")).has_root);
    // ramified prime: (1 + i) is a uniformizer so X^2 - (1 + i) has slope 1/2
    PValuation P2 = primes_above(K, 2)[0];
    auto r2 = has_root_in_closure(Prime(P2), poly(K, "X^2 - [1, 1]"));
    EXPECT_FALSE(r2.has_root);
    EXPECT_EQ(r2.certificate.kind, CertificateKind::SlopeObstruction);
}

TEST(Closure, AgreesWithBruteForceSample)
{
    std::mt19937_64 rng(43);
    FieldPtr Q = rationals();
    for (int trial = 0; trial < 400; ++trial) {
        std::int64_t p = std::vector<std::int64_t>{2, 3, 5, 7}[rng() % 4];
        int deg = 1 + static_cast<int>(rng() % 3);
        std::vector<std::int64_t> c(static_cast<std::size_t>(deg) + 1);
        std::vector<Rational> q;
        for (int i = 0; i < deg; ++i) {
            c[static_cast<std::size_t>(i)] = static_cast<std::int64_t>(rng() % 11) - 5;
            q.emplace_back(c[static_cast<std::size_t>(i)]);
        }
        c.back() = 1;
        q.emplace_back(1);
        KPoly g(Q, QPoly(q));
        bool expected = oracle::padic_root_mod_p12(c, p);
        bool got = has_root_in_closure(above(Q, static_cast<std::uint64_t>(p)), g).has_root;
        EXPECT_EQ(got, expected) << g << " at " << p;
    }
}
