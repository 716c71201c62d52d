#include <gtest/gtest.h>

#include <random>

#include "prime_scope/dense/dense.hpp"
#include "prime_scope/errors.hpp"

using namespace prime_scope;

namespace {

FieldElement q(const FieldPtr& K, long n, long d = 1) { return FieldElement(K, make_rational(n, d)); }

ErrorCode code_of(const std::function<void()>& f)
{
    try {
        f();
    } catch (const DomainError& e) {
        return e.code();
    }
    ADD_FAILURE() << "no DomainError";
    return ErrorCode::InvalidArgument;
}

} // namespace

TEST(Ball, Membership)
{
    FieldPtr Q = rationals();
    Prime P5 = primes_above(Q, 5)[0];
    Prime inf = real_embeddings(Q)[0];
    EXPECT_TRUE(ball_member({P5, q(Q, 0), q(Q, 5)}, q(Q, 50)));
    EXPECT_FALSE(ball_member({P5, q(Q, 0), q(Q, 5)}, q(Q, 5)));
    EXPECT_TRUE(ball_member({inf, q(Q, 0), q(Q, 1, 10)}, q(Q, 1, 100)));
    EXPECT_FALSE(ball_member({inf, q(Q, 0), q(Q, 1, 10)}, q(Q, -1, 10)));
    EXPECT_EQ(code_of([&] { ball_member({P5, q(Q, 0), q(Q, 0)}, q(Q, 1)); }), ErrorCode::InvalidArgument);
}

TEST(DWitness, Examples)
{
    FieldPtr Q = rationals();
    KPoly g = KPoly::parse(Q, "X^2 + 1");
    WitnessReport r = d_witness(primes_above(Q, 5)[0], g, q(Q, 125));
    EXPECT_EQ(*r.witness, q(Q, 57));
    ASSERT_EQ(r.verified_at.size(), 1u);
    EXPECT_TRUE(r.verified_at[0].passed);

    // least-height rational near sqrt 2 with |x^2 - 2| <= 1/100
    WitnessReport s = d_witness(real_embeddings(Q)[0], KPoly::parse(Q, "X^2 - 2"), q(Q, 1, 100));
    EXPECT_EQ(*s.witness, q(Q, 17, 12));
    EXPECT_TRUE(d_condition(real_embeddings(Q)[0], KPoly::parse(Q, "X^2 - 2"), q(Q, 1, 100), q(Q, 707, 500)));

    EXPECT_EQ(code_of([&] { d_witness(primes_above(Q, 3)[0], g, q(Q, 3)); }), ErrorCode::NoRootInClosure);
}

TEST(DWitness, GeneratedCasesVerify)
{
    std::mt19937_64 rng(7);
    FieldPtr Q = rationals();
    FieldPtr Ki = nf_create("X^2 + 1");
    int done = 0;
    for (int trial = 0; done < 40 && trial < 2000; ++trial) {
        FieldPtr K = trial % 2 ? Ki : Q;
        std::uint64_t p = std::vector<std::uint64_t>{3, 5, 7, 13, 17, 29}[rng() % 6];
        auto Ps = primes_above(K, p);
        const PValuation& P = Ps[rng() % Ps.size()];
        std::vector<Rational> c;
        int deg = 1 + static_cast<int>(rng() % 3);
        for (int i = 0; i < deg; ++i)
            c.emplace_back(static_cast<long>(rng() % 21) - 10);
        c.emplace_back(1);
        KPoly g(K, QPoly(c));
        if (!has_root_in_closure(Prime(P), g).has_root)
            continue;
        long k = static_cast<long>(rng() % 13);
        FieldElement a = FieldElement(K, pow_rational(Rational(static_cast<unsigned long>(p)), k)) * q(K, 2);
        WitnessReport r = d_witness(Prime(P), g, a);
        ASSERT_TRUE(r.witness);
        EXPECT_TRUE(d_condition(Prime(P), g, a, *r.witness));
        ++done;
    }
    EXPECT_EQ(done, 40);
}

TEST(DWitness, OrderingCasesVerify)
{
    FieldPtr K = nf_create("X^2 - 2");
    KPoly g = KPoly::parse(K, "X^3 - [0, 1]");
    for (const Ordering& O : real_embeddings(K)) {
        for (long d : {1L, 1000L, 1000000L}) {
            WitnessReport r = d_witness(O, g, q(K, 1, d));
            EXPECT_TRUE(d_condition(O, g, q(K, 1, d), *r.witness));
        }
    }
}

TEST(WeakApprox, Examples)
{
    FieldPtr K = nf_create("X^2 + 1");
    auto P = primes_above(K, 5);
    FieldElement z = weak_approx_value(K, {{{P[0]}, q(K, 5)}, {{P[1]}, q(K, 1)}});
    EXPECT_EQ(z, FieldElement(K, {Rational(2), Rational(1)}));

    FieldElement z2 = weak_approx_value(K, {{{P[0]}, q(K, 25)}, {{P[1]}, q(K, 1)}});
    EXPECT_EQ(valuation_of_nonzero(P[0], z2), 2);
    EXPECT_EQ(valuation_of_nonzero(P[1], z2), 0);

    FieldElement t(K, {Rational(3), Rational(-7, 5)});
    FieldElement z3 = weak_approx_value(K, {{{P[0], P[1]}, t}});
    for (const PValuation& Pi : P)
        EXPECT_EQ(valuation_of_nonzero(Pi, z3), valuation_of_nonzero(Pi, t));

    EXPECT_EQ(code_of([&] { weak_approx_value(K, {{{P[0]}, q(K, 5)}, {{P[0]}, q(K, 1)}}); }), ErrorCode::NonDisjoint);
}

TEST(WeakApprox, PermutationInvariantAndCrtFallback)
{
    FieldPtr K = nf_create("X^3 - 2");
    std::mt19937_64 rng(11);
    for (std::uint64_t p : {5u, 31u}) {
        auto P = primes_above(K, p);
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<std::pair<PValuation, long>> t;
            for (const PValuation& Pi : P)
                t.emplace_back(Pi, static_cast<long>(rng() % 9) - 4);
            FieldElement a = weak_approx_valuations(K, t);
            std::reverse(t.begin(), t.end());
            FieldElement b = weak_approx_valuations(K, t);
            for (const auto& [Pi, n] : t) {
                EXPECT_EQ(valuation_of_nonzero(Pi, a), n);
                EXPECT_EQ(valuation_of_nonzero(Pi, b), n);
            }
        }
    }
    DenseOptions no_search;
    no_search.search_elements = 0;
    auto P = primes_above(K, 5);
    FieldElement z = weak_approx_valuations(K, {{P[0], 3}, {P[1], -2}}, no_search);
    EXPECT_EQ(valuation_of_nonzero(P[0], z), 3);
    EXPECT_EQ(valuation_of_nonzero(P[1], z), -2);
}

TEST(SimultaneousBall, Examples)
{
    FieldPtr Q = rationals();
    Prime P5 = primes_above(Q, 5)[0];
    Prime inf = real_embeddings(Q)[0];
    RationalFunction id = RationalFunction::identity(Q);
    WitnessReport r = simultaneous_ball(Q, {{{P5, q(Q, 2), q(Q, 25)}, id}, {{inf, q(Q, 2), q(Q, 10)}, id}}, {});
    EXPECT_EQ(*r.witness, q(Q, 2));

    std::vector<BallConstraint> far{{{P5, q(Q, 2), q(Q, 5)}, id}, {{inf, q(Q, 7, 5), q(Q, 1, 2)}, id}};
    WitnessReport f = simultaneous_ball(Q, far, {});
    for (const BallConstraint& c : far)
        EXPECT_TRUE(ball_member(c.ball, *f.witness));

    EXPECT_EQ(*simultaneous_ball(Q, {}, {}).witness, q(Q, 0));

    FieldPtr K = nf_create("X^2 + 1");
    auto P = primes_above(K, 5);
    FieldElement i = FieldElement::alpha(K);
    RationalFunction idK = RationalFunction::identity(K);
    std::vector<BallConstraint> cs{{{P[0], i, q(K, 5)}, idK}, {{P[1], -i, q(K, 5)}, idK}};
    WitnessReport w = simultaneous_ball(K, cs, {});
    for (const BallConstraint& c : cs)
        EXPECT_TRUE(ball_member(c.ball, *w.witness));

    EXPECT_EQ(code_of([&] { simultaneous_ball(Q, far, {{P5, q(Q, 3)}, {inf, q(Q, 7, 5)}}); }),
              ErrorCode::LocalWitnessInvalid);
}

TEST(SimultaneousBall, TwoOrderingsAndPrimes)
{
    FieldPtr K = nf_create("X^2 - 2");
    auto O = real_embeddings(K);
    auto P7 = primes_above(K, 7);
    RationalFunction id = RationalFunction::identity(K);
    std::vector<BallConstraint> cs{{{O[0], q(K, 0), q(K, 1, 10)}, id},
                                   {{O[1], q(K, 5), q(K, 1, 10)}, id},
                                   {{P7[0], q(K, 1), q(K, 49)}, id},
                                   {{primes_above(K, 3)[0], q(K, 2, 3), q(K, 3)}, id}};
    WitnessReport w = simultaneous_ball(K, cs, {});
    for (const BallConstraint& c : cs)
        EXPECT_TRUE(ball_member(c.ball, *w.witness));
}

TEST(UDWitness, Examples)
{
    FieldPtr K = nf_create("X^2 + 1");
    std::vector<Prime> S;
    for (const PValuation& P : primes_above(K, 13))
        S.push_back(P);
    KPoly g = KPoly::parse(K, "X^2 - 3");
    WitnessReport r = ud_witness(K, S, g, q(K, 169));
    EXPECT_EQ(*r.witness, q(K, 108));
    ASSERT_EQ(r.verified_at.size(), 2u);

    FieldPtr Q = rationals();
    std::vector<Prime> S3{primes_above(Q, 3)[0]};
    WitnessReport none = ud_witness(Q, S3, KPoly::parse(Q, "X^2 + 1"), q(Q, 9));
    EXPECT_EQ(*none.witness, q(Q, 0));
    EXPECT_TRUE(none.verified_at.empty());

    std::vector<Prime> mixed{primes_above(Q, 5)[0], real_embeddings(Q)[0]};
    WitnessReport m = ud_witness(Q, mixed, KPoly::parse(Q, "X^2 + 1"), q(Q, 25));
    EXPECT_EQ(*m.witness, q(Q, 7));
    EXPECT_EQ(m.verified_at.size(), 1u);
}

TEST(UDWitness, RandomTwoPrimeCasesImplyD)
{
    std::mt19937_64 rng(19);
    FieldPtr K = nf_create("X^2 + 1");
    int done = 0;
    for (int trial = 0; done < 10 && trial < 500; ++trial) {
        std::uint64_t p = std::vector<std::uint64_t>{5, 13, 17, 29}[rng() % 4];
        std::vector<Prime> S;
        for (const PValuation& P : primes_above(K, p))
            S.push_back(P);
        KPoly g(K, QPoly({static_cast<long>(rng() % 21) - 10, static_cast<long>(rng() % 5) - 2, 1}));
        FieldElement a = FieldElement(K, pow_rational(Rational(static_cast<unsigned long>(p)), rng() % 4));
        WitnessReport r = ud_witness(K, S, g, a);
        for (const Prime& P : S)
            if (has_root_in_closure(P, g).has_root) {
                EXPECT_TRUE(d_condition(P, g, a, *r.witness));
                ++done;
            }
    }
    EXPECT_GE(done, 10);
}

TEST(ZGroup, Examples)
{
    FieldPtr Q = rationals();
    ZGroupWitness w = zgroup_witness(Q, 5, {1, 1}, 2, q(Q, 5));
    ASSERT_EQ(w.x.size(), 2u);
    EXPECT_EQ(w.x[0], q(Q, 1));
    EXPECT_EQ(w.x[1], q(Q, 1, 5));
    EXPECT_EQ(w.valuations[0], (std::vector<long>{1, 0}));

    ZGroupWitness one = zgroup_witness(Q, 7, {1, 1}, 1, q(Q, 1));
    EXPECT_EQ(one.x, std::vector<FieldElement>{q(Q, 1)});

    FieldPtr K = nf_create("X^2 + 1");
    ZGroupWitness g = zgroup_witness(K, 5, {1, 1}, 2, FieldElement(K, {Rational(2), Rational(1)}));
    ASSERT_EQ(g.primes.size(), 2u);
    EXPECT_NE(g.valuations[0], g.valuations[1]);
    for (const auto& row : g.valuations) {
        EXPECT_GE(*std::min_element(row.begin(), row.end()), 0);
        EXPECT_EQ(*std::min_element(row.begin(), row.end()), 0);
    }
}

TEST(ZGroup, RandomInputsHaveZeroMinimum)
{
    std::mt19937_64 rng(23);
    FieldPtr K = nf_create("X^2 + 1");
    for (int trial = 0; trial < 30; ++trial) {
        std::uint64_t p = std::vector<std::uint64_t>{2, 3, 5}[rng() % 3];
        PrimeType tau = p == 2 ? PrimeType{2, 1} : PrimeType{1, 2};
        unsigned n = 1 + static_cast<unsigned>(rng() % 4);
        FieldElement y(K, {make_rational(static_cast<long>(rng() % 200) - 100, 1 + static_cast<long>(rng() % 30)),
                           Rational(static_cast<long>(rng() % 7) - 3)});
        if (y.is_zero())
            continue;
        ZGroupWitness w = zgroup_witness(K, p, tau, n, y);
        for (const auto& row : w.valuations)
            EXPECT_EQ(*std::min_element(row.begin(), row.end()), 0);
    }
}
