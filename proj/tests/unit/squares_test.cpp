#include <gtest/gtest.h>

#include <optional>
#include <random>

#include "prime_scope/errors.hpp"
#include "prime_scope/squares/squares.hpp"

using namespace prime_scope;

namespace {

FieldElement q(const FieldPtr& K, long n, long d = 1) { return FieldElement(K, make_rational(n, d)); }

Rational sum_sq(const std::vector<Rational>& v)
{
    Rational s = 0;
    for (const Rational& x : v)
        s += x * x;
    return s;
}

} // namespace

TEST(FourSquares, Examples)
{
    EXPECT_EQ(four_squares(Rational(7)).parts, (std::vector<Rational>{2, 1, 1, 1}));
    EXPECT_TRUE(four_squares(Rational(0)).parts.empty());
    EXPECT_EQ(four_squares(Rational(1, 2)).parts,
              (std::vector<Rational>{Rational(1, 2), Rational(1, 2), Rational(0), Rational(0)}));
    try {
        four_squares(Rational(-1));
        FAIL();
    } catch (const DomainError& e) {
        EXPECT_EQ(e.code(), ErrorCode::Negative);
    }
}

TEST(FourSquares, ReconstructsIntegersAndRationals)
{
    for (long n = 0; n <= 2000; ++n) {
        SquareDecomposition d = four_squares(Rational(n));
        EXPECT_EQ(sum_sq(d.parts), Rational(n));
        EXPECT_LE(d.parts.size(), 4u);
    }
    std::mt19937_64 rng(1);
    for (int i = 0; i < 1000; ++i) {
        Rational r = make_rational(static_cast<long>(rng() % 100000), 1 + static_cast<long>(rng() % 5000));
        EXPECT_EQ(sum_sq(four_squares(r).parts), r);
    }
}

TEST(FourSquares, LargeInputsUseSeededDescent)
{
    Integer big("123456789012345678901234567");
    auto a = four_squares_integer(big, 9);
    auto b = four_squares_integer(big, 9);
    EXPECT_EQ(a, b);
    Integer s = 0;
    for (const Integer& t : a)
        s += t * t;
    EXPECT_EQ(s, big);
    Integer pow4 = Integer("1000000000000000000000") * 64;
    auto c = four_squares_integer(pow4, 3);
    s = 0;
    for (const Integer& t : c)
        s += t * t;
    EXPECT_EQ(s, pow4);
}

TEST(TwoSquares, Basic)
{
    EXPECT_EQ(two_squares(Integer(25))->first, 5);
    EXPECT_FALSE(two_squares(Integer(21)));
    EXPECT_EQ(two_squares(Integer(13))->second, 2);
}

TEST(RInfinity, Examples)
{
    FieldPtr K = nf_create("X^2 - 2");
    EXPECT_TRUE(r_infinity_member(K, FieldElement(K, {Rational(2), Rational(-1)})));
    EXPECT_FALSE(r_infinity_member(K, FieldElement::alpha(K)));
    EXPECT_FALSE(r_infinity_member(rationals(), q(rationals(), -1)));
    FieldPtr Ki = nf_create("X^2 + 1");
    EXPECT_TRUE(r_infinity_member(Ki, q(Ki, -1)));
}

TEST(RInfinity, AgreesWithBoundedSumOfSquaresSearch)
{
    // x = a + b sqrt 2 = (t + b/(2t) sqrt 2)^2 + r with r = a - t^2 - b^2/(2t^2) rational;
    // a representation exists once some t makes r >= 0, and r is then four rational squares
    FieldPtr K = nf_create("X^2 - 2");
    auto search = [&](const Rational& a, const Rational& b) -> std::optional<std::vector<FieldElement>> {
        if (b == 0) {
            if (a < 0)
                return std::nullopt;
            std::vector<FieldElement> parts;
            for (const Rational& c : four_squares(a).parts)
                parts.emplace_back(K, c);
            return parts;
        }
        for (long d = 1; d <= 40; ++d)
            for (long n = 1; n <= 4 * d; ++n) {
                Rational t = make_rational(n, d);
                Rational r = a - t * t - b * b / (2 * t * t);
                if (r < 0)
                    continue;
                std::vector<FieldElement> parts{FieldElement(K, {t, b / (2 * t)})};
                for (const Rational& c : four_squares(r).parts)
                    parts.emplace_back(K, c);
                return parts;
            }
        return std::nullopt;
    };
    std::mt19937_64 rng(11);
    auto small = [&] {
        return make_rational(static_cast<long>(rng() % 101) - 50, 1 + static_cast<long>(rng() % 50));
    };
    int positive = 0;
    for (int i = 0; i < 400; ++i) {
        Rational a = small(), b = small();
        FieldElement x(K, {a, b});
        bool member = r_infinity_member(K, x);
        auto rep = search(a, b);
        if (rep) {
            FieldElement sum = FieldElement(K, Rational(0));
            for (const FieldElement& y : *rep)
                sum = sum + y * y;
            EXPECT_EQ(sum, x);
        }
        EXPECT_EQ(member, rep.has_value()) << x;
        positive += member;
    }
    EXPECT_GT(positive, 50);
}

TEST(Kochen, Examples)
{
    FieldPtr Q = rationals();
    EXPECT_EQ(*kochen(3, q(Q, 2)).value, q(Q, 2, 35));
    EXPECT_EQ(*kochen(3, q(Q, 1)).value, q(Q, 0));
    EXPECT_EQ(*kochen(3, q(Q, 1, 3)).value, q(Q, 72, 665));
    EXPECT_EQ(valuation_of_nonzero(primes_above(Q, 3)[0], *kochen(3, q(Q, 1, 3)).value), 2);
}

TEST(Kochen, IntegralAtDegreeOnePrimes)
{
    std::mt19937_64 rng(29);
    FieldPtr Q = rationals();
    for (int i = 0; i < 2000; ++i) {
        std::uint64_t p = std::vector<std::uint64_t>{2, 3, 5, 7}[rng() % 4];
        FieldElement x = q(Q, static_cast<long>(rng() % 2001) - 1000, 1 + static_cast<long>(rng() % 500));
        KochenValue k = kochen(p, x);
        if (!k.value)
            continue;
        Valuation v = valuation(primes_above(Q, p)[0], *k.value);
        EXPECT_TRUE(!v || *v >= 0) << p << " " << x;
    }
    FieldPtr K = nf_create("X^2 + 1");
    for (int i = 0; i < 300; ++i) {
        std::uint64_t p = std::vector<std::uint64_t>{5, 13}[rng() % 2];
        FieldElement x(K, {make_rational(static_cast<long>(rng() % 61) - 30, 1 + static_cast<long>(rng() % 30)),
                           make_rational(static_cast<long>(rng() % 61) - 30, 1 + static_cast<long>(rng() % 30))});
        KochenValue k = kochen(p, x);
        if (!k.value)
            continue;
        for (const PValuation& P : primes_above(K, p)) {
            Valuation v = valuation(P, *k.value);
            EXPECT_TRUE(!v || *v >= 0) << describe(P) << " " << x;
        }
    }
}

TEST(Kochen, RankOneFormFailsAtInertPrime)
{
    // residue field F_9: x^3 - x does not vanish mod P for x = i
    FieldPtr K = nf_create("X^2 + 1");
    KochenValue k = kochen(3, FieldElement::alpha(K));
    EXPECT_EQ(valuation_of_nonzero(primes_above(K, 3)[0], *k.value), -1);
}

TEST(Level, Examples)
{
    EXPECT_EQ(level_finite_field(3, 1), 2u);
    EXPECT_EQ(level_finite_field(5, 1), 1u);
    EXPECT_EQ(level_finite_field(3, 2), 1u);
    EXPECT_EQ(level_finite_field(2, 3), 1u);
    for (std::uint64_t p = 3; p < 200; p += 2)
        if (is_prime(p))
            EXPECT_EQ(level_finite_field(p, 1) == 1, p % 4 == 1) << p;
}

TEST(ShortRepresentation, Examples)
{
    FieldPtr Q = rationals();
    PValuation P3 = primes_above(Q, 3)[0];
    auto r = no_short_representation_check(P3, KPoly::parse(Q, "X^2 + 1"), q(Q, 3), 2, 60);
    EXPECT_EQ(r.outcome, ShortRepresentation::Certified);
    EXPECT_EQ(r.residue_level, 2u);
    EXPECT_GT(r.candidates, 1000);

    auto clause = [&](const std::function<void()>& f) {
        try {
            f();
        } catch (const DomainError& e) {
            EXPECT_EQ(e.code(), ErrorCode::PreconditionViolated);
            return e.clause().value_or("");
        }
        return std::string("none");
    };
    PValuation P5 = primes_above(Q, 5)[0];
    EXPECT_EQ(clause([&] { no_short_representation_check(P5, KPoly::parse(Q, "X^2 + 2"), q(Q, 5), 2, 10); }),
              "s-level");
    EXPECT_EQ(clause([&] { no_short_representation_check(P3, KPoly::parse(Q, "X - 1"), q(Q, 3), 2, 10); }),
              "g-rootless");
    EXPECT_EQ(clause([&] { no_short_representation_check(P3, KPoly::parse(Q, "X^2 + 1"), q(Q, 1), 2, 10); }),
              "eps-valuation");
    EXPECT_EQ(clause([&] { no_short_representation_check(P3, KPoly::parse(Q, "X^2 + 1/3"), q(Q, 3), 2, 10); }),
              "g-integral");
}

TEST(ShortRepresentation, NeverFailsOnValidInputs)
{
    FieldPtr Q = rationals();
    for (std::uint64_t p : {3u, 7u, 11u}) {
        PValuation P = primes_above(Q, p)[0];
        for (long c = 1; c < static_cast<long>(p); ++c) {
            KPoly g(Q, QPoly({c, 0, 1}));
            if (!is_irreducible(FpPoly::reduce(g.to_qpoly(), p)))
                continue;
            for (long k = 1; k <= 2; ++k) {
                auto r = no_short_representation_check(P, g, FieldElement(Q, pow_rational(Rational(static_cast<long>(p)), k)), 2, 25);
                EXPECT_EQ(r.outcome, ShortRepresentation::Certified);
            }
        }
    }
    FieldPtr K = nf_create("X^2 - 2");
    PValuation P3 = primes_above(K, 3)[0]; // inert, residue field F_9 has level 1
    EXPECT_EQ(P3.f(), 2u);
    try {
        no_short_representation_check(P3, KPoly::parse(K, "X^3 + 2*X + 1"), q(K, 3), 2, 3);
        FAIL();
    } catch (const DomainError& e) {
        EXPECT_EQ(*e.clause(), "s-level");
    }
}

TEST(DSos, Examples)
{
    FieldPtr Q = rationals();
    WitnessReport r = d_sos_witness(Q, KPoly::parse(Q, "X^3 - 2"), q(Q, 1));
    EXPECT_EQ(*r.witness, q(Q, 1));
    FieldElement g54 = KPoly::parse(Q, "X^3 - 2")(q(Q, 5, 4));
    EXPECT_TRUE(r_infinity_member(Q, q(Q, 1) - g54 * g54));
    EXPECT_EQ(*d_sos_witness(Q, KPoly::parse(Q, "X"), q(Q, 1)).witness, q(Q, 0));

    FieldPtr K = nf_create("X^2 - 2");
    KPoly g = KPoly::parse(K, "X^3 - [0, 1]");
    WitnessReport w = d_sos_witness(K, g, q(K, 1, 10));
    ASSERT_EQ(w.verified_at.size(), 2u);
    for (const PrimeCheck& c : w.verified_at)
        EXPECT_TRUE(c.passed);
    EXPECT_THROW(d_sos_witness(Q, KPoly::parse(Q, "X^2 - 2"), q(Q, 1)), DomainError);
}
