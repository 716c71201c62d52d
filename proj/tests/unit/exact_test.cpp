#include <gtest/gtest.h>

#include <random>

#include "prime_scope/errors.hpp"
#include "prime_scope/exact/ffield.hpp"
#include "prime_scope/exact/fp_poly.hpp"
#include "prime_scope/exact/qpoly.hpp"
#include "prime_scope/exact/rational.hpp"

using namespace prime_scope;

namespace {

FpPoly fp(std::uint64_t p, std::vector<std::uint64_t> c) { return FpPoly(p, std::move(c)); }

FpPoly expand(const std::vector<FpFactor>& fs, std::uint64_t p)
{
    FpPoly acc = FpPoly::constant(p, 1);
    for (const auto& f : fs)
        for (unsigned i = 0; i < f.multiplicity; ++i)
            acc = acc * f.factor;
    return acc;
}

} // namespace

TEST(Rational, ParseAndPrint)
{
    EXPECT_EQ(to_string(parse_rational("6/4")), "3/2");
    EXPECT_EQ(to_string(parse_rational("-7")), "-7");
    EXPECT_THROW(parse_rational("1/0"), DomainError);
    EXPECT_THROW(parse_rational("abc"), DomainError);
}

TEST(Rational, Valuation)
{
    EXPECT_EQ(padic_valuation(Rational(50, 3), Integer(5)), 2);
    EXPECT_EQ(padic_valuation(Rational(3, 50), Integer(5)), -2);
    try {
        padic_valuation(Rational(0), Integer(5));
        FAIL();
    } catch (const DomainError& e) {
        EXPECT_EQ(e.code(), ErrorCode::ZeroElement);
    }
}

TEST(Rational, FactorInteger)
{
    auto fs = factor_integer(Integer(360));
    ASSERT_EQ(fs.size(), 3u);
    EXPECT_EQ(fs[0].first, 2);
    EXPECT_EQ(fs[0].second, 3u);
    EXPECT_EQ(fs[2].first, 5);
}

TEST(QPoly, ParseRoundTrip)
{
    QPoly f = QPoly::parse("X^2 - X + 1");
    EXPECT_EQ(f, QPoly({1, -1, 1}));
    EXPECT_EQ(QPoly::parse(f.to_string()), f);
    EXPECT_THROW(QPoly::parse("X^^2"), DomainError);
}

TEST(QPoly, ResultantAndDiscriminant)
{
    EXPECT_EQ(discriminant(QPoly({1, 0, 1})), Rational(-4));
    EXPECT_EQ(discriminant(QPoly({-2, 0, 0, 1})), Rational(-108));
    // Res(X^2+1, X-2) = 5
    EXPECT_EQ(resultant(QPoly({1, 0, 1}), QPoly({-2, 1})), Rational(5));
}

TEST(QPoly, XgcdBezout)
{
    QPoly a({-1, 0, 0, 1}), b({-1, 0, 1});
    auto r = xgcd(a, b);
    EXPECT_EQ(r.g, QPoly({-1, 1}));
    EXPECT_EQ(r.s * a + r.t * b, r.g);
}

TEST(FpPoly, FactorExamples)
{
    auto f5 = poly_factor_mod_p(QPoly({1, 0, 1}), 5);
    ASSERT_EQ(f5.size(), 2u);
    EXPECT_EQ(f5[0].factor, fp(5, {2, 1}));
    EXPECT_EQ(f5[1].factor, fp(5, {3, 1}));
    EXPECT_EQ(f5[0].multiplicity, 1u);

    auto f2 = poly_factor_mod_p(QPoly({1, 0, 1}), 2);
    ASSERT_EQ(f2.size(), 1u);
    EXPECT_EQ(f2[0].factor, fp(2, {1, 1}));
    EXPECT_EQ(f2[0].multiplicity, 2u);

    EXPECT_THROW(poly_factor_mod_p(QPoly({1, 0, 1}), 4), DomainError);
}

TEST(FpPoly, FactorReexpandsRandom)
{
    std::mt19937_64 rng(7);
    const std::uint64_t primes[] = {2, 3, 5, 7, 11, 13, 101};
    for (int trial = 0; trial < 1000; ++trial) {
        std::uint64_t p = primes[rng() % 7];
        std::size_t deg = 1 + rng() % 8;
        std::vector<std::uint64_t> c(deg + 1);
        for (auto& x : c)
            x = rng() % p;
        c.back() = 1;
        FpPoly f = fp(p, c);
        auto fs = factor(f);
        EXPECT_EQ(expand(fs, p), f);
        for (const auto& x : fs)
            EXPECT_TRUE(is_irreducible(x.factor));
        for (std::size_t i = 1; i < fs.size(); ++i)
            EXPECT_TRUE(fs[i - 1].factor < fs[i].factor);
    }
}

TEST(FpPoly, IrreducibleLexLeast)
{
    EXPECT_EQ(irreducible_poly(2, 2), QPoly({1, 1, 1}));
    EXPECT_EQ(irreducible_poly(3, 1), QPoly({0, 1}));
    EXPECT_EQ(irreducible_poly(3, 2), QPoly({1, 0, 1}));
    EXPECT_EQ(irreducible_poly(5, 2), QPoly({1, 1, 1}));
    // brute-force oracle: the first irreducible in lowest-first lex order
    for (std::uint64_t p : {2u, 3u, 5u}) {
        for (unsigned d = 1; d <= 3; ++d) {
            std::vector<std::uint64_t> c(d + 1, 0);
            c[d] = 1;
            FpPoly found;
            bool done = false;
            std::size_t total = 1;
            for (unsigned i = 0; i < d; ++i)
                total *= p;
            for (std::size_t code = 0; code < total && !done; ++code) {
                // c0 is the most significant digit
                std::size_t k = code;
                for (unsigned i = d; i-- > 0;) {
                    c[i] = k % p;
                    k /= p;
                }
                FpPoly cand = fp(p, c);
                bool has_factor = false;
                for (const auto& f : factor(cand))
                    if (f.factor.degree() < static_cast<int>(d))
                        has_factor = true;
                if (!has_factor) {
                    found = cand;
                    done = true;
                }
            }
            EXPECT_EQ(irreducible_poly_mod_p(p, d), found) << p << " " << d;
        }
    }
}

TEST(FpPoly, Cyclotomic)
{
    EXPECT_EQ(cyclotomic(6), QPoly({1, -1, 1}));
    for (unsigned n = 1; n <= 30; ++n) {
        QPoly prod({1});
        for (unsigned d = 1; d <= n; ++d)
            if (n % d == 0)
                prod = prod * cyclotomic(d);
        EXPECT_EQ(prod, QPoly::monomial(Rational(1), n) - QPoly::constant(Rational(1)));
    }
}

TEST(FiniteField, OrderExample)
{
    auto f5 = FiniteField::get(5, 1);
    EXPECT_EQ(ffield_order(FFieldElement(f5, 2)), 4);
    EXPECT_THROW(ffield_order(FFieldElement(f5, 0)), DomainError);
}

TEST(FiniteField, OrderDividesGroupOrder)
{
    for (auto [p, f] : {std::pair{2u, 3u}, {3u, 2u}, {5u, 2u}, {7u, 1u}}) {
        auto field = FiniteField::get(p, f);
        Integer q1 = field->order() - 1;
        for (const auto& x : all_elements(field)) {
            if (x.is_zero())
                continue;
            Integer k = ffield_order(x);
            EXPECT_EQ(q1 % k, 0);
            EXPECT_TRUE(x.pow(k).is_one());
            EXPECT_EQ(x * x.inverse(), FFieldElement(field, 1));
        }
    }
}

TEST(FiniteField, RootsMatchBruteForce)
{
    std::mt19937_64 rng(11);
    for (auto [p, f] : {std::pair{2u, 2u}, {3u, 2u}, {5u, 1u}, {2u, 3u}, {3u, 3u}}) {
        auto field = FiniteField::get(p, f);
        auto elems = all_elements(field);
        for (int t = 0; t < 30; ++t) {
            std::size_t deg = 1 + rng() % 5;
            std::vector<std::uint64_t> c(deg + 1);
            for (auto& x : c)
                x = rng() % p;
            c.back() = 1;
            FpPoly h(p, c);
            std::vector<FFieldElement> expected;
            for (const auto& x : elems)
                if (evaluate(h, x).is_zero())
                    expected.push_back(x);
            EXPECT_EQ(roots_in(h, field), expected);
        }
    }
}
