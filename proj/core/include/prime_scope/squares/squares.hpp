#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "prime_scope/dense/dense.hpp"

namespace prime_scope {

struct SquareDecomposition {
    Rational input;
    std::vector<Rational> parts; // empty for 0, otherwise four entries
};

/// Four rational squares summing to q, from a decomposition of num * den.
/// Integers up to 10^12 use a greedy deterministic search (largest first
/// part); larger ones a seeded randomized descent. Errors: Negative.
SquareDecomposition four_squares(const Rational& q, std::uint64_t seed = 0);

/// Four integer squares summing to n >= 0.
std::vector<Integer> four_squares_integer(const Integer& n, std::uint64_t seed = 0);

/// Two squares a^2 + b^2 = n with a >= b >= 0, if any.
std::optional<std::pair<Integer, Integer>> two_squares(const Integer& n);

/// x is nonnegative at every ordering of K, i.e. a sum of squares in K.
bool r_infinity_member(const FieldPtr& field, const FieldElement& x);

struct KochenValue {
    std::uint64_t p = 0;
    FieldElement input;
    std::optional<FieldElement> value; // nullopt: (x^p - x)^2 = 1
};

/// gamma(x) = (1/p) (x^p - x) / ((x^p - x)^2 - 1).
KochenValue kochen(std::uint64_t p, const FieldElement& x);

/// 1 if -1 is a square in F_{p^f}, else 2; by brute force over the field.
unsigned level_finite_field(std::uint64_t p, unsigned f);

enum class ShortRepresentation { Certified, CounterexampleFound };
std::string to_string(ShortRepresentation r);

struct ShortRepresentationReport {
    ShortRepresentation outcome = ShortRepresentation::Certified;
    unsigned residue_level = 0;
    long candidates = 0;
    std::vector<FieldElement> counterexample; // x, y_1, ..., y_{s-1}
};

/// Searches x, y_1..y_{s-1} of height level <= bound with
/// eps^2 = g(x)^2 + sum y_j^2, after validating that g is P-integral with
/// rootless reduction, v_P(eps) > 0 and 2 <= s <= level of the residue
/// field. Over Q the last y is solved for by an exact square test.
/// Errors: PreconditionViolated (clause names the failed condition).
ShortRepresentationReport no_short_representation_check(const PValuation& P, const KPoly& g, const FieldElement& eps,
                                                        unsigned s, long height_bound);

/// x with eps^2 - g(x)^2 totally nonnegative, g of odd degree.
/// Errors: InvalidArgument (even degree), NoneWithinBound.
WitnessReport d_sos_witness(const FieldPtr& field, const KPoly& g, const FieldElement& eps,
                            const DenseOptions& options = {});

} // namespace prime_scope
