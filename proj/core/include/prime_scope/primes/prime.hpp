#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "prime_scope/field/ordering.hpp"
#include "prime_scope/primes/pvaluation.hpp"

namespace prime_scope {

/// A prime of K: an ordering or a p-valuation.
using Prime = std::variant<Ordering, PValuation>;

/// A rational place: a prime number, or infinity when p == 0.
struct Place {
    std::uint64_t p = 0;
    bool infinite() const { return p == 0; }
    static Place infinity() { return {}; }
    static Place finite(std::uint64_t prime) { return {prime}; }
};

const FieldPtr& field_of(const Prime& P);
std::string describe(const Prime& P);

/// Membership in the valuation ring, or in the positive cone for orderings.
bool in_ring(const Prime& P, const FieldElement& x);

/// Primes of type <= tau (exact: type == tau) above a finite p; at infinity
/// every ordering regardless of tau.
std::vector<Prime> primes_of_type(const FieldPtr& field, Place place, PrimeType tau, bool exact);

/// Membership of P in the set cut out by t and s: t^e / p and s are units
/// and s^n - 1 is a unit for every proper divisor n of p^f - 1, with
/// (e, f) = tau. Always true for orderings.
bool chi_member(const Prime& P, PrimeType tau, const FieldElement& t, const FieldElement& s);

/// x lies in the valuation ring of every prime of type <= tau above the place.
bool holomorphy_member(const FieldPtr& field, Place place, PrimeType tau, const FieldElement& x);

enum class LocalBehavior { Split, Inert, Ramified };
std::string to_string(LocalBehavior b);
LocalBehavior parse_local_behavior(const std::string& text);

/// Behaviour of the prime P in K(sqrt d), read off from v_P(d) and the
/// residue of the unit part (p odd).
LocalBehavior quadratic_behavior(const PValuation& P, const FieldElement& d);

struct StepConstraint {
    std::size_t prime_index;
    LocalBehavior behavior;
};

struct QuadraticStep {
    FieldElement d;
    FieldPtr extension;      // absolute field of K(sqrt d)
    long primitive_multiplier; // extension is generated by alpha + k sqrt(d)
    std::vector<std::size_t> primes_above_in_extension; // per constrained prime
    long candidates_examined;
};

/// Least integral d (canonical order) such that each constrained prime above
/// p behaves as requested in K(sqrt d), verified by splitting p in the
/// extension. Errors: NoneWithinBound, Unsupported (degree > 4),
/// InvalidArgument (p = 2).
QuadraticStep quadratic_step_search(const FieldPtr& field, std::uint64_t p,
                                    const std::vector<StepConstraint>& constraints, long height_bound);

} // namespace prime_scope
