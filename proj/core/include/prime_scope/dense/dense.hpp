#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "prime_scope/closure/closure.hpp"
#include "prime_scope/field/kpoly.hpp"
#include "prime_scope/primes/prime.hpp"

namespace prime_scope {

/// B_P(y, z): x with v_P(x - y) > v_P(z), or |x - y| < |z| at an ordering.
struct Ball {
    Prime prime;
    FieldElement center;
    FieldElement radius; // nonzero
};

/// InvalidArgument when the radius is zero.
bool ball_member(const Ball& b, const FieldElement& x);

struct PrimeCheck {
    std::string prime;  // describe() of the prime
    FieldElement value; // the element whose membership was checked
    bool passed = false;
};

struct SearchStats {
    long bound = 0;
    long steps = 0;
};

struct WitnessReport {
    std::optional<FieldElement> witness;
    std::vector<PrimeCheck> verified_at;
    SearchStats stats;
};

struct DenseOptions {
    ClosureOptions closure;
    long step_budget = 200000;    // Stern-Brocot steps toward a real root
    long search_elements = 4000;  // canonical search before falling back to CRT
    int refinement_rounds = 60;   // precision increments in simultaneous_ball
};

/// 1 - g(x)^2 / a^2 lies in O_P (the positive cone at an ordering).
bool d_condition(const Prime& P, const KPoly& g, const FieldElement& a, const FieldElement& x);

/// x with 1 - g(x)^2 a^-2 in O_P. p-adic: padic_root at k = v(a); ordering:
/// Stern-Brocot descent toward a real root of g, least height over all roots.
/// Errors: NoRootInClosure, PrecisionOverflow.
WitnessReport d_witness(const Prime& P, const KPoly& g, const FieldElement& a, const DenseOptions& options = {});

struct ValuePart {
    std::vector<PValuation> primes;
    FieldElement target;
};

/// z with v_P(z) = v_P(target_i) for every P in part i. All primes lie above
/// one p. Errors: NonDisjoint, InvalidArgument (mixed p), ZeroElement.
FieldElement weak_approx_value(const FieldPtr& field, const std::vector<ValuePart>& parts,
                               const DenseOptions& options = {});

/// z with prescribed integer valuations at distinct primes above one p.
FieldElement weak_approx_valuations(const FieldPtr& field, const std::vector<std::pair<PValuation, long>>& targets,
                                    const DenseOptions& options = {});

/// num / den, evaluated where den does not vanish.
struct RationalFunction {
    KPoly num;
    std::optional<KPoly> den;
    static RationalFunction identity(const FieldPtr& field) { return {KPoly::x(field), std::nullopt}; }
    /// nullopt where den vanishes.
    std::optional<FieldElement> operator()(const FieldElement& x) const;
};

struct BallConstraint {
    Ball ball;
    RationalFunction gamma;
};

/// Single x with gamma_j(x) in ball_j for all j, merged from the local
/// solutions by CRT across p-adic primes and a Z[1/q]-translation for the
/// orderings. Every prime with a constraint needs a local solution; when
/// `local` is empty, ball centers are used (identity gamma only).
/// Errors: LocalWitnessInvalid, NoneWithinBound.
WitnessReport simultaneous_ball(const FieldPtr& field, const std::vector<BallConstraint>& constraints,
                                const std::vector<std::pair<Prime, FieldElement>>& local,
                                const DenseOptions& options = {});

/// Uniform witness over the primes of S at which g has a closure root.
WitnessReport ud_witness(const FieldPtr& field, const std::vector<Prime>& S, const KPoly& g, const FieldElement& a,
                         const DenseOptions& options = {});

struct ZGroupWitness {
    std::vector<FieldElement> x;
    std::vector<PValuation> primes;              // S_p^tau(K)
    std::vector<std::vector<long>> valuations;   // v_P(y^{e!} p^i x_i^n) per prime, per i
};

/// x_0..x_{n-1} with v_P(y^{e!} p^i x_i^n) >= 0 for all i and = 0 for some i,
/// at every prime above p of type <= tau. Errors: IndexDivisible, ZeroElement.
ZGroupWitness zgroup_witness(const FieldPtr& field, std::uint64_t p, PrimeType tau, unsigned n,
                             const FieldElement& y, const DenseOptions& options = {});

bool same_prime(const Prime& a, const Prime& b);

} // namespace prime_scope
