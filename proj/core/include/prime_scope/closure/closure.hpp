#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "prime_scope/field/kpoly.hpp"
#include "prime_scope/primes/prime.hpp"

namespace prime_scope {

struct ClosureOptions {
    std::size_t class_cap = 200000; // surviving residue classes per level
    unsigned precision_cap = 1000;  // p-adic digits for Newton iteration
};

enum class CertificateKind { Hensel, SlopeObstruction, Exhausted, Sturm };
std::string to_string(CertificateKind k);

/// Evidence for a closure-root decision. For p-adic primes the search runs
/// on H(Y) = c^n s(Y/c), s the squarefree part of g and c = p^j making every
/// root of H integral; a Hensel residue y means a root of g near y / c.
struct RootCertificate {
    CertificateKind kind = CertificateKind::Sturm;
    std::optional<FieldElement> residue; // Hensel: class representative y
    long precision = 0;                  // Hensel: level k of the class y mod P^k
    long value_valuation = 0;            // Hensel: v(H(y)), or -1 for an exact root
    long derivative_valuation = 0;       // Hensel: v(H'(y))
    long scale_exponent = 0;             // c = p^scale_exponent
    std::vector<Rational> slopes;        // Newton polygon slopes of s
    long discriminant_valuation = 0;     // D = v(disc H)
    long depth = 0;                      // Exhausted: levels searched (2D + 1)
    std::size_t classes_examined = 0;
    std::size_t real_root_count = 0;     // Sturm
};

struct RootReport {
    bool has_root = false;
    KPoly squarefree;
    RootCertificate certificate;
};

/// Decides whether g (monic, nonconstant) has a root in the real or p-adic
/// closure of (K, P). NonMonic if g is not monic.
RootReport has_root_in_closure(const Prime& P, const KPoly& g, const ClosureOptions& options = {});

/// x in K with v_P(g(x)) >= k, by Newton iteration from the Hensel residue
/// and truncation back into K; the least truncation level that works is
/// returned. NoRoot when the closure has no root.
FieldElement padic_root(const PValuation& P, const KPoly& g, long k, const ClosureOptions& options = {});

/// Lower Newton polygon slopes of g at P, in increasing order.
std::vector<Rational> newton_slopes(const PValuation& P, const KPoly& g);

} // namespace prime_scope
