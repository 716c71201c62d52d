#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "prime_scope/exact/ffield.hpp"
#include "prime_scope/exact/fp_poly.hpp"
#include "prime_scope/exact/zmod_poly.hpp"
#include "prime_scope/field/number_field.hpp"

namespace prime_scope {

/// Relative type tau = (e, f); (e', f') <= (e, f) iff e' <= e and f' | f.
struct PrimeType {
    unsigned e = 1;
    unsigned f = 1;
    friend bool operator==(const PrimeType&, const PrimeType&) = default;
};
bool type_le(const PrimeType& lower, const PrimeType& upper);
std::string to_string(const PrimeType& t);

/// v(x); std::nullopt stands for +infinity (x = 0).
using Valuation = std::optional<long>;

namespace detail {
struct Splitting;
}

/// A prime of K above p given by an irreducible factor h of the defining
/// polynomial modulo p. Valuations are normalized so that v(p) = e.
class PValuation {
public:
    const FieldPtr& field() const;
    std::uint64_t p() const;
    unsigned e() const;
    unsigned f() const;
    PrimeType type() const { return {e(), f()}; }
    /// Position in the canonical order of the primes above p.
    std::size_t index() const { return index_; }
    /// Monic irreducible h with h^e the local factor modulo p.
    const FpPoly& local_factor() const;
    const FieldElement& uniformizer() const;
    const std::shared_ptr<const FiniteField>& residue_field() const;
    /// Residue of alpha: the least root of h in the residue field.
    const FFieldElement& alpha_residue() const;
    /// All primes above the same p, in canonical order.
    std::vector<PValuation> siblings() const;

    /// Monic p-adic factor of the defining polynomial, modulo p^n.
    ZPoly lifted_factor(unsigned n) const;
    /// Element of Z[alpha], modulo p^n, that is 1 at this prime and 0 at
    /// the other primes above p.
    ZPoly idempotent(unsigned n) const;

    /// True when both primes lie above the same p in the same field handle.
    bool same_splitting(const PValuation& o) const { return split_ == o.split_; }

    /// Same prime of the same field; fields compare by defining polynomial.
    friend bool operator==(const PValuation& a, const PValuation& b);

    PValuation(std::shared_ptr<detail::Splitting> split, std::size_t index)
        : split_(std::move(split)), index_(index)
    {
    }

private:
    std::shared_ptr<detail::Splitting> split_;
    std::size_t index_;
};

/// Primes above p, one per irreducible factor of the defining polynomial
/// mod p, sorted by local factor. IndexDivisible when Dedekind's criterion
/// fails at p; InvalidArgument when p is not prime.
std::vector<PValuation> primes_above(const FieldPtr& field, std::uint64_t p);

Valuation valuation(const PValuation& P, const FieldElement& x);
/// Valuation of a nonzero element; ZeroElement on zero.
long valuation_of_nonzero(const PValuation& P, const FieldElement& x);

/// Residue class in the residue field; NegativeValuation if v(x) < 0.
FFieldElement residue(const PValuation& P, const FieldElement& x);

/// Image of a P-integral x in (Z/p^n)[X]/(F_P), F_P the lifted factor.
/// NegativeValuation if x is not P-integral.
ZPoly local_image(const PValuation& P, const FieldElement& x, unsigned n);

/// Element of Z[alpha] (coordinates in [0, p^n)) congruent to each target
/// modulo p^n at its prime and to 0 modulo p^n at unlisted primes above p.
/// All primes must lie above the same p; targets must be integral there.
FieldElement local_crt(const std::vector<std::pair<PValuation, FieldElement>>& targets, unsigned n);

/// local_crt with a single target.
FieldElement truncate(const PValuation& P, const FieldElement& x, unsigned n);

} // namespace prime_scope
