#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "prime_scope/dense/dense.hpp"
#include "prime_scope/formula/formula.hpp"

namespace prime_scope {

/// Polynomial in X1..Xn with integer coefficients, keyed by exponent vector.
struct MPoly {
    unsigned nvars = 0;
    std::map<std::vector<unsigned>, Integer> terms;

    static MPoly variable(unsigned i, unsigned nvars); // X_{i+1}
    static MPoly constant(const Integer& c, unsigned nvars);
    unsigned total_degree() const;
    FieldElement operator()(const std::vector<FieldElement>& x) const;
    /// Terms by descending total degree, then descending exponent vector.
    std::string to_string() const;
};

MPoly operator+(const MPoly& a, const MPoly& b);
MPoly operator*(const MPoly& a, const MPoly& b);
MPoly pow(const MPoly& a, unsigned k);

struct PhiN {
    std::uint64_t p = 0;
    unsigned f_abs = 1;
    unsigned n = 1;
    QPoly g;   // monic over Z, irreducible mod p of prime degree > f_abs
    MPoly phi; // phi_1 = X1, phi_n = phi_2(X1, phi_{n-1}(X2, ..., Xn))
};

/// Least prime greater than f.
unsigned phi_degree(unsigned f_abs);
PhiN build_phi_n(std::uint64_t p, unsigned f_abs, unsigned n);
/// Nested evaluation of phi_n, cheaper than expanding.
FieldElement evaluate_phi(const PhiN& phi, const std::vector<FieldElement>& x);
/// phi_n applied to the given terms, kept in nested form.
TermPtr phi_term(const PhiN& phi, const std::vector<TermPtr>& args);

/// Free variables t, s. At infinity the trivial formula t = t.
FormulaPtr emit_chi(Place place, PrimeType tau);
/// forall y != 0 exists x_0..x_{n-1} Rx(phi_n(y^{e!} p^i x_i^n)), with
/// phi_n built at f_abs = tau.f.
FormulaPtr emit_nu(std::uint64_t p, PrimeType tau, unsigned n);
/// The uniform denseness sentence with coefficient vector of length n; the
/// localized subformula is left as an unexpanded hat node.
FormulaPtr emit_psi(std::uint64_t p, PrimeType tau, unsigned n);

struct NuCase {
    std::vector<long> class_valuations; // v_P(y) per prime of S_p^tau(K)
    FieldElement y;
    std::vector<FieldElement> x;
    FieldElement phi_value;
    bool holds = false;
};

struct NuProof {
    Verdict verdict = Verdict::Unknown;
    FormulaPtr sentence;
    std::vector<NuCase> cases;
};

/// Decides emit_nu(p, tau, n) on (K, R_p^tau(K)). Whether the body holds at y
/// with the constructed witnesses depends only on the residues of v_P(y)
/// modulo n (multiplying y by w^n shifts every x_i by w^{-e!}, and the unit
/// test of phi_n depends only on valuations), so one y per residue vector is
/// instantiated and evaluated exactly. Proven iff every case holds.
NuProof prove_nu(const FieldPtr& field, std::uint64_t p, PrimeType tau, unsigned n, const DenseOptions& options = {});

} // namespace prime_scope
