#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "prime_scope/primes/prime.hpp"

namespace prime_scope {

struct Term;
using TermPtr = std::shared_ptr<const Term>;

/// Ring term with constants from K (stored as power-basis coordinates) and a
/// formal inverse. Sub and Pow are printing conveniences over + and *.
struct Term {
    enum class Kind { Constant, Variable, Add, Sub, Mul, Inv, Pow };
    Kind kind = Kind::Constant;
    std::vector<Rational> value; // Constant
    std::string name;            // Variable
    std::vector<TermPtr> args;   // Add, Mul: two or more; Sub: two; Inv, Pow: one
    unsigned exponent = 0;       // Pow

    static TermPtr constant(std::vector<Rational> coords);
    static TermPtr constant(const Rational& q) { return constant(std::vector<Rational>{q}); }
    static TermPtr constant(const FieldElement& x) { return constant(x.coords()); }
    static TermPtr variable(std::string name);
    static TermPtr add(std::vector<TermPtr> args);
    static TermPtr sub(TermPtr a, TermPtr b);
    static TermPtr mul(std::vector<TermPtr> args);
    static TermPtr inv(TermPtr a);
    static TermPtr pow(TermPtr a, unsigned exponent);
};

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

/// First-order formula over the ring language with the unary predicate R.
/// Unit(t) abbreviates R(t) and R(t^-1). Hat is an unexpanded placeholder for
/// the localized formula of a prime p and type tau; it is never evaluated.
struct Formula {
    enum class Kind { True, False, Eq, R, Unit, Not, And, Or, Implies, Forall, Exists, Hat };
    Kind kind = Kind::True;
    std::vector<TermPtr> terms;   // Eq: two; R, Unit: one
    std::vector<FormulaPtr> subs; // Not, Forall, Exists, Hat: one; Implies: two; And, Or: one or more
    std::string var;              // Forall, Exists
    std::uint64_t p = 0;          // Hat
    PrimeType tau;                // Hat

    static FormulaPtr truth(bool value);
    static FormulaPtr eq(TermPtr a, TermPtr b);
    static FormulaPtr r(TermPtr t);
    static FormulaPtr unit(TermPtr t);
    static FormulaPtr negation(FormulaPtr f);
    /// A single conjunct is returned as is; no conjuncts give True.
    static FormulaPtr conjunction(std::vector<FormulaPtr> fs);
    static FormulaPtr disjunction(std::vector<FormulaPtr> fs);
    static FormulaPtr implies(FormulaPtr a, FormulaPtr b);
    static FormulaPtr forall(std::string var, FormulaPtr body);
    static FormulaPtr exists(std::string var, FormulaPtr body);
    static FormulaPtr hat(std::uint64_t p, PrimeType tau, FormulaPtr body);
};

std::string print(const Term& t);
std::string print(const Formula& f);
/// SyntaxError with the byte position of the problem.
TermPtr parse_term(std::string_view text);
FormulaPtr parse_formula(std::string_view text);

bool operator==(const Term& a, const Term& b);
bool operator==(const Formula& a, const Formula& b);

bool is_quantifier_free(const Formula& f);
std::vector<std::string> free_variables(const Formula& f);
std::size_t quantifier_count(const Formula& f);

/// Replaces free occurrences of the named variables by constants and drops
/// the quantifiers that bind them.
FormulaPtr instantiate(const FormulaPtr& f, const std::map<std::string, FieldElement>& values);

/// Interpretation of R over K.
struct Interpretation {
    FieldPtr field;
    std::function<bool(const FieldElement&)> R;
};

/// R = R_p^tau(K), the holomorphy domain.
Interpretation holomorphy_interpretation(const FieldPtr& field, Place place, PrimeType tau);
/// R = O_P for one prime (the positive cone at an ordering).
Interpretation prime_interpretation(const Prime& P);

using Assignment = std::map<std::string, FieldElement>;

/// Errors: InverseOfZero, InvalidArgument (unbound variable or a constant
/// with more coordinates than the degree).
FieldElement eval_term(const Term& t, const FieldPtr& field, const Assignment& env = {});
/// Errors: InverseOfZero, InvalidArgument (quantifier), Unsupported (Hat).
bool eval_qf(const Interpretation& I, const Formula& f, const Assignment& env = {});
bool eval_qf(const FieldPtr& field, Place place, PrimeType tau, const Formula& f);

enum class Verdict { Proven, Refuted, Unknown };
std::string to_string(Verdict v);

struct EvalVerdict {
    Verdict verdict = Verdict::Unknown;
    long bound = 0;
    /// Witnesses (Proven) or counterexamples (Refuted) of the decisive
    /// quantifiers, outermost first.
    std::vector<std::pair<std::string, FieldElement>> evidence;
};

/// Three-valued evaluation: existential quantifiers are settled by a
/// verified witness, universal ones by a verified counterexample, both
/// searched in canonical order up to the height bound; everything else is
/// Unknown.
EvalVerdict eval_bounded(const Interpretation& I, const Formula& f, long height_bound);
EvalVerdict eval_bounded(const FieldPtr& field, Place place, PrimeType tau, const Formula& f, long height_bound);

} // namespace prime_scope
