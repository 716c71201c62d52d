#pragma once

#include <nlohmann/json.hpp>

#include "prime_scope/closure/closure.hpp"
#include "prime_scope/dense/dense.hpp"
#include "prime_scope/errors.hpp"
#include "prime_scope/formula/emit.hpp"
#include "prime_scope/formula/formula.hpp"
#include "prime_scope/primes/prime.hpp"
#include "prime_scope/squares/squares.hpp"

namespace prime_scope::io {

/// Keys keep insertion order so printed output is stable.
using Json = nlohmann::ordered_json;

// Field elements are written with to_string() and read back against a field
// carried by the enclosing object.

Json to_json(const FieldPtr& field);
FieldPtr field_from_json(const Json& j);

Json to_json(const FieldElement& x);
FieldElement element_from_json(const FieldPtr& field, const Json& j);

Json to_json(const PrimeType& tau);
PrimeType type_from_json(const Json& j);

Json to_json(const Prime& P);
Prime prime_from_json(const Json& j);

Json to_json(const RootReport& r);
RootReport root_report_from_json(const Json& j);

Json to_json(const WitnessReport& r);
WitnessReport witness_report_from_json(const FieldPtr& field, const Json& j);

Json to_json(const ZGroupWitness& w);
ZGroupWitness zgroup_from_json(const Json& j);

Json to_json(const SquareDecomposition& d);
SquareDecomposition squares_from_json(const Json& j);

Json to_json(const KochenValue& k);
KochenValue kochen_from_json(const Json& j);

Json to_json(const ShortRepresentationReport& r);
ShortRepresentationReport short_report_from_json(const FieldPtr& field, const Json& j);

Json to_json(const Formula& f);
FormulaPtr formula_from_json(const Json& j);

Json to_json(const EvalVerdict& v);
EvalVerdict verdict_from_json(const FieldPtr& field, const Json& j);

Json to_json(const PhiN& phi);
PhiN phi_from_json(const Json& j);

Json to_json(const QuadraticStep& step);
QuadraticStep step_from_json(const FieldPtr& field, const Json& j);

Json to_json(const NuProof& proof, const FieldPtr& field);
NuProof nu_proof_from_json(const Json& j);

Json to_json(const DomainError& e);
DomainError error_from_json(const Json& j);

} // namespace prime_scope::io
