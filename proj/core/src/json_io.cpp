#include "prime_scope/io/json.hpp"

#include <array>

namespace prime_scope::io {

namespace {

template <class E, std::size_t N>
E enum_from_name(const std::array<E, N>& values, const std::string& name, const char* what)
{
    for (E v : values)
        if (to_string(v) == name)
            return v;
    raise(ErrorCode::SyntaxError, std::string("unknown ") + what + " '" + name + "'");
}

constexpr std::array<CertificateKind, 4> certificate_kinds{CertificateKind::Hensel, CertificateKind::SlopeObstruction,
                                                           CertificateKind::Exhausted, CertificateKind::Sturm};
constexpr std::array<Verdict, 3> verdicts{Verdict::Proven, Verdict::Refuted, Verdict::Unknown};
constexpr std::array<ShortRepresentation, 2> short_outcomes{ShortRepresentation::Certified,
                                                            ShortRepresentation::CounterexampleFound};

Json elements(const std::vector<FieldElement>& xs)
{
    Json out = Json::array();
    for (const FieldElement& x : xs)
        out.push_back(to_json(x));
    return out;
}

std::vector<FieldElement> elements_from(const FieldPtr& field, const Json& j)
{
    std::vector<FieldElement> out;
    for (const Json& x : j)
        out.push_back(element_from_json(field, x));
    return out;
}

Json rational(const Rational& q) { return to_string(q); }
Rational rational_from(const Json& j) { return parse_rational(j.get<std::string>()); }

} // namespace

Json to_json(const FieldPtr& field)
{
    Json j;
    j["poly"] = field->to_string();
    j["degree"] = field->degree();
    j["poly_discriminant"] = to_string(field->poly_discriminant());
    return j;
}

FieldPtr field_from_json(const Json& j)
{
    const Json& poly = j.is_object() ? j.at("poly") : j;
    return nf_create(poly.get<std::string>());
}

Json to_json(const FieldElement& x) { return x.to_string(); }

FieldElement element_from_json(const FieldPtr& field, const Json& j)
{
    return FieldElement::parse(field, j.get<std::string>());
}

Json to_json(const PrimeType& tau) { return Json{{"e", tau.e}, {"f", tau.f}}; }

PrimeType type_from_json(const Json& j) { return {j.at("e").get<unsigned>(), j.at("f").get<unsigned>()}; }

Json to_json(const Prime& P)
{
    Json j;
    if (const auto* o = std::get_if<Ordering>(&P)) {
        j["kind"] = "ordering";
        j["field"] = o->field()->to_string();
        j["index"] = o->index();
        j["interval"] = Json::array({rational(o->lo()), rational(o->hi())});
        return j;
    }
    const auto& v = std::get<PValuation>(P);
    j["kind"] = "p-valuation";
    j["field"] = v.field()->to_string();
    j["p"] = v.p();
    j["index"] = v.index();
    j["type"] = to_json(v.type());
    j["local_factor"] = v.local_factor().to_string();
    j["uniformizer"] = to_json(v.uniformizer());
    return j;
}

Prime prime_from_json(const Json& j)
{
    FieldPtr field = nf_create(j.at("field").get<std::string>());
    auto index = j.at("index").get<std::size_t>();
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "ordering") {
        auto orderings = real_embeddings(field);
        if (index >= orderings.size())
            raise(ErrorCode::InvalidArgument, "ordering index out of range");
        return orderings[index];
    }
    if (kind != "p-valuation")
        raise(ErrorCode::SyntaxError, "unknown prime kind '" + kind + "'");
    auto primes = primes_above(field, j.at("p").get<std::uint64_t>());
    if (index >= primes.size())
        raise(ErrorCode::InvalidArgument, "prime index out of range");
    return primes[index];
}

Json to_json(const RootReport& r)
{
    const RootCertificate& c = r.certificate;
    Json cert;
    cert["kind"] = to_string(c.kind);
    cert["residue"] = c.residue ? to_json(*c.residue) : Json(nullptr);
    cert["precision"] = c.precision;
    cert["value_valuation"] = c.value_valuation;
    cert["derivative_valuation"] = c.derivative_valuation;
    cert["scale_exponent"] = c.scale_exponent;
    cert["slopes"] = Json::array();
    for (const Rational& s : c.slopes)
        cert["slopes"].push_back(rational(s));
    cert["discriminant_valuation"] = c.discriminant_valuation;
    cert["depth"] = c.depth;
    cert["classes_examined"] = c.classes_examined;
    cert["real_root_count"] = c.real_root_count;

    Json j;
    j["field"] = r.squarefree.field()->to_string();
    j["has_root"] = r.has_root;
    j["squarefree"] = r.squarefree.to_string();
    j["certificate"] = cert;
    return j;
}

RootReport root_report_from_json(const Json& j)
{
    FieldPtr field = nf_create(j.at("field").get<std::string>());
    RootReport r{j.at("has_root").get<bool>(), KPoly::parse(field, j.at("squarefree").get<std::string>()), {}};
    const Json& cert = j.at("certificate");
    RootCertificate& c = r.certificate;
    c.kind = enum_from_name(certificate_kinds, cert.at("kind").get<std::string>(), "certificate kind");
    if (!cert.at("residue").is_null())
        c.residue = element_from_json(field, cert.at("residue"));
    c.precision = cert.at("precision").get<long>();
    c.value_valuation = cert.at("value_valuation").get<long>();
    c.derivative_valuation = cert.at("derivative_valuation").get<long>();
    c.scale_exponent = cert.at("scale_exponent").get<long>();
    for (const Json& s : cert.at("slopes"))
        c.slopes.push_back(rational_from(s));
    c.discriminant_valuation = cert.at("discriminant_valuation").get<long>();
    c.depth = cert.at("depth").get<long>();
    c.classes_examined = cert.at("classes_examined").get<std::size_t>();
    c.real_root_count = cert.at("real_root_count").get<std::size_t>();
    return r;
}

Json to_json(const WitnessReport& r)
{
    Json j;
    j["witness"] = r.witness ? to_json(*r.witness) : Json(nullptr);
    j["verified_at"] = Json::array();
    for (const PrimeCheck& c : r.verified_at)
        j["verified_at"].push_back(Json{{"prime", c.prime}, {"value", to_json(c.value)}, {"passed", c.passed}});
    j["stats"] = Json{{"bound", r.stats.bound}, {"steps", r.stats.steps}};
    return j;
}

WitnessReport witness_report_from_json(const FieldPtr& field, const Json& j)
{
    WitnessReport r;
    if (!j.at("witness").is_null())
        r.witness = element_from_json(field, j.at("witness"));
    for (const Json& c : j.at("verified_at"))
        r.verified_at.push_back(
            {c.at("prime").get<std::string>(), element_from_json(field, c.at("value")), c.at("passed").get<bool>()});
    r.stats.bound = j.at("stats").at("bound").get<long>();
    r.stats.steps = j.at("stats").at("steps").get<long>();
    return r;
}

Json to_json(const ZGroupWitness& w)
{
    Json j;
    j["x"] = elements(w.x);
    j["primes"] = Json::array();
    for (const PValuation& P : w.primes)
        j["primes"].push_back(to_json(Prime(P)));
    j["valuations"] = w.valuations;
    return j;
}

ZGroupWitness zgroup_from_json(const Json& j)
{
    ZGroupWitness w;
    for (const Json& P : j.at("primes"))
        w.primes.push_back(std::get<PValuation>(prime_from_json(P)));
    FieldPtr field = w.primes.empty() ? rationals() : w.primes.front().field();
    w.x = elements_from(field, j.at("x"));
    w.valuations = j.at("valuations").get<std::vector<std::vector<long>>>();
    return w;
}

Json to_json(const SquareDecomposition& d)
{
    Json j;
    j["input"] = rational(d.input);
    j["parts"] = Json::array();
    for (const Rational& q : d.parts)
        j["parts"].push_back(rational(q));
    return j;
}

SquareDecomposition squares_from_json(const Json& j)
{
    SquareDecomposition d{rational_from(j.at("input")), {}};
    for (const Json& q : j.at("parts"))
        d.parts.push_back(rational_from(q));
    return d;
}

Json to_json(const KochenValue& k)
{
    Json j;
    j["field"] = k.input.field()->to_string();
    j["p"] = k.p;
    j["input"] = to_json(k.input);
    j["value"] = k.value ? to_json(*k.value) : Json(nullptr);
    return j;
}

KochenValue kochen_from_json(const Json& j)
{
    FieldPtr field = nf_create(j.at("field").get<std::string>());
    KochenValue k{j.at("p").get<std::uint64_t>(), element_from_json(field, j.at("input")), std::nullopt};
    if (!j.at("value").is_null())
        k.value = element_from_json(field, j.at("value"));
    return k;
}

Json to_json(const ShortRepresentationReport& r)
{
    Json j;
    j["outcome"] = to_string(r.outcome);
    j["residue_level"] = r.residue_level;
    j["candidates"] = r.candidates;
    j["counterexample"] = elements(r.counterexample);
    return j;
}

ShortRepresentationReport short_report_from_json(const FieldPtr& field, const Json& j)
{
    ShortRepresentationReport r;
    r.outcome = enum_from_name(short_outcomes, j.at("outcome").get<std::string>(), "outcome");
    r.residue_level = j.at("residue_level").get<unsigned>();
    r.candidates = j.at("candidates").get<long>();
    r.counterexample = elements_from(field, j.at("counterexample"));
    return r;
}

Json to_json(const Formula& f)
{
    Json j;
    j["formula"] = print(f);
    j["free_variables"] = free_variables(f);
    j["quantifiers"] = quantifier_count(f);
    return j;
}

FormulaPtr formula_from_json(const Json& j) { return parse_formula(j.at("formula").get<std::string>()); }

Json to_json(const EvalVerdict& v)
{
    Json j;
    j["verdict"] = to_string(v.verdict);
    j["bound"] = v.bound;
    j["evidence"] = Json::array();
    for (const auto& [name, x] : v.evidence)
        j["evidence"].push_back(Json{{"variable", name}, {"value", to_json(x)}});
    return j;
}

EvalVerdict verdict_from_json(const FieldPtr& field, const Json& j)
{
    EvalVerdict v;
    v.verdict = enum_from_name(verdicts, j.at("verdict").get<std::string>(), "verdict");
    v.bound = j.at("bound").get<long>();
    for (const Json& e : j.at("evidence"))
        v.evidence.emplace_back(e.at("variable").get<std::string>(), element_from_json(field, e.at("value")));
    return v;
}

Json to_json(const PhiN& phi)
{
    Json j;
    j["p"] = phi.p;
    j["f_abs"] = phi.f_abs;
    j["n"] = phi.n;
    j["g"] = phi.g.to_string();
    j["phi"] = phi.phi.to_string();
    return j;
}

PhiN phi_from_json(const Json& j)
{
    PhiN phi = build_phi_n(j.at("p").get<std::uint64_t>(), j.at("f_abs").get<unsigned>(), j.at("n").get<unsigned>());
    if (phi.g.to_string() != j.at("g").get<std::string>() || phi.phi.to_string() != j.at("phi").get<std::string>())
        raise(ErrorCode::InvalidArgument, "phi_n record does not match its parameters");
    return phi;
}

Json to_json(const QuadraticStep& step)
{
    Json j;
    j["d"] = to_json(step.d);
    j["extension"] = to_json(step.extension);
    j["primitive_multiplier"] = step.primitive_multiplier;
    j["primes_above_in_extension"] = step.primes_above_in_extension;
    j["candidates_examined"] = step.candidates_examined;
    return j;
}

QuadraticStep step_from_json(const FieldPtr& field, const Json& j)
{
    QuadraticStep s{element_from_json(field, j.at("d")), field_from_json(j.at("extension")),
                    j.at("primitive_multiplier").get<long>(),
                    j.at("primes_above_in_extension").get<std::vector<std::size_t>>(),
                    j.at("candidates_examined").get<long>()};
    return s;
}

Json to_json(const NuProof& proof, const FieldPtr& field)
{
    Json j;
    j["field"] = field->to_string();
    j["verdict"] = to_string(proof.verdict);
    j["sentence"] = proof.sentence ? print(*proof.sentence) : "";
    j["cases"] = Json::array();
    for (const NuCase& c : proof.cases) {
        Json k;
        k["class_valuations"] = c.class_valuations;
        k["y"] = to_json(c.y);
        k["x"] = elements(c.x);
        k["phi_value"] = to_json(c.phi_value);
        k["holds"] = c.holds;
        j["cases"].push_back(k);
    }
    return j;
}

NuProof nu_proof_from_json(const Json& j)
{
    FieldPtr field = nf_create(j.at("field").get<std::string>());
    NuProof proof;
    proof.verdict = enum_from_name(verdicts, j.at("verdict").get<std::string>(), "verdict");
    if (!j.at("sentence").get<std::string>().empty())
        proof.sentence = parse_formula(j.at("sentence").get<std::string>());
    for (const Json& k : j.at("cases")) {
        NuCase c;
        c.class_valuations = k.at("class_valuations").get<std::vector<long>>();
        c.y = element_from_json(field, k.at("y"));
        c.x = elements_from(field, k.at("x"));
        c.phi_value = element_from_json(field, k.at("phi_value"));
        c.holds = k.at("holds").get<bool>();
        proof.cases.push_back(std::move(c));
    }
    return proof;
}

Json to_json(const DomainError& e)
{
    Json j;
    j["error"] = std::string(error_code_name(e.code()));
    j["detail"] = e.detail();
    if (e.clause())
        j["clause"] = *e.clause();
    return j;
}

DomainError error_from_json(const Json& j)
{
    const std::string name = j.at("error").get<std::string>();
    for (int c = 0; c <= static_cast<int>(ErrorCode::InvalidArgument); ++c) {
        auto code = static_cast<ErrorCode>(c);
        if (error_code_name(code) == name) {
            std::optional<std::string> clause;
            if (j.contains("clause"))
                clause = j.at("clause").get<std::string>();
            return DomainError(code, j.at("detail").get<std::string>(), clause);
        }
    }
    raise(ErrorCode::SyntaxError, "unknown error code '" + name + "'");
}

} // namespace prime_scope::io
