#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "prime_scope/io/json.hpp"
#include "prime_scope/suite/acceptance.hpp"

namespace prime_scope::cli {

namespace {

using io::Json;

struct Config {
    long height_bound = 1000;
    long precision_cap = 1000;
    std::uint64_t seed = 0;
    std::string output = "json";
};

struct Result {
    Json json;
    std::optional<std::string> text; // preferred rendering for --output text
    int exit_code = 0;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Place parse_place(const std::string& text)
{
    if (text == "inf" || text == "infinity")
        return Place::infinity();
    std::uint64_t p = 0;
    std::istringstream in(text);
    if (!(in >> p) || !in.eof() || !is_prime(p))
        throw UsageError("--p expects a prime or 'inf', got '" + text + "'");
    return Place::finite(p);
}

std::uint64_t finite_prime(const std::string& text)
{
    Place place = parse_place(text);
    if (place.infinite())
        throw UsageError("this command needs a finite prime");
    return place.p;
}

Prime prime_at(const FieldPtr& K, Place place, std::size_t index)
{
    if (place.infinite()) {
        auto orderings = real_embeddings(K);
        if (index >= orderings.size())
            raise(ErrorCode::InvalidArgument, "field has " + std::to_string(orderings.size()) + " orderings",
                  "index");
        return orderings[index];
    }
    auto primes = primes_above(K, place.p);
    if (index >= primes.size())
        raise(ErrorCode::InvalidArgument,
              "field has " + std::to_string(primes.size()) + " primes above " + std::to_string(place.p), "index");
    return primes[index];
}

std::vector<Prime> all_primes(const FieldPtr& K, Place place)
{
    std::vector<Prime> out;
    if (place.infinite())
        for (const Ordering& o : real_embeddings(K))
            out.emplace_back(o);
    else
        for (const PValuation& P : primes_above(K, place.p))
            out.emplace_back(P);
    return out;
}

PValuation pvaluation_at(const FieldPtr& K, const std::string& p, std::size_t index)
{
    return std::get<PValuation>(prime_at(K, Place::finite(finite_prime(p)), index));
}

std::vector<std::size_t> parse_indices(const std::string& text)
{
    std::vector<std::size_t> out;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ','))
        try {
            out.push_back(std::stoul(item));
        } catch (const std::exception&) {
            throw UsageError("bad index list '" + text + "'");
        }
    return out;
}

std::string read_formula_source(const std::string& text, const std::string& file)
{
    if (!file.empty()) {
        std::ifstream in(file);
        if (!in)
            throw UsageError("cannot read " + file);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    if (text.empty())
        throw UsageError("one of --formula or --file is required");
    return text;
}

void render_text(std::ostream& out, const Json& j, const std::string& indent)
{
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) {
            if (value.is_structured()) {
                out << indent << key << ":\n";
                render_text(out, value, indent + "  ");
            } else {
                out << indent << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
            }
        }
    } else if (j.is_array()) {
        for (const Json& value : j) {
            if (value.is_structured()) {
                out << indent << "-\n";
                render_text(out, value, indent + "  ");
            } else {
                out << indent << "- " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
            }
        }
    } else {
        out << indent << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

Result formula_result(const FormulaPtr& f)
{
    std::string text = print(*f) + "\n";
    return {io::to_json(*f), text};
}

void write_file(const std::string& path, const std::string& content)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw UsageError("cannot write " + path);
    out << content;
}

} // namespace

int run(int argc, char** argv, std::ostream& out, std::ostream& err)
{
    Config config;
    bool seed_given = false;
    std::function<Result()> action;

    CLI::App app{"Exact computations with orderings and p-valuations of number fields"};
    app.name("prime-scope");
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--height", config.height_bound, "height bound for searches")->capture_default_str();
    app.add_option("--precision", config.precision_cap, "p-adic precision cap in digits")->capture_default_str();
    app.add_option_function<std::uint64_t>(
           "--seed", [&](std::uint64_t s) { config.seed = s, seed_given = true; },
           "random seed (default 0, or PRIME_SCOPE_SEED)");
    app.add_option("--output", config.output, "output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();

    // shared option storage; each leaf binds the ones it needs
    std::string field_text = "X", p_text, poly_text, x_text, a_text, t_text, s_text, y_text, eps_text, q_text;
    std::string formula_text, formula_file, write_path, indices_text;
    std::size_t index = 0;
    unsigned e = 1, f = 1, n = 1, f_abs = 1, s_count = 2;
    long k = 0;
    std::vector<std::string> targets, constraints;
    std::vector<int> criteria_ids;

    auto field_opt = [&](CLI::App* c) {
        c->add_option("--field", field_text, "defining polynomial, e.g. \"X^2 + 1\"")->capture_default_str();
    };
    auto prime_opts = [&](CLI::App* c, bool finite_only) {
        c->add_option("--p", p_text, finite_only ? "rational prime" : "rational prime or inf")->required();
        c->add_option("--index", index, "index of the prime above p (or of the ordering)")->capture_default_str();
    };
    auto type_opts = [&](CLI::App* c) {
        c->add_option("--e", e, "ramification bound of the type")->capture_default_str();
        c->add_option("--f", f, "residue degree bound of the type")->capture_default_str();
    };
    auto field = [&] { return nf_create(field_text); };
    auto closure_options = [&] {
        ClosureOptions o;
        o.precision_cap = static_cast<unsigned>(config.precision_cap);
        return o;
    };
    auto dense_options = [&] {
        DenseOptions o;
        o.closure = closure_options();
        return o;
    };

    // field
    {
        auto* c = app.add_subcommand("field", "field invariants and real embeddings");
        field_opt(c);
        c->callback([&] {
            action = [&] {
                FieldPtr K = field();
                Json j = io::to_json(K);
                j["orderings"] = Json::array();
                for (const Ordering& o : real_embeddings(K))
                    j["orderings"].push_back(io::to_json(Prime(o)));
                return Result{j, std::nullopt};
            };
        });
    }
    // primes
    {
        auto* c = app.add_subcommand("primes", "primes of the field above p (or its orderings for inf)");
        field_opt(c);
        c->add_option("--p", p_text, "rational prime or inf")->required();
        c->callback([&] {
            action = [&] {
                FieldPtr K = field();
                Json j = Json::array();
                for (const Prime& P : all_primes(K, parse_place(p_text)))
                    j.push_back(io::to_json(P));
                return Result{j, std::nullopt};
            };
        });
    }
    // valuate
    {
        auto* c = app.add_subcommand("valuate", "valuation and residue of x at every prime above p");
        field_opt(c);
        c->add_option("--p", p_text, "rational prime")->required();
        c->add_option("--x", x_text, "field element (rational or [c0, c1, ...])")->required();
        c->callback([&] {
            action = [&] {
                FieldPtr K = field();
                FieldElement x = FieldElement::parse(K, x_text);
                Json j = Json::array();
                for (const PValuation& P : primes_above(K, finite_prime(p_text))) {
                    Valuation v = valuation(P, x);
                    Json row{{"prime", io::to_json(Prime(P))}, {"valuation", v ? Json(*v) : Json("inf")}};
                    row["residue"] = !v || *v >= 0 ? Json(residue(P, x).to_string()) : Json(nullptr);
                    j.push_back(row);
                }
                return Result{j, std::nullopt};
            };
        });
    }
    // chi
    {
        auto* c = app.add_subcommand("chi", "membership of (t, s) in the subbasis set of a prime");
        field_opt(c);
        prime_opts(c, true);
        type_opts(c);
        c->add_option("--t", t_text, "element t")->required();
        c->add_option("--s", s_text, "element s")->required();
        c->callback([&] {
            action = [&] {
                FieldPtr K = field();
                Prime P = prime_at(K, Place::finite(finite_prime(p_text)), index);
                bool member = chi_member(P, {e, f}, FieldElement::parse(K, t_text), FieldElement::parse(K, s_text));
                return Result{Json{{"prime", io::to_json(P)}, {"type", io::to_json(PrimeType{e, f})}, {"member", member}},
                              std::string(member ? "true\n" : "false\n")};
            };
        });
    }
    // holomorphy
    {
        auto* c = app.add_subcommand("holomorphy", "membership of x in the holomorphy domain R_p^tau");
        field_opt(c);
        c->add_option("--p", p_text, "rational prime or inf")->required();
        type_opts(c);
        c->add_option("--x", x_text, "field element")->required();
        c->callback([&] {
            action = [&] {
                FieldPtr K = field();
                bool member = holomorphy_member(K, parse_place(p_text), {e, f}, FieldElement::parse(K, x_text));
                return Result{Json{{"member", member}}, std::string(member ? "true\n" : "false\n")};
            };
        });
    }
    // closure
    {
        auto* c = app.add_subcommand("closure", "roots in real and p-adic closures");
        c->require_subcommand(1);
        auto* has = c->add_subcommand("has-root", "decide whether g has a root in the closure");
        field_opt(has);
        prime_opts(has, false);
        has->add_option("--poly", poly_text, "polynomial over the field")->required();
        has->callback([&] {
            action = [&] {
                FieldPtr K = field();
                Prime P = prime_at(K, parse_place(p_text), index);
                return Result{io::to_json(has_root_in_closure(P, KPoly::parse(K, poly_text), closure_options())),
                              std::nullopt};
            };
        });
        auto* root = c->add_subcommand("root", "approximate a p-adic root to valuation k");
        field_opt(root);
        prime_opts(root, true);
        root->add_option("--poly", poly_text, "polynomial over the field")->required();
        root->add_option("--k", k, "target valuation of g(x)")->required();
        root->callback([&] {
            action = [&] {
                FieldPtr K = field();
                PValuation P = pvaluation_at(K, p_text, index);
                KPoly g = KPoly::parse(K, poly_text);
                FieldElement x = padic_root(P, g, k, closure_options());
                Valuation v = valuation(P, g(x));
                return Result{Json{{"prime", io::to_json(Prime(P))},
                                   {"root", io::to_json(x)},
                                   {"value_valuation", v ? Json(*v) : Json("inf")}},
                              x.to_string() + "\n"};
            };
        });
    }
    // dense
    {
        auto* c = app.add_subcommand("dense", "denseness witnesses and approximation");
        c->require_subcommand(1);
        auto* d = c->add_subcommand("d-witness", "x with 1 - g(x)^2/a^2 in O_P");
        field_opt(d);
        prime_opts(d, false);
        d->add_option("--poly", poly_text, "monic polynomial")->required();
        d->add_option("--a", a_text, "nonzero element a")->required();
        d->callback([&] {
            action = [&] {
                FieldPtr K = field();
                Prime P = prime_at(K, parse_place(p_text), index);
                WitnessReport r = d_witness(P, KPoly::parse(K, poly_text), FieldElement::parse(K, a_text), dense_options());
                return Result{io::to_json(r), r.witness ? std::optional<std::string>(r.witness->to_string() + "\n")
                                                        : std::nullopt};
            };
        });
        auto* ud = c->add_subcommand("ud-witness", "one x satisfying the D condition at every prime of S");
        field_opt(ud);
        ud->add_option("--p", p_text, "rational prime or inf")->required();
        ud->add_option("--indices", indices_text, "comma separated prime indices (default: all)");
        ud->add_option("--poly", poly_text, "monic polynomial")->required();
        ud->add_option("--a", a_text, "nonzero element a")->required();
        ud->callback([&] {
            action = [&] {
                FieldPtr K = field();
                Place place = parse_place(p_text);
                std::vector<Prime> S;
                if (indices_text.empty())
                    S = all_primes(K, place);
                else
                    for (std::size_t i : parse_indices(indices_text))
                        S.push_back(prime_at(K, place, i));
                WitnessReport r = ud_witness(K, S, KPoly::parse(K, poly_text), FieldElement::parse(K, a_text), dense_options());
                return Result{io::to_json(r), r.witness ? std::optional<std::string>(r.witness->to_string() + "\n")
                                                        : std::nullopt};
            };
        });
        auto* wa = c->add_subcommand("weak-approx", "element with prescribed valuations at primes above p");
        field_opt(wa);
        wa->add_option("--p", p_text, "rational prime")->required();
        wa->add_option("--target", targets, "index:valuation, repeatable")->required();
        wa->callback([&] {
            action = [&] {
                FieldPtr K = field();
                std::uint64_t p = finite_prime(p_text);
                std::vector<std::pair<PValuation, long>> t;
                for (const std::string& item : targets) {
                    auto colon = item.find(':');
                    if (colon == std::string::npos)
                        throw UsageError("--target expects index:valuation, got '" + item + "'");
                    try {
                        t.emplace_back(std::get<PValuation>(prime_at(K, Place::finite(p), std::stoul(item.substr(0, colon)))),
                                       std::stol(item.substr(colon + 1)));
                    } catch (const std::logic_error&) {
                        throw UsageError("--target expects index:valuation, got '" + item + "'");
                    }
                }
                FieldElement z = weak_approx_valuations(K, t, dense_options());
                Json checks = Json::array();
                for (const auto& [P, v] : t)
                    checks.push_back(Json{{"prime", describe(P)}, {"target", v}, {"valuation", valuation_of_nonzero(P, z)}});
                return Result{Json{{"element", io::to_json(z)}, {"checks", checks}}, z.to_string() + "\n"};
            };
        });
        auto* zg = c->add_subcommand("zgroup", "witnesses x_0..x_{n-1} for the Z-group sentence at y");
        field_opt(zg);
        zg->add_option("--p", p_text, "rational prime")->required();
        type_opts(zg);
        zg->add_option("--n", n, "modulus n")->required();
        zg->add_option("--y", y_text, "nonzero element y")->required();
        zg->callback([&] {
            action = [&] {
                FieldPtr K = field();
                return Result{io::to_json(zgroup_witness(K, finite_prime(p_text), {e, f}, n,
                                                         FieldElement::parse(K, y_text), dense_options())),
                              std::nullopt};
            };
        });
    }
    // formula
    {
        auto* c = app.add_subcommand("formula", "emit, parse and evaluate formulas");
        c->require_subcommand(1);
        auto add_write = [&](CLI::App* s) { s->add_option("--write", write_path, "also write the text form to a file"); };
        auto* phi = c->add_subcommand("emit-phi", "the polynomial phi_n");
        phi->add_option("--p", p_text, "rational prime")->required();
        phi->add_option("--f-abs", f_abs, "absolute residue degree to exceed")->capture_default_str();
        phi->add_option("--n", n, "number of variables")->required();
        add_write(phi);
        phi->callback([&] {
            action = [&] {
                PhiN r = build_phi_n(finite_prime(p_text), f_abs, n);
                return Result{io::to_json(r), r.phi.to_string() + "\n"};
            };
        });
        auto* chi = c->add_subcommand("emit-chi", "the formula chi with free variables t, s");
        chi->add_option("--p", p_text, "rational prime or inf")->required();
        type_opts(chi);
        add_write(chi);
        chi->callback([&] { action = [&] { return formula_result(emit_chi(parse_place(p_text), {e, f})); }; });
        auto* nu = c->add_subcommand("emit-nu", "the sentence nu_{p,n}");
        nu->add_option("--p", p_text, "rational prime")->required();
        type_opts(nu);
        nu->add_option("--n", n, "modulus n")->required();
        nu->add_flag("--localized", "emit the localized variant with the unexpanded hat node");
        add_write(nu);
        nu->callback([&, nu] {
            action = [&, nu] {
                std::uint64_t p = finite_prime(p_text);
                return formula_result(nu->count("--localized") ? emit_psi(p, {e, f}, n) : emit_nu(p, {e, f}, n));
            };
        });
        auto* eval = c->add_subcommand("eval", "evaluate a formula over (K, R_p^tau(K))");
        field_opt(eval);
        eval->add_option("--p", p_text, "rational prime or inf")->required();
        type_opts(eval);
        eval->add_option("--formula", formula_text, "formula text");
        eval->add_option("--file", formula_file, "file holding the formula");
        eval->callback([&] {
            action = [&] {
                FieldPtr K = field();
                FormulaPtr phi = parse_formula(read_formula_source(formula_text, formula_file));
                Place place = parse_place(p_text);
                if (place.infinite())
                    raise(ErrorCode::Unsupported, "evaluation over R_inf is not implemented", "p");
                // the Z-group sentences are universal; they are decided by prove_nu
                for (unsigned m = 1; m <= 8; ++m)
                    if (*phi == *emit_nu(place.p, {e, f}, m)) {
                        NuProof proof = prove_nu(K, place.p, {e, f}, m, dense_options());
                        Json j = io::to_json(proof, K);
                        j["method"] = "valuation classes";
                        return Result{j, to_string(proof.verdict) + "\n"};
                    }
                EvalVerdict v = eval_bounded(K, place, {e, f}, *phi, config.height_bound);
                Json j = io::to_json(v);
                j["method"] = "bounded search";
                return Result{j, to_string(v.verdict) + "\n"};
            };
        });
        auto* parse = c->add_subcommand("parse", "parse and print a formula in canonical form");
        parse->add_option("--formula", formula_text, "formula text");
        parse->add_option("--file", formula_file, "file holding the formula");
        parse->callback([&] {
            action = [&] { return formula_result(parse_formula(read_formula_source(formula_text, formula_file))); };
        });
    }
    // squares
    {
        auto* c = app.add_subcommand("squares", "sums of squares, levels and the Kochen operator");
        c->require_subcommand(1);
        auto* four = c->add_subcommand("four", "four rational squares summing to q");
        four->add_option("--q", q_text, "nonnegative rational")->required();
        four->callback([&] {
            action = [&] {
                SquareDecomposition d = four_squares(parse_rational(q_text), config.seed);
                std::string text;
                for (std::size_t i = 0; i < d.parts.size(); ++i)
                    text += (i ? " " : "") + to_string(d.parts[i]);
                return Result{io::to_json(d), text + "\n"};
            };
        });
        auto* member = c->add_subcommand("member", "is x a sum of squares (totally nonnegative)");
        field_opt(member);
        member->add_option("--x", x_text, "field element")->required();
        member->callback([&] {
            action = [&] {
                bool m = r_infinity_member(field(), FieldElement::parse(field(), x_text));
                return Result{Json{{"member", m}}, std::string(m ? "true\n" : "false\n")};
            };
        });
        auto* level = c->add_subcommand("level", "level of the finite field F_{p^f}");
        level->add_option("--p", p_text, "rational prime")->required();
        level->add_option("--f", f, "degree")->capture_default_str();
        level->callback([&] {
            action = [&] {
                std::uint64_t p = finite_prime(p_text);
                unsigned lv = level_finite_field(p, f);
                return Result{Json{{"p", p}, {"f", f}, {"level", lv}}, std::to_string(lv) + "\n"};
            };
        });
        auto* kochen_cmd = c->add_subcommand("kochen", "Kochen operator value and its valuations above p");
        field_opt(kochen_cmd);
        kochen_cmd->add_option("--p", p_text, "rational prime")->required();
        kochen_cmd->add_option("--x", x_text, "field element")->required();
        kochen_cmd->callback([&] {
            action = [&] {
                FieldPtr K = field();
                std::uint64_t p = finite_prime(p_text);
                KochenValue kv = kochen(p, FieldElement::parse(K, x_text));
                Json j = io::to_json(kv);
                j["valuations"] = Json::array();
                if (kv.value)
                    for (const PValuation& P : primes_above(K, p)) {
                        Valuation v = valuation(P, *kv.value);
                        j["valuations"].push_back(
                            Json{{"prime", describe(P)}, {"type", io::to_json(P.type())}, {"valuation", v ? Json(*v) : Json("inf")}});
                    }
                return Result{j, (kv.value ? kv.value->to_string() : std::string("undefined")) + "\n"};
            };
        });
        auto* s6 = c->add_subcommand("check-s6", "bounded search for eps^2 = g(x)^2 + (s-1 squares)");
        field_opt(s6);
        prime_opts(s6, true);
        s6->add_option("--poly", poly_text, "polynomial g")->required();
        s6->add_option("--eps", eps_text, "element eps with positive valuation")->required();
        s6->add_option("--s", s_count, "number of squares s")->capture_default_str();
        s6->callback([&] {
            action = [&] {
                FieldPtr K = field();
                PValuation P = pvaluation_at(K, p_text, index);
                ShortRepresentationReport r = no_short_representation_check(
                    P, KPoly::parse(K, poly_text), FieldElement::parse(K, eps_text), s_count, config.height_bound);
                Json j = io::to_json(r);
                j["height_bound"] = config.height_bound;
                return Result{j, to_string(r.outcome) + "\n"};
            };
        });
    }
    // tower
    {
        auto* c = app.add_subcommand("tower", "quadratic extension steps");
        c->require_subcommand(1);
        auto* step = c->add_subcommand("step", "d with prescribed behaviour of primes above p in K(sqrt d)");
        field_opt(step);
        step->add_option("--p", p_text, "odd rational prime")->required();
        step->add_option("--constraint", constraints, "index:split|inert|ramified, repeatable")->required();
        step->callback([&] {
            action = [&] {
                FieldPtr K = field();
                std::vector<StepConstraint> cs;
                for (const std::string& item : constraints) {
                    auto colon = item.find(':');
                    if (colon == std::string::npos)
                        throw UsageError("--constraint expects index:behaviour, got '" + item + "'");
                    std::size_t i = 0;
                    try {
                        i = std::stoul(item.substr(0, colon));
                    } catch (const std::logic_error&) {
                        throw UsageError("--constraint expects index:behaviour, got '" + item + "'");
                    }
                    cs.push_back({i, parse_local_behavior(item.substr(colon + 1))});
                }
                QuadraticStep r = quadratic_step_search(K, finite_prime(p_text), cs, config.height_bound);
                return Result{io::to_json(r), r.d.to_string() + "\n"};
            };
        });
    }
    // suite
    {
        auto* c = app.add_subcommand("suite", "acceptance corpus");
        c->require_subcommand(1);
        auto* runc = c->add_subcommand("run", "run the acceptance corpus and print a JSON transcript");
        runc->add_option("--criteria", criteria_ids, "criterion ids (default: all)")->delimiter(',');
        runc->callback([&] {
            action = [&] {
                suite::SuiteOptions o;
                o.seed = config.seed;
                o.height_bound = config.height_bound;
                o.precision_cap = static_cast<unsigned>(config.precision_cap);
                Json t = suite::transcript(suite::run_all(o, criteria_ids), o);
                return Result{t, std::nullopt, t.at("failed").get<long>() == 0 ? 0 : 1};
            };
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& ex) {
        int code = app.exit(ex, out, err);
        return code == 0 ? 0 : 2;
    }
    if (!seed_given)
        if (const char* env = std::getenv("PRIME_SCOPE_SEED")) {
            try {
                config.seed = std::stoull(env);
            } catch (const std::logic_error&) {
                err << "PRIME_SCOPE_SEED must be a nonnegative integer\n";
                return 2;
            }
        }
    if (config.height_bound <= 0 || config.precision_cap <= 0) {
        err << "--height and --precision must be positive\n";
        return 2;
    }

    try {
        Result r = action();
        std::string rendered;
        if (config.output == "text") {
            if (r.text) {
                rendered = *r.text;
            } else {
                std::ostringstream ss;
                render_text(ss, r.json, "");
                rendered = ss.str();
            }
        } else {
            rendered = r.json.dump(2) + "\n";
        }
        if (!write_path.empty())
            write_file(write_path, r.text ? *r.text : rendered);
        out << rendered;
        return r.exit_code;
    } catch (const UsageError& ex) {
        err << "usage error: " << ex.what() << "\n";
        return 2;
    } catch (const DomainError& ex) {
        out << io::to_json(ex).dump(2) << "\n";
        return 1;
    }
}

} // namespace prime_scope::cli
