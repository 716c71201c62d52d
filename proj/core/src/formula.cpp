#include "prime_scope/formula/formula.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "prime_scope/errors.hpp"
#include "prime_scope/field/enumerate.hpp"

namespace prime_scope {

namespace {

TermPtr make_term(Term t) { return std::make_shared<const Term>(std::move(t)); }
FormulaPtr make_formula(Formula f) { return std::make_shared<const Formula>(std::move(f)); }

bool valid_identifier(std::string_view s)
{
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_'))
        return false;
    return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

} // namespace

TermPtr Term::constant(std::vector<Rational> coords)
{
    if (coords.empty())
        coords.emplace_back(0);
    while (coords.size() > 1 && coords.back() == 0)
        coords.pop_back();
    Term t;
    t.kind = Kind::Constant;
    t.value = std::move(coords);
    return make_term(std::move(t));
}

TermPtr Term::variable(std::string name)
{
    if (!valid_identifier(name))
        raise(ErrorCode::InvalidArgument, "invalid variable name '" + name + "'");
    Term t;
    t.kind = Kind::Variable;
    t.name = std::move(name);
    return make_term(std::move(t));
}

TermPtr Term::add(std::vector<TermPtr> args)
{
    if (args.size() == 1)
        return args.front();
    if (args.empty())
        return constant(Rational(0));
    Term t;
    t.kind = Kind::Add;
    t.args = std::move(args);
    return make_term(std::move(t));
}

TermPtr Term::sub(TermPtr a, TermPtr b)
{
    Term t;
    t.kind = Kind::Sub;
    t.args = {std::move(a), std::move(b)};
    return make_term(std::move(t));
}

TermPtr Term::mul(std::vector<TermPtr> args)
{
    if (args.size() == 1)
        return args.front();
    if (args.empty())
        return constant(Rational(1));
    Term t;
    t.kind = Kind::Mul;
    t.args = std::move(args);
    return make_term(std::move(t));
}

TermPtr Term::inv(TermPtr a)
{
    Term t;
    t.kind = Kind::Inv;
    t.args = {std::move(a)};
    return make_term(std::move(t));
}

TermPtr Term::pow(TermPtr a, unsigned exponent)
{
    Term t;
    t.kind = Kind::Pow;
    t.args = {std::move(a)};
    t.exponent = exponent;
    return make_term(std::move(t));
}

FormulaPtr Formula::truth(bool value)
{
    Formula f;
    f.kind = value ? Kind::True : Kind::False;
    return make_formula(std::move(f));
}

FormulaPtr Formula::eq(TermPtr a, TermPtr b)
{
    Formula f;
    f.kind = Kind::Eq;
    f.terms = {std::move(a), std::move(b)};
    return make_formula(std::move(f));
}

FormulaPtr Formula::r(TermPtr t)
{
    Formula f;
    f.kind = Kind::R;
    f.terms = {std::move(t)};
    return make_formula(std::move(f));
}

FormulaPtr Formula::unit(TermPtr t)
{
    Formula f;
    f.kind = Kind::Unit;
    f.terms = {std::move(t)};
    return make_formula(std::move(f));
}

FormulaPtr Formula::negation(FormulaPtr sub)
{
    Formula f;
    f.kind = Kind::Not;
    f.subs = {std::move(sub)};
    return make_formula(std::move(f));
}

FormulaPtr Formula::conjunction(std::vector<FormulaPtr> fs)
{
    if (fs.empty())
        return truth(true);
    if (fs.size() == 1)
        return fs.front();
    Formula f;
    f.kind = Kind::And;
    f.subs = std::move(fs);
    return make_formula(std::move(f));
}

FormulaPtr Formula::disjunction(std::vector<FormulaPtr> fs)
{
    if (fs.empty())
        return truth(false);
    if (fs.size() == 1)
        return fs.front();
    Formula f;
    f.kind = Kind::Or;
    f.subs = std::move(fs);
    return make_formula(std::move(f));
}

FormulaPtr Formula::implies(FormulaPtr a, FormulaPtr b)
{
    Formula f;
    f.kind = Kind::Implies;
    f.subs = {std::move(a), std::move(b)};
    return make_formula(std::move(f));
}

FormulaPtr Formula::forall(std::string var, FormulaPtr body)
{
    if (!valid_identifier(var))
        raise(ErrorCode::InvalidArgument, "invalid variable name '" + var + "'");
    Formula f;
    f.kind = Kind::Forall;
    f.var = std::move(var);
    f.subs = {std::move(body)};
    return make_formula(std::move(f));
}

FormulaPtr Formula::exists(std::string var, FormulaPtr body)
{
    if (!valid_identifier(var))
        raise(ErrorCode::InvalidArgument, "invalid variable name '" + var + "'");
    Formula f;
    f.kind = Kind::Exists;
    f.var = std::move(var);
    f.subs = {std::move(body)};
    return make_formula(std::move(f));
}

FormulaPtr Formula::hat(std::uint64_t p, PrimeType tau, FormulaPtr body)
{
    Formula f;
    f.kind = Kind::Hat;
    f.p = p;
    f.tau = tau;
    f.subs = {std::move(body)};
    return make_formula(std::move(f));
}

// ---- printing

std::string print(const Term& t)
{
    auto list = [&](const char* head) {
        std::string s = std::string("(") + head;
        for (const TermPtr& a : t.args)
            s += " " + print(*a);
        return s + ")";
    };
    switch (t.kind) {
    case Term::Kind::Constant: {
        if (t.value.size() == 1)
            return to_string(t.value[0]);
        std::string s = "[";
        for (std::size_t i = 0; i < t.value.size(); ++i)
            s += (i ? "," : "") + to_string(t.value[i]);
        return s + "]";
    }
    case Term::Kind::Variable:
        return t.name;
    case Term::Kind::Add:
        return list("+");
    case Term::Kind::Sub:
        return list("-");
    case Term::Kind::Mul:
        return list("*");
    case Term::Kind::Inv:
        return list("inv");
    case Term::Kind::Pow:
        return "(^ " + print(*t.args[0]) + " " + std::to_string(t.exponent) + ")";
    }
    return {};
}

std::string print(const Formula& f)
{
    auto subs = [&](std::string s) {
        for (const FormulaPtr& g : f.subs)
            s += " " + print(*g);
        return s + ")";
    };
    switch (f.kind) {
    case Formula::Kind::True:
        return "true";
    case Formula::Kind::False:
        return "false";
    case Formula::Kind::Eq:
        return "(= " + print(*f.terms[0]) + " " + print(*f.terms[1]) + ")";
    case Formula::Kind::R:
        return "(R " + print(*f.terms[0]) + ")";
    case Formula::Kind::Unit:
        return "(Rx " + print(*f.terms[0]) + ")";
    case Formula::Kind::Not:
        return subs("(not");
    case Formula::Kind::And:
        return subs("(and");
    case Formula::Kind::Or:
        return subs("(or");
    case Formula::Kind::Implies:
        return subs("(implies");
    case Formula::Kind::Forall:
        return subs("(forall " + f.var);
    case Formula::Kind::Exists:
        return subs("(exists " + f.var);
    case Formula::Kind::Hat:
        return subs("(hat " + std::to_string(f.p) + " " + std::to_string(f.tau.e) + " " + std::to_string(f.tau.f));
    }
    return {};
}

bool operator==(const Term& a, const Term& b) { return print(a) == print(b); }
bool operator==(const Formula& a, const Formula& b) { return print(a) == print(b); }

// ---- parsing

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : s_(text) {}

    [[noreturn]] void fail(const std::string& what, std::size_t at) const
    {
        raise(ErrorCode::SyntaxError, "position " + std::to_string(at) + ": " + what, "position " + std::to_string(at));
    }

    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    bool at_end()
    {
        skip();
        return pos_ >= s_.size();
    }

    char peek()
    {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    void expect(char c)
    {
        if (peek() != c)
            fail(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }

    // atom: a bracketed vector (spaces allowed inside) or a run of
    // non-space, non-paren characters
    std::string atom()
    {
        skip();
        std::size_t start = pos_;
        if (pos_ < s_.size() && s_[pos_] == '[') {
            std::string out;
            while (pos_ < s_.size() && s_[pos_] != ']') {
                if (!std::isspace(static_cast<unsigned char>(s_[pos_])))
                    out += s_[pos_];
                ++pos_;
            }
            if (pos_ >= s_.size())
                fail("unterminated vector constant", start);
            ++pos_;
            return out + "]";
        }
        while (pos_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[pos_])) && s_[pos_] != '('
               && s_[pos_] != ')')
            ++pos_;
        if (start == pos_)
            fail(pos_ >= s_.size() ? "unexpected end of input" : "expected an atom", start);
        return std::string(s_.substr(start, pos_ - start));
    }

    TermPtr term()
    {
        skip();
        std::size_t start = pos_;
        if (peek() == '(') {
            ++pos_;
            std::string head = atom();
            TermPtr out;
            if (head == "+" || head == "*") {
                std::vector<TermPtr> args;
                while (peek() != ')') {
                    if (at_end())
                        fail("unexpected end of input", pos_);
                    args.push_back(term());
                }
                if (args.size() < 2)
                    fail("'" + head + "' needs at least two arguments", start);
                out = head == "+" ? Term::add(std::move(args)) : Term::mul(std::move(args));
            } else if (head == "-") {
                TermPtr a = term();
                out = Term::sub(a, term());
            } else if (head == "inv") {
                out = Term::inv(term());
            } else if (head == "^") {
                TermPtr a = term();
                std::size_t at = pos_;
                std::string k = atom();
                if (k.empty() || !std::all_of(k.begin(), k.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
                    fail("exponent must be a nonnegative integer", at);
                out = Term::pow(a, static_cast<unsigned>(std::stoul(k)));
            } else {
                fail("unknown term operator '" + head + "'", start);
            }
            expect(')');
            return out;
        }
        if (peek() == ')' || at_end())
            fail("expected a term", pos_);
        std::string a = atom();
        if (valid_identifier(a))
            return Term::variable(a);
        try {
            if (a.front() == '[') {
                std::vector<Rational> coords;
                std::string body = a.substr(1, a.size() - 2);
                std::size_t i = 0;
                while (i <= body.size()) {
                    std::size_t j = body.find(',', i);
                    if (j == std::string::npos)
                        j = body.size();
                    coords.push_back(parse_rational(body.substr(i, j - i)));
                    i = j + 1;
                }
                return Term::constant(std::move(coords));
            }
            return Term::constant(parse_rational(a));
        } catch (const DomainError&) {
            fail("invalid constant '" + a + "'", start);
        }
    }

    FormulaPtr formula()
    {
        skip();
        std::size_t start = pos_;
        if (peek() != '(') {
            if (at_end())
                fail("unexpected end of input", pos_);
            std::string a = atom();
            if (a == "true")
                return Formula::truth(true);
            if (a == "false")
                return Formula::truth(false);
            fail("expected a formula", start);
        }
        ++pos_;
        std::string head = atom();
        FormulaPtr out;
        if (head == "=") {
            TermPtr a = term();
            out = Formula::eq(a, term());
        } else if (head == "R") {
            out = Formula::r(term());
        } else if (head == "Rx") {
            out = Formula::unit(term());
        } else if (head == "not") {
            out = Formula::negation(formula());
        } else if (head == "and" || head == "or") {
            std::vector<FormulaPtr> fs;
            while (peek() != ')') {
                if (at_end())
                    fail("unexpected end of input", pos_);
                fs.push_back(formula());
            }
            if (fs.empty())
                fail("'" + head + "' needs at least one argument", start);
            Formula f;
            f.kind = head == "and" ? Formula::Kind::And : Formula::Kind::Or;
            f.subs = std::move(fs);
            out = make_formula(std::move(f));
        } else if (head == "implies") {
            FormulaPtr a = formula();
            out = Formula::implies(a, formula());
        } else if (head == "forall" || head == "exists") {
            std::size_t at = pos_;
            std::string v = atom();
            if (!valid_identifier(v))
                fail("invalid variable name '" + v + "'", at);
            FormulaPtr body = formula();
            out = head == "forall" ? Formula::forall(v, body) : Formula::exists(v, body);
        } else if (head == "hat") {
            std::size_t at = pos_;
            try {
                std::uint64_t p = std::stoull(atom());
                unsigned e = static_cast<unsigned>(std::stoul(atom()));
                unsigned f = static_cast<unsigned>(std::stoul(atom()));
                out = Formula::hat(p, {e, f}, formula());
            } catch (const std::logic_error&) {
                fail("hat needs p e f", at);
            }
        } else {
            fail("unknown formula operator '" + head + "'", start);
        }
        expect(')');
        return out;
    }

    void finish()
    {
        if (!at_end())
            fail("trailing input", pos_);
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;
};

} // namespace

TermPtr parse_term(std::string_view text)
{
    Parser p(text);
    TermPtr t = p.term();
    p.finish();
    return t;
}

FormulaPtr parse_formula(std::string_view text)
{
    Parser p(text);
    FormulaPtr f = p.formula();
    p.finish();
    return f;
}

// ---- structure

bool is_quantifier_free(const Formula& f) { return quantifier_count(f) == 0; }

std::size_t quantifier_count(const Formula& f)
{
    std::size_t n = f.kind == Formula::Kind::Forall || f.kind == Formula::Kind::Exists ? 1 : 0;
    for (const FormulaPtr& g : f.subs)
        n += quantifier_count(*g);
    return n;
}

namespace {

void term_vars(const Term& t, const std::set<std::string>& bound, std::vector<std::string>& out)
{
    if (t.kind == Term::Kind::Variable && !bound.count(t.name)
        && std::find(out.begin(), out.end(), t.name) == out.end())
        out.push_back(t.name);
    for (const TermPtr& a : t.args)
        term_vars(*a, bound, out);
}

void formula_vars(const Formula& f, std::set<std::string> bound, std::vector<std::string>& out)
{
    if (f.kind == Formula::Kind::Forall || f.kind == Formula::Kind::Exists)
        bound.insert(f.var);
    for (const TermPtr& t : f.terms)
        term_vars(*t, bound, out);
    for (const FormulaPtr& g : f.subs)
        formula_vars(*g, bound, out);
}

TermPtr subst_term(const TermPtr& t, const std::map<std::string, FieldElement>& values)
{
    if (t->kind == Term::Kind::Variable) {
        auto it = values.find(t->name);
        return it == values.end() ? t : Term::constant(it->second);
    }
    if (t->args.empty())
        return t;
    Term copy = *t;
    for (TermPtr& a : copy.args)
        a = subst_term(a, values);
    return make_term(std::move(copy));
}

} // namespace

std::vector<std::string> free_variables(const Formula& f)
{
    std::vector<std::string> out;
    formula_vars(f, {}, out);
    return out;
}

FormulaPtr instantiate(const FormulaPtr& f, const std::map<std::string, FieldElement>& values)
{
    if (f->kind == Formula::Kind::Forall || f->kind == Formula::Kind::Exists) {
        if (values.count(f->var))
            return instantiate(f->subs[0], values);
    }
    Formula copy = *f;
    for (TermPtr& t : copy.terms)
        t = subst_term(t, values);
    for (FormulaPtr& g : copy.subs)
        g = instantiate(g, values);
    return make_formula(std::move(copy));
}

// ---- evaluation

Interpretation holomorphy_interpretation(const FieldPtr& field, Place place, PrimeType tau)
{
    return {field, [field, place, tau](const FieldElement& x) { return holomorphy_member(field, place, tau, x); }};
}

Interpretation prime_interpretation(const Prime& P)
{
    return {field_of(P), [P](const FieldElement& x) { return in_ring(P, x); }};
}

FieldElement eval_term(const Term& t, const FieldPtr& field, const Assignment& env)
{
    switch (t.kind) {
    case Term::Kind::Constant: {
        if (t.value.size() > static_cast<std::size_t>(field->degree()))
            raise(ErrorCode::InvalidArgument, "constant " + print(t) + " has too many coordinates");
        std::vector<Rational> c = t.value;
        c.resize(static_cast<std::size_t>(field->degree()), Rational(0));
        return FieldElement(field, std::move(c));
    }
    case Term::Kind::Variable: {
        auto it = env.find(t.name);
        if (it == env.end())
            raise(ErrorCode::InvalidArgument, "unbound variable " + t.name);
        return it->second;
    }
    case Term::Kind::Add: {
        FieldElement acc(field, 0);
        for (const TermPtr& a : t.args)
            acc = acc + eval_term(*a, field, env);
        return acc;
    }
    case Term::Kind::Sub:
        return eval_term(*t.args[0], field, env) - eval_term(*t.args[1], field, env);
    case Term::Kind::Mul: {
        FieldElement acc(field, 1);
        for (const TermPtr& a : t.args)
            acc = acc * eval_term(*a, field, env);
        return acc;
    }
    case Term::Kind::Inv: {
        FieldElement x = eval_term(*t.args[0], field, env);
        if (x.is_zero())
            raise(ErrorCode::InverseOfZero, "inverse of zero in " + print(t));
        return nf_inv(x);
    }
    case Term::Kind::Pow:
        return eval_term(*t.args[0], field, env).pow(static_cast<long>(t.exponent));
    }
    return FieldElement(field, 0);
}

bool eval_qf(const Interpretation& I, const Formula& f, const Assignment& env)
{
    switch (f.kind) {
    case Formula::Kind::True:
        return true;
    case Formula::Kind::False:
        return false;
    case Formula::Kind::Eq:
        return eval_term(*f.terms[0], I.field, env) == eval_term(*f.terms[1], I.field, env);
    case Formula::Kind::R:
        return I.R(eval_term(*f.terms[0], I.field, env));
    case Formula::Kind::Unit: {
        FieldElement x = eval_term(*f.terms[0], I.field, env);
        if (x.is_zero())
            raise(ErrorCode::InverseOfZero, "unit test of zero in " + print(f));
        return I.R(x) && I.R(nf_inv(x));
    }
    case Formula::Kind::Not:
        return !eval_qf(I, *f.subs[0], env);
    case Formula::Kind::And:
        return std::all_of(f.subs.begin(), f.subs.end(), [&](const FormulaPtr& g) { return eval_qf(I, *g, env); });
    case Formula::Kind::Or:
        return std::any_of(f.subs.begin(), f.subs.end(), [&](const FormulaPtr& g) { return eval_qf(I, *g, env); });
    case Formula::Kind::Implies:
        return !eval_qf(I, *f.subs[0], env) || eval_qf(I, *f.subs[1], env);
    case Formula::Kind::Forall:
    case Formula::Kind::Exists:
        raise(ErrorCode::InvalidArgument, "formula is not quantifier-free");
    case Formula::Kind::Hat:
        raise(ErrorCode::Unsupported, "the localized formula placeholder cannot be evaluated");
    }
    return false;
}

bool eval_qf(const FieldPtr& field, Place place, PrimeType tau, const Formula& f)
{
    return eval_qf(holomorphy_interpretation(field, place, tau), f);
}

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::Proven:
        return "proven";
    case Verdict::Refuted:
        return "refuted";
    case Verdict::Unknown:
        return "unknown";
    }
    return "unknown";
}

namespace {

enum class Tri { T, F, U };

Tri tri(bool b) { return b ? Tri::T : Tri::F; }

struct Bounded {
    const Interpretation& I;
    long bound;

    Tri ev(const Formula& f, Assignment& env, std::vector<std::pair<std::string, FieldElement>>& evidence)
    {
        switch (f.kind) {
        case Formula::Kind::True:
        case Formula::Kind::False:
        case Formula::Kind::Eq:
        case Formula::Kind::R:
        case Formula::Kind::Unit:
            try {
                return tri(eval_qf(I, f, env));
            } catch (const DomainError& e) {
                if (e.code() == ErrorCode::InverseOfZero)
                    return Tri::U;
                throw;
            }
        case Formula::Kind::Hat:
            return Tri::U;
        case Formula::Kind::Not: {
            Tri r = ev(*f.subs[0], env, evidence);
            return r == Tri::U ? Tri::U : (r == Tri::T ? Tri::F : Tri::T);
        }
        case Formula::Kind::And:
        case Formula::Kind::Or: {
            Tri stop = f.kind == Formula::Kind::And ? Tri::F : Tri::T;
            bool unknown = false;
            for (const FormulaPtr& g : f.subs) {
                std::vector<std::pair<std::string, FieldElement>> sub;
                Tri r = ev(*g, env, sub);
                if (r == stop) {
                    evidence.insert(evidence.end(), sub.begin(), sub.end());
                    return stop;
                }
                unknown = unknown || r == Tri::U;
            }
            return unknown ? Tri::U : (stop == Tri::F ? Tri::T : Tri::F);
        }
        case Formula::Kind::Implies: {
            std::vector<std::pair<std::string, FieldElement>> sa, sb;
            Tri a = ev(*f.subs[0], env, sa);
            if (a == Tri::F) {
                evidence.insert(evidence.end(), sa.begin(), sa.end());
                return Tri::T;
            }
            Tri b = ev(*f.subs[1], env, sb);
            evidence.insert(evidence.end(), sb.begin(), sb.end());
            if (b == Tri::T)
                return Tri::T;
            return a == Tri::T && b == Tri::F ? Tri::F : Tri::U;
        }
        case Formula::Kind::Forall:
        case Formula::Kind::Exists: {
            Tri decisive = f.kind == Formula::Kind::Exists ? Tri::T : Tri::F;
            std::optional<FieldElement> saved;
            if (auto it = env.find(f.var); it != env.end())
                saved = it->second;
            Tri result = Tri::U;
            enumerate_elements(I.field, bound, false, [&](const FieldElement& x) {
                env[f.var] = x;
                std::vector<std::pair<std::string, FieldElement>> sub;
                if (ev(*f.subs[0], env, sub) != decisive)
                    return false;
                evidence.emplace_back(f.var, x);
                evidence.insert(evidence.end(), sub.begin(), sub.end());
                result = decisive;
                return true;
            });
            if (saved)
                env[f.var] = *saved;
            else
                env.erase(f.var);
            return result;
        }
        }
        return Tri::U;
    }
};

} // namespace

EvalVerdict eval_bounded(const Interpretation& I, const Formula& f, long height_bound)
{
    Bounded b{I, height_bound};
    Assignment env;
    EvalVerdict out;
    out.bound = height_bound;
    Tri r = b.ev(f, env, out.evidence);
    out.verdict = r == Tri::T ? Verdict::Proven : (r == Tri::F ? Verdict::Refuted : Verdict::Unknown);
    if (out.verdict == Verdict::Unknown)
        out.evidence.clear();
    return out;
}

EvalVerdict eval_bounded(const FieldPtr& field, Place place, PrimeType tau, const Formula& f, long height_bound)
{
    return eval_bounded(holomorphy_interpretation(field, place, tau), f, height_bound);
}

} // namespace prime_scope
