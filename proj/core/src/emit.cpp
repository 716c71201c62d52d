#include "prime_scope/formula/emit.hpp"

#include <algorithm>

#include "prime_scope/errors.hpp"
#include "prime_scope/exact/fp_poly.hpp"

namespace prime_scope {

MPoly MPoly::variable(unsigned i, unsigned nvars)
{
    MPoly m;
    m.nvars = nvars;
    std::vector<unsigned> e(nvars, 0);
    e[i] = 1;
    m.terms[e] = 1;
    return m;
}

MPoly MPoly::constant(const Integer& c, unsigned nvars)
{
    MPoly m;
    m.nvars = nvars;
    if (c != 0)
        m.terms[std::vector<unsigned>(nvars, 0)] = c;
    return m;
}

unsigned MPoly::total_degree() const
{
    unsigned d = 0;
    for (const auto& [e, c] : terms) {
        unsigned s = 0;
        for (unsigned k : e)
            s += k;
        d = std::max(d, s);
    }
    return d;
}

FieldElement MPoly::operator()(const std::vector<FieldElement>& x) const
{
    if (x.size() != nvars)
        raise(ErrorCode::InvalidArgument, "expected " + std::to_string(nvars) + " arguments");
    const FieldPtr& K = x.front().field();
    FieldElement acc(K, 0);
    for (const auto& [e, c] : terms) {
        FieldElement t(K, Rational(c));
        for (unsigned i = 0; i < nvars; ++i)
            if (e[i])
                t = t * x[i].pow(e[i]);
        acc = acc + t;
    }
    return acc;
}

std::string MPoly::to_string() const
{
    std::vector<std::pair<std::vector<unsigned>, Integer>> order(terms.begin(), terms.end());
    auto degree = [](const std::vector<unsigned>& e) {
        unsigned s = 0;
        for (unsigned k : e)
            s += k;
        return s;
    };
    std::sort(order.begin(), order.end(), [&](const auto& a, const auto& b) {
        if (degree(a.first) != degree(b.first))
            return degree(a.first) > degree(b.first);
        return a.first > b.first;
    });
    if (order.empty())
        return "0";
    std::string out;
    for (const auto& [e, c] : order) {
        std::string mono;
        for (unsigned i = 0; i < nvars; ++i) {
            if (!e[i])
                continue;
            mono += (mono.empty() ? "" : "*") + std::string("X") + std::to_string(i + 1);
            if (e[i] > 1)
                mono += "^" + std::to_string(e[i]);
        }
        Integer m = abs(c);
        std::string body = mono.empty() ? prime_scope::to_string(m)
                                        : (m == 1 ? mono : prime_scope::to_string(m) + "*" + mono);
        if (out.empty())
            out = (c < 0 ? "-" : "") + body;
        else
            out += (c < 0 ? " - " : " + ") + body;
    }
    return out;
}

MPoly operator+(const MPoly& a, const MPoly& b)
{
    MPoly r = a;
    for (const auto& [e, c] : b.terms) {
        Integer& slot = r.terms[e];
        slot += c;
        if (slot == 0)
            r.terms.erase(e);
    }
    return r;
}

MPoly operator*(const MPoly& a, const MPoly& b)
{
    MPoly r;
    r.nvars = a.nvars;
    for (const auto& [ea, ca] : a.terms)
        for (const auto& [eb, cb] : b.terms) {
            std::vector<unsigned> e(a.nvars);
            for (unsigned i = 0; i < a.nvars; ++i)
                e[i] = ea[i] + eb[i];
            Integer& slot = r.terms[e];
            slot += ca * cb;
            if (slot == 0)
                r.terms.erase(e);
        }
    return r;
}

MPoly pow(const MPoly& a, unsigned k)
{
    MPoly r = MPoly::constant(1, a.nvars);
    for (unsigned i = 0; i < k; ++i)
        r = r * a;
    return r;
}

unsigned phi_degree(unsigned f_abs)
{
    unsigned d = f_abs + 1;
    while (!is_prime(d))
        ++d;
    return d;
}

namespace {

// phi_2(A, B) = B^d g(A / B) = sum_k g_k A^k B^(d-k)
MPoly phi2(const QPoly& g, const MPoly& A, const MPoly& B)
{
    int d = g.degree();
    MPoly r = MPoly::constant(0, A.nvars);
    for (int k = 0; k <= d; ++k) {
        const Rational& c = g.coefficients()[static_cast<std::size_t>(k)];
        if (c == 0)
            continue;
        r = r + MPoly::constant(c.get_num(), A.nvars) * pow(A, static_cast<unsigned>(k)) * pow(B, static_cast<unsigned>(d - k));
    }
    return r;
}

} // namespace

PhiN build_phi_n(std::uint64_t p, unsigned f_abs, unsigned n)
{
    if (n == 0)
        raise(ErrorCode::InvalidArgument, "n must be positive");
    if (f_abs == 0)
        raise(ErrorCode::InvalidArgument, "f must be positive");
    PhiN out;
    out.p = p;
    out.f_abs = f_abs;
    out.n = n;
    out.g = irreducible_poly(p, phi_degree(f_abs));
    MPoly acc = MPoly::variable(n - 1, n);
    for (unsigned i = n - 1; i-- > 0;)
        acc = phi2(out.g, MPoly::variable(i, n), acc);
    out.phi = acc;
    return out;
}

FieldElement evaluate_phi(const PhiN& phi, const std::vector<FieldElement>& x)
{
    if (x.size() != phi.n)
        raise(ErrorCode::InvalidArgument, "expected " + std::to_string(phi.n) + " arguments");
    FieldElement acc = x.back();
    int d = phi.g.degree();
    for (std::size_t i = x.size() - 1; i-- > 0;) {
        FieldElement sum(acc.field(), 0);
        for (int k = 0; k <= d; ++k) {
            const Rational& c = phi.g.coefficients()[static_cast<std::size_t>(k)];
            if (c != 0)
                sum = sum + FieldElement(acc.field(), c) * x[i].pow(k) * acc.pow(d - k);
        }
        acc = sum;
    }
    return acc;
}

namespace {

TermPtr power(TermPtr t, unsigned k) { return k == 1 ? t : Term::pow(std::move(t), k); }

TermPtr phi2_term(const QPoly& g, const TermPtr& A, const TermPtr& B)
{
    int d = g.degree();
    std::vector<TermPtr> summands;
    for (int k = d; k >= 0; --k) {
        const Rational& c = g.coefficients()[static_cast<std::size_t>(k)];
        if (c == 0)
            continue;
        std::vector<TermPtr> factors;
        if (c != 1)
            factors.push_back(Term::constant(c));
        if (k > 0)
            factors.push_back(power(A, static_cast<unsigned>(k)));
        if (d - k > 0)
            factors.push_back(power(B, static_cast<unsigned>(d - k)));
        summands.push_back(Term::mul(std::move(factors)));
    }
    return Term::add(std::move(summands));
}

long factorial(unsigned e)
{
    long r = 1;
    for (unsigned i = 2; i <= e; ++i)
        r *= static_cast<long>(i);
    return r;
}

} // namespace

TermPtr phi_term(const PhiN& phi, const std::vector<TermPtr>& args)
{
    if (args.size() != phi.n)
        raise(ErrorCode::InvalidArgument, "expected " + std::to_string(phi.n) + " arguments");
    TermPtr acc = args.back();
    for (std::size_t i = args.size() - 1; i-- > 0;)
        acc = phi2_term(phi.g, args[i], acc);
    return acc;
}

FormulaPtr emit_chi(Place place, PrimeType tau)
{
    TermPtr t = Term::variable("t");
    TermPtr s = Term::variable("s");
    if (place.infinite())
        return Formula::eq(t, t);
    Integer p(static_cast<unsigned long>(place.p));
    std::vector<FormulaPtr> parts;
    parts.push_back(Formula::unit(Term::mul({power(t, tau.e), Term::inv(Term::constant(Rational(p)))})));
    parts.push_back(Formula::unit(s));
    Integer m = pow_int(p, tau.f) - 1;
    for (Integer d = 1; d < m; ++d)
        if (m % d == 0)
            parts.push_back(Formula::unit(Term::sub(power(s, static_cast<unsigned>(d.get_ui())), Term::constant(Rational(1)))));
    return Formula::conjunction(std::move(parts));
}

FormulaPtr emit_nu(std::uint64_t p, PrimeType tau, unsigned n)
{
    PhiN phi = build_phi_n(p, tau.f, n);
    TermPtr y = Term::variable("y");
    long ef = factorial(tau.e);
    std::vector<TermPtr> args;
    for (unsigned i = 0; i < n; ++i) {
        std::vector<TermPtr> factors{power(y, static_cast<unsigned>(ef))};
        if (i > 0)
            factors.push_back(power(Term::constant(Rational(static_cast<unsigned long>(p))), i));
        factors.push_back(power(Term::variable("x" + std::to_string(i)), n));
        args.push_back(Term::mul(std::move(factors)));
    }
    FormulaPtr body = Formula::unit(phi_term(phi, args));
    for (unsigned i = n; i-- > 0;)
        body = Formula::exists("x" + std::to_string(i), body);
    FormulaPtr nonzero = Formula::negation(Formula::eq(y, Term::constant(Rational(0))));
    return Formula::forall("y", Formula::implies(nonzero, body));
}

FormulaPtr emit_psi(std::uint64_t p, PrimeType tau, unsigned n)
{
    if (n == 0)
        raise(ErrorCode::InvalidArgument, "n must be positive");
    auto g_at = [&](const TermPtr& v) {
        std::vector<TermPtr> summands{power(v, n)};
        for (unsigned k = n; k-- > 0;) {
            TermPtr c = Term::variable("c" + std::to_string(k));
            summands.push_back(k == 0 ? c : Term::mul({c, power(v, k)}));
        }
        return Term::add(std::move(summands));
    };
    TermPtr x = Term::variable("x");
    TermPtr a = Term::variable("a");
    TermPtr zero = Term::constant(Rational(0));
    TermPtr one = Term::constant(Rational(1));
    FormulaPtr hyp = Formula::conjunction(
        {emit_chi(Place::finite(p), tau), Formula::exists("y", Formula::eq(g_at(Term::variable("y")), zero))});
    FormulaPtr concl = Formula::r(Term::sub(one, Term::mul({Term::pow(g_at(x), 2), Term::inv(Term::pow(a, 2))})));
    FormulaPtr body = Formula::exists("x", Formula::hat(p, tau, Formula::implies(hyp, concl)));
    body = Formula::forall("t", Formula::forall("s", body));
    body = Formula::forall("a", Formula::implies(Formula::negation(Formula::eq(a, zero)), body));
    for (unsigned k = n; k-- > 0;)
        body = Formula::forall("c" + std::to_string(k), body);
    return body;
}

NuProof prove_nu(const FieldPtr& field, std::uint64_t p, PrimeType tau, unsigned n, const DenseOptions& options)
{
    NuProof proof;
    proof.sentence = emit_nu(p, tau, n);
    Interpretation I = holomorphy_interpretation(field, Place::finite(p), tau);
    std::vector<PValuation> S;
    for (const Prime& P : primes_of_type(field, Place::finite(p), tau, false))
        S.push_back(std::get<PValuation>(P));
    std::vector<long> r(S.size(), 0);
    bool all = true;
    for (;;) {
        std::vector<std::pair<PValuation, long>> targets;
        for (std::size_t i = 0; i < S.size(); ++i)
            targets.emplace_back(S[i], r[i]);
        NuCase c;
        c.class_valuations = r;
        c.y = weak_approx_valuations(field, targets, options);
        ZGroupWitness w = zgroup_witness(field, p, tau, n, c.y, options);
        c.x = w.x;
        std::map<std::string, FieldElement> values{{"y", c.y}};
        for (unsigned i = 0; i < n; ++i)
            values.emplace("x" + std::to_string(i), w.x[i]);
        FormulaPtr inst = instantiate(proof.sentence, values);
        c.holds = eval_qf(I, *inst);
        std::vector<FieldElement> z;
        FieldElement pe(field, Rational(static_cast<unsigned long>(p)));
        FieldElement ye = c.y.pow(factorial(tau.e));
        for (unsigned i = 0; i < n; ++i)
            z.push_back(ye * pe.pow(i) * w.x[i].pow(n));
        c.phi_value = evaluate_phi(build_phi_n(p, tau.f, n), z);
        all = all && c.holds;
        proof.cases.push_back(std::move(c));
        std::size_t k = 0;
        while (k < r.size() && ++r[k] == static_cast<long>(n)) {
            r[k] = 0;
            ++k;
        }
        if (k == r.size())
            break;
    }
    proof.verdict = all ? Verdict::Proven : Verdict::Unknown;
    return proof;
}

} // namespace prime_scope
