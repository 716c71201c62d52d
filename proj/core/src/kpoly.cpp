#include "prime_scope/field/kpoly.hpp"

#include <ostream>

#include "prime_scope/errors.hpp"
#include "prime_scope/exact/poly_text.hpp"

namespace prime_scope {

KPoly::KPoly(FieldPtr field, std::vector<FieldElement> coefficients)
    : field_(std::move(field)), c_(std::move(coefficients))
{
    normalize();
}

KPoly::KPoly(FieldPtr field, const QPoly& q) : field_(std::move(field))
{
    for (const Rational& c : q.coefficients())
        c_.emplace_back(field_, c);
    normalize();
}

KPoly KPoly::x(FieldPtr field)
{
    FieldElement zero(field, 0), one(field, 1);
    return KPoly(std::move(field), {zero, one});
}

KPoly KPoly::parse(FieldPtr field, std::string_view text)
{
    std::vector<FieldElement> v;
    for (const PolyTerm& t : parse_poly_terms(text)) {
        FieldElement c = t.coefficient.empty() ? FieldElement(field, 1) : FieldElement::parse(field, t.coefficient);
        if (t.negative)
            c = -c;
        while (v.size() <= t.exponent)
            v.emplace_back(field, 0);
        v[t.exponent] = v[t.exponent] + c;
    }
    return KPoly(std::move(field), std::move(v));
}

void KPoly::normalize()
{
    while (!c_.empty() && c_.back().is_zero())
        c_.pop_back();
}

FieldElement KPoly::coeff(std::size_t i) const
{
    return i < c_.size() ? c_[i] : FieldElement(field_, 0);
}

bool KPoly::has_rational_coefficients() const
{
    for (const FieldElement& c : c_)
        if (!c.is_rational())
            return false;
    return true;
}

QPoly KPoly::to_qpoly() const
{
    std::vector<Rational> v;
    for (const FieldElement& c : c_)
        v.push_back(c.rational_value());
    return QPoly(std::move(v));
}

FieldElement KPoly::operator()(const FieldElement& x) const
{
    FieldElement acc(field_, 0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

FieldElement KPoly::operator()(const Rational& x) const { return (*this)(FieldElement(field_, x)); }

KPoly KPoly::derivative() const
{
    std::vector<FieldElement> v;
    for (std::size_t i = 1; i < c_.size(); ++i)
        v.push_back(FieldElement(field_, static_cast<long>(i)) * c_[i]);
    return KPoly(field_, std::move(v));
}

KPoly KPoly::monic() const
{
    if (is_zero())
        return *this;
    return nf_inv(leading()) * *this;
}

KPoly operator+(const KPoly& a, const KPoly& b)
{
    std::vector<FieldElement> v;
    std::size_t n = std::max(a.c_.size(), b.c_.size());
    for (std::size_t i = 0; i < n; ++i)
        v.push_back(a.coeff(i) + b.coeff(i));
    return KPoly(a.field_, std::move(v));
}

KPoly operator-(const KPoly& a, const KPoly& b)
{
    std::vector<FieldElement> v;
    std::size_t n = std::max(a.c_.size(), b.c_.size());
    for (std::size_t i = 0; i < n; ++i)
        v.push_back(a.coeff(i) - b.coeff(i));
    return KPoly(a.field_, std::move(v));
}

KPoly operator*(const KPoly& a, const KPoly& b)
{
    if (a.is_zero() || b.is_zero())
        return KPoly(a.field_);
    std::vector<FieldElement> v(a.c_.size() + b.c_.size() - 1, FieldElement(a.field_, 0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
    return KPoly(a.field_, std::move(v));
}

KPoly operator*(const FieldElement& c, const KPoly& a)
{
    std::vector<FieldElement> v;
    for (const FieldElement& x : a.c_)
        v.push_back(c * x);
    return KPoly(a.field_, std::move(v));
}

bool operator==(const KPoly& a, const KPoly& b) { return a.c_ == b.c_; }

std::pair<KPoly, KPoly> KPoly::divmod(const KPoly& d) const
{
    if (d.is_zero())
        raise(ErrorCode::DivisionByZero, "polynomial division by zero");
    if (degree() < d.degree())
        return {KPoly(field_), *this};
    std::vector<FieldElement> r(c_);
    std::size_t dd = static_cast<std::size_t>(d.degree());
    std::vector<FieldElement> q(r.size() - dd, FieldElement(field_, 0));
    FieldElement inv = nf_inv(d.leading());
    for (std::size_t i = r.size(); i-- > dd;) {
        if (r[i].is_zero())
            continue;
        FieldElement c = r[i] * inv;
        q[i - dd] = c;
        for (std::size_t j = 0; j <= dd; ++j)
            r[i - dd + j] = r[i - dd + j] - c * d.c_[j];
    }
    r.resize(dd, FieldElement(field_, 0));
    return {KPoly(field_, std::move(q)), KPoly(field_, std::move(r))};
}

std::string KPoly::to_string() const
{
    return render_poly(c_.size(), [this](std::size_t i) {
        RenderedCoefficient rc;
        const FieldElement& c = c_[i];
        rc.zero = c.is_zero();
        if (c.is_rational()) {
            Rational v = c.rational_value();
            rc.negative = v < 0;
            rc.is_one = abs(v) == 1;
            rc.magnitude = prime_scope::to_string(Rational(abs(v)));
        } else {
            rc.magnitude = c.to_vector_string();
        }
        return rc;
    });
}

KPoly gcd(const KPoly& a, const KPoly& b)
{
    KPoly x = a, y = b;
    while (!y.is_zero()) {
        KPoly r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

KPoly squarefree_part(const KPoly& g)
{
    if (g.degree() <= 0)
        return g.monic();
    return (g / gcd(g, g.derivative())).monic();
}

FieldElement resultant(const KPoly& a, const KPoly& b)
{
    const FieldPtr& K = a.field();
    if (a.is_zero() || b.is_zero())
        return FieldElement(K, 0);
    KPoly f = a, g = b;
    FieldElement acc(K, 1);
    for (;;) {
        int df = f.degree(), dg = g.degree();
        if (dg == 0)
            return acc * g.leading().pow(df);
        KPoly r = f % g;
        if (r.is_zero())
            return FieldElement(K, 0);
        if ((df % 2 == 1) && (dg % 2 == 1))
            acc = -acc;
        acc = acc * g.leading().pow(df - r.degree());
        f = std::move(g);
        g = std::move(r);
    }
}

FieldElement discriminant(const KPoly& g)
{
    int n = g.degree();
    if (n < 1)
        raise(ErrorCode::InvalidArgument, "discriminant of a constant");
    if (n == 1)
        return FieldElement(g.field(), 1);
    FieldElement r = resultant(g, g.derivative()) / g.leading();
    if ((n * (n - 1) / 2) % 2 == 1)
        r = -r;
    return r;
}

KPoly scale_roots(const KPoly& g, const FieldElement& c)
{
    std::vector<FieldElement> v;
    int n = g.degree();
    for (int i = 0; i <= n; ++i)
        v.push_back(g.coefficients()[static_cast<std::size_t>(i)] * c.pow(n - i));
    return KPoly(g.field(), std::move(v));
}

std::ostream& operator<<(std::ostream& os, const KPoly& x) { return os << x.to_string(); }

} // namespace prime_scope
