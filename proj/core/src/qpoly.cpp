#include "prime_scope/exact/qpoly.hpp"

#include <ostream>

#include "prime_scope/errors.hpp"
#include "prime_scope/exact/poly_text.hpp"

namespace prime_scope {

QPoly::QPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { normalize(); }

QPoly::QPoly(std::initializer_list<long> coefficients)
{
    for (long c : coefficients)
        coeffs_.emplace_back(c);
    normalize();
}

QPoly QPoly::constant(const Rational& c) { return QPoly(std::vector<Rational>{c}); }
QPoly QPoly::x() { return QPoly({0, 1}); }

QPoly QPoly::monomial(const Rational& c, std::size_t degree)
{
    std::vector<Rational> v(degree + 1, Rational(0));
    v[degree] = c;
    return QPoly(std::move(v));
}

QPoly QPoly::parse(std::string_view text)
{
    std::vector<Rational> v;
    for (const PolyTerm& t : parse_poly_terms(text)) {
        if (!t.coefficient.empty() && t.coefficient.front() == '[')
            raise(ErrorCode::SyntaxError, "vector coefficient in a rational polynomial");
        Rational c = t.coefficient.empty() ? Rational(1) : parse_rational(t.coefficient);
        if (t.negative)
            c = -c;
        if (v.size() <= t.exponent)
            v.resize(t.exponent + 1, Rational(0));
        v[t.exponent] += c;
    }
    return QPoly(std::move(v));
}

void QPoly::normalize()
{
    for (Rational& c : coeffs_)
        c.canonicalize();
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

bool QPoly::has_integer_coefficients() const
{
    for (const Rational& c : coeffs_)
        if (c.get_den() != 1)
            return false;
    return true;
}

Rational QPoly::operator()(const Rational& x) const
{
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

QPoly QPoly::derivative() const
{
    if (coeffs_.size() <= 1)
        return {};
    std::vector<Rational> v(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        v[i - 1] = coeffs_[i] * static_cast<long>(i);
    return QPoly(std::move(v));
}

QPoly QPoly::monic() const
{
    if (is_zero())
        return {};
    Rational inv = 1 / leading();
    return inv * *this;
}

QPoly QPoly::primitive_integer() const
{
    if (is_zero())
        return {};
    Integer l = 1, g = 0;
    for (const Rational& c : coeffs_)
        l = lcm(l, Integer(c.get_den()));
    std::vector<Rational> v;
    for (const Rational& c : coeffs_) {
        Rational s = c * l;
        v.push_back(s);
        g = gcd(g, Integer(s.get_num()));
    }
    if (leading() < 0)
        g = -g;
    for (Rational& c : v)
        c /= g;
    return QPoly(std::move(v));
}

QPoly QPoly::operator-() const
{
    std::vector<Rational> v(coeffs_);
    for (Rational& c : v)
        c = -c;
    return QPoly(std::move(v));
}

QPoly operator+(const QPoly& a, const QPoly& b)
{
    std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        v[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i)
        v[i] += b.coeffs_[i];
    return QPoly(std::move(v));
}

QPoly operator-(const QPoly& a, const QPoly& b) { return a + (-b); }

QPoly operator*(const QPoly& a, const QPoly& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return QPoly(std::move(v));
}

QPoly operator*(const Rational& c, const QPoly& a)
{
    std::vector<Rational> v(a.coeffs_);
    for (Rational& x : v)
        x *= c;
    return QPoly(std::move(v));
}

std::pair<QPoly, QPoly> QPoly::divmod(const QPoly& divisor) const
{
    if (divisor.is_zero())
        raise(ErrorCode::DivisionByZero, "polynomial division by zero");
    std::vector<Rational> r(coeffs_);
    int dd = divisor.degree();
    if (degree() < dd)
        return {QPoly(), *this};
    std::vector<Rational> q(static_cast<std::size_t>(degree() - dd + 1), Rational(0));
    Rational inv = 1 / divisor.leading();
    for (int i = degree(); i >= dd; --i) {
        Rational c = r[static_cast<std::size_t>(i)] * inv;
        if (c == 0)
            continue;
        q[static_cast<std::size_t>(i - dd)] = c;
        for (int j = 0; j <= dd; ++j)
            r[static_cast<std::size_t>(i - dd + j)] -= c * divisor.coeffs_[static_cast<std::size_t>(j)];
    }
    r.resize(static_cast<std::size_t>(dd));
    return {QPoly(std::move(q)), QPoly(std::move(r))};
}

std::string QPoly::to_string() const
{
    return render_poly(coeffs_.size(), [this](std::size_t i) {
        RenderedCoefficient rc;
        const Rational& c = coeffs_[i];
        rc.zero = c == 0;
        rc.negative = c < 0;
        Rational m = abs(c);
        rc.is_one = m == 1;
        rc.magnitude = prime_scope::to_string(m);
        return rc;
    });
}

QPoly gcd(const QPoly& a, const QPoly& b)
{
    QPoly x = a, y = b;
    while (!y.is_zero()) {
        QPoly r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

QPolyXgcd xgcd(const QPoly& a, const QPoly& b)
{
    QPoly r0 = a, r1 = b, s0 = QPoly::constant(1), s1, t0, t1 = QPoly::constant(1);
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        QPoly s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        QPoly t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero())
        return {QPoly(), QPoly(), QPoly()};
    Rational inv = 1 / r0.leading();
    return {inv * r0, inv * s0, inv * t0};
}

QPoly squarefree_part(const QPoly& p)
{
    if (p.degree() <= 0)
        return p.monic();
    return (p / gcd(p, p.derivative())).monic();
}

Rational resultant(const QPoly& a, const QPoly& b)
{
    if (a.is_zero() || b.is_zero())
        return 0;
    // Euclidean recursion: res(a, b) = (-1)^{deg a deg b} lc(b)^{deg a - deg r} res(b, r)
    QPoly f = a, g = b;
    Rational acc = 1;
    for (;;) {
        int df = f.degree(), dg = g.degree();
        if (dg == 0)
            return acc * pow_rational(g.leading(), df);
        QPoly r = f % g;
        if (r.is_zero())
            return 0;
        if ((df % 2 == 1) && (dg % 2 == 1))
            acc = -acc;
        acc *= pow_rational(g.leading(), df - r.degree());
        f = std::move(g);
        g = std::move(r);
    }
}

Rational discriminant(const QPoly& p)
{
    int n = p.degree();
    if (n < 1)
        raise(ErrorCode::InvalidArgument, "discriminant of a constant");
    Rational r = resultant(p, p.derivative()) / p.leading();
    if ((n * (n - 1) / 2) % 2 == 1)
        r = -r;
    return r;
}

QPoly pow(const QPoly& p, unsigned exponent)
{
    QPoly r = QPoly::constant(1), b = p;
    while (exponent) {
        if (exponent & 1)
            r = r * b;
        b = b * b;
        exponent >>= 1;
    }
    return r;
}

std::ostream& operator<<(std::ostream& os, const QPoly& x) { return os << x.to_string(); }

} // namespace prime_scope
