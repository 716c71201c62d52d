#include "prime_scope/field/number_field.hpp"

#include <algorithm>
#include <ostream>
#include <set>

#include "prime_scope/errors.hpp"
#include "prime_scope/exact/fp_poly.hpp"

namespace prime_scope {

NumberField::NumberField(QPoly poly, Integer discriminant)
    : poly_(std::move(poly)), discriminant_(std::move(discriminant))
{
}

namespace {

[[noreturn]] void reducible(const QPoly& f, const QPoly& factor)
{
    QPoly cofactor = f / factor;
    raise(ErrorCode::Reducible, "(" + factor.to_string() + ")(" + cofactor.to_string() + ")");
}

std::vector<Integer> divisors(const Integer& n)
{
    std::vector<Integer> out{1};
    for (const auto& [q, e] : factor_integer(abs(n))) {
        std::size_t size = out.size();
        Integer power = 1;
        for (unsigned k = 1; k <= e; ++k) {
            power *= q;
            for (std::size_t i = 0; i < size; ++i)
                out.push_back(out[i] * power);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Degrees d such that a factor of degree d is compatible with the
// factorization pattern modulo every tested prime.
std::set<int> possible_factor_degrees(const QPoly& f)
{
    int n = f.degree();
    std::set<int> possible;
    for (int d = 0; d <= n; ++d)
        possible.insert(d);
    for (std::uint64_t p = 2; p <= 1000 && possible.size() > 2; ++p) {
        if (!is_prime(p))
            continue;
        FpPoly fp = FpPoly::reduce(f, p);
        if (gcd(fp, fp.derivative()).degree() > 0)
            continue;
        std::set<int> sums{0};
        for (const FpFactor& fac : factor(fp)) {
            std::set<int> next = sums;
            for (int s : sums)
                next.insert(s + fac.factor.degree());
            sums = std::move(next);
        }
        std::set<int> meet;
        std::set_intersection(possible.begin(), possible.end(), sums.begin(), sums.end(),
                              std::inserter(meet, meet.begin()));
        possible = std::move(meet);
    }
    return possible;
}

Integer binomial(unsigned n, unsigned k)
{
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

constexpr unsigned long kFactorSearchCap = 2'000'000;

// Exhaustive search for a monic integer factor of degree d, using the
// Mignotte bound |b_j| <= C(d, j) * ||f||_2.
bool search_factor(const QPoly& f, int d, QPoly& found)
{
    Integer norm2 = 0;
    for (const Rational& c : f.coefficients())
        norm2 += c.get_num() * c.get_num();
    Integer bound = sqrt(norm2) + 1;
    Integer c0 = f.coeff(0).get_num();
    std::vector<Integer> consts;
    for (const Integer& q : divisors(c0)) {
        consts.push_back(q);
        consts.push_back(-q);
    }
    std::vector<Integer> limits(static_cast<std::size_t>(d));
    Integer total = consts.size();
    for (int j = 1; j < d; ++j) {
        limits[static_cast<std::size_t>(j)] = binomial(static_cast<unsigned>(d), static_cast<unsigned>(j)) * bound;
        total *= 2 * limits[static_cast<std::size_t>(j)] + 1;
    }
    if (total > kFactorSearchCap)
        raise(ErrorCode::UncertifiedIrreducibility,
              "factor search of degree " + std::to_string(d) + " exceeds the search cap");
    std::vector<Integer> b(static_cast<std::size_t>(d), 0);
    for (int j = 1; j < d; ++j)
        b[static_cast<std::size_t>(j)] = -limits[static_cast<std::size_t>(j)];
    for (;;) {
        for (const Integer& q : consts) {
            std::vector<Rational> h;
            h.emplace_back(q);
            for (int j = 1; j < d; ++j)
                h.emplace_back(b[static_cast<std::size_t>(j)]);
            h.emplace_back(1);
            QPoly cand(std::move(h));
            if ((f % cand).is_zero()) {
                found = cand;
                return true;
            }
        }
        int j = 1;
        while (j < d && b[static_cast<std::size_t>(j)] == limits[static_cast<std::size_t>(j)]) {
            b[static_cast<std::size_t>(j)] = -limits[static_cast<std::size_t>(j)];
            ++j;
        }
        if (j >= d)
            return false;
        b[static_cast<std::size_t>(j)] += 1;
    }
}

void certify_irreducible(const QPoly& f)
{
    int n = f.degree();
    if (n == 1)
        return;
    QPoly g = gcd(f, f.derivative());
    if (g.degree() > 0)
        reducible(f, g);
    std::set<int> possible = possible_factor_degrees(f);
    for (int d : possible) {
        if (d < 1 || 2 * d > n)
            continue;
        if (d == 1) {
            Integer c0 = f.coeff(0).get_num();
            if (c0 == 0)
                reducible(f, QPoly::x());
            for (const Integer& q : divisors(c0))
                for (const Integer& r : {q, Integer(-q)})
                    if (f(Rational(r)) == 0)
                        reducible(f, QPoly({0, 1}) - QPoly::constant(Rational(r)));
            continue;
        }
        if (d > 3 || n > 8)
            raise(ErrorCode::UncertifiedIrreducibility,
                  "a factor of degree " + std::to_string(d) + " could not be excluded");
        QPoly factor;
        if (search_factor(f, d, factor))
            reducible(f, factor);
    }
}

} // namespace

FieldPtr nf_create(const QPoly& f)
{
    if (f.degree() < 1)
        raise(ErrorCode::InvalidArgument, "defining polynomial must have degree at least 1");
    if (!f.is_monic() || !f.has_integer_coefficients())
        raise(ErrorCode::NotMonic, "defining polynomial " + f.to_string() + " is not a monic integer polynomial");
    certify_irreducible(f);
    Rational disc = f.degree() == 1 ? Rational(1) : discriminant(f);
    return std::make_shared<const NumberField>(f, disc.get_num());
}

FieldPtr nf_create(std::string_view text) { return nf_create(QPoly::parse(text)); }

FieldPtr rationals()
{
    static const FieldPtr q = nf_create(QPoly::x());
    return q;
}

FieldElement::FieldElement(FieldPtr field, std::vector<Rational> coords) : field_(std::move(field))
{
    std::size_t n = static_cast<std::size_t>(field_->degree());
    if (coords.size() > n)
        coords = (QPoly(std::move(coords)) % field_->defining_poly()).coefficients();
    coords.resize(n, Rational(0));
    for (Rational& c : coords)
        c.canonicalize();
    coords_ = std::move(coords);
}

FieldElement::FieldElement(FieldPtr field, const Rational& value)
    : FieldElement(std::move(field), std::vector<Rational>{value})
{
}

FieldElement FieldElement::from_poly(FieldPtr field, const QPoly& h)
{
    QPoly r = h % field->defining_poly();
    return FieldElement(std::move(field), r.coefficients());
}

FieldElement FieldElement::alpha(FieldPtr field)
{
    return from_poly(std::move(field), QPoly::x());
}

FieldElement FieldElement::parse(FieldPtr field, std::string_view text)
{
    auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\n'; };
    while (!text.empty() && is_space(text.front()))
        text.remove_prefix(1);
    while (!text.empty() && is_space(text.back()))
        text.remove_suffix(1);
    if (text.empty())
        raise(ErrorCode::SyntaxError, "empty field element");
    if (text.front() != '[')
        return FieldElement(std::move(field), parse_rational(text));
    if (text.back() != ']')
        raise(ErrorCode::SyntaxError, "unterminated coordinate vector at position " + std::to_string(text.size()));
    std::string_view body = text.substr(1, text.size() - 2);
    std::vector<Rational> coords;
    while (true) {
        std::size_t comma = body.find(',');
        std::string_view item = body.substr(0, comma);
        while (!item.empty() && is_space(item.front()))
            item.remove_prefix(1);
        while (!item.empty() && is_space(item.back()))
            item.remove_suffix(1);
        if (item.empty()) {
            if (comma == std::string_view::npos && coords.empty())
                break;
            raise(ErrorCode::SyntaxError, "empty coordinate in " + std::string(text));
        }
        coords.push_back(parse_rational(item));
        if (comma == std::string_view::npos)
            break;
        body.remove_prefix(comma + 1);
    }
    if (coords.size() > static_cast<std::size_t>(field->degree()))
        raise(ErrorCode::InvalidArgument, "coordinate vector longer than the field degree");
    return FieldElement(std::move(field), std::move(coords));
}

bool FieldElement::is_zero() const
{
    return std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return c == 0; });
}

bool FieldElement::is_rational() const
{
    return std::all_of(coords_.begin() + 1, coords_.end(), [](const Rational& c) { return c == 0; });
}

bool FieldElement::is_one() const { return is_rational() && coords_[0] == 1; }

Integer FieldElement::denominator() const
{
    Integer l = 1;
    for (const Rational& c : coords_)
        l = lcm(l, Integer(c.get_den()));
    return l;
}

Integer FieldElement::height() const
{
    Integer h = 0;
    for (const Rational& c : coords_)
        h = std::max(h, prime_scope::height(c));
    return h;
}

FieldElement FieldElement::operator-() const
{
    std::vector<Rational> v(coords_);
    for (Rational& c : v)
        c = -c;
    return FieldElement(field_, std::move(v));
}

FieldElement operator+(const FieldElement& a, const FieldElement& b)
{
    std::vector<Rational> v(a.coords_);
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] += b.coords_[i];
    return FieldElement(a.field_, std::move(v));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) { return a + (-b); }

FieldElement operator*(const FieldElement& a, const FieldElement& b)
{
    if (a.field_->degree() == 1)
        return FieldElement(a.field_, a.coords_[0] * b.coords_[0]);
    return FieldElement::from_poly(a.field_, a.as_poly() * b.as_poly());
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * nf_inv(b); }

bool operator==(const FieldElement& a, const FieldElement& b) { return a.coords_ == b.coords_; }

FieldElement FieldElement::pow(long exponent) const
{
    if (exponent < 0)
        return nf_inv(*this).pow(-exponent);
    FieldElement r(field_, 1), b = *this;
    while (exponent) {
        if (exponent & 1)
            r = r * b;
        b = b * b;
        exponent >>= 1;
    }
    return r;
}

Rational FieldElement::norm() const
{
    if (is_zero())
        return 0;
    if (is_rational())
        return pow_rational(coords_[0], field_->degree());
    return resultant(field_->defining_poly(), as_poly());
}

std::string FieldElement::to_vector_string() const
{
    std::string out = "[";
    for (std::size_t i = 0; i < coords_.size(); ++i)
        out += (i ? ", " : "") + prime_scope::to_string(coords_[i]);
    return out + "]";
}

std::string FieldElement::to_string() const
{
    if (field_->degree() == 1)
        return prime_scope::to_string(coords_[0]);
    return to_vector_string();
}

FieldElement nf_inv(const FieldElement& x)
{
    if (x.is_zero())
        raise(ErrorCode::DivisionByZero, "inverse of zero");
    if (x.is_rational())
        return FieldElement(x.field(), 1 / x.rational_value());
    QPolyXgcd r = xgcd(x.as_poly(), x.field()->defining_poly());
    return FieldElement::from_poly(x.field(), r.s);
}

std::ostream& operator<<(std::ostream& os, const FieldElement& x) { return os << x.to_string(); }

} // namespace prime_scope
