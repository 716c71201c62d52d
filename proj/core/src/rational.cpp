#include "prime_scope/exact/rational.hpp"

#include <cctype>

#include "prime_scope/errors.hpp"

namespace prime_scope {

Rational make_rational(const Integer& num, const Integer& den)
{
    if (den == 0)
        raise(ErrorCode::DivisionByZero, "rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

namespace {

bool parse_integer(std::string_view text, Integer& out)
{
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '+' || text[i] == '-'))
        ++i;
    if (i == text.size())
        return false;
    for (std::size_t j = i; j < text.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(text[j])))
            return false;
    std::string s(text);
    if (s[0] == '+')
        s.erase(0, 1);
    return out.set_str(s, 10) == 0;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    text = trim(text);
    auto slash = text.find('/');
    Integer num, den = 1;
    bool ok = false;
    if (slash == std::string_view::npos) {
        ok = parse_integer(text, num);
    } else {
        ok = parse_integer(trim(text.substr(0, slash)), num)
             && parse_integer(trim(text.substr(slash + 1)), den);
    }
    if (!ok)
        raise(ErrorCode::SyntaxError, "malformed rational '" + std::string(text) + "'");
    return make_rational(num, den);
}

std::string to_string(const Integer& n) { return n.get_str(); }

std::string to_string(const Rational& q)
{
    if (q.get_den() == 1)
        return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Integer height(const Rational& q)
{
    Integer n = abs(q.get_num());
    return n > q.get_den() ? n : Integer(q.get_den());
}

long padic_valuation(const Integer& n, const Integer& p)
{
    if (n == 0)
        raise(ErrorCode::ZeroElement, "valuation of zero");
    Integer m = n;
    long v = 0;
    while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
        mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
        ++v;
    }
    return v;
}

long padic_valuation(const Rational& q, const Integer& p)
{
    return padic_valuation(q.get_num(), p) - padic_valuation(q.get_den(), p);
}

bool is_probable_prime(const Integer& n)
{
    return n > 1 && mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

std::vector<std::pair<Integer, unsigned>> factor_integer(Integer n)
{
    n = abs(n);
    std::vector<std::pair<Integer, unsigned>> out;
    if (n <= 1)
        return out;
    for (Integer d = 2; d * d <= n; ++d) {
        if (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
            unsigned e = 0;
            while (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
                n /= d;
                ++e;
            }
            out.emplace_back(d, e);
            if (is_probable_prime(n))
                break;
        }
    }
    if (n > 1)
        out.emplace_back(n, 1u);
    return out;
}

Integer pow_int(const Integer& base, unsigned long exponent)
{
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
    return r;
}

Rational pow_rational(const Rational& base, long exponent)
{
    if (exponent < 0) {
        if (base == 0)
            raise(ErrorCode::DivisionByZero, "negative power of zero");
        return pow_rational(Rational(1) / base, -exponent);
    }
    auto e = static_cast<unsigned long>(exponent);
    return make_rational(pow_int(base.get_num(), e), pow_int(base.get_den(), e));
}

Integer rational_mod(const Rational& q, const Integer& m)
{
    Integer inv;
    if (mpz_invert(inv.get_mpz_t(), q.get_den().get_mpz_t(), m.get_mpz_t()) == 0)
        raise(ErrorCode::NotPIntegral, "denominator not invertible modulo " + m.get_str());
    Integer r = (q.get_num() * inv) % m;
    if (r < 0)
        r += m;
    return r;
}

bool is_rational_square(const Rational& q)
{
    if (q < 0)
        return false;
    return mpz_perfect_square_p(q.get_num().get_mpz_t()) != 0
           && mpz_perfect_square_p(q.get_den().get_mpz_t()) != 0;
}

Rational rational_sqrt(const Rational& q)
{
    Integer a, b;
    mpz_sqrt(a.get_mpz_t(), q.get_num().get_mpz_t());
    mpz_sqrt(b.get_mpz_t(), q.get_den().get_mpz_t());
    return make_rational(a, b);
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exponent, std::uint64_t m)
{
    std::uint64_t r = 1 % m;
    base %= m;
    while (exponent) {
        if (exponent & 1)
            r = mul_mod(r, base, m);
        base = mul_mod(base, base, m);
        exponent >>= 1;
    }
    return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m)
{
    // extended Euclid on signed 128-bit to avoid overflow
    __int128 t = 0, new_t = 1, r = m, new_r = a % m;
    while (new_r != 0) {
        __int128 q = r / new_r;
        t -= q * new_t;
        std::swap(t, new_t);
        r -= q * new_r;
        std::swap(r, new_r);
    }
    if (r != 1)
        raise(ErrorCode::DivisionByZero, "no inverse modulo " + std::to_string(m));
    if (t < 0)
        t += m;
    return static_cast<std::uint64_t>(t);
}

} // namespace prime_scope
