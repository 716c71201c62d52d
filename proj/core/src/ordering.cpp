#include "prime_scope/field/ordering.hpp"

#include <algorithm>
#include <functional>
#include <mutex>

#include "prime_scope/errors.hpp"

namespace prime_scope {

struct Ordering::Cache {
    std::mutex mutex;
    Rational lo, hi;
};

namespace {

std::vector<QPoly> sturm_sequence(const QPoly& f)
{
    std::vector<QPoly> seq{f, f.derivative()};
    while (!seq.back().is_zero()) {
        QPoly r = seq[seq.size() - 2] % seq.back();
        if (r.is_zero())
            break;
        seq.push_back(-r);
    }
    if (seq.back().is_zero())
        seq.pop_back();
    return seq;
}

std::size_t variations(const std::vector<int>& signs)
{
    std::size_t v = 0;
    int last = 0;
    for (int s : signs) {
        if (s == 0)
            continue;
        if (last != 0 && s != last)
            ++v;
        last = s;
    }
    return v;
}

std::size_t variations_at(const std::vector<QPoly>& seq, const Rational& x)
{
    std::vector<int> s;
    for (const QPoly& p : seq)
        s.push_back(sign(p(x)));
    return variations(s);
}

// Roots of f in (a, b].
std::size_t count_in(const std::vector<QPoly>& seq, const Rational& a, const Rational& b)
{
    return variations_at(seq, a) - variations_at(seq, b);
}

Rational cauchy_bound(const QPoly& f)
{
    Rational m = 0;
    for (const Rational& c : f.coefficients())
        m = std::max(m, Rational(abs(c / f.leading())));
    return m + 1;
}

RationalInterval mul(const RationalInterval& a, const RationalInterval& b)
{
    Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

RationalInterval horner(const QPoly& h, const RationalInterval& x)
{
    RationalInterval acc{0, 0};
    const auto& c = h.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = mul(acc, x);
        acc.lo += *it;
        acc.hi += *it;
    }
    return acc;
}

// Halves [lo, hi] keeping the root of f; f has no rational root inside.
void bisect(const QPoly& f, Rational& lo, Rational& hi)
{
    Rational mid = (lo + hi) / 2;
    int sm = sign(f(mid));
    if (sm == 0) {
        lo = hi = mid;
        return;
    }
    if (sm == sign(f(lo)))
        lo = mid;
    else
        hi = mid;
}

} // namespace

std::size_t sturm_root_count(const QPoly& f)
{
    if (f.degree() < 1)
        return 0;
    auto seq = sturm_sequence(f);
    std::vector<int> minus, plus;
    for (const QPoly& p : seq) {
        int lc = sign(p.leading());
        plus.push_back(lc);
        minus.push_back(p.degree() % 2 == 0 ? lc : -lc);
    }
    return variations(minus) - variations(plus);
}

Ordering::Ordering(FieldPtr field, Rational lo, Rational hi, std::size_t index)
    : field_(std::move(field)), lo_(std::move(lo)), hi_(std::move(hi)), index_(index),
      cache_(std::make_shared<Cache>())
{
    cache_->lo = lo_;
    cache_->hi = hi_;
}

RationalInterval Ordering::best_interval() const
{
    std::lock_guard<std::mutex> lock(cache_->mutex);
    return {cache_->lo, cache_->hi};
}

Ordering Ordering::refine_to(const Rational& width) const
{
    RationalInterval iv = best_interval();
    const QPoly& f = field_->defining_poly();
    while (iv.hi - iv.lo > width) {
        if (f.degree() == 1) {
            Rational r = -f.coeff(0);
            iv.lo = r - width / 2;
            iv.hi = r + width / 2;
            break;
        }
        bisect(f, iv.lo, iv.hi);
    }
    {
        std::lock_guard<std::mutex> lock(cache_->mutex);
        if (iv.hi - iv.lo < cache_->hi - cache_->lo) {
            cache_->lo = iv.lo;
            cache_->hi = iv.hi;
        }
    }
    Ordering out(field_, iv.lo, iv.hi, index_);
    out.cache_ = cache_;
    return out;
}

std::vector<Ordering> real_embeddings(const FieldPtr& field)
{
    const QPoly& f = field->defining_poly();
    std::vector<Ordering> out;
    if (f.degree() == 1) {
        Rational r = -f.coeff(0);
        out.emplace_back(field, r - 1, r + 1, 0);
        return out;
    }
    auto seq = sturm_sequence(f);
    Rational b = cauchy_bound(f);
    std::vector<RationalInterval> found;
    std::function<void(const Rational&, const Rational&)> split = [&](const Rational& lo, const Rational& hi) {
        std::size_t n = count_in(seq, lo, hi);
        if (n == 0)
            return;
        if (n == 1) {
            found.push_back({lo, hi});
            return;
        }
        Rational mid = (lo + hi) / 2;
        split(lo, mid);
        split(mid, hi);
    };
    split(-b, b);
    for (std::size_t i = 0; i < found.size(); ++i)
        out.emplace_back(field, found[i].lo, found[i].hi, i);
    return out;
}

RationalInterval enclose(const Ordering& P, const FieldElement& x, const Rational& width)
{
    if (x.is_rational())
        return {x.rational_value(), x.rational_value()};
    QPoly h = x.as_poly();
    RationalInterval iv = P.best_interval();
    Rational step = iv.hi - iv.lo;
    for (;;) {
        RationalInterval r = horner(h, iv);
        if (r.hi - r.lo <= width)
            return r;
        step /= 4;
        iv = P.refine_to(step).best_interval();
    }
}

int sign_at(const Ordering& P, const FieldElement& x)
{
    if (x.is_zero())
        return 0;
    if (x.is_rational())
        return sign(x.rational_value());
    QPoly h = x.as_poly();
    RationalInterval iv = P.best_interval();
    Rational step = iv.hi - iv.lo;
    for (;;) {
        RationalInterval r = horner(h, iv);
        if (r.lo > 0)
            return 1;
        if (r.hi < 0)
            return -1;
        step /= 4;
        iv = P.refine_to(step).best_interval();
    }
}

namespace {

struct KSturm {
    const Ordering& P;
    std::vector<KPoly> seq;

    KSturm(const Ordering& P, const KPoly& g) : P(P)
    {
        seq = {g, g.derivative()};
        while (!seq.back().is_zero()) {
            KPoly r = seq[seq.size() - 2] % seq.back();
            if (r.is_zero())
                break;
            seq.push_back(FieldElement(g.field(), -1) * r);
        }
        if (seq.back().is_zero())
            seq.pop_back();
    }

    std::size_t at(const Rational& x) const
    {
        std::vector<int> s;
        for (const KPoly& p : seq)
            s.push_back(sign_at(P, p(x)));
        return variations(s);
    }

    std::size_t total() const
    {
        std::vector<int> minus, plus;
        for (const KPoly& p : seq) {
            int lc = sign_at(P, p.leading());
            plus.push_back(lc);
            minus.push_back(p.degree() % 2 == 0 ? lc : -lc);
        }
        return variations(minus) - variations(plus);
    }
};

} // namespace

std::size_t count_real_roots(const Ordering& P, const KPoly& g)
{
    if (g.degree() < 1)
        return 0;
    KSturm st(P, squarefree_part(g));
    return st.total();
}

std::vector<RationalInterval> isolate_real_roots(const Ordering& P, const KPoly& g)
{
    std::vector<RationalInterval> found;
    if (g.degree() < 1)
        return found;
    KPoly s = squarefree_part(g);
    KSturm st(P, s);
    Rational bound = 0;
    for (const FieldElement& c : s.coefficients()) {
        RationalInterval iv = enclose(P, c, Rational(1));
        bound = std::max({bound, Rational(abs(iv.lo)), Rational(abs(iv.hi))});
    }
    bound += 1;
    std::function<void(const Rational&, const Rational&, std::size_t, std::size_t)> split =
        [&](const Rational& lo, const Rational& hi, std::size_t vlo, std::size_t vhi) {
            std::size_t n = vlo - vhi;
            if (n == 0)
                return;
            if (n == 1 && sign_at(P, s(lo)) != 0) {
                found.push_back({lo, hi});
                return;
            }
            Rational mid = (lo + hi) / 2;
            std::size_t vmid = st.at(mid);
            split(lo, mid, vlo, vmid);
            split(mid, hi, vmid, vhi);
        };
    split(-bound, bound, st.at(-bound), st.at(bound));
    return found;
}

} // namespace prime_scope
