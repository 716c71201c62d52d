#pragma once

// Independent brute-force oracles for the acceptance corpus and unit tests.
// They use plain machine integers and share no code with the library.

#include <cstdint>
#include <vector>

namespace oracle {

using i128 = __int128;

inline int vp(i128 x, std::int64_t p)
{
    if (x == 0)
        return 1 << 20;
    int v = 0;
    while (x % p == 0) {
        x /= p;
        ++v;
    }
    return v;
}

inline i128 eval(const std::vector<std::int64_t>& c, i128 x)
{
    i128 acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

inline std::vector<std::int64_t> derivative(const std::vector<std::int64_t>& c)
{
    std::vector<std::int64_t> d;
    for (std::size_t i = 1; i < c.size(); ++i)
        d.push_back(c[i] * static_cast<std::int64_t>(i));
    return d;
}

// Monic integer polynomial division; exact for monic divisors.
inline std::vector<std::int64_t> divide_monic(std::vector<std::int64_t> a, const std::vector<std::int64_t>& b)
{
    std::vector<std::int64_t> q(a.size() - b.size() + 1, 0);
    for (std::size_t i = a.size(); i-- >= b.size();) {
        std::int64_t c = a[i];
        q[i - (b.size() - 1)] = c;
        for (std::size_t j = 0; j < b.size(); ++j)
            a[i - (b.size() - 1) + j] -= c * b[j];
        if (i == b.size() - 1)
            break;
    }
    return q;
}

// Squarefree part of a monic integer polynomial of degree <= 3: removes a
// repeated rational root, found by searching divisors of the constant term.
inline std::vector<std::int64_t> squarefree_small(std::vector<std::int64_t> c)
{
    for (bool changed = true; changed;) {
        changed = false;
        if (c.size() < 3)
            break;
        std::int64_t c0 = c[0];
        std::int64_t bound = c0 == 0 ? 0 : (c0 < 0 ? -c0 : c0);
        for (std::int64_t r = -bound; r <= bound && !changed; ++r) {
            if (c0 != 0 && (r == 0 || c0 % r != 0))
                continue;
            if (eval(c, r) == 0 && eval(derivative(c), r) == 0) {
                c = divide_monic(c, {-r, 1});
                changed = true;
            }
        }
    }
    return c;
}

// True iff some x mod p^12 satisfies v(s(x)) > 2 v(s'(x)) for the squarefree
// part s, searching only classes with p^k | s(x) at level k.
inline bool padic_root_mod_p12(const std::vector<std::int64_t>& g, std::int64_t p)
{
    std::vector<std::int64_t> s = squarefree_small(g);
    std::vector<std::int64_t> ds = derivative(s);
    std::vector<i128> level{0};
    i128 pk = 1;
    for (int k = 0; k <= 12; ++k) {
        for (i128 x : level) {
            i128 sx = eval(s, x);
            if (sx == 0 || vp(sx, p) > 2 * vp(eval(ds, x), p))
                return true;
        }
        if (k == 12)
            break;
        std::vector<i128> next;
        for (i128 x : level)
            for (std::int64_t d = 0; d < p; ++d) {
                i128 y = x + d * pk;
                if (vp(eval(s, y), p) >= k + 1)
                    next.push_back(y);
            }
        level = std::move(next);
        pk *= p;
        if (level.empty())
            return false;
    }
    return false;
}

// Number of distinct roots of c in F_p.
inline int distinct_roots_mod_p(const std::vector<std::int64_t>& c, std::int64_t p)
{
    int count = 0;
    for (std::int64_t x = 0; x < p; ++x) {
        i128 v = eval(c, x) % p;
        count += v == 0;
    }
    return count;
}

} // namespace oracle
