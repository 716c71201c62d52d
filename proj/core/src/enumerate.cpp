#include "prime_scope/field/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

namespace prime_scope {

std::vector<Rational> coordinate_level(long level, bool integral)
{
    if (integral) {
        if (level == 0)
            return {Rational(0)};
        return {Rational(level), Rational(-level)};
    }
    if (level < 1)
        return {};
    if (level == 1)
        return {Rational(0), Rational(1), Rational(-1)};
    std::vector<std::tuple<long, long, bool>> keys;
    for (long d = 1; d <= level; ++d) {
        if (d < level) {
            if (std::gcd(level, d) == 1)
                keys.emplace_back(d, level, false);
        } else {
            for (long n = 1; n <= level; ++n)
                if (std::gcd(n, d) == 1)
                    keys.emplace_back(d, n, false);
        }
    }
    std::sort(keys.begin(), keys.end());
    std::vector<Rational> out;
    for (const auto& [d, n, neg] : keys) {
        (void)neg;
        out.push_back(make_rational(Integer(n), Integer(d)));
        out.push_back(make_rational(Integer(-n), Integer(d)));
    }
    return out;
}

bool enumerate_elements(const FieldPtr& field, long max_level, bool integral,
                        const std::function<bool(const FieldElement&)>& visit)
{
    std::size_t n = static_cast<std::size_t>(field->degree());
    std::vector<Rational> values;
    std::vector<long> level_of;
    long first = integral ? 0 : 1;
    for (long h = first; h <= max_level; ++h) {
        for (const Rational& v : coordinate_level(h, integral)) {
            values.push_back(v);
            level_of.push_back(h);
        }
        std::size_t count = values.size();
        // odometer over indices < count, first coordinate fastest
        std::vector<std::size_t> idx(n, 0);
        for (;;) {
            bool at_level = false;
            for (std::size_t i : idx)
                at_level = at_level || level_of[i] == h;
            if (at_level) {
                std::vector<Rational> coords;
                for (std::size_t i : idx)
                    coords.push_back(values[i]);
                if (visit(FieldElement(field, std::move(coords))))
                    return true;
            }
            std::size_t k = 0;
            while (k < n && ++idx[k] == count) {
                idx[k] = 0;
                ++k;
            }
            if (k == n)
                break;
        }
    }
    return false;
}

} // namespace prime_scope
