#pragma once

#include <functional>
#include <vector>

#include "prime_scope/field/number_field.hpp"

namespace prime_scope {

/// Values of one coordinate at a height level, in canonical order.
/// Integral mode: level 0 is {0}, level h is {h, -h}.
/// Rational mode: level 1 is {0, 1, -1}; level h >= 2 holds the rationals of
/// height h ordered by denominator, then |numerator|, positive first.
std::vector<Rational> coordinate_level(long level, bool integral);

/// Visits elements of K in canonical order: by height level, then by
/// coordinate vector with the highest power-basis coordinate most
/// significant. Stops early and returns true once `visit` returns true.
bool enumerate_elements(const FieldPtr& field, long max_level, bool integral,
                        const std::function<bool(const FieldElement&)>& visit);

} // namespace prime_scope
