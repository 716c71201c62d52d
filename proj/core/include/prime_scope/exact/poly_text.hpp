#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace prime_scope {

// One term of a polynomial literal `c0 + c1*X + ... + ck*X^k`.
struct PolyTerm {
    bool negative = false;
    std::string coefficient; // empty means 1
    unsigned exponent = 0;
};

/// Splits a polynomial literal into signed terms. Coefficients are either
/// rationals `num/den` or bracketed coordinate vectors `[c0, c1, ...]`.
std::vector<PolyTerm> parse_poly_terms(std::string_view text);

/// Renders lowest degree first. `render` returns the coefficient text and
/// whether it is negative (the sign is then printed as a separator).
struct RenderedCoefficient {
    bool zero = false;
    bool negative = false;
    bool is_one = false; // |c| == 1, so the coefficient is omitted before X
    std::string magnitude;
};
std::string render_poly(std::size_t length,
                        const std::function<RenderedCoefficient(std::size_t)>& render);

} // namespace prime_scope
