#pragma once

#include <cstddef>
#include <memory>
#include <utility>
#include <vector>

#include "prime_scope/field/kpoly.hpp"
#include "prime_scope/field/number_field.hpp"

namespace prime_scope {

struct RationalInterval {
    Rational lo, hi;
};

/// A real embedding of K, identified by an interval isolating one real
/// root of the defining polynomial.
class Ordering {
public:
    Ordering(FieldPtr field, Rational lo, Rational hi, std::size_t index);

    const FieldPtr& field() const { return field_; }
    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }
    std::size_t index() const { return index_; }

    /// Same embedding with an interval of at most the given width.
    Ordering refine_to(const Rational& width) const;
    /// Tightest interval found so far by any computation on this embedding.
    RationalInterval best_interval() const;

private:
    struct Cache;
    FieldPtr field_;
    Rational lo_, hi_;
    std::size_t index_;
    std::shared_ptr<Cache> cache_;
};

/// One ordering per real root of the defining polynomial, sorted by interval.
std::vector<Ordering> real_embeddings(const FieldPtr& field);

/// Exact sign of the image of x under the embedding.
int sign_at(const Ordering& P, const FieldElement& x);

/// Interval of width at most `width` containing the image of x.
RationalInterval enclose(const Ordering& P, const FieldElement& x, const Rational& width);

/// Half-open intervals (lo, hi], one per distinct real root of the image of
/// g under the embedding, sorted. Intervals never have a root at lo.
std::vector<RationalInterval> isolate_real_roots(const Ordering& P, const KPoly& g);

/// Number of distinct real roots of the image of g.
std::size_t count_real_roots(const Ordering& P, const KPoly& g);

/// Sign changes of the Sturm sequence of a rational polynomial over the
/// whole real line, i.e. its number of distinct real roots.
std::size_t sturm_root_count(const QPoly& f);

} // namespace prime_scope
