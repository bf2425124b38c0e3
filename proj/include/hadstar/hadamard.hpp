#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hadstar/projective.hpp"

namespace hadstar {

// Finite set of projective points: canonical coordinates, no two members
// projectively equal.  First-occurrence order is preserved.
class PointSet {
public:
    PointSet() = default;
    explicit PointSet(const std::vector<ProjPoint>& points);

    void insert(const ProjPoint& p);
    bool contains(const ProjPoint& p) const;

    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }
    const std::vector<ProjPoint>& points() const { return points_; }
    const ProjPoint& operator[](std::size_t i) const { return points_[i]; }

    auto begin() const { return points_.begin(); }
    auto end() const { return points_.end(); }

    // Order-insensitive equality.
    bool same_set(const PointSet& other) const;

private:
    std::vector<ProjPoint> points_;
};

// Coordinatewise product; absent when every coordinate product is zero
// (the product of the two points is then undefined, not an error).
std::optional<ProjPoint> hadamard_point(const ProjPoint& p, const ProjPoint& q);

// The form L' with coefficients a_j / p_j, so that P * V(L) = V(L').
// Requires P to have no zero coordinate.
LinearForm point_star_hyperplane(const ProjPoint& p, const LinearForm& l);

struct PowerResult {
    PointSet points;
    std::size_t omitted = 0;  // index tuples whose full product was the zero vector
};

// Products over all r-element subsets of X.  A subset's product is taken
// simultaneously, coordinate by coordinate, over all its points, which is
// independent of any fold order; all-zero products are omitted but counted.
PowerResult squarefree_power(const PointSet& x, std::size_t r);

// Same, over r-multisets (repetition allowed).
PowerResult power_with_repetition(const PointSet& x, std::size_t r);

struct SpanProduct {
    LinearVariety variety;
    // dim(variety) == min(n, dim V + dim W): the dimension at which the
    // Hadamard product of V and W is itself this linear variety.
    bool expected_dimension = false;
};

// Linear span of {B * C : B in span(V), C in span(W)}.  By bilinearity of
// the coordinatewise product this is the linear span of V * W.
SpanProduct hadamard_span(const LinearVariety& v, const LinearVariety& w, const Budget& = {});

// Iterated span product, seeded at r = 0 with the point [1:...:1].
SpanProduct hadamard_power_span(const LinearVariety& v, std::size_t r, const Budget& = {});

ProjPoint all_ones_point(std::size_t ambient_dim);

}  // namespace hadstar
