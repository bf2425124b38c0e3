#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "hadstar/error.hpp"
#include "hadstar/matrix.hpp"
#include "hadstar/rational.hpp"

namespace hadstar {

namespace detail {
RatVector canonicalize_homogeneous(RatVector v, const char* what);
std::strong_ordering lex_compare(const RatVector& a, const RatVector& b);
}  // namespace detail

// Point of P^n with homogeneous coordinates.  Canonical form: the first
// nonzero coordinate equals 1, which makes equality, ordering and
// de-duplication plain componentwise operations.
class ProjPoint {
public:
    explicit ProjPoint(RatVector coords)
        : coords_(detail::canonicalize_homogeneous(std::move(coords), "projective point")) {}

    std::size_t ambient_dim() const { return coords_.size() - 1; }
    const RatVector& coords() const { return coords_; }

    std::size_t zero_count() const;
    bool has_zero_coordinate() const { return zero_count() > 0; }

    std::string str() const;

    friend bool operator==(const ProjPoint& a, const ProjPoint& b) {
        return a.coords_ == b.coords_;
    }
    friend std::strong_ordering operator<=>(const ProjPoint& a, const ProjPoint& b) {
        return detail::lex_compare(a.coords_, b.coords_);
    }

private:
    RatVector coords_;
};

// Nonzero linear form on P^n, canonicalized like a point (first nonzero
// coefficient equals 1), so proportional forms compare equal.
class LinearForm {
public:
    explicit LinearForm(RatVector coeffs)
        : coeffs_(detail::canonicalize_homogeneous(std::move(coeffs), "linear form")) {}

    std::size_t ambient_dim() const { return coeffs_.size() - 1; }
    const RatVector& coeffs() const { return coeffs_; }

    Rational evaluate(const ProjPoint& p) const;
    bool vanishes_on(const ProjPoint& p) const { return evaluate(p).is_zero(); }

    // Indices of variables with nonzero coefficient.
    std::vector<std::size_t> support() const;

    std::string str() const;

    friend bool operator==(const LinearForm& a, const LinearForm& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend std::strong_ordering operator<=>(const LinearForm& a, const LinearForm& b) {
        return detail::lex_compare(a.coeffs_, b.coeffs_);
    }

private:
    RatVector coeffs_;
};

// Linear subvariety of P^n held in both representations at once: a
// canonical spanning point basis and a canonical set of defining forms.
// Both are reduced-row-echelon bases, so two equal subvarieties compare
// equal regardless of how they were built.  May be empty (no points).
class LinearVariety {
public:
    static LinearVariety from_points(const std::vector<ProjPoint>& points);
    static LinearVariety from_forms(const std::vector<LinearForm>& forms);

    std::size_t ambient_dim() const { return ambient_dim_; }
    const std::vector<ProjPoint>& span_points() const { return span_points_; }
    const std::vector<LinearForm>& defining_forms() const { return defining_forms_; }

    // Projective dimension; -1 for the empty variety.
    int dim() const { return static_cast<int>(span_points_.size()) - 1; }
    bool empty() const { return span_points_.empty(); }
    bool is_hyperplane() const { return defining_forms_.size() == 1; }

    bool contains(const ProjPoint& p) const;
    bool contains_variety(const LinearVariety& other) const;

    friend bool operator==(const LinearVariety& a, const LinearVariety& b) {
        return a.ambient_dim_ == b.ambient_dim_ && a.span_points_ == b.span_points_;
    }

private:
    LinearVariety(std::size_t ambient_dim, std::vector<ProjPoint> span,
                  std::vector<LinearForm> forms)
        : ambient_dim_(ambient_dim),
          span_points_(std::move(span)),
          defining_forms_(std::move(forms)) {}

    std::size_t ambient_dim_ = 0;
    std::vector<ProjPoint> span_points_;
    std::vector<LinearForm> defining_forms_;
};

// Delta_i is the locus of points with at most i+1 nonzero coordinates.
bool in_delta(const ProjPoint& p, std::size_t i);

// True iff V contains a point with at least n-i zero coordinates, by
// exact rank tests over all coordinate subsets of size n-i.
bool variety_meets_delta(const LinearVariety& v, std::size_t i, const Budget& budget = {});

// The point of dual space whose coordinates are the coefficients of L.
ProjPoint dual_point(const LinearForm& l);

// Standard Cremona transformation: coordinatewise reciprocal.  Only
// defined away from the coordinate hyperplanes.
ProjPoint cremona(const ProjPoint& p);

LinearVariety span_of(const std::vector<ProjPoint>& points);

bool collinear(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c);

// n+1 choose k with the cap applied; throws CombinatorialBudget beyond it.
unsigned long long guarded_binomial(std::size_t n, std::size_t k, unsigned long long cap,
                                    const char* context);

}  // namespace hadstar
