#include "hadstar/hadamard.hpp"

#include <algorithm>

#include "hadstar/subsets.hpp"

namespace hadstar {

PointSet::PointSet(const std::vector<ProjPoint>& points) {
    for (const auto& p : points) insert(p);
}

void PointSet::insert(const ProjPoint& p) {
    if (!points_.empty() && p.ambient_dim() != points_.front().ambient_dim())
        throw Error(ErrorCode::DimensionMismatch, "point set with mixed ambient dimensions",
                    "same ambient dimension");
    if (!contains(p)) points_.push_back(p);
}

bool PointSet::contains(const ProjPoint& p) const {
    return std::find(points_.begin(), points_.end(), p) != points_.end();
}

bool PointSet::same_set(const PointSet& other) const {
    if (points_.size() != other.points_.size()) return false;
    std::vector<ProjPoint> a = points_, b = other.points_;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

std::optional<ProjPoint> hadamard_point(const ProjPoint& p, const ProjPoint& q) {
    if (p.ambient_dim() != q.ambient_dim())
        throw Error(ErrorCode::DimensionMismatch, "Hadamard product across ambient spaces",
                    "same ambient dimension");
    RatVector out(p.coords().size());
    bool nonzero = false;
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = p.coords()[i] * q.coords()[i];
        nonzero = nonzero || !out[i].is_zero();
    }
    if (!nonzero) return std::nullopt;
    return ProjPoint(std::move(out));
}

LinearForm point_star_hyperplane(const ProjPoint& p, const LinearForm& l) {
    if (p.ambient_dim() != l.ambient_dim())
        throw Error(ErrorCode::DimensionMismatch, "point and form in different ambient spaces",
                    "same ambient dimension");
    if (p.has_zero_coordinate())
        throw Error(ErrorCode::ZeroCoordinate, "star with hyperplane at " + p.str(),
                    "point has no zero coordinate");
    RatVector out(l.coeffs().size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = l.coeffs()[i] / p.coords()[i];
    return LinearForm(std::move(out));
}

namespace {

PowerResult tuple_products(const PointSet& x, std::size_t r, bool with_repetition) {
    if (r < 1 || (!with_repetition && r > x.size()))
        throw Error(ErrorCode::BadArity,
                    "power of " + std::to_string(x.size()) + " points with r = " + std::to_string(r),
                    "1 <= r <= |X|");
    std::size_t width = x[0].coords().size();
    PowerResult result;
    auto visit = [&](const std::vector<std::size_t>& tuple) {
        RatVector prod(width, Rational(1));
        for (std::size_t i : tuple)
            for (std::size_t c = 0; c < width; ++c) prod[c] *= x[i].coords()[c];
        if (std::all_of(prod.begin(), prod.end(), [](const Rational& v) { return v.is_zero(); }))
            ++result.omitted;
        else
            result.points.insert(ProjPoint(std::move(prod)));
        return false;
    };
    if (with_repetition)
        for_each_multiset(x.size(), r, visit);
    else
        for_each_subset(x.size(), r, visit);
    return result;
}

}  // namespace

PowerResult squarefree_power(const PointSet& x, std::size_t r) {
    return tuple_products(x, r, false);
}

PowerResult power_with_repetition(const PointSet& x, std::size_t r) {
    return tuple_products(x, r, true);
}

ProjPoint all_ones_point(std::size_t ambient_dim) {
    return ProjPoint(RatVector(ambient_dim + 1, Rational(1)));
}

SpanProduct hadamard_span(const LinearVariety& v, const LinearVariety& w, const Budget&) {
    if (v.ambient_dim() != w.ambient_dim())
        throw Error(ErrorCode::DimensionMismatch, "span product across ambient spaces",
                    "same ambient dimension");
    std::size_t n = v.ambient_dim();
    std::vector<ProjPoint> products;
    for (const auto& b : v.span_points())
        for (const auto& c : w.span_points())
            if (auto p = hadamard_point(b, c)) products.push_back(std::move(*p));
    if (products.empty())
        throw Error(ErrorCode::EmptyProduct, "every pairwise product of spanning points vanishes",
                    "some spanning-point product is defined");
    SpanProduct out{LinearVariety::from_points(products), false};
    int expected = std::min(static_cast<int>(n), v.dim() + w.dim());
    out.expected_dimension = out.variety.dim() == expected;
    return out;
}

SpanProduct hadamard_power_span(const LinearVariety& v, std::size_t r, const Budget& budget) {
    std::size_t n = v.ambient_dim();
    LinearVariety acc = LinearVariety::from_points({all_ones_point(n)});
    for (std::size_t k = 0; k < r; ++k) acc = hadamard_span(v, acc, budget).variety;
    long long expected = std::min<long long>(static_cast<long long>(n),
                                             static_cast<long long>(r) * std::max(v.dim(), 0));
    SpanProduct out{std::move(acc), false};
    out.expected_dimension = out.variety.dim() == expected;
    return out;
}

}  // namespace hadstar
