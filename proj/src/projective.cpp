#include "hadstar/projective.hpp"

#include <algorithm>
#include <sstream>

#include "hadstar/subsets.hpp"

namespace hadstar {

namespace detail {

RatVector canonicalize_homogeneous(RatVector v, const char* what) {
    if (v.empty())
        throw Error(ErrorCode::ZeroVector, std::string(what) + " with no coordinates",
                    "coordinate vectors are nonempty");
    auto first_nonzero = std::find_if(v.begin(), v.end(),
                                      [](const Rational& x) { return !x.is_zero(); });
    if (first_nonzero == v.end())
        throw Error(ErrorCode::ZeroVector, std::string(what) + " with all coordinates zero",
                    "homogeneous coordinates are not all zero");
    Rational inv = first_nonzero->inverse();
    for (auto& x : v) x *= inv;
    return v;
}

std::strong_ordering lex_compare(const RatVector& a, const RatVector& b) {
    if (a.size() != b.size()) return a.size() <=> b.size();
    for (std::size_t i = 0; i < a.size(); ++i)
        if (auto c = a[i] <=> b[i]; c != std::strong_ordering::equal) return c;
    return std::strong_ordering::equal;
}

}  // namespace detail

std::size_t ProjPoint::zero_count() const {
    std::size_t z = 0;
    for (const auto& x : coords_)
        if (x.is_zero()) ++z;
    return z;
}

std::string ProjPoint::str() const {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) out << ':';
        out << coords_[i].str();
    }
    out << ']';
    return out.str();
}

Rational LinearForm::evaluate(const ProjPoint& p) const {
    if (p.ambient_dim() != ambient_dim())
        throw Error(ErrorCode::DimensionMismatch, "form and point in different ambient spaces",
                    "same ambient dimension");
    Rational sum(0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (!coeffs_[i].is_zero() && !p.coords()[i].is_zero()) sum += coeffs_[i] * p.coords()[i];
    return sum;
}

std::vector<std::size_t> LinearForm::support() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (!coeffs_[i].is_zero()) out.push_back(i);
    return out;
}

std::string LinearForm::str() const {
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        if (!first) out << " + ";
        out << '(' << coeffs_[i].str() << ")x" << i;
        first = false;
    }
    return out.str();
}

namespace {

std::vector<RatVector> row_space_basis(const RatMatrix& m) {
    std::vector<std::size_t> pivots;
    RatMatrix r = rref(m, &pivots);
    std::vector<RatVector> rows;
    rows.reserve(pivots.size());
    for (std::size_t i = 0; i < pivots.size(); ++i) rows.push_back(r.row(i));
    return rows;
}

std::size_t require_uniform_dim(std::size_t got, std::size_t expect, const char* what) {
    if (got != expect)
        throw Error(ErrorCode::DimensionMismatch,
                    std::string("mixed ambient dimensions in ") + what, "same ambient dimension");
    return got;
}

}  // namespace

LinearVariety LinearVariety::from_points(const std::vector<ProjPoint>& points) {
    if (points.empty())
        throw Error(ErrorCode::ZeroVector, "span of no points", "at least one spanning point");
    std::size_t n = points.front().ambient_dim();
    std::vector<RatVector> rows;
    rows.reserve(points.size());
    for (const auto& p : points) {
        require_uniform_dim(p.ambient_dim(), n, "span");
        rows.push_back(p.coords());
    }
    RatMatrix coord_matrix = RatMatrix::from_rows(rows);

    std::vector<ProjPoint> span;
    for (auto& r : row_space_basis(coord_matrix)) span.emplace_back(std::move(r));

    std::vector<LinearForm> forms;
    auto annihilator = kernel_basis(coord_matrix);
    if (!annihilator.empty())
        for (auto& f : row_space_basis(RatMatrix::from_rows(annihilator)))
            forms.emplace_back(std::move(f));

    return LinearVariety(n, std::move(span), std::move(forms));
}

LinearVariety LinearVariety::from_forms(const std::vector<LinearForm>& forms) {
    if (forms.empty())
        throw Error(ErrorCode::ZeroVector, "variety of no forms", "at least one defining form");
    std::size_t n = forms.front().ambient_dim();
    std::vector<RatVector> rows;
    rows.reserve(forms.size());
    for (const auto& f : forms) {
        require_uniform_dim(f.ambient_dim(), n, "variety");
        rows.push_back(f.coeffs());
    }
    RatMatrix form_matrix = RatMatrix::from_rows(rows);

    std::vector<LinearForm> defining;
    for (auto& r : row_space_basis(form_matrix)) defining.emplace_back(std::move(r));

    std::vector<ProjPoint> span;
    auto points = kernel_basis(form_matrix);
    if (!points.empty())
        for (auto& p : row_space_basis(RatMatrix::from_rows(points))) span.emplace_back(std::move(p));

    return LinearVariety(n, std::move(span), std::move(defining));
}

bool LinearVariety::contains(const ProjPoint& p) const {
    for (const auto& f : defining_forms_)
        if (!f.vanishes_on(p)) return false;
    return true;
}

bool LinearVariety::contains_variety(const LinearVariety& other) const {
    for (const auto& p : other.span_points_)
        if (!contains(p)) return false;
    return true;
}

bool in_delta(const ProjPoint& p, std::size_t i) {
    std::size_t n = p.ambient_dim();
    if (i > n)
        throw Error(ErrorCode::BadInput, "delta index exceeds ambient dimension", "0 <= i <= n");
    return p.zero_count() >= n - i;
}

unsigned long long guarded_binomial(std::size_t n, std::size_t k, unsigned long long cap,
                                    const char* context) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned long long result = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        result = result * (n - k + i) / i;  // exact at each step
        if (result > cap)
            throw Error(ErrorCode::CombinatorialBudget,
                        std::string(context) + " would enumerate more than " +
                            std::to_string(cap) + " subsets",
                        "subset count within combinatorial budget");
    }
    return result;
}

bool variety_meets_delta(const LinearVariety& v, std::size_t i, const Budget& budget) {
    std::size_t n = v.ambient_dim();
    if (i > n)
        throw Error(ErrorCode::BadInput, "delta index exceeds ambient dimension", "0 <= i <= n");
    if (v.empty()) return false;
    std::size_t zeros_needed = n - i;
    if (zeros_needed == 0) return true;  // Delta_n is all of P^n

    guarded_binomial(n + 1, zeros_needed, budget.coordinate_subsets, "Delta intersection test");

    std::vector<RatVector> rows;
    for (const auto& f : v.defining_forms()) rows.push_back(f.coeffs());
    std::size_t base_rows = rows.size();
    for (std::size_t z = 0; z < zeros_needed; ++z) rows.emplace_back(n + 1, Rational(0));

    return for_each_subset(n + 1, zeros_needed, [&](const std::vector<std::size_t>& subset) {
        for (std::size_t z = 0; z < zeros_needed; ++z) {
            for (auto& e : rows[base_rows + z]) e = Rational(0);
            rows[base_rows + z][subset[z]] = Rational(1);
        }
        // Nonempty intersection iff the stacked system still has a kernel.
        return rank(RatMatrix::from_rows(rows)) < n + 1;
    });
}

ProjPoint dual_point(const LinearForm& l) { return ProjPoint(l.coeffs()); }

ProjPoint cremona(const ProjPoint& p) {
    if (p.has_zero_coordinate())
        throw Error(ErrorCode::ZeroCoordinate, "Cremona transformation of " + p.str(),
                    "point has no zero coordinate");
    RatVector out;
    out.reserve(p.coords().size());
    for (const auto& x : p.coords()) out.push_back(x.inverse());
    return ProjPoint(std::move(out));
}

LinearVariety span_of(const std::vector<ProjPoint>& points) {
    return LinearVariety::from_points(points);
}

bool collinear(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c) {
    std::size_t n = a.ambient_dim();
    if (b.ambient_dim() != n || c.ambient_dim() != n)
        throw Error(ErrorCode::DimensionMismatch, "collinearity of points in different spaces",
                    "same ambient dimension");
    return rank(RatMatrix::from_rows({a.coords(), b.coords(), c.coords()})) <= 2;
}

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::ZeroCoordinate: return "zero_coordinate";
        case ErrorCode::BadArity: return "bad_arity";
        case ErrorCode::EmptyProduct: return "empty_product";
        case ErrorCode::NotGenerallyLinear: return "not_generally_linear";
        case ErrorCode::BadCodim: return "bad_codim";
        case ErrorCode::CombinatorialBudget: return "combinatorial_budget";
        case ErrorCode::Inadmissible: return "inadmissible";
        case ErrorCode::NotHyperplane: return "not_hyperplane";
        case ErrorCode::VerificationFailed: return "verification_failed";
        case ErrorCode::BadDim: return "bad_dim";
        case ErrorCode::DimensionMismatch: return "dimension_mismatch";
        case ErrorCode::ZeroVector: return "zero_vector";
        case ErrorCode::BadInput: return "bad_input";
    }
    return "unknown";
}

}  // namespace hadstar
