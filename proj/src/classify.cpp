#include "hadstar/classify.hpp"

#include <algorithm>
#include <string>

#include "hadstar/matrix.hpp"
#include "hadstar/subsets.hpp"

namespace hadstar {

bool is_hadamard_set(const std::vector<LinearForm>& forms) {
    if (forms.size() <= 1) return true;
    auto support = forms.front().support();
    for (std::size_t i = 1; i < forms.size(); ++i)
        if (forms[i].support() != support) return false;
    return true;
}

namespace {

void require_forms_in_pn(const std::vector<LinearForm>& forms, std::size_t n) {
    for (const auto& f : forms)
        if (f.ambient_dim() != n)
            throw Error(ErrorCode::DimensionMismatch,
                        "form has " + std::to_string(f.coeffs().size()) +
                            " coefficients, expected " + std::to_string(n + 1),
                        "all forms in P^n");
}

RatMatrix reciprocal_coefficient_matrix(const std::vector<LinearForm>& forms, std::size_t n) {
    RatMatrix m(forms.size(), n + 1);
    for (std::size_t i = 0; i < forms.size(); ++i)
        for (std::size_t j = 0; j <= n; ++j) m.at(i, j) = forms[i].coeffs()[j].inverse();
    return m;
}

}  // namespace

ClassificationReport classify(const std::vector<LinearForm>& forms, std::size_t n,
                              const Budget& budget) {
    require_forms_in_pn(forms, n);
    ClassificationReport report;
    report.is_hadamard_set = is_hadamard_set(forms);

    report.condition1_all_nonzero = true;
    for (std::size_t i = 0; i < forms.size() && report.condition1_all_nonzero; ++i)
        for (std::size_t j = 0; j <= n; ++j)
            if (forms[i].coeffs()[j].is_zero()) {
                report.condition1_all_nonzero = false;
                report.condition1_first_offending = {i, j};
                break;
            }

    if (report.condition1_all_nonzero) {
        RatMatrix m = reciprocal_coefficient_matrix(forms, n);
        report.rank_of_M = rank(m);
        if (auto scan = all_nonzero_kernel_vector(m)) {
            report.condition2_kernel = true;
            report.kernel_vector = scan->vector;
            report.kernel_scan_escalated = scan->escalated;
        }
        if (n == 2) {
            report.n2_rank_shortcut_used = true;
            report.n2_rank_shortcut = *report.rank_of_M <= 2;
        }
    }

    report.general_linearity = is_generally_linear(forms, n, budget);
    report.generally_linear = report.general_linearity.generally_linear;

    report.is_strong_hadamard = report.condition1_all_nonzero && report.condition2_kernel;
    report.is_hadamard_star_configuration = report.generally_linear && report.is_strong_hadamard;

    if (report.is_strong_hadamard)
        report.witness = synthesize_witness(forms, *report.kernel_vector);
    return report;
}

Witness synthesize_witness(const std::vector<LinearForm>& forms, const RatVector& b) {
    if (forms.empty())
        throw Error(ErrorCode::BadInput, "witness for no forms", "at least one form");
    std::size_t n = forms.front().ambient_dim();
    require_forms_in_pn(forms, n);
    if (b.size() != n + 1 || !all_entries_nonzero(b))
        throw Error(ErrorCode::BadInput, "kernel vector must have n+1 nonzero entries",
                    "b all-nonzero with M b = 0");
    for (const auto& f : forms)
        if (!all_entries_nonzero(f.coeffs()))
            throw Error(ErrorCode::BadInput, "witness needs all-nonzero coefficients",
                        "condition (1) holds");

    Witness w;
    w.kernel_vector_b = b;
    w.form_coefficients.reserve(n + 1);
    for (const auto& entry : b) w.form_coefficients.push_back(RadicalScalar::sqrt_of(entry));

    for (const auto& form : forms) {
        std::vector<RadicalScalar> coords;
        coords.reserve(n + 1);
        for (std::size_t j = 0; j <= n; ++j)
            coords.push_back(w.form_coefficients[j] / form.coeffs()[j]);
        w.points.push_back(std::move(coords));
    }

    // P_i on V(L): sum_j a_j * (a_j / a_j(i)) = sum_j b_j / a_j(i) = 0.
    // The products multiply equal radicands, so each term is rational.
    for (std::size_t i = 0; i < forms.size(); ++i) {
        Rational sum(0);
        for (std::size_t j = 0; j <= n; ++j) {
            RadicalScalar term = w.form_coefficients[j] * w.points[i][j];
            if (!term.is_rational())
                throw Error(ErrorCode::VerificationFailed, "non-rational vanishing term",
                            "witness identities rationalize");
            sum += term.coeff();
        }
        if (!sum.is_zero())
            throw Error(ErrorCode::VerificationFailed,
                        "witness point " + std::to_string(i + 1) + " is not on V(L)",
                        "sum_j b_j / a_j(i) = 0");
    }

    // P_i * V(L) = V(L_i): the coefficient ratios a_j / (a_j / a_j(i))
    // rationalize to exactly the coefficients of L_i.
    for (std::size_t i = 0; i < forms.size(); ++i) {
        RatVector recovered;
        recovered.reserve(n + 1);
        for (std::size_t j = 0; j <= n; ++j)
            recovered.push_back(
                RadicalScalar::ratio_same_radicand(w.form_coefficients[j], w.points[i][j]));
        if (!(LinearForm(recovered) == forms[i]))
            throw Error(ErrorCode::VerificationFailed,
                        "recovered form " + std::to_string(i + 1) + " differs from input",
                        "P_i * V(L) = V(L_i)");
    }
    return w;
}

LineConstruction construct_from_line(const LinearVariety& line, const PointSet& points,
                                     const Budget& budget) {
    std::size_t n = line.ambient_dim();
    if (n < 2)
        throw Error(ErrorCode::Inadmissible, "ambient dimension must be at least 2",
                    "line in P^n with n >= 2");
    if (line.dim() != 1)
        throw Error(ErrorCode::Inadmissible,
                    "variety of dimension " + std::to_string(line.dim()) + " is not a line",
                    "line is 1-dimensional");
    if (points.size() <= n)
        throw Error(ErrorCode::Inadmissible,
                    std::to_string(points.size()) + " points, need more than " + std::to_string(n),
                    "|points| > n");
    for (const auto& p : points) {
        if (p.ambient_dim() != n)
            throw Error(ErrorCode::DimensionMismatch, "point outside the line's ambient space",
                        "points in P^n");
        if (!line.contains(p))
            throw Error(ErrorCode::Inadmissible, "point " + p.str() + " is not on the line",
                        "points lie on the line");
        if (p.has_zero_coordinate())
            throw Error(ErrorCode::Inadmissible, "point " + p.str() + " has a zero coordinate",
                        "points avoid Delta_{n-1}");
    }
    if (variety_meets_delta(line, n - 2, budget))
        throw Error(ErrorCode::Inadmissible, "line meets Delta_{n-2}",
                    "line avoids Delta_{n-2}");

    SpanProduct power = hadamard_power_span(line, n - 1, budget);
    if (!power.variety.is_hyperplane())
        throw Error(ErrorCode::NotHyperplane,
                    "power span has dimension " + std::to_string(power.variety.dim()),
                    "(n-1)-st power span of the line is a hyperplane");
    LinearForm hyperplane = power.variety.defining_forms().front();

    std::vector<LinearForm> forms;
    forms.reserve(points.size());
    for (const auto& p : points) forms.push_back(point_star_hyperplane(p, hyperplane));

    StarConfiguration configuration = star_configuration(forms, n, budget);
    ClassificationReport report = classify(forms, n, budget);

    PowerResult sq = squarefree_power(points, n);
    bool matches = sq.points.same_set(configuration.points());

    return LineConstruction{std::move(hyperplane), std::move(forms), std::move(configuration),
                            std::move(report), matches, sq.omitted};
}

std::vector<ProjPoint> sample_line_points(const LinearVariety& line, std::size_t count) {
    if (line.dim() != 1)
        throw Error(ErrorCode::Inadmissible, "sampling points requires a line",
                    "line is 1-dimensional");
    const RatVector& b0 = line.span_points()[0].coords();
    const RatVector& b1 = line.span_points()[1].coords();
    std::vector<ProjPoint> out;
    for (long t = 1; out.size() < count; ++t) {
        RatVector coords(b0.size());
        for (std::size_t j = 0; j < coords.size(); ++j) coords[j] = b0[j] + Rational(t) * b1[j];
        ProjPoint p(std::move(coords));
        if (!p.has_zero_coordinate()) out.push_back(std::move(p));
        if (t > 1000 * static_cast<long>(count) + 1000)
            throw Error(ErrorCode::Inadmissible, "line yields too few points off Delta_{n-1}",
                        "line admits enough points with nonzero coordinates");
    }
    return out;
}

bool rnc_through_coordinate_points(const ProjPoint& q1, const ProjPoint& q2,
                                   const ProjPoint& q3) {
    return collinear(cremona(q1), cremona(q2), cremona(q3));
}

HyperplaneConstruction hyperplane_construction_report(const LinearForm& h, const PointSet& points,
                                                      const Budget& budget) {
    std::size_t n = h.ambient_dim();
    if (!all_entries_nonzero(h.coeffs()))
        throw Error(ErrorCode::Inadmissible, "hyperplane contains a coordinate point",
                    "all coefficients of H are nonzero");
    for (const auto& p : points) {
        if (p.ambient_dim() != n)
            throw Error(ErrorCode::DimensionMismatch, "point outside the hyperplane's space",
                        "points in P^n");
        if (p.has_zero_coordinate())
            throw Error(ErrorCode::Inadmissible, "point " + p.str() + " has a zero coordinate",
                        "points avoid Delta_{n-1}");
        if (!h.vanishes_on(p))
            throw Error(ErrorCode::Inadmissible, "point " + p.str() + " is not on V(H)",
                        "points lie on V(H)");
    }

    HyperplaneConstruction out;
    out.forms.reserve(points.size());
    for (const auto& p : points) out.forms.push_back(point_star_hyperplane(p, h));

    // Cremona images of the dual points: the original points rescaled
    // coordinatewise by the reciprocals of H's coefficients.
    std::vector<ProjPoint> rescaled;
    rescaled.reserve(points.size());
    for (const auto& p : points) {
        RatVector coords(n + 1);
        for (std::size_t j = 0; j <= n; ++j) coords[j] = p.coords()[j] / h.coeffs()[j];
        rescaled.emplace_back(std::move(coords));
    }

    for_each_subset(points.size(), 3, [&](const std::vector<std::size_t>& t) {
        TripleCheck check;
        check.indices = {t[0], t[1], t[2]};
        check.duals_collinear = collinear(dual_point(out.forms[t[0]]), dual_point(out.forms[t[1]]),
                                          dual_point(out.forms[t[2]]));
        check.rnc_through_points =
            rnc_through_coordinate_points(rescaled[t[0]], rescaled[t[1]], rescaled[t[2]]);
        if (check.duals_collinear) out.flagged.push_back(check.indices);
        out.triples.push_back(check);
        return false;
    });

    out.report = classify(out.forms, n, budget);
    return out;
}

}  // namespace hadstar
