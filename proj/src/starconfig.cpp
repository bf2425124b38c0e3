#include "hadstar/starconfig.hpp"

#include <string>

#include "hadstar/matrix.hpp"
#include "hadstar/subsets.hpp"

namespace hadstar {

namespace {

void require_forms_in_pn(const std::vector<LinearForm>& forms, std::size_t n) {
    for (const auto& f : forms)
        if (f.ambient_dim() != n)
            throw Error(ErrorCode::DimensionMismatch,
                        "form has " + std::to_string(f.coeffs().size()) +
                            " coefficients, expected " + std::to_string(n + 1),
                        "all forms in P^n");
}

}  // namespace

GeneralLinearity is_generally_linear(const std::vector<LinearForm>& forms, std::size_t n,
                                     const Budget& budget) {
    require_forms_in_pn(forms, n);
    GeneralLinearity out;
    out.enough_forms = forms.size() >= n + 1;
    if (!out.enough_forms) return out;

    guarded_binomial(forms.size(), n + 1, budget.form_subsets, "general-linearity check");

    std::vector<std::size_t> offender;
    for_each_subset(forms.size(), n + 1, [&](const std::vector<std::size_t>& subset) {
        std::vector<RatVector> rows;
        rows.reserve(n + 1);
        for (std::size_t i : subset) rows.push_back(forms[i].coeffs());
        if (determinant(RatMatrix::from_rows(rows)).is_zero()) {
            offender = subset;
            return true;
        }
        return false;
    });
    if (!offender.empty()) {
        out.dependent_subset = offender;
        return out;
    }
    out.generally_linear = true;
    return out;
}

StarConfiguration star_configuration(const std::vector<LinearForm>& forms, std::size_t c,
                                     const Budget& budget, bool allow_degenerate) {
    if (forms.empty())
        throw Error(ErrorCode::BadInput, "star configuration of no forms", "at least one form");
    std::size_t n = forms.front().ambient_dim();
    require_forms_in_pn(forms, n);
    if (c < 1 || c > n)
        throw Error(ErrorCode::BadCodim, "codimension " + std::to_string(c), "1 <= c <= n");

    if (!allow_degenerate) {
        GeneralLinearity gl = is_generally_linear(forms, n, budget);
        if (!gl.generally_linear)
            throw NotGenerallyLinearError(
                gl.enough_forms ? "a set of n+1 forms is linearly dependent"
                                : "fewer than n+1 forms",
                gl.dependent_subset.value_or(std::vector<std::size_t>{}));
    }

    StarConfiguration config;
    config.ambient_dim = n;
    config.codim = c;
    config.forms = forms;

    for_each_subset(forms.size(), c, [&](const std::vector<std::size_t>& subset) {
        std::vector<LinearForm> cut;
        cut.reserve(c);
        for (std::size_t i : subset) cut.push_back(forms[i]);
        LinearVariety component = LinearVariety::from_forms(cut);
        if (!allow_degenerate && component.defining_forms().size() != c)
            throw NotGenerallyLinearError("component of unexpected codimension", subset);
        config.components.emplace_back(subset, std::move(component));
        return false;
    });

    // In codimension n each component is one point lying on exactly n of
    // the hyperplanes; an extra incidence is a geometric degeneracy.
    if (c == n && !allow_degenerate) {
        for (const auto& [subset, component] : config.components) {
            const ProjPoint& p = component.span_points().front();
            std::size_t incident = 0;
            for (const auto& f : forms)
                if (f.vanishes_on(p)) ++incident;
            if (incident != n)
                throw NotGenerallyLinearError(
                    "component point " + p.str() + " lies on " + std::to_string(incident) +
                        " of the hyperplanes, expected exactly " + std::to_string(n),
                    subset);
        }
    }
    return config;
}

PointSet StarConfiguration::points() const {
    if (codim != ambient_dim)
        throw Error(ErrorCode::BadCodim, "point list of a positive-dimensional configuration",
                    "codim == ambient_dim");
    PointSet out;
    for (const auto& [subset, component] : components)
        for (const auto& p : component.span_points()) out.insert(p);
    return out;
}

bool is_star_configuration_of_points(const PointSet& x, const std::vector<LinearForm>& forms,
                                     std::size_t n, const Budget& budget) {
    GeneralLinearity gl = is_generally_linear(forms, n, budget);
    if (!gl.generally_linear) return false;
    StarConfiguration config = star_configuration(forms, n, budget);
    return x.same_set(config.points());
}

}  // namespace hadstar
