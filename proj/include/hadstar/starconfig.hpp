#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "hadstar/hadamard.hpp"
#include "hadstar/projective.hpp"

namespace hadstar {

struct GeneralLinearity {
    bool generally_linear = false;
    bool enough_forms = false;  // r >= n+1
    // A dependent (n+1)-subset of form indices (0-based), when one exists.
    std::optional<std::vector<std::size_t>> dependent_subset;
};

// r >= n+1 and every (n+1)-subset of coefficient vectors is independent.
GeneralLinearity is_generally_linear(const std::vector<LinearForm>& forms, std::size_t n,
                                     const Budget& budget = {});

// Union over all c-subsets S of the common zero loci of {L_i : i in S}.
// Components are kept per subset, in lexicographic subset order; for
// c = n each component is a single point.
struct StarConfiguration {
    std::size_t ambient_dim = 0;
    std::size_t codim = 0;
    std::vector<LinearForm> forms;
    std::vector<std::pair<std::vector<std::size_t>, LinearVariety>> components;

    // The configuration's points; only for codim == ambient_dim.
    PointSet points() const;
};

// Builds all C(r, c) components.  Throws NotGenerallyLinear unless the
// forms are generally linear; `allow_degenerate` skips that gate and
// computes raw components instead (the codimension and incidence
// guarantees then no longer hold).
StarConfiguration star_configuration(const std::vector<LinearForm>& forms, std::size_t c,
                                     const Budget& budget = {}, bool allow_degenerate = false);

// True iff the forms are generally linear and X equals the point
// configuration they cut out in codimension n.
bool is_star_configuration_of_points(const PointSet& x, const std::vector<LinearForm>& forms,
                                     std::size_t n, const Budget& budget = {});

}  // namespace hadstar
