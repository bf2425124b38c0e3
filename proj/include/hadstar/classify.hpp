#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "hadstar/hadamard.hpp"
#include "hadstar/radical.hpp"
#include "hadstar/starconfig.hpp"

namespace hadstar {

// Certificate that a form set is a strong Hadamard set: a linear form L
// with square-root coefficients a_j (a_j^2 = b_j for a kernel vector b of
// the reciprocal-coefficient matrix) and points P_i = [a_j / a_j(i)]_j
// with P_i * V(L) = V(L_i) and P_i on V(L).  Both identities rationalize
// and are verified exactly before a witness is returned.
struct Witness {
    std::vector<RadicalScalar> form_coefficients;        // L
    std::vector<std::vector<RadicalScalar>> points;      // P_1..P_r coordinates
    RatVector kernel_vector_b;
};

struct ClassificationReport {
    bool is_hadamard_set = false;

    // Condition (1): every coefficient of every form is nonzero.
    bool condition1_all_nonzero = false;
    std::optional<std::pair<std::size_t, std::size_t>> condition1_first_offending;  // (form, coord)

    // Condition (2): the reciprocal-coefficient matrix M (entries
    // 1/a_j(i), built only when condition (1) holds) has a kernel vector
    // with no zero coordinate.
    bool condition2_kernel = false;
    std::optional<RatVector> kernel_vector;
    bool kernel_scan_escalated = false;
    std::optional<std::size_t> rank_of_M;

    // In the plane, condition (2) is equivalent to rank(M) <= 2 for
    // generally linear inputs; both verdicts are reported for cross-checking.
    bool n2_rank_shortcut_used = false;
    std::optional<bool> n2_rank_shortcut;

    GeneralLinearity general_linearity;
    bool generally_linear = false;

    bool is_strong_hadamard = false;             // condition (1) and condition (2)
    bool is_hadamard_star_configuration = false; // generally linear and strong
    std::optional<Witness> witness;              // present iff strong
};

// True iff all forms have identical support.
bool is_hadamard_set(const std::vector<LinearForm>& forms);

ClassificationReport classify(const std::vector<LinearForm>& forms, std::size_t n,
                              const Budget& budget = {});

// Builds the certificate from an all-nonzero kernel vector b of M and
// verifies both rational identities; VerificationFailed signals an
// internal inconsistency, not a user error.
Witness synthesize_witness(const std::vector<LinearForm>& forms, const RatVector& b);

struct LineConstruction {
    LinearForm hyperplane_form;  // the single form cutting out the (n-1)-power span
    std::vector<LinearForm> forms;
    StarConfiguration configuration;
    ClassificationReport report;
    bool power_matches_configuration = false;
    std::size_t omitted_products = 0;
};

// The line-based pipeline: V(L) is the (n-1)-st Hadamard power span of
// the line, the forms are P_i * V(L), and the points of the codimension-n
// configuration are cross-checked against the square-free n-th power of
// the input points.
LineConstruction construct_from_line(const LinearVariety& line, const PointSet& points,
                                     const Budget& budget = {});

// Deterministic points B0 + t*B1, t = 1, 2, ..., on the line, skipping
// parameters that land on a coordinate hyperplane.
std::vector<ProjPoint> sample_line_points(const LinearVariety& line, std::size_t count);

// True iff some rational normal curve passes through all coordinate
// points and the three given points; by the Cremona involution this is
// exactly collinearity of their coordinatewise reciprocals.
bool rnc_through_coordinate_points(const ProjPoint& q1, const ProjPoint& q2, const ProjPoint& q3);

struct TripleCheck {
    std::array<std::size_t, 3> indices{};  // 0-based point indices
    bool duals_collinear = false;          // the three hyperplanes miss codimension 3
    bool rnc_through_points = false;       // cross-check via Cremona on rescaled points
};

struct HyperplaneConstruction {
    std::vector<LinearForm> forms;  // H_i = P_i * H
    std::vector<TripleCheck> triples;
    std::vector<std::array<std::size_t, 3>> flagged;  // triples with collinear duals
    ClassificationReport report;
};

// The hyperplane-based pipeline: forms P_i * H for points on V(H), a
// collinearity check of every dual triple against the rational-normal-
// curve criterion, and the full classification of the resulting forms.
HyperplaneConstruction hyperplane_construction_report(const LinearForm& h, const PointSet& points,
                                                      const Budget& budget = {});

}  // namespace hadstar
