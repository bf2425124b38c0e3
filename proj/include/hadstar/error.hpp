#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace hadstar {

enum class ErrorCode {
    ZeroCoordinate,
    BadArity,
    EmptyProduct,
    NotGenerallyLinear,
    BadCodim,
    CombinatorialBudget,
    Inadmissible,
    NotHyperplane,
    VerificationFailed,
    BadDim,
    DimensionMismatch,
    ZeroVector,
    BadInput,
};

const char* error_code_name(ErrorCode code);

// Domain error. `precondition` names the violated contract in a stable,
// machine-readable phrase; the CLI surfaces both fields verbatim.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message, std::string precondition = {})
        : std::runtime_error(message), code_(code), precondition_(std::move(precondition)) {}

    ErrorCode code() const { return code_; }
    const std::string& precondition() const { return precondition_; }

private:
    ErrorCode code_;
    std::string precondition_;
};

// Carries the offending index subset (0-based) when a dependent
// (n+1)-subset is known; empty when the set is simply too small.
class NotGenerallyLinearError : public Error {
public:
    NotGenerallyLinearError(const std::string& message, std::vector<std::size_t> subset)
        : Error(ErrorCode::NotGenerallyLinear, message, "forms generally linear"),
          subset_(std::move(subset)) {}

    const std::vector<std::size_t>& subset() const { return subset_; }

private:
    std::vector<std::size_t> subset_;
};

// Caps for subset enumeration.  `coordinate_subsets` guards the
// coordinate-hyperplane search in variety/Delta intersection tests;
// `form_subsets` guards the general-linearity check.
struct Budget {
    unsigned long long coordinate_subsets = 100000;
    unsigned long long form_subsets = 1000000;
};

}  // namespace hadstar
