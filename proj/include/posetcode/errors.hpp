#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace posetcode {

// Input errors come from malformed user data, guard errors from explicit
// size limits, domain errors from mathematically invalid requests.
enum class ErrorCategory { input, guard, domain };

class Error : public std::runtime_error {
public:
    Error(std::string code, ErrorCategory category, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)), category_(category) {}

    const std::string& code() const noexcept { return code_; }
    ErrorCategory category() const noexcept { return category_; }

private:
    std::string code_;
    ErrorCategory category_;
};

#define POSETCODE_DEFINE_ERROR(Name, code_string, cat)                              \
    class Name : public Error {                                                    \
    public:                                                                        \
        explicit Name(const std::string& what) : Error(code_string, cat, what) {}  \
    };

POSETCODE_DEFINE_ERROR(InvalidInputError, "invalid_input", ErrorCategory::input)
POSETCODE_DEFINE_ERROR(CycleError, "cycle", ErrorCategory::input)
POSETCODE_DEFINE_ERROR(RedundantCoverError, "redundant_cover", ErrorCategory::input)
POSETCODE_DEFINE_ERROR(MultipleRootsError, "multiple_roots", ErrorCategory::input)
POSETCODE_DEFINE_ERROR(NotPrimePowerError, "not_prime_power", ErrorCategory::input)

POSETCODE_DEFINE_ERROR(TooLargeError, "too_large", ErrorCategory::guard)
POSETCODE_DEFINE_ERROR(BoxOverflowError, "box_overflow", ErrorCategory::guard)

POSETCODE_DEFINE_ERROR(NotTreeError, "not_tree", ErrorCategory::domain)
POSETCODE_DEFINE_ERROR(NotGradedError, "not_graded", ErrorCategory::domain)
POSETCODE_DEFINE_ERROR(NoUniqueMinimumError, "no_unique_minimum", ErrorCategory::domain)
POSETCODE_DEFINE_ERROR(NotBipartiteError, "not_bipartite", ErrorCategory::domain)
POSETCODE_DEFINE_ERROR(MatchingWarning, "matching_warning", ErrorCategory::domain)
POSETCODE_DEFINE_ERROR(OriginMissingError, "origin_missing", ErrorCategory::domain)
POSETCODE_DEFINE_ERROR(OriginNotInteriorError, "origin_not_interior", ErrorCategory::domain)
POSETCODE_DEFINE_ERROR(RationalPolytopeError, "rational_polytope", ErrorCategory::domain)
POSETCODE_DEFINE_ERROR(DimensionError, "dimension", ErrorCategory::domain)
POSETCODE_DEFINE_ERROR(NegativeExponentError, "negative_exponent", ErrorCategory::domain)

#undef POSETCODE_DEFINE_ERROR

// Raised by the exhaustive minimum-distance search when the estimated work
// exceeds the configured limit. The estimate is classes * length.
class SearchTooLargeError : public Error {
public:
    SearchTooLargeError(const std::string& what, double estimated_cost)
        : Error("search_too_large", ErrorCategory::guard, what), estimated_cost_(estimated_cost) {}

    double estimated_cost() const noexcept { return estimated_cost_; }

private:
    double estimated_cost_;
};

}  // namespace posetcode
