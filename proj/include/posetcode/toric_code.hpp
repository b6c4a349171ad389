#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include "posetcode/finite_field.hpp"
#include "posetcode/lattice_geometry.hpp"

namespace posetcode {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr std::uint64_t max_code_length = 1'000'000;
inline constexpr double default_max_search_cost = 1e9;

struct ToricCode {
    GaloisField field;
    int ambient_dim = 0;
    // Lattice points of the polytope in lexicographic order.
    std::vector<LatticePoint> exponents;
    // One row per exponent; columns are torus points in odometer order (last
    // coordinate fastest).
    std::vector<std::vector<FieldElement>> generator;
    std::uint64_t length = 0;
    int dimension = 0;
    std::optional<std::uint64_t> min_distance;
    // Coefficients on `exponents` of a minimum-weight codeword.
    std::vector<FieldElement> witness;
};

struct SearchOptions {
    int workers = 1;
    // Limit on (number of projective classes) * length.
    double max_cost = default_max_search_cost;
};

struct MinDistanceResult {
    std::uint64_t distance = 0;
    std::vector<FieldElement> witness;
    std::uint64_t classes = 0;
};

// Facts about a code needed by the free-sum bound.
struct CodeFacts {
    int ambient_dim = 0;
    std::uint64_t min_distance = 0;
};

// The polytope must have non-negative coordinates. Throws
// NegativeExponentError and TooLargeError.
ToricCode build_code(const LatticePolytope& polytope, const GaloisField& field);

// Translates so that every coordinate is non-negative; throws BoxOverflowError
// when the result does not fit in [0, q-2]^m.
LatticePolytope normalize_to_box(const LatticePolytope& polytope, std::int64_t q);

std::vector<FieldElement> encode(const ToricCode& code, std::span<const FieldElement> message);
std::uint64_t hamming_weight(std::span<const FieldElement> word);
int generator_rank(const std::vector<std::vector<FieldElement>>& rows, const GaloisField& field);
// Indices of a maximal set of linearly independent rows, chosen greedily in
// row order.
std::vector<int> independent_rows(const std::vector<std::vector<FieldElement>>& rows,
                                  const GaloisField& field);

// Estimated work for the exhaustive search: classes * length.
double search_cost(const ToricCode& code);

// Exact minimum distance by enumeration of projective message classes. The
// witness is the lexicographically least normalized message (first nonzero
// coefficient 1) among the minimizers. Throws SearchTooLargeError.
MinDistanceResult min_distance_exact(const ToricCode& code, const SearchOptions& options = {});
// Runs min_distance_exact and stores the result in the code.
void compute_min_distance(ToricCode& code, const SearchOptions& options = {});

std::uint64_t max_zeros(const ToricCode& code);
boost::rational<std::int64_t> transmission_rate(const ToricCode& code);

BigInt free_sum_distance_upper_bound(const CodeFacts& p, const CodeFacts& q, int field_order);

BigInt int_power(std::int64_t base, int exponent);

}  // namespace posetcode
