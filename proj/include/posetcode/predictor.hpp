#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "posetcode/poset.hpp"
#include "posetcode/toric_code.hpp"

namespace posetcode {

enum class PredictionMethod { tree_theorem, bipartite_theorem, reduction, exact_fallback };

std::string to_string(PredictionMethod method);

// Closed-form or reduced parameters of the toric code of O_P over GF(q).
struct Prediction {
    int q = 0;
    int size = 0;
    BigInt length;
    std::uint64_t dimension = 0;
    std::optional<BigInt> min_distance;
    // When present, min_distance = (q-1)^first * (q-2)^second.
    std::optional<std::pair<int, int>> exponents;
    PredictionMethod method = PredictionMethod::reduction;
    std::vector<std::string> certificate;
    // The theorem was applied outside its hypothesis q > 3.
    bool unverified_hypothesis = false;
};

struct BipartiteClass {
    bool is_mm_bipartite = false;
    int m = 0;
    bool has_perfect_matching = false;
};

struct PeelStep {
    Poset rest;
    int removed = 0;  // the unique minimal element
};

struct PredictOptions {
    SearchOptions search;
};

enum class DimensionKind { tree, bipartite };

Prediction predict_tree(const Poset& p, int q);
Prediction predict_bipartite(const Poset& p, int q);
BipartiteClass classify_bipartite(const Poset& p);
// Removes the unique minimal element of a connected poset; the code distance
// picks up a factor q - 1. Throws NoUniqueMinimumError.
PeelStep peel_minimum(const Poset& p);
Prediction predict_components(const Poset& p, int q, const PredictOptions& options = {});
Prediction predict_auto(const Poset& p, int q, const PredictOptions& options = {});

std::pair<BigInt, BigInt> dimension_bounds(DimensionKind kind, int m);

// (q-1)^a (q-2)^b
BigInt distance_formula(int q, int a, int b);

}  // namespace posetcode
