#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace posetcode {

// Elements are numbered 1..m. Subsets of elements are stored as 64-bit masks
// with element i at bit (i - 1).
using ElementMask = std::uint64_t;

inline constexpr int max_poset_size = 64;
inline constexpr int max_ideal_enumeration_size = 24;
inline constexpr int max_hibi_size = 20;

using Cover = std::pair<int, int>;

// A subset of poset elements, upward or downward closed depending on where it
// came from.
struct Ideal {
    ElementMask bits = 0;

    bool contains(int element) const { return (bits >> (element - 1)) & 1U; }
    int size() const;
    std::vector<int> members() const;

    auto operator<=>(const Ideal&) const = default;
};

class Poset {
public:
    // Builds a poset from its Hasse diagram. Throws CycleError on a directed
    // cycle and RedundantCoverError when a pair is implied by transitivity.
    Poset(int size, std::vector<Cover> covers);

    int size() const { return size_; }
    // Sorted ascending.
    const std::vector<Cover>& covers() const { return covers_; }

    bool less_equal(int i, int j) const { return (up_[i - 1] >> (j - 1)) & 1U; }
    bool less(int i, int j) const { return i != j && less_equal(i, j); }
    bool comparable(int i, int j) const { return less_equal(i, j) || less_equal(j, i); }

    // Closed up-set / down-set of an element (contains the element itself).
    ElementMask up_set(int i) const { return up_[i - 1]; }
    ElementMask down_set(int i) const { return down_[i - 1]; }

    // Elements covering i, and elements covered by i.
    std::vector<int> upper_covers(int i) const;
    std::vector<int> lower_covers(int i) const;

    std::vector<int> minimal_elements() const;
    std::vector<int> maximal_elements() const;
    ElementMask all() const;

    bool operator==(const Poset& other) const {
        return size_ == other.size_ && covers_ == other.covers_;
    }

private:
    int size_;
    std::vector<Cover> covers_;
    std::vector<ElementMask> up_;
    std::vector<ElementMask> down_;
};

struct Component {
    Poset poset;
    // embedding[i - 1] is the index in the parent poset of component element i.
    std::vector<int> embedding;
};

struct Grading {
    std::vector<int> rank;  // rank[i - 1] for element i, 0 on minimal elements
    int length = 0;
};

struct Shrub {
    int root = 0;
    std::vector<int> leaves;

    int size() const { return 1 + static_cast<int>(leaves.size()); }
    bool operator==(const Shrub&) const = default;
};

struct Shrubbery {
    std::vector<Shrub> shrubs;
    std::vector<int> shrub_sizes;
    int removed_count = 0;
};

struct HibiBinomial {
    Ideal alpha;
    Ideal beta;
    Ideal meet;
    Ideal join;
};

// Ideal enumeration, ascending by mask value.
std::vector<Ideal> upper_ideals(const Poset& p);
std::vector<Ideal> lower_ideals(const Poset& p);
std::uint64_t count_upper_ideals(const Poset& p);

Poset opposite(const Poset& p);
// Covers of P with a new bottom 0 and top m + 1 adjoined.
std::vector<Cover> hat_covers(const Poset& p);
std::vector<Component> connected_components(const Poset& p);
bool is_connected(const Poset& p);
std::optional<Grading> rank_function(const Poset& p);

// Induced subposet on the given elements (sorted, 1-based). The result is
// relabeled 1..|elements| in the given order.
Poset induced_subposet(const Poset& p, std::span<const int> elements);

Poset ordinal_sum(const Poset& lower, const Poset& upper);
Poset disjoint_union(const Poset& a, const Poset& b);

Poset chain(int n);
Poset antichain(int n);
Poset shrub(int m);
// parents[i] is the parent of element i + 1, 0 marks the root.
Poset rooted_tree(std::span<const int> parents);

bool is_rooted_tree_poset(const Poset& p);
Shrubbery shrubbery(const Poset& p);

std::vector<HibiBinomial> hibi_ideal_generators(const Poset& p);

// Enumeration helpers for the verification sweeps.

// Every poset on n elements whose labeling is a linear extension. Each
// isomorphism class appears at least once.
std::vector<Poset> naturally_labeled_posets(int n);
// One representative per isomorphism class of rooted trees on n vertices,
// labeled in breadth-first order from the root.
std::vector<Poset> rooted_trees(int n);
// One representative per isomorphism class of (m,m)-bipartite posets whose
// comparability graph has no isolated element; minima are 1..m.
std::vector<Poset> bipartite_posets(int m);

std::string to_string(const Ideal& ideal);
std::string to_string(const Poset& p);

}  // namespace posetcode
