#include "posetcode/poset.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "posetcode/errors.hpp"

namespace posetcode {

namespace {

ElementMask bit(int element) { return ElementMask{1} << (element - 1); }

std::vector<int> mask_members(ElementMask mask) {
    std::vector<int> out;
    while (mask != 0) {
        out.push_back(std::countr_zero(mask) + 1);
        mask &= mask - 1;
    }
    return out;
}

// strictly_above[i - 1] must already be transitively closed.
Poset from_relation(int n, const std::vector<ElementMask>& strictly_above) {
    std::vector<Cover> covers;
    for (int i = 1; i <= n; ++i) {
        for (int j : mask_members(strictly_above[i - 1])) {
            bool is_cover = true;
            for (int k : mask_members(strictly_above[i - 1])) {
                if (k != j && (strictly_above[k - 1] & bit(j))) {
                    is_cover = false;
                    break;
                }
            }
            if (is_cover) covers.emplace_back(i, j);
        }
    }
    return Poset(n, std::move(covers));
}

// Enumerates ideals of p closed in the direction given by `closure` (up sets
// for upper ideals). Elements are decided in an order where every element of
// closure(i) \ {i} is decided before i.
std::vector<Ideal> enumerate_closed(const Poset& p, bool upward) {
    const int m = p.size();
    if (m > max_ideal_enumeration_size) {
        throw TooLargeError("ideal enumeration limited to " +
                            std::to_string(max_ideal_enumeration_size) + " elements, got " +
                            std::to_string(m));
    }
    // Sort by the size of the closure: strict successors have strictly smaller
    // closures, so they come first.
    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 1);
    auto closure = [&](int i) { return upward ? p.up_set(i) : p.down_set(i); };
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return std::popcount(closure(a)) < std::popcount(closure(b));
    });

    std::vector<Ideal> out;
    std::function<void(int, ElementMask)> recurse = [&](int pos, ElementMask chosen) {
        if (pos == m) {
            out.push_back(Ideal{chosen});
            return;
        }
        const int e = order[pos];
        recurse(pos + 1, chosen);
        const ElementMask need = closure(e) & ~bit(e);
        if ((need & chosen) == need) recurse(pos + 1, chosen | bit(e));
    };
    recurse(0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

std::string tree_code(int v, const std::vector<std::vector<int>>& children,
                      std::vector<std::string>& memo) {
    std::vector<std::string> parts;
    for (int c : children[v]) parts.push_back(tree_code(c, children, memo));
    std::sort(parts.begin(), parts.end());
    std::string s = "(";
    for (const auto& part : parts) s += part;
    s += ")";
    memo[v] = s;
    return s;
}

}  // namespace

int Ideal::size() const { return std::popcount(bits); }

std::vector<int> Ideal::members() const { return mask_members(bits); }

Poset::Poset(int size, std::vector<Cover> covers) : size_(size), covers_(std::move(covers)) {
    if (size_ < 1) throw InvalidInputError("a poset needs at least one element");
    if (size_ > max_poset_size) {
        throw TooLargeError("posets are limited to " + std::to_string(max_poset_size) +
                            " elements");
    }
    std::sort(covers_.begin(), covers_.end());
    for (std::size_t idx = 0; idx < covers_.size(); ++idx) {
        const auto [i, j] = covers_[idx];
        if (i < 1 || j < 1 || i > size_ || j > size_) {
            throw InvalidInputError("cover (" + std::to_string(i) + "," + std::to_string(j) +
                                    ") out of range 1.." + std::to_string(size_));
        }
        if (i == j) throw CycleError("self-loop on element " + std::to_string(i));
        if (idx > 0 && covers_[idx - 1] == covers_[idx]) {
            throw InvalidInputError("duplicate cover (" + std::to_string(i) + "," +
                                    std::to_string(j) + ")");
        }
    }

    std::vector<std::vector<int>> succ(size_);
    std::vector<int> indegree(size_, 0);
    for (const auto& [i, j] : covers_) {
        succ[i - 1].push_back(j - 1);
        ++indegree[j - 1];
    }
    std::vector<int> topo;
    for (int v = 0; v < size_; ++v)
        if (indegree[v] == 0) topo.push_back(v);
    for (std::size_t h = 0; h < topo.size(); ++h)
        for (int w : succ[topo[h]])
            if (--indegree[w] == 0) topo.push_back(w);
    if (static_cast<int>(topo.size()) != size_) throw CycleError("cover relation has a cycle");

    up_.assign(size_, 0);
    for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
        ElementMask m = bit(*it + 1);
        for (int w : succ[*it]) m |= up_[w];
        up_[*it] = m;
    }
    down_.assign(size_, 0);
    for (int i = 0; i < size_; ++i)
        for (int j : mask_members(up_[i])) down_[j - 1] |= bit(i + 1);

    for (const auto& [i, j] : covers_) {
        for (int k : succ[i - 1]) {
            if (k != j - 1 && (up_[k] & bit(j))) {
                throw RedundantCoverError("cover (" + std::to_string(i) + "," +
                                          std::to_string(j) + ") is implied via element " +
                                          std::to_string(k + 1));
            }
        }
    }
}

std::vector<int> Poset::upper_covers(int i) const {
    std::vector<int> out;
    for (const auto& [a, b] : covers_)
        if (a == i) out.push_back(b);
    return out;
}

std::vector<int> Poset::lower_covers(int i) const {
    std::vector<int> out;
    for (const auto& [a, b] : covers_)
        if (b == i) out.push_back(a);
    return out;
}

std::vector<int> Poset::minimal_elements() const {
    std::vector<int> out;
    for (int i = 1; i <= size_; ++i)
        if (std::popcount(down_[i - 1]) == 1) out.push_back(i);
    return out;
}

std::vector<int> Poset::maximal_elements() const {
    std::vector<int> out;
    for (int i = 1; i <= size_; ++i)
        if (std::popcount(up_[i - 1]) == 1) out.push_back(i);
    return out;
}

ElementMask Poset::all() const {
    return size_ == 64 ? ~ElementMask{0} : (ElementMask{1} << size_) - 1;
}

std::vector<Ideal> upper_ideals(const Poset& p) { return enumerate_closed(p, true); }

std::vector<Ideal> lower_ideals(const Poset& p) { return enumerate_closed(p, false); }

std::uint64_t count_upper_ideals(const Poset& p) {
    std::uint64_t total = 1;
    for (const auto& c : connected_components(p)) total *= upper_ideals(c.poset).size();
    return total;
}

Poset opposite(const Poset& p) {
    std::vector<Cover> reversed;
    reversed.reserve(p.covers().size());
    for (const auto& [i, j] : p.covers()) reversed.emplace_back(j, i);
    return Poset(p.size(), std::move(reversed));
}

std::vector<Cover> hat_covers(const Poset& p) {
    std::vector<Cover> out;
    for (int i : p.minimal_elements()) out.emplace_back(0, i);
    out.insert(out.end(), p.covers().begin(), p.covers().end());
    for (int i : p.maximal_elements()) out.emplace_back(i, p.size() + 1);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Component> connected_components(const Poset& p) {
    const int m = p.size();
    std::vector<int> parent(m);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (const auto& [i, j] : p.covers()) parent[find(i - 1)] = find(j - 1);

    std::map<int, std::vector<int>> groups;  // keyed by representative
    std::vector<int> first_seen;
    for (int v = 0; v < m; ++v) {
        const int r = find(v);
        if (groups[r].empty()) first_seen.push_back(r);
        groups[r].push_back(v + 1);
    }
    std::vector<Component> out;
    for (int r : first_seen) {
        const auto& elems = groups[r];
        out.push_back(Component{induced_subposet(p, elems), elems});
    }
    return out;
}

bool is_connected(const Poset& p) { return connected_components(p).size() == 1; }

std::optional<Grading> rank_function(const Poset& p) {
    const int m = p.size();
    // Height = length of the longest chain ending at the element. The poset is
    // graded exactly when every cover raises the height by one and every
    // maximal element has the same height.
    std::vector<int> height(m, 0);
    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 1);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return std::popcount(p.down_set(a)) < std::popcount(p.down_set(b));
    });
    for (int v : order)
        for (int w : p.upper_covers(v)) height[w - 1] = std::max(height[w - 1], height[v - 1] + 1);

    for (const auto& [i, j] : p.covers())
        if (height[j - 1] != height[i - 1] + 1) return std::nullopt;
    const auto maxima = p.maximal_elements();
    const int length = height[maxima.front() - 1];
    for (int x : maxima)
        if (height[x - 1] != length) return std::nullopt;
    return Grading{std::move(height), length};
}

Poset induced_subposet(const Poset& p, std::span<const int> elements) {
    const int n = static_cast<int>(elements.size());
    std::vector<ElementMask> above(n, 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b && p.less(elements[a], elements[b])) above[a] |= bit(b + 1);
    return from_relation(n, above);
}

Poset ordinal_sum(const Poset& lower, const Poset& upper) {
    const int n = lower.size();
    std::vector<Cover> covers = lower.covers();
    for (const auto& [i, j] : upper.covers()) covers.emplace_back(i + n, j + n);
    for (int x : lower.maximal_elements())
        for (int y : upper.minimal_elements()) covers.emplace_back(x, y + n);
    return Poset(n + upper.size(), std::move(covers));
}

Poset disjoint_union(const Poset& a, const Poset& b) {
    const int n = a.size();
    std::vector<Cover> covers = a.covers();
    for (const auto& [i, j] : b.covers()) covers.emplace_back(i + n, j + n);
    return Poset(n + b.size(), std::move(covers));
}

Poset chain(int n) {
    if (n < 1) throw InvalidInputError("chain length must be positive");
    std::vector<Cover> covers;
    for (int i = 1; i < n; ++i) covers.emplace_back(i, i + 1);
    return Poset(n, std::move(covers));
}

Poset antichain(int n) {
    if (n < 1) throw InvalidInputError("antichain size must be positive");
    return Poset(n, {});
}

Poset shrub(int m) {
    if (m < 2) throw InvalidInputError("a shrub needs at least two elements");
    std::vector<Cover> covers;
    for (int j = 2; j <= m; ++j) covers.emplace_back(1, j);
    return Poset(m, std::move(covers));
}

Poset rooted_tree(std::span<const int> parents) {
    const int m = static_cast<int>(parents.size());
    if (m < 1) throw InvalidInputError("a tree needs at least one vertex");
    std::vector<Cover> covers;
    int roots = 0;
    for (int i = 1; i <= m; ++i) {
        const int parent = parents[i - 1];
        if (parent == 0) {
            ++roots;
            continue;
        }
        if (parent < 1 || parent > m) {
            throw InvalidInputError("parent index " + std::to_string(parent) + " out of range");
        }
        covers.emplace_back(parent, i);
    }
    if (roots == 0) throw InvalidInputError("tree has no root");
    if (roots > 1) throw MultipleRootsError("tree has " + std::to_string(roots) + " roots");
    return Poset(m, std::move(covers));
}

bool is_rooted_tree_poset(const Poset& p) {
    if (static_cast<int>(p.covers().size()) != p.size() - 1) return false;
    if (p.minimal_elements().size() != 1) return false;
    return is_connected(p);
}

Shrubbery shrubbery(const Poset& p) {
    if (!is_rooted_tree_poset(p)) throw NotTreeError("shrubbery needs a rooted tree poset");
    if (p.size() < 2) throw NotTreeError("shrubbery needs a tree with at least two vertices");

    Shrubbery out;
    int leaves = 0;
    int shrub_total = 0;
    for (int u = 1; u <= p.size(); ++u) {
        Shrub s{u, {}};
        for (int c : p.upper_covers(u))
            if (p.upper_covers(c).empty()) s.leaves.push_back(c);
        if (s.leaves.empty()) continue;
        leaves += static_cast<int>(s.leaves.size());
        shrub_total += s.size();
        out.shrub_sizes.push_back(s.size());
        out.shrubs.push_back(std::move(s));
    }
    out.removed_count = p.size() - shrub_total;
    if (leaves != static_cast<int>(p.maximal_elements().size())) {
        throw std::logic_error("shrubbery does not cover every leaf");
    }
    return out;
}

std::vector<HibiBinomial> hibi_ideal_generators(const Poset& p) {
    if (p.size() > max_hibi_size) {
        throw TooLargeError("Hibi generators limited to " + std::to_string(max_hibi_size) +
                            " elements");
    }
    const auto ideals = lower_ideals(p);
    std::vector<HibiBinomial> out;
    for (std::size_t a = 0; a < ideals.size(); ++a) {
        for (std::size_t b = a + 1; b < ideals.size(); ++b) {
            const ElementMask x = ideals[a].bits;
            const ElementMask y = ideals[b].bits;
            if ((x & y) == x || (x & y) == y) continue;
            out.push_back({ideals[a], ideals[b], Ideal{x & y}, Ideal{x | y}});
        }
    }
    return out;
}

std::vector<Poset> naturally_labeled_posets(int n) {
    if (n < 1 || n > 6) throw TooLargeError("poset enumeration supports 1..6 elements");
    std::vector<Cover> pairs;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) pairs.emplace_back(i, j);
    std::vector<Poset> out;
    const std::uint64_t subsets = std::uint64_t{1} << pairs.size();
    for (std::uint64_t s = 0; s < subsets; ++s) {
        std::vector<ElementMask> above(n, 0);
        for (std::size_t idx = 0; idx < pairs.size(); ++idx)
            if ((s >> idx) & 1U) above[pairs[idx].first - 1] |= bit(pairs[idx].second);
        bool transitive = true;
        for (int i = 1; i <= n && transitive; ++i)
            for (int j : mask_members(above[i - 1]))
                if ((above[j - 1] & above[i - 1]) != above[j - 1]) {
                    transitive = false;
                    break;
                }
        if (transitive) out.push_back(from_relation(n, above));
    }
    return out;
}

std::vector<Poset> rooted_trees(int n) {
    if (n < 1 || n > 9) throw TooLargeError("rooted tree enumeration supports 1..9 vertices");
    std::map<std::string, Poset> unique;
    // Recursive trees: parent of vertex v (0-based) is some u < v.
    std::vector<int> parent(n, -1);
    std::function<void(int)> recurse = [&](int v) {
        if (v == n) {
            std::vector<std::vector<int>> children(n);
            for (int w = 1; w < n; ++w) children[parent[w]].push_back(w);
            std::vector<std::string> memo(n);
            const std::string code = tree_code(0, children, memo);
            if (unique.count(code)) return;
            // Relabel breadth-first, children ordered by their canonical code.
            std::vector<int> label(n, 0);
            std::vector<int> queue{0};
            for (std::size_t h = 0; h < queue.size(); ++h) {
                auto kids = children[queue[h]];
                std::sort(kids.begin(), kids.end(),
                          [&](int a, int b) { return memo[a] < memo[b]; });
                for (int k : kids) queue.push_back(k);
            }
            for (int pos = 0; pos < n; ++pos) label[queue[pos]] = pos + 1;
            std::vector<Cover> covers;
            for (int w = 1; w < n; ++w) covers.emplace_back(label[parent[w]], label[w]);
            unique.emplace(code, Poset(n, std::move(covers)));
            return;
        }
        for (int u = 0; u < v; ++u) {
            parent[v] = u;
            recurse(v + 1);
        }
    };
    recurse(1);
    std::vector<Poset> out;
    for (auto& [code, p] : unique) out.push_back(std::move(p));
    std::stable_sort(out.begin(), out.end(), [](const Poset& a, const Poset& b) {
        return count_upper_ideals(a) < count_upper_ideals(b);
    });
    return out;
}

std::vector<Poset> bipartite_posets(int m) {
    if (m < 1 || m > 3) throw TooLargeError("bipartite enumeration supports m in 1..3");
    const int cells = m * m;
    std::vector<int> row_perm(m), col_perm(m);
    auto canonical = [&](std::uint32_t edges) {
        std::uint32_t best = ~std::uint32_t{0};
        std::iota(row_perm.begin(), row_perm.end(), 0);
        do {
            std::iota(col_perm.begin(), col_perm.end(), 0);
            do {
                std::uint32_t code = 0;
                for (int r = 0; r < m; ++r)
                    for (int c = 0; c < m; ++c)
                        if ((edges >> (r * m + c)) & 1U)
                            code |= std::uint32_t{1} << (row_perm[r] * m + col_perm[c]);
                best = std::min(best, code);
            } while (std::next_permutation(col_perm.begin(), col_perm.end()));
        } while (std::next_permutation(row_perm.begin(), row_perm.end()));
        return best;
    };

    std::set<std::uint32_t> seen;
    std::vector<std::pair<std::uint64_t, Poset>> found;
    for (std::uint32_t edges = 0; edges < (std::uint32_t{1} << cells); ++edges) {
        bool isolated = false;
        for (int r = 0; r < m && !isolated; ++r) {
            bool any = false;
            for (int c = 0; c < m; ++c) any = any || ((edges >> (r * m + c)) & 1U);
            isolated = !any;
        }
        for (int c = 0; c < m && !isolated; ++c) {
            bool any = false;
            for (int r = 0; r < m; ++r) any = any || ((edges >> (r * m + c)) & 1U);
            isolated = !any;
        }
        if (isolated) continue;
        const std::uint32_t code = canonical(edges);
        if (!seen.insert(code).second) continue;
        std::vector<Cover> covers;
        for (int r = 0; r < m; ++r)
            for (int c = 0; c < m; ++c)
                if ((code >> (r * m + c)) & 1U) covers.emplace_back(r + 1, m + c + 1);
        Poset p(2 * m, std::move(covers));
        found.emplace_back(count_upper_ideals(p), std::move(p));
    }
    std::stable_sort(found.begin(), found.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Poset> out;
    for (auto& [count, p] : found) out.push_back(std::move(p));
    return out;
}

std::string to_string(const Ideal& ideal) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int e : ideal.members()) {
        if (!first) os << ',';
        os << e;
        first = false;
    }
    os << '}';
    return os.str();
}

std::string to_string(const Poset& p) {
    std::ostringstream os;
    os << "m=" << p.size() << " covers=[";
    bool first = true;
    for (const auto& [i, j] : p.covers()) {
        if (!first) os << ',';
        os << '(' << i << ',' << j << ')';
        first = false;
    }
    os << ']';
    return os.str();
}

}  // namespace posetcode
