#include <doctest.h>

#include <map>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "posetcode/errors.hpp"
#include "posetcode/poset.hpp"

using namespace posetcode;

namespace {

oracle::Pairs pairs_of(const Poset& p) { return {p.covers().begin(), p.covers().end()}; }

std::vector<std::uint64_t> masks(const std::vector<Ideal>& ideals) {
    std::vector<std::uint64_t> out;
    for (const auto& w : ideals) out.push_back(w.bits);
    return out;
}

std::vector<Poset> small_posets(int max_size) {
    std::vector<Poset> out;
    for (int n = 1; n <= max_size; ++n) {
        auto batch = naturally_labeled_posets(n);
        out.insert(out.end(), batch.begin(), batch.end());
    }
    return out;
}

const Poset v_poset(3, {{1, 2}, {1, 3}});

}  // namespace

TEST_CASE("construction validates covers") {
    CHECK(v_poset.size() == 3);
    CHECK(v_poset.covers() == std::vector<Cover>{{1, 2}, {1, 3}});
    CHECK(Poset(1, {}).size() == 1);
    CHECK_THROWS_AS(Poset(3, {{1, 2}, {2, 3}, {1, 3}}), RedundantCoverError);
    CHECK_THROWS_AS(Poset(3, {{1, 2}, {2, 3}, {3, 1}}), CycleError);
    CHECK_THROWS_AS(Poset(2, {{1, 1}}), CycleError);
    CHECK_THROWS_AS(Poset(2, {{1, 3}}), InvalidInputError);
    CHECK_THROWS_AS(Poset(2, {{1, 2}, {1, 2}}), InvalidInputError);
    CHECK_THROWS_AS(Poset(0, {}), InvalidInputError);
    CHECK_THROWS_AS(Poset(65, {}), TooLargeError);
}

TEST_CASE("closure matches Warshall") {
    for (const auto& p : small_posets(5)) {
        const auto le = oracle::order_matrix(p.size(), pairs_of(p));
        for (int i = 1; i <= p.size(); ++i)
            for (int j = 1; j <= p.size(); ++j) REQUIRE(p.less_equal(i, j) == le[i - 1][j - 1]);
    }
}

TEST_CASE("upper ideals: examples and brute force") {
    for (int m = 2; m <= 8; ++m) CHECK(upper_ideals(shrub(m)).size() == (1U << (m - 1)) + 1);
    for (int m = 1; m <= 8; ++m) CHECK(upper_ideals(antichain(m)).size() == (1U << m));
    const Poset p1(4, {{1, 3}, {1, 4}, {2, 3}, {2, 4}});
    // Table of upper ideals of P1: empty, {3}, {4}, {3,4}, {1,3,4}, {2,3,4}, all.
    CHECK(masks(upper_ideals(p1)) == std::vector<std::uint64_t>{0b0000, 0b0100, 0b1000, 0b1100, 0b1101, 0b1110, 0b1111});
    CHECK(lower_ideals(chain(3)).size() == 4);
    CHECK(masks(lower_ideals(antichain(2))) == std::vector<std::uint64_t>{0, 1, 2, 3});
    CHECK(lower_ideals(v_poset).size() == 5);

    for (const auto& p : small_posets(5)) {
        REQUIRE(masks(upper_ideals(p)) == oracle::ideals(p.size(), pairs_of(p), true));
        REQUIRE(masks(lower_ideals(p)) == oracle::ideals(p.size(), pairs_of(p), false));
        REQUIRE(count_upper_ideals(p) == upper_ideals(p).size());
    }
    CHECK_THROWS_AS(upper_ideals(antichain(25)), TooLargeError);
    CHECK(count_upper_ideals(antichain(30)) == (std::uint64_t{1} << 30));
}

TEST_CASE("ideal counts multiply over components") {
    for (const auto& p : small_posets(5)) {
        std::uint64_t product = 1;
        for (const auto& c : connected_components(p)) product *= upper_ideals(c.poset).size();
        REQUIRE(upper_ideals(p).size() == product);
    }
}

TEST_CASE("opposite") {
    CHECK(opposite(opposite(v_poset)) == v_poset);
    CHECK(opposite(chain(3)).covers() == std::vector<Cover>{{2, 1}, {3, 2}});
    const auto s3 = opposite(shrub(3));
    CHECK(s3.maximal_elements().size() == 1);
    CHECK(s3.minimal_elements().size() == 2);
    for (const auto& p : small_posets(5)) REQUIRE(masks(upper_ideals(p)) == masks(lower_ideals(opposite(p))));
}

TEST_CASE("components") {
    const auto h2 = disjoint_union(chain(2), chain(2));
    const auto comps = connected_components(h2);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].poset == chain(2));
    CHECK(comps[1].poset == chain(2));
    CHECK(comps[1].embedding == std::vector<int>{3, 4});
    CHECK(connected_components(v_poset).size() == 1);
    CHECK(connected_components(v_poset)[0].poset == v_poset);
    CHECK(connected_components(antichain(3)).size() == 3);
    CHECK(is_connected(shrub(4)));
    CHECK_FALSE(is_connected(antichain(2)));
}

TEST_CASE("rank function") {
    const auto g = rank_function(v_poset);
    REQUIRE(g);
    CHECK(g->rank == std::vector<int>{0, 1, 1});
    CHECK(g->length == 1);
    const auto a = rank_function(antichain(3));
    REQUIRE(a);
    CHECK(a->length == 0);
    CHECK_FALSE(rank_function(Poset(4, {{1, 2}, {2, 4}, {3, 4}})));
    // Graded means all maximal chains have equal length; this one has a
    // consistent height function but chains of length 1 and 2.
    CHECK_FALSE(rank_function(Poset(4, {{1, 2}, {2, 3}, {1, 4}})));
}

TEST_CASE("ordinal sum and disjoint union") {
    const Poset p1(4, {{1, 3}, {1, 4}, {2, 3}, {2, 4}});
    CHECK(ordinal_sum(antichain(2), antichain(2)) == p1);
    CHECK(ordinal_sum(ordinal_sum(antichain(1), antichain(1)), antichain(1)) == chain(3));
    CHECK(ordinal_sum(antichain(1), antichain(2)) == shrub(3));
    const auto h2 = disjoint_union(chain(2), chain(2));
    CHECK(h2 == Poset(4, {{1, 2}, {3, 4}}));
    CHECK(upper_ideals(h2).size() == 9);
    CHECK(disjoint_union(antichain(1), antichain(1)) == antichain(2));

    const auto posets = small_posets(3);
    for (const auto& a : posets)
        for (const auto& b : posets) {
            const auto s = ordinal_sum(a, b);
            REQUIRE(upper_ideals(s).size() == upper_ideals(a).size() + upper_ideals(b).size() - 1);
            for (int i = 1; i <= a.size(); ++i)
                for (int j = 1; j <= b.size(); ++j) REQUIRE(s.less(i, a.size() + j));
        }
}

TEST_CASE("hat covers") {
    CHECK(hat_covers(v_poset) == std::vector<Cover>{{0, 1}, {1, 2}, {1, 3}, {2, 4}, {3, 4}});
    CHECK(hat_covers(antichain(1)) == std::vector<Cover>{{0, 1}, {1, 2}});
}

TEST_CASE("builders") {
    CHECK(shrub(4).covers() == std::vector<Cover>{{1, 2}, {1, 3}, {1, 4}});
    CHECK(chain(1) == antichain(1));
    CHECK_THROWS_AS(shrub(1), InvalidInputError);
    const std::vector<int> parents{0, 1, 1, 2, 2};
    const auto t = rooted_tree(parents);
    CHECK(t.maximal_elements() == std::vector<int>{3, 4, 5});
    const std::vector<int> two_roots{0, 0, 1};
    CHECK_THROWS_AS(rooted_tree(two_roots), MultipleRootsError);
}

TEST_CASE("rooted tree classification") {
    CHECK(is_rooted_tree_poset(shrub(3)));
    CHECK_FALSE(is_rooted_tree_poset(ordinal_sum(antichain(2), antichain(2))));
    CHECK(is_rooted_tree_poset(chain(4)));
    CHECK(is_rooted_tree_poset(chain(1)));
    CHECK_FALSE(is_rooted_tree_poset(opposite(shrub(3))));
    CHECK_FALSE(is_rooted_tree_poset(antichain(2)));
}

TEST_CASE("shrubbery") {
    const auto s = shrubbery(shrub(5));
    REQUIRE(s.shrubs.size() == 1);
    CHECK(s.shrub_sizes == std::vector<int>{5});
    CHECK(s.removed_count == 0);

    const std::vector<int> parents{0, 1, 1, 2, 2};
    const auto t = shrubbery(rooted_tree(parents));
    REQUIRE(t.shrubs.size() == 2);
    CHECK(t.shrubs[0] == Shrub{1, {3}});
    CHECK(t.shrubs[1] == Shrub{2, {4, 5}});
    CHECK(t.shrub_sizes == std::vector<int>{2, 3});
    CHECK(t.removed_count == 0);

    CHECK_THROWS_AS(shrubbery(chain(1)), NotTreeError);
    CHECK_THROWS_AS(shrubbery(antichain(2)), NotTreeError);

    for (int n = 2; n <= 8; ++n)
        for (const auto& tree : rooted_trees(n)) {
            const auto sb = shrubbery(tree);
            int leaf_sum = 0;
            ElementMask seen = 0;
            for (const auto& sh : sb.shrubs) {
                leaf_sum += sh.size() - 1;
                REQUIRE((seen & (ElementMask{1} << (sh.root - 1))) == 0);
                seen |= ElementMask{1} << (sh.root - 1);
                for (int l : sh.leaves) {
                    REQUIRE((seen & (ElementMask{1} << (l - 1))) == 0);
                    seen |= ElementMask{1} << (l - 1);
                }
            }
            REQUIRE(leaf_sum == static_cast<int>(tree.maximal_elements().size()));
            REQUIRE(sb.removed_count + std::accumulate(sb.shrub_sizes.begin(), sb.shrub_sizes.end(), 0) == n);
            // Removed vertices are exactly the internal vertices without a leaf child.
            int internal_without_leaf_child = 0;
            for (int v = 1; v <= n; ++v) {
                const auto up = tree.upper_covers(v);
                if (up.empty()) continue;
                bool leaf_child = false;
                for (int c : up) leaf_child = leaf_child || tree.upper_covers(c).empty();
                internal_without_leaf_child += !leaf_child;
            }
            REQUIRE(sb.removed_count == internal_without_leaf_child);
        }
}

TEST_CASE("figure tree with 21 vertices") {
    // Root; four children; each child has one child carrying 4, 1, 3 and 4 leaves.
    std::vector<int> parents{0, 1, 1, 1, 1, 2, 3, 4, 5};
    for (int i = 0; i < 4; ++i) parents.push_back(6);
    parents.push_back(7);
    for (int i = 0; i < 3; ++i) parents.push_back(8);
    for (int i = 0; i < 4; ++i) parents.push_back(9);
    const auto tree = rooted_tree(parents);
    REQUIRE(tree.size() == 21);
    const auto sb = shrubbery(tree);
    auto sizes = sb.shrub_sizes;
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<int>{2, 4, 5, 5});
    CHECK(sb.shrub_sizes == std::vector<int>{5, 2, 4, 5});
    CHECK(sb.removed_count == 5);
}

TEST_CASE("hibi generators") {
    const auto a2 = hibi_ideal_generators(antichain(2));
    REQUIRE(a2.size() == 1);
    CHECK(a2[0].alpha.bits == 0b01);
    CHECK(a2[0].beta.bits == 0b10);
    CHECK(a2[0].meet.bits == 0);
    CHECK(a2[0].join.bits == 0b11);
    CHECK(hibi_ideal_generators(chain(5)).empty());
    for (const auto& p : small_posets(4)) {
        const auto lower = oracle::ideals(p.size(), pairs_of(p), false);
        std::size_t incomparable = 0;
        for (std::size_t i = 0; i < lower.size(); ++i)
            for (std::size_t j = i + 1; j < lower.size(); ++j) {
                const auto a = lower[i], b = lower[j];
                incomparable += (a & b) != a && (a & b) != b;
            }
        const auto gens = hibi_ideal_generators(p);
        REQUIRE(gens.size() == incomparable);
        for (const auto& g : gens) {
            REQUIRE(g.meet.bits == (g.alpha.bits & g.beta.bits));
            REQUIRE(g.join.bits == (g.alpha.bits | g.beta.bits));
        }
    }
    CHECK(hibi_ideal_generators(v_poset).size() == 1);
    CHECK_THROWS_AS(hibi_ideal_generators(antichain(21)), TooLargeError);
}

TEST_CASE("enumerations") {
    // Naturally labeled posets: 1, 2, 7, 40, 357.
    const std::vector<std::size_t> labeled{1, 2, 7, 40, 357};
    for (int n = 1; n <= 5; ++n) CHECK(naturally_labeled_posets(n).size() == labeled[n - 1]);
    // Rooted unlabeled trees: 1, 1, 2, 4, 9, 20, 48.
    const std::vector<std::size_t> trees{1, 1, 2, 4, 9, 20, 48};
    for (int n = 1; n <= 7; ++n) {
        const auto all = rooted_trees(n);
        CHECK(all.size() == trees[n - 1]);
        for (const auto& t : all) REQUIRE(is_rooted_tree_poset(t));
    }
    std::vector<std::uint64_t> counts;
    for (const auto& t : rooted_trees(5)) counts.push_back(count_upper_ideals(t));
    std::sort(counts.begin(), counts.end());
    CHECK(counts == std::vector<std::uint64_t>{6, 7, 8, 9, 10, 10, 11, 13, 17});
    // (2,2)-bipartite posets without isolated elements: P1, P2, P3.
    const auto bip = bipartite_posets(2);
    REQUIRE(bip.size() == 3);
    CHECK(count_upper_ideals(bip[0]) == 7);
    CHECK(count_upper_ideals(bip[1]) == 8);
    CHECK(count_upper_ideals(bip[2]) == 9);
}

TEST_CASE("to_string") {
    CHECK(to_string(v_poset) == "m=3 covers=[(1,2),(1,3)]");
    CHECK(to_string(Ideal{0b101}) == "{1,3}");
}
