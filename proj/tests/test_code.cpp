#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "posetcode/errors.hpp"
#include "posetcode/toric_code.hpp"

using namespace posetcode;

namespace {

using Points = std::vector<LatticePoint>;

const Poset v_poset(3, {{1, 2}, {1, 3}});

LatticePolytope polytope(int dim, Points vertices) { return LatticePolytope::hull(dim, std::move(vertices)); }

std::uint64_t exact_d(const LatticePolytope& a, int q, int workers = 1) {
    auto code = build_code(a, make_field(q));
    return min_distance_exact(code, {workers, 1e12}).distance;
}

std::uint64_t oracle_d(const LatticePolytope& a, int q) {
    const auto f = make_field(q);
    const oracle::PolyField ref{f.characteristic(), f.degree(), f.modulus()};
    return oracle::min_distance(ref, lattice_points(a), a.ambient_dim());
}

std::vector<Poset> small_posets(int max_size) {
    std::vector<Poset> out;
    for (int n = 1; n <= max_size; ++n) {
        auto batch = naturally_labeled_posets(n);
        out.insert(out.end(), batch.begin(), batch.end());
    }
    return out;
}

const auto segment = order_polytope(antichain(1));
const auto square = order_polytope(antichain(2));
const auto triangle = order_polytope(chain(2));

}  // namespace

TEST_CASE("generator matrix layout") {
    const auto code = build_code(segment, make_field(5));
    CHECK(code.generator == std::vector<std::vector<FieldElement>>{{1, 1, 1, 1}, {1, 2, 3, 4}});
    CHECK(code.length == 4);
    CHECK(code.dimension == 2);
    const auto v = build_code(order_polytope(v_poset), make_field(4));
    CHECK(v.length == 27);
    CHECK(v.dimension == 5);
    const auto p1 = build_code(order_polytope(ordinal_sum(antichain(2), antichain(2))), make_field(4));
    CHECK(p1.length == 81);
    CHECK(p1.dimension == 7);
    // Odometer order: the last coordinate runs fastest.
    const auto sq = build_code(square, make_field(3));
    CHECK(sq.exponents == Points{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
    CHECK(sq.generator[1] == std::vector<FieldElement>{1, 2, 1, 2});
    CHECK(sq.generator[2] == std::vector<FieldElement>{1, 1, 2, 2});
}

TEST_CASE("build and normalize guards") {
    const auto h = poset_polytope(v_poset);
    CHECK_THROWS_AS(build_code(h, make_field(5)), NegativeExponentError);
    const auto n5 = normalize_to_box(h, 5);
    CHECK(fits_in_box(n5, 5));
    CHECK(n5 == translate(h, {1, 1, 1}));
    CHECK(normalize_to_box(order_polytope(v_poset), 3) == order_polytope(v_poset));
    CHECK_THROWS_AS(normalize_to_box(h, 3), BoxOverflowError);
    CHECK_THROWS_AS(build_code(order_polytope(antichain(21)), make_field(3)), TooLargeError);
}

TEST_CASE("minimum distance examples") {
    CHECK(exact_d(segment, 5) == 3);
    CHECK(exact_d(order_polytope(v_poset), 4) == 12);
    CHECK(exact_d(order_polytope(ordinal_sum(antichain(2), antichain(2))), 4) == 36);
    auto code = build_code(order_polytope(v_poset), make_field(4));
    compute_min_distance(code);
    CHECK(code.min_distance == 12u);
    CHECK(max_zeros(code) == 15);
    CHECK(hamming_weight(encode(code, code.witness)) == 12);
    auto seg = build_code(segment, make_field(5));
    compute_min_distance(seg);
    CHECK(max_zeros(seg) == 1);
    // Constants only: the all-ones word has full weight.
    auto point = build_code(polytope(2, {{0, 0}}), make_field(4));
    compute_min_distance(point);
    CHECK(point.min_distance == 9u);
    CHECK(max_zeros(point) == 0);
}

TEST_CASE("exhaustive search agrees with full enumeration") {
    for (int q : {3, 4, 5, 7, 8, 9}) {
        for (const auto& p : small_posets(3)) {
            const auto o = order_polytope(p);
            if (std::pow(q, lattice_points(o).size()) * std::pow(q - 1, p.size()) > 3e6) continue;
            CAPTURE(q);
            CAPTURE(to_string(p));
            REQUIRE(exact_d(o, q) == oracle_d(o, q));
        }
    }
    // Exponents outside [0, q-2] make rows dependent.
    const auto wide = polytope(1, {{0}, {3}});
    CHECK(exact_d(wide, 3) == oracle_d(wide, 3));
    CHECK(exact_d(normalize_to_box(poset_polytope(v_poset), 4), 4) ==
          oracle_d(normalize_to_box(poset_polytope(v_poset), 4), 4));
}

TEST_CASE("witness is a normalized minimum-weight message") {
    for (int q : {4, 5, 7, 9}) {
        auto code = build_code(order_polytope(v_poset), make_field(q));
        const auto r = min_distance_exact(code);
        REQUIRE(hamming_weight(encode(code, r.witness)) == r.distance);
        const auto lead = std::find_if(r.witness.begin(), r.witness.end(), [](auto x) { return x != 0; });
        REQUIRE(lead != r.witness.end());
        REQUIRE(*lead == 1);
    }
}

TEST_CASE("rank equals lattice point count inside the box") {
    for (int q : {3, 4, 5}) {
        const auto f = make_field(q);
        for (const auto& p : small_posets(4)) {
            const auto o = order_polytope(p);
            const auto code = build_code(o, f);
            REQUIRE(code.dimension == static_cast<int>(lattice_points(o).size()));
            REQUIRE(static_cast<std::size_t>(code.dimension) == oracle::character_classes(code.exponents, q));
        }
    }
    // Outside the box the rank drops to the number of exponent classes mod q-1.
    const auto wide = polytope(2, {{0, 0}, {3, 0}, {0, 3}});
    const auto code = build_code(wide, make_field(3));
    CHECK(static_cast<std::size_t>(code.dimension) == oracle::character_classes(code.exponents, 3));
    CHECK(code.dimension < static_cast<int>(code.exponents.size()));
}

TEST_CASE("product and pyramid rules") {
    for (int q : {4, 5}) {
        const std::vector<LatticePolytope> family{segment, triangle, square};
        for (const auto& a : family)
            for (const auto& b : family) {
                if (a.ambient_dim() + b.ambient_dim() > 3) continue;
                REQUIRE(exact_d(direct_product(a, b), q) == exact_d(a, q) * exact_d(b, q));
            }
        for (const auto& b : {segment, square}) REQUIRE(exact_d(unit_pyramid(b), q) == (q - 1) * exact_d(b, q));
    }
}

TEST_CASE("lattice equivalence leaves parameters unchanged") {
    std::mt19937 rng(2024);
    const std::vector<Poset> posets{v_poset, chain(3), ordinal_sum(antichain(2), antichain(1)), antichain(2)};
    for (int q : {4, 5}) {
        for (const auto& p : posets) {
            const int m = p.size();
            const auto o = order_polytope(p);
            const auto base = build_code(o, make_field(q));
            const auto d = exact_d(o, q);
            for (int trial = 0; trial < 3; ++trial) {
                std::vector<int> perm(m);
                std::iota(perm.begin(), perm.end(), 0);
                std::shuffle(perm.begin(), perm.end(), rng);
                std::vector<std::vector<std::int64_t>> matrix(m, std::vector<std::int64_t>(m, 0));
                for (int i = 0; i < m; ++i) matrix[i][perm[i]] = rng() % 2 ? 1 : -1;
                const auto moved = normalize_to_box(apply(AffineTransform(matrix, LatticePoint(m, 0)), o), q);
                const auto code = build_code(moved, make_field(q));
                REQUIRE(code.length == base.length);
                REQUIRE(code.dimension == base.dimension);
                REQUIRE(exact_d(moved, q) == d);
            }
        }
    }
}

TEST_CASE("worker count does not change results") {
    const auto o = order_polytope(rooted_tree(std::vector<int>{0, 1, 1, 2, 2}));
    auto code = build_code(o, make_field(4));
    const auto one = min_distance_exact(code, {1, 1e12});
    CHECK(one.distance == 72);
    for (int w : {2, 3, 8}) {
        const auto many = min_distance_exact(code, {w, 1e12});
        CHECK(many.distance == one.distance);
        CHECK(many.witness == one.witness);
        CHECK(many.classes == one.classes);
    }
    auto code5 = build_code(order_polytope(chain(3)), make_field(5));
    CHECK(min_distance_exact(code5, {4, 1e12}).distance == 48);
}

TEST_CASE("search guard") {
    auto code = build_code(order_polytope(shrub(5)), make_field(4));
    CHECK(search_cost(code) > 1e9);
    try {
        min_distance_exact(code);
        FAIL("expected SearchTooLargeError");
    } catch (const SearchTooLargeError& e) {
        CHECK(e.estimated_cost() == doctest::Approx(search_cost(code)));
        CHECK(e.code() == "search_too_large");
    }
}

TEST_CASE("rates and bounds") {
    const auto v = build_code(order_polytope(v_poset), make_field(4));
    CHECK(transmission_rate(v) == boost::rational<std::int64_t>(5, 27));
    const auto h = build_code(normalize_to_box(poset_polytope(v_poset), 4), make_field(4));
    CHECK(transmission_rate(h) == boost::rational<std::int64_t>(2, 9));
    CHECK(free_sum_distance_upper_bound({2, 9}, {2, 9}, 5) == 144);
    CHECK(free_sum_distance_upper_bound({1, 3}, {1, 3}, 5) == 12);
    CHECK(free_sum_distance_upper_bound({1, 3}, {2, 9}, 5) == 48);
    CHECK(int_power(3, 4) == 81);
}
