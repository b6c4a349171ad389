#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

#include "posetcode/poset.hpp"

namespace posetcode {

using Rational = boost::multiprecision::mpq_rational;
using LatticePoint = std::vector<std::int64_t>;

inline constexpr int max_facet_dimension = 8;
inline constexpr std::size_t max_facet_vertices = 40;
inline constexpr double max_box_volume = 1e7;

// <normal, x> <= offset
struct Halfspace {
    std::vector<std::int64_t> normal;
    Rational offset;

    bool operator==(const Halfspace&) const = default;
};

// x -> matrix * x + shift with |det(matrix)| = 1.
class AffineTransform {
public:
    AffineTransform(std::vector<std::vector<std::int64_t>> matrix, LatticePoint shift);

    static AffineTransform identity(int dim);

    int dimension() const { return static_cast<int>(shift_.size()); }
    const std::vector<std::vector<std::int64_t>>& matrix() const { return matrix_; }
    const LatticePoint& shift() const { return shift_; }

    LatticePoint operator()(const LatticePoint& x) const;
    // Integer inverse of the linear part.
    std::vector<std::vector<std::int64_t>> inverse_matrix() const;

private:
    std::vector<std::vector<std::int64_t>> matrix_;
    LatticePoint shift_;
};

class LatticePolytope {
public:
    // Convex hull of arbitrary lattice points; keeps only extreme points.
    static LatticePolytope hull(int ambient_dim, std::vector<LatticePoint> points);
    // The caller guarantees every point is extreme. Duplicates are removed.
    static LatticePolytope from_vertices(int ambient_dim, std::vector<LatticePoint> vertices,
                                         std::optional<std::vector<Halfspace>> halfspaces = {});

    int ambient_dim() const { return ambient_dim_; }
    // Lexicographically sorted.
    const std::vector<LatticePoint>& vertices() const { return vertices_; }
    const std::optional<std::vector<Halfspace>>& halfspaces() const { return halfspaces_; }

    bool contains(std::span<const Rational> x) const;
    bool contains(const LatticePoint& x) const;
    int affine_dimension() const;
    bool is_full_dimensional() const { return affine_dimension() == ambient_dim_; }

    // Vertex-set equality; sound because vertices are extreme points.
    bool operator==(const LatticePolytope& other) const {
        return ambient_dim_ == other.ambient_dim_ && vertices_ == other.vertices_;
    }

private:
    LatticePolytope(int ambient_dim, std::vector<LatticePoint> vertices,
                    std::optional<std::vector<Halfspace>> halfspaces);

    int ambient_dim_;
    std::vector<LatticePoint> vertices_;
    std::optional<std::vector<Halfspace>> halfspaces_;
};

struct ReflexivityReport {
    bool is_fano = false;
    bool is_terminal = false;
    bool is_gorenstein = false;
};

// Exact phase-one simplex: is x a convex combination of points?
bool in_convex_hull(std::span<const LatticePoint> points, std::span<const Rational> x);

LatticePolytope order_polytope(const Poset& p);
LatticePolytope poset_polytope(const Poset& p);

LatticePolytope direct_product(const LatticePolytope& a, const LatticePolytope& b);
LatticePolytope free_sum(const LatticePolytope& a, const LatticePolytope& b);
LatticePolytope unit_pyramid(const LatticePolytope& base);
LatticePolytope dilate(const LatticePolytope& a, std::int64_t factor);
LatticePolytope translate(const LatticePolytope& a, const LatticePoint& shift);
LatticePolytope negate(const LatticePolytope& a);
LatticePolytope apply(const AffineTransform& t, const LatticePolytope& a);

std::vector<LatticePoint> lattice_points(const LatticePolytope& a);
std::vector<LatticePoint> interior_lattice_points(const LatticePolytope& a);

// Facets of a full-dimensional polytope with primitive integer normals.
std::vector<Halfspace> facets(const LatticePolytope& a);
LatticePolytope polar_dual(const LatticePolytope& a);
ReflexivityReport reflexivity_report(const LatticePolytope& a);

// The unique interior lattice point of l * O_P for a graded poset, where
// l = length(P) + 2. Found by enumeration; nullopt if it is not unique.
std::optional<LatticePoint> hh_translation_vector(const Poset& p);
bool hh_polar_check(const Poset& p);
bool ordinal_sum_equivalence_check(const Poset& lower, const Poset& upper);

// O_P equals the product of the order polytopes of its components.
bool product_decomposition_check(const Poset& p);
// H_P equals the free sum of the poset polytopes of its components.
bool free_sum_decomposition_check(const Poset& p);
// For a poset with a unique minimum, O_P is lattice equivalent to the unit
// pyramid over O_{P minus the minimum}, via x_min = s, x_rest = w + s.
bool pyramid_equivalence_check(const Poset& p);

bool fits_in_box(const LatticePolytope& a, std::int64_t q);

std::string to_string(const LatticePoint& x);
std::string to_string(const Rational& r);

}  // namespace posetcode
