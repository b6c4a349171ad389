#include "posetcode/lattice_geometry.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "posetcode/errors.hpp"

namespace posetcode {

namespace {

using RationalMatrix = std::vector<std::vector<Rational>>;

// Row-reduces in place and returns the rank.
int row_reduce(RationalMatrix& a, std::size_t cols) {
    int rank = 0;
    const int rows = static_cast<int>(a.size());
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (a[r][c] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[rank], a[pivot]);
        const Rational inv = 1 / a[rank][c];
        for (auto& x : a[rank]) x *= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == rank || a[r][c] == 0) continue;
            const Rational f = a[r][c];
            for (std::size_t k = c; k < a[r].size(); ++k) a[r][k] -= f * a[rank][k];
        }
        ++rank;
    }
    return rank;
}

// Solves the square system m * x = rhs; nullopt when singular.
std::optional<std::vector<Rational>> solve(RationalMatrix m, const std::vector<Rational>& rhs) {
    const std::size_t n = m.size();
    for (std::size_t r = 0; r < n; ++r) m[r].push_back(rhs[r]);
    if (row_reduce(m, n) < static_cast<int>(n)) return std::nullopt;
    std::vector<Rational> x(n);
    for (std::size_t r = 0; r < n; ++r) x[r] = m[r][n];
    return x;
}

Rational determinant(RationalMatrix m) {
    const std::size_t n = m.size();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && m[pivot][c] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != c) {
            std::swap(m[pivot], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m[r][c] == 0) continue;
            const Rational f = m[r][c] / m[c][c];
            for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
        }
    }
    return det;
}

std::int64_t to_int64(const Rational& r) {
    if (boost::multiprecision::denominator(r) != 1) {
        throw std::logic_error("expected an integral value, got " + r.str());
    }
    return static_cast<std::int64_t>(boost::multiprecision::numerator(r));
}

std::vector<Rational> to_rational(const LatticePoint& x) {
    return std::vector<Rational>(x.begin(), x.end());
}

Rational dot(const std::vector<std::int64_t>& a, std::span<const Rational> x) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += Rational(a[i]) * x[i];
    return s;
}

std::int64_t dot(const std::vector<std::int64_t>& a, const LatticePoint& x) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * x[i];
    return s;
}

bool satisfies(const std::vector<Halfspace>& hs, const LatticePoint& x, bool strict) {
    for (const auto& h : hs) {
        const Rational v = dot(h.normal, x);
        if (strict ? !(v < h.offset) : !(v <= h.offset)) return false;
    }
    return true;
}

void check_facet_guard(const LatticePolytope& a) {
    if (a.ambient_dim() > max_facet_dimension || a.vertices().size() > max_facet_vertices) {
        throw TooLargeError("facet enumeration limited to dimension " +
                            std::to_string(max_facet_dimension) + " and " +
                            std::to_string(max_facet_vertices) + " vertices");
    }
}

// Scales a rational vector to the primitive integer vector with the same
// direction. Returns the positive scale factor used.
Rational make_primitive(const std::vector<Rational>& v, std::vector<std::int64_t>& out) {
    using boost::multiprecision::mpz_int;
    mpz_int den_lcm = 1;
    for (const auto& x : v) den_lcm = boost::multiprecision::lcm(den_lcm, boost::multiprecision::denominator(x));
    std::vector<mpz_int> ints;
    mpz_int g = 0;
    for (const auto& x : v) {
        mpz_int n = boost::multiprecision::numerator(x) * (den_lcm / boost::multiprecision::denominator(x));
        g = boost::multiprecision::gcd(g, n);
        ints.push_back(n);
    }
    if (g == 0) throw std::logic_error("zero normal vector");
    out.clear();
    for (const auto& n : ints) out.push_back(static_cast<std::int64_t>(n / g));
    return Rational(den_lcm) / Rational(g);
}

std::vector<LatticePoint> box_points(const LatticePolytope& a) {
    const int d = a.ambient_dim();
    LatticePoint lo(d), hi(d);
    double volume = 1;
    for (int i = 0; i < d; ++i) {
        lo[i] = hi[i] = a.vertices().front()[i];
        for (const auto& v : a.vertices()) {
            lo[i] = std::min(lo[i], v[i]);
            hi[i] = std::max(hi[i], v[i]);
        }
        volume *= static_cast<double>(hi[i] - lo[i] + 1);
    }
    if (volume > max_box_volume) {
        throw TooLargeError("lattice point scan box has volume " + std::to_string(volume));
    }
    std::vector<LatticePoint> out;
    LatticePoint x = lo;
    while (true) {
        out.push_back(x);
        int i = d - 1;
        while (i >= 0 && x[i] == hi[i]) {
            x[i] = lo[i];
            --i;
        }
        if (i < 0) break;
        ++x[i];
    }
    return out;
}

}  // namespace

AffineTransform::AffineTransform(std::vector<std::vector<std::int64_t>> matrix, LatticePoint shift)
    : matrix_(std::move(matrix)), shift_(std::move(shift)) {
    const std::size_t n = shift_.size();
    if (matrix_.size() != n) throw InvalidInputError("transform matrix and shift disagree in size");
    RationalMatrix m(n);
    for (std::size_t r = 0; r < n; ++r) {
        if (matrix_[r].size() != n) throw InvalidInputError("transform matrix must be square");
        m[r].assign(matrix_[r].begin(), matrix_[r].end());
    }
    const Rational det = determinant(std::move(m));
    if (det != 1 && det != -1) {
        throw InvalidInputError("transform matrix is not unimodular (det " + det.str() + ")");
    }
}

AffineTransform AffineTransform::identity(int dim) {
    std::vector<std::vector<std::int64_t>> m(dim, std::vector<std::int64_t>(dim, 0));
    for (int i = 0; i < dim; ++i) m[i][i] = 1;
    return AffineTransform(std::move(m), LatticePoint(dim, 0));
}

LatticePoint AffineTransform::operator()(const LatticePoint& x) const {
    LatticePoint y = shift_;
    for (std::size_t r = 0; r < y.size(); ++r) y[r] += dot(matrix_[r], x);
    return y;
}

std::vector<std::vector<std::int64_t>> AffineTransform::inverse_matrix() const {
    const std::size_t n = shift_.size();
    RationalMatrix m(n);
    for (std::size_t r = 0; r < n; ++r) {
        m[r].assign(matrix_[r].begin(), matrix_[r].end());
        for (std::size_t c = 0; c < n; ++c) m[r].push_back(r == c ? 1 : 0);
    }
    row_reduce(m, n);
    std::vector<std::vector<std::int64_t>> inv(n, std::vector<std::int64_t>(n));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv[r][c] = to_int64(m[r][n + c]);
    return inv;
}

LatticePolytope::LatticePolytope(int ambient_dim, std::vector<LatticePoint> vertices,
                                 std::optional<std::vector<Halfspace>> halfspaces)
    : ambient_dim_(ambient_dim), vertices_(std::move(vertices)), halfspaces_(std::move(halfspaces)) {
    if (ambient_dim_ < 0) throw InvalidInputError("negative ambient dimension");
    if (vertices_.empty()) throw InvalidInputError("a polytope needs at least one vertex");
    for (const auto& v : vertices_)
        if (static_cast<int>(v.size()) != ambient_dim_) {
            throw InvalidInputError("vertex " + to_string(v) + " does not have dimension " +
                                    std::to_string(ambient_dim_));
        }
    std::sort(vertices_.begin(), vertices_.end());
    vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
}

LatticePolytope LatticePolytope::from_vertices(int ambient_dim, std::vector<LatticePoint> vertices,
                                               std::optional<std::vector<Halfspace>> halfspaces) {
    return LatticePolytope(ambient_dim, std::move(vertices), std::move(halfspaces));
}

LatticePolytope LatticePolytope::hull(int ambient_dim, std::vector<LatticePoint> points) {
    LatticePolytope all(ambient_dim, std::move(points), std::nullopt);
    const auto& pts = all.vertices_;
    std::vector<LatticePoint> extreme;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        std::vector<LatticePoint> others;
        others.reserve(pts.size() - 1);
        for (std::size_t j = 0; j < pts.size(); ++j)
            if (j != i) others.push_back(pts[j]);
        const auto x = to_rational(pts[i]);
        if (others.empty() || !in_convex_hull(others, x)) extreme.push_back(pts[i]);
    }
    return LatticePolytope(ambient_dim, std::move(extreme), std::nullopt);
}

bool LatticePolytope::contains(std::span<const Rational> x) const {
    if (halfspaces_) {
        for (const auto& h : *halfspaces_)
            if (dot(h.normal, x) > h.offset) return false;
        return true;
    }
    return in_convex_hull(vertices_, x);
}

bool LatticePolytope::contains(const LatticePoint& x) const {
    if (halfspaces_) return satisfies(*halfspaces_, x, false);
    const auto r = to_rational(x);
    return in_convex_hull(vertices_, r);
}

int LatticePolytope::affine_dimension() const {
    RationalMatrix m;
    for (std::size_t i = 1; i < vertices_.size(); ++i) {
        std::vector<Rational> row;
        for (int c = 0; c < ambient_dim_; ++c) row.emplace_back(vertices_[i][c] - vertices_[0][c]);
        m.push_back(std::move(row));
    }
    return row_reduce(m, ambient_dim_);
}

bool in_convex_hull(std::span<const LatticePoint> points, std::span<const Rational> x) {
    // Minimize the sum of artificial variables subject to
    //   sum_j lambda_j p_j = x, sum_j lambda_j = 1, lambda >= 0.
    const std::size_t n = points.size();
    const std::size_t d = x.size();
    const std::size_t rows = d + 1;
    const std::size_t cols = n + rows;  // lambdas then artificials
    RationalMatrix t(rows, std::vector<Rational>(cols + 1, 0));
    for (std::size_t r = 0; r < rows; ++r) {
        Rational rhs = r < d ? Rational(x[r]) : Rational(1);
        const bool flip = rhs < 0;
        for (std::size_t j = 0; j < n; ++j) {
            Rational a = r < d ? Rational(points[j][r]) : Rational(1);
            t[r][j] = flip ? Rational(-a) : a;
        }
        t[r][n + r] = 1;
        t[r][cols] = flip ? Rational(-rhs) : rhs;
    }
    std::vector<std::size_t> basis(rows);
    std::iota(basis.begin(), basis.end(), n);
    std::vector<Rational> reduced(cols, 0);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t r = 0; r < rows; ++r) reduced[j] -= t[r][j];

    // Bland's rule guarantees termination.
    while (true) {
        std::size_t enter = cols;
        for (std::size_t j = 0; j < cols; ++j)
            if (reduced[j] < 0) {
                enter = j;
                break;
            }
        if (enter == cols) break;
        std::size_t leave = rows;
        Rational best_ratio;
        for (std::size_t r = 0; r < rows; ++r) {
            if (t[r][enter] <= 0) continue;
            const Rational ratio = t[r][cols] / t[r][enter];
            if (leave == rows || ratio < best_ratio ||
                (ratio == best_ratio && basis[r] < basis[leave])) {
                leave = r;
                best_ratio = ratio;
            }
        }
        if (leave == rows) break;  // cannot happen for a phase-one problem
        const Rational inv = 1 / t[leave][enter];
        for (auto& v : t[leave]) v *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == leave || t[r][enter] == 0) continue;
            const Rational f = t[r][enter];
            for (std::size_t k = 0; k <= cols; ++k) t[r][k] -= f * t[leave][k];
        }
        const Rational f = reduced[enter];
        for (std::size_t k = 0; k < cols; ++k) reduced[k] -= f * t[leave][k];
        basis[leave] = enter;
    }
    for (std::size_t r = 0; r < rows; ++r)
        if (basis[r] >= n && t[r][cols] != 0) return false;
    return true;
}

LatticePolytope order_polytope(const Poset& p) {
    const int m = p.size();
    std::vector<LatticePoint> vertices;
    for (const auto& ideal : upper_ideals(p)) {
        LatticePoint v(m, 0);
        for (int e : ideal.members()) v[e - 1] = 1;
        vertices.push_back(std::move(v));
    }
    std::vector<Halfspace> hs;
    auto unit = [m](int i, std::int64_t s) {
        std::vector<std::int64_t> n(m, 0);
        n[i - 1] = s;
        return n;
    };
    for (int i : p.minimal_elements()) hs.push_back({unit(i, -1), 0});
    for (int j : p.maximal_elements()) hs.push_back({unit(j, 1), 1});
    for (const auto& [i, j] : p.covers()) {
        auto n = unit(i, 1);
        n[j - 1] = -1;
        hs.push_back({std::move(n), 0});
    }
    return LatticePolytope::from_vertices(m, std::move(vertices), std::move(hs));
}

LatticePolytope poset_polytope(const Poset& p) {
    const int m = p.size();
    if (m > max_ideal_enumeration_size) {
        throw TooLargeError("poset polytope limited to " +
                            std::to_string(max_ideal_enumeration_size) + " elements");
    }
    std::vector<LatticePoint> points;
    for (int j : p.minimal_elements()) {
        LatticePoint v(m, 0);
        v[j - 1] = -1;
        points.push_back(std::move(v));
    }
    for (int i : p.maximal_elements()) {
        LatticePoint v(m, 0);
        v[i - 1] = 1;
        points.push_back(std::move(v));
    }
    for (const auto& [i, j] : p.covers()) {
        LatticePoint v(m, 0);
        v[i - 1] = 1;
        v[j - 1] = -1;
        points.push_back(std::move(v));
    }
    return LatticePolytope::hull(m, std::move(points));
}

LatticePolytope direct_product(const LatticePolytope& a, const LatticePolytope& b) {
    const int da = a.ambient_dim();
    const int db = b.ambient_dim();
    std::vector<LatticePoint> vertices;
    for (const auto& u : a.vertices())
        for (const auto& w : b.vertices()) {
            LatticePoint v = u;
            v.insert(v.end(), w.begin(), w.end());
            vertices.push_back(std::move(v));
        }
    std::optional<std::vector<Halfspace>> hs;
    if (a.halfspaces() && b.halfspaces()) {
        hs.emplace();
        for (const auto& h : *a.halfspaces()) {
            auto n = h.normal;
            n.resize(da + db, 0);
            hs->push_back({std::move(n), h.offset});
        }
        for (const auto& h : *b.halfspaces()) {
            std::vector<std::int64_t> n(da, 0);
            n.insert(n.end(), h.normal.begin(), h.normal.end());
            hs->push_back({std::move(n), h.offset});
        }
    }
    return LatticePolytope::from_vertices(da + db, std::move(vertices), std::move(hs));
}

LatticePolytope free_sum(const LatticePolytope& a, const LatticePolytope& b) {
    const int da = a.ambient_dim();
    const int db = b.ambient_dim();
    if (!a.contains(LatticePoint(da, 0)) || !b.contains(LatticePoint(db, 0))) {
        throw OriginMissingError("free sum needs both summands to contain the origin");
    }
    // With the origin in both summands, every nonzero vertex of either summand
    // stays extreme; only the origin itself needs a hull test.
    std::vector<LatticePoint> vertices;
    for (const auto& u : a.vertices()) {
        LatticePoint v = u;
        v.resize(da + db, 0);
        vertices.push_back(std::move(v));
    }
    for (const auto& w : b.vertices()) {
        LatticePoint v(da, 0);
        v.insert(v.end(), w.begin(), w.end());
        vertices.push_back(std::move(v));
    }
    const LatticePoint origin(da + db, 0);
    std::erase(vertices, origin);
    if (vertices.empty()) return LatticePolytope::from_vertices(da + db, {origin});
    const std::vector<Rational> zero(da + db, Rational(0));
    if (!in_convex_hull(vertices, zero)) vertices.push_back(origin);
    return LatticePolytope::from_vertices(da + db, std::move(vertices));
}

LatticePolytope unit_pyramid(const LatticePolytope& base) {
    if (base.affine_dimension() < 1) {
        throw DimensionError("unit pyramid needs a base of dimension at least 1");
    }
    const int d = base.ambient_dim();
    std::vector<LatticePoint> vertices;
    for (const auto& u : base.vertices()) {
        LatticePoint v = u;
        v.push_back(0);
        vertices.push_back(std::move(v));
    }
    LatticePoint apex(d + 1, 0);
    apex[d] = 1;
    vertices.push_back(std::move(apex));
    return LatticePolytope::from_vertices(d + 1, std::move(vertices));
}

LatticePolytope dilate(const LatticePolytope& a, std::int64_t factor) {
    if (factor < 1) throw InvalidInputError("dilation factor must be positive");
    std::vector<LatticePoint> vertices = a.vertices();
    for (auto& v : vertices)
        for (auto& x : v) x *= factor;
    std::optional<std::vector<Halfspace>> hs = a.halfspaces();
    if (hs)
        for (auto& h : *hs) h.offset *= factor;
    return LatticePolytope::from_vertices(a.ambient_dim(), std::move(vertices), std::move(hs));
}

LatticePolytope translate(const LatticePolytope& a, const LatticePoint& shift) {
    if (static_cast<int>(shift.size()) != a.ambient_dim()) {
        throw InvalidInputError("translation vector has the wrong dimension");
    }
    std::vector<LatticePoint> vertices = a.vertices();
    for (auto& v : vertices)
        for (std::size_t i = 0; i < v.size(); ++i) v[i] += shift[i];
    std::optional<std::vector<Halfspace>> hs = a.halfspaces();
    if (hs)
        for (auto& h : *hs) h.offset += dot(h.normal, shift);
    return LatticePolytope::from_vertices(a.ambient_dim(), std::move(vertices), std::move(hs));
}

LatticePolytope negate(const LatticePolytope& a) {
    std::vector<LatticePoint> vertices = a.vertices();
    for (auto& v : vertices)
        for (auto& x : v) x = -x;
    std::optional<std::vector<Halfspace>> hs = a.halfspaces();
    if (hs)
        for (auto& h : *hs)
            for (auto& x : h.normal) x = -x;
    return LatticePolytope::from_vertices(a.ambient_dim(), std::move(vertices), std::move(hs));
}

LatticePolytope apply(const AffineTransform& t, const LatticePolytope& a) {
    if (t.dimension() != a.ambient_dim()) {
        throw InvalidInputError("transform dimension does not match the polytope");
    }
    std::vector<LatticePoint> vertices;
    for (const auto& v : a.vertices()) vertices.push_back(t(v));
    std::optional<std::vector<Halfspace>> hs;
    if (a.halfspaces()) {
        // <n, x> <= b with x = M^-1 (y - u) becomes <M^-T n, y> <= b + <M^-T n, u>.
        const auto inv = t.inverse_matrix();
        const int d = a.ambient_dim();
        hs.emplace();
        for (const auto& h : *a.halfspaces()) {
            std::vector<std::int64_t> n(d, 0);
            for (int c = 0; c < d; ++c)
                for (int r = 0; r < d; ++r) n[c] += inv[r][c] * h.normal[r];
            const std::int64_t shift = dot(n, t.shift());
            hs->push_back({std::move(n), h.offset + shift});
        }
    }
    return LatticePolytope::from_vertices(a.ambient_dim(), std::move(vertices), std::move(hs));
}

std::vector<LatticePoint> lattice_points(const LatticePolytope& a) {
    std::vector<LatticePoint> out;
    for (auto& x : box_points(a))
        if (a.contains(x)) out.push_back(std::move(x));
    return out;
}

std::vector<LatticePoint> interior_lattice_points(const LatticePolytope& a) {
    if (!a.is_full_dimensional()) return {};
    const std::vector<Halfspace> hs = a.halfspaces() ? *a.halfspaces() : facets(a);
    std::vector<LatticePoint> out;
    for (auto& x : box_points(a))
        if (satisfies(hs, x, true)) out.push_back(std::move(x));
    return out;
}

std::vector<Halfspace> facets(const LatticePolytope& a) {
    check_facet_guard(a);
    if (!a.is_full_dimensional()) {
        throw DimensionError("facet enumeration needs a full-dimensional polytope");
    }
    const int d = a.ambient_dim();
    const auto& vs = a.vertices();
    const std::int64_t count = static_cast<std::int64_t>(vs.size());
    if (d == 0) return {};

    // Translate by the vertex centroid (scaled by the vertex count to stay
    // integral); the centroid is interior, so every facet has the form
    // <n, w> <= 1 in the translated frame.
    LatticePoint sum(d, 0);
    for (const auto& v : vs)
        for (int i = 0; i < d; ++i) sum[i] += v[i];
    std::vector<LatticePoint> w;
    for (const auto& v : vs) {
        LatticePoint x(d);
        for (int i = 0; i < d; ++i) x[i] = count * v[i] - sum[i];
        w.push_back(std::move(x));
    }

    std::set<std::vector<std::int64_t>> seen;
    std::vector<Halfspace> out;
    std::vector<std::size_t> pick(d);
    std::iota(pick.begin(), pick.end(), 0);
    const std::vector<Rational> ones(d, Rational(1));
    while (true) {
        RationalMatrix m;
        for (std::size_t idx : pick) m.emplace_back(w[idx].begin(), w[idx].end());
        if (auto normal = solve(std::move(m), ones)) {
            bool supporting = true;
            for (const auto& x : w) {
                Rational s = 0;
                for (int i = 0; i < d; ++i) s += (*normal)[i] * x[i];
                if (s > 1) {
                    supporting = false;
                    break;
                }
            }
            if (supporting) {
                // <n, count*x - sum> <= 1  <=>  <count*n, x> <= 1 + <n, sum>
                std::vector<Rational> scaled(d);
                Rational offset = 1;
                for (int i = 0; i < d; ++i) {
                    scaled[i] = (*normal)[i] * count;
                    offset += (*normal)[i] * sum[i];
                }
                std::vector<std::int64_t> primitive;
                const Rational factor = make_primitive(scaled, primitive);
                if (seen.insert(primitive).second) out.push_back({primitive, offset * factor});
            }
        }
        // Next combination of d indices out of the vertex count.
        int i = d - 1;
        while (i >= 0 && pick[i] == vs.size() - d + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < d; ++j) pick[j] = pick[j - 1] + 1;
    }
    std::sort(out.begin(), out.end(),
              [](const Halfspace& x, const Halfspace& y) { return x.normal < y.normal; });
    return out;
}

LatticePolytope polar_dual(const LatticePolytope& a) {
    check_facet_guard(a);
    if (!a.is_full_dimensional()) throw OriginNotInteriorError("polytope is not full-dimensional");
    const auto fs = facets(a);
    const int d = a.ambient_dim();
    std::vector<LatticePoint> vertices;
    for (const auto& f : fs) {
        if (f.offset <= 0) throw OriginNotInteriorError("origin is not an interior point");
    }
    for (const auto& f : fs) {
        LatticePoint v(d);
        for (int i = 0; i < d; ++i) {
            const Rational c = Rational(f.normal[i]) / f.offset;
            if (boost::multiprecision::denominator(c) != 1) {
                throw RationalPolytopeError("polar dual has a non-integral vertex");
            }
            v[i] = to_int64(c);
        }
        vertices.push_back(std::move(v));
    }
    std::vector<Halfspace> hs;
    for (const auto& v : a.vertices()) hs.push_back({v, 1});
    return LatticePolytope::from_vertices(d, std::move(vertices), std::move(hs));
}

ReflexivityReport reflexivity_report(const LatticePolytope& a) {
    ReflexivityReport report;
    const auto interior = interior_lattice_points(a);
    const LatticePoint origin(a.ambient_dim(), 0);
    report.is_fano = interior.size() == 1 && interior.front() == origin;

    report.is_terminal = true;
    for (const auto& x : lattice_points(a)) {
        if (std::binary_search(interior.begin(), interior.end(), x)) continue;
        if (!std::binary_search(a.vertices().begin(), a.vertices().end(), x)) {
            report.is_terminal = false;
            break;
        }
    }

    try {
        polar_dual(a);
        report.is_gorenstein = true;
    } catch (const RationalPolytopeError&) {
        report.is_gorenstein = false;
    }
    return report;
}

std::optional<LatticePoint> hh_translation_vector(const Poset& p) {
    const auto grading = rank_function(p);
    if (!grading) throw NotGradedError("poset is not graded");
    const std::int64_t l = grading->length + 2;
    const auto interior = interior_lattice_points(dilate(order_polytope(p), l));
    if (interior.size() != 1) return std::nullopt;
    return interior.front();
}

bool hh_polar_check(const Poset& p) {
    const auto grading = rank_function(p);
    if (!grading) throw NotGradedError("poset is not graded");
    const std::int64_t l = grading->length + 2;
    const auto v = hh_translation_vector(p);
    if (!v) return false;
    LatticePoint closed_form(p.size());
    for (int i = 0; i < p.size(); ++i) closed_form[i] = grading->rank[i] + 1;
    if (*v != closed_form) {
        throw std::logic_error("interior point of l*O_P differs from rank + 1");
    }
    LatticePoint minus_v = *v;
    for (auto& x : minus_v) x = -x;
    const auto expected = translate(dilate(order_polytope(p), l), minus_v);
    return polar_dual(poset_polytope(p)) == expected;
}

bool ordinal_sum_equivalence_check(const Poset& lower, const Poset& upper) {
    const int n = lower.size();
    const int m = upper.size();
    if (n + m > 20) throw TooLargeError("ordinal sum check limited to 20 elements");
    // Upper ideals of lower (+) upper either contain all of `upper` or none of
    // `lower`, so subtracting v0 = (0..0, 1..1) puts O_lower in the first block
    // and O_upper - 1 = -O_{upper^opp} in the second.
    LatticePoint minus_v0(n + m, 0);
    for (int i = n; i < n + m; ++i) minus_v0[i] = -1;
    const auto lhs = translate(order_polytope(ordinal_sum(lower, upper)), minus_v0);
    const auto rhs = free_sum(order_polytope(lower), negate(order_polytope(opposite(upper))));
    return lhs == rhs;
}

namespace {

// Reorders coordinates so that block coordinate j lands at position order[j] - 1.
LatticePolytope scatter_coordinates(const LatticePolytope& a, const std::vector<int>& order) {
    std::vector<LatticePoint> vertices;
    for (const auto& v : a.vertices()) {
        LatticePoint x(v.size());
        for (std::size_t j = 0; j < v.size(); ++j) x[order[j] - 1] = v[j];
        vertices.push_back(std::move(x));
    }
    return LatticePolytope::from_vertices(a.ambient_dim(), std::move(vertices));
}

}  // namespace

bool product_decomposition_check(const Poset& p) {
    const auto comps = connected_components(p);
    std::optional<LatticePolytope> product;
    std::vector<int> order;
    for (const auto& c : comps) {
        const auto piece = order_polytope(c.poset);
        product = product ? direct_product(*product, piece) : piece;
        order.insert(order.end(), c.embedding.begin(), c.embedding.end());
    }
    return scatter_coordinates(*product, order) == order_polytope(p);
}

bool free_sum_decomposition_check(const Poset& p) {
    const auto comps = connected_components(p);
    std::optional<LatticePolytope> sum;
    std::vector<int> order;
    for (const auto& c : comps) {
        const auto piece = poset_polytope(c.poset);
        sum = sum ? free_sum(*sum, piece) : piece;
        order.insert(order.end(), c.embedding.begin(), c.embedding.end());
    }
    return scatter_coordinates(*sum, order) == poset_polytope(p);
}

bool pyramid_equivalence_check(const Poset& p) {
    const auto minima = p.minimal_elements();
    if (minima.size() != 1 || p.size() < 2) {
        throw NoUniqueMinimumError("pyramid check needs a unique minimum and a second element");
    }
    const int m = p.size();
    const int bottom = minima.front();
    std::vector<int> rest;
    for (int i = 1; i <= m; ++i)
        if (i != bottom) rest.push_back(i);
    const auto pyramid = unit_pyramid(order_polytope(induced_subposet(p, rest)));
    // Pyramid coordinates (w, s) map to x_bottom = s and x_rest = w + s * (1..1).
    std::vector<std::vector<std::int64_t>> matrix(m, std::vector<std::int64_t>(m, 0));
    for (int j = 0; j < m - 1; ++j) {
        matrix[rest[j] - 1][j] = 1;
        matrix[rest[j] - 1][m - 1] = 1;
    }
    matrix[bottom - 1][m - 1] = 1;
    const AffineTransform t(std::move(matrix), LatticePoint(m, 0));
    return apply(t, pyramid) == order_polytope(p);
}

bool fits_in_box(const LatticePolytope& a, std::int64_t q) {
    for (const auto& v : a.vertices())
        for (auto x : v)
            if (x < 0 || x > q - 2) return false;
    return true;
}

std::string to_string(const LatticePoint& x) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < x.size(); ++i) os << (i ? "," : "") << x[i];
    os << ')';
    return os.str();
}

std::string to_string(const Rational& r) { return r.str(); }

}  // namespace posetcode
