#pragma once

// Brute-force reference implementations used only by the tests. They share
// no code with the library beyond plain data types.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Pairs = std::vector<std::pair<int, int>>;
using Matrix = std::vector<std::vector<bool>>;

// le[i][j] iff element i+1 <= element j+1, by Warshall on the cover pairs.
inline Matrix order_matrix(int m, const Pairs& covers) {
    Matrix le(m, std::vector<bool>(m, false));
    for (int i = 0; i < m; ++i) le[i][i] = true;
    for (const auto& [a, b] : covers) le[a - 1][b - 1] = true;
    for (int k = 0; k < m; ++k)
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                if (le[i][k] && le[k][j]) le[i][j] = true;
    return le;
}

// All subsets closed upward (up = true) or downward, ascending by mask.
inline std::vector<std::uint64_t> ideals(int m, const Pairs& covers, bool up) {
    const auto le = order_matrix(m, covers);
    std::vector<std::uint64_t> out;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << m); ++s) {
        bool closed = true;
        for (int i = 0; i < m && closed; ++i) {
            if (!((s >> i) & 1U)) continue;
            for (int j = 0; j < m; ++j) {
                const bool related = up ? le[i][j] : le[j][i];
                if (related && !((s >> j) & 1U)) {
                    closed = false;
                    break;
                }
            }
        }
        if (closed) out.push_back(s);
    }
    return out;
}

// Number of maps f: P -> {0..t} with f(i) <= f(j) whenever i <= j.
inline std::uint64_t order_polynomial(int m, const Pairs& covers, int t) {
    const auto le = order_matrix(m, covers);
    std::vector<int> f(m, 0);
    std::uint64_t count = 0;
    while (true) {
        bool ok = true;
        for (int i = 0; i < m && ok; ++i)
            for (int j = 0; j < m && ok; ++j)
                if (le[i][j] && f[i] > f[j]) ok = false;
        count += ok;
        int i = m - 1;
        while (i >= 0 && f[i] == t) f[i--] = 0;
        if (i < 0) break;
        ++f[i];
    }
    return count;
}

// Same, but strictly inside: 0 < f(i) < t and f(i) < f(j) for i < j.
inline std::vector<std::vector<std::int64_t>> strict_order_maps(int m, const Pairs& covers, int t) {
    const auto le = order_matrix(m, covers);
    std::vector<std::vector<std::int64_t>> out;
    std::vector<std::int64_t> f(m, 1);
    if (t < 2) return out;
    while (true) {
        bool ok = true;
        for (int i = 0; i < m && ok; ++i)
            for (int j = 0; j < m && ok; ++j)
                if (i != j && le[i][j] && f[i] >= f[j]) ok = false;
        if (ok) out.push_back(f);
        int i = m - 1;
        while (i >= 0 && f[i] == t - 1) f[i--] = 1;
        if (i < 0) break;
        ++f[i];
    }
    return out;
}

// GF(p^k) by schoolbook polynomial arithmetic. Elements use the encoding
// sum c_i p^i; the modulus (monic, constant term first) is supplied.
struct PolyField {
    int p;
    int k;
    std::vector<int> modulus;

    int order() const {
        int q = 1;
        for (int i = 0; i < k; ++i) q *= p;
        return q;
    }

    std::vector<int> digits(int a) const {
        std::vector<int> d(k);
        for (int i = 0; i < k; ++i) {
            d[i] = a % p;
            a /= p;
        }
        return d;
    }

    int encode(const std::vector<int>& d) const {
        int a = 0;
        for (int i = k - 1; i >= 0; --i) a = a * p + d[i];
        return a;
    }

    int add(int a, int b) const {
        auto x = digits(a), y = digits(b);
        for (int i = 0; i < k; ++i) x[i] = (x[i] + y[i]) % p;
        return encode(x);
    }

    int mul(int a, int b) const {
        const auto x = digits(a), y = digits(b);
        std::vector<int> prod(2 * k, 0);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
        for (int deg = 2 * k - 1; deg >= k; --deg) {
            const int c = prod[deg];
            if (c == 0) continue;
            for (int i = 0; i <= k; ++i) prod[deg - k + i] = ((prod[deg - k + i] - c * modulus[i]) % p + p) % p;
        }
        prod.resize(k);
        return encode(prod);
    }

    int pow(int a, std::int64_t e) const {
        int r = 1;
        for (std::int64_t i = 0; i < e; ++i) r = mul(r, a);
        return r;
    }
};

// Monic polynomial of degree k over GF(p) has no monic factor of degree
// 1..k/2, found by exhaustive polynomial division.
inline bool irreducible(int p, const std::vector<int>& f) {
    const int k = static_cast<int>(f.size()) - 1;
    for (int d = 1; 2 * d <= k; ++d) {
        int count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (int code = 0; code < count; ++code) {
            std::vector<int> g(d + 1, 0);
            g[d] = 1;
            int c = code;
            for (int i = 0; i < d; ++i) {
                g[i] = c % p;
                c /= p;
            }
            std::vector<int> r = f;
            for (int deg = k; deg >= d; --deg) {
                const int lead = r[deg];
                for (int i = 0; i <= d; ++i) r[deg - d + i] = ((r[deg - d + i] - lead * g[i]) % p + p) % p;
            }
            if (std::all_of(r.begin(), r.end(), [](int x) { return x == 0; })) return false;
        }
    }
    return true;
}

// Minimum weight over all nonzero codewords of the evaluation code with the
// given exponent vectors on (GF(q)^*)^m.
inline std::uint64_t min_distance(const PolyField& f, const std::vector<std::vector<std::int64_t>>& exponents,
                                  int m) {
    const int q = f.order();
    std::vector<std::vector<int>> points;
    std::vector<int> x(m, 1);
    while (true) {
        points.push_back(x);
        int i = m - 1;
        while (i >= 0 && x[i] == q - 1) x[i--] = 1;
        if (i < 0) break;
        ++x[i];
    }
    std::vector<std::vector<int>> rows;
    for (const auto& u : exponents) {
        std::vector<int> row;
        for (const auto& pt : points) {
            int v = 1;
            for (int i = 0; i < m; ++i) v = f.mul(v, f.pow(pt[i], u[i]));
            row.push_back(v);
        }
        rows.push_back(row);
    }
    const int k = static_cast<int>(rows.size());
    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
    std::vector<int> msg(k, 0);
    while (true) {
        int i = k - 1;
        while (i >= 0 && msg[i] == q - 1) msg[i--] = 0;
        if (i < 0) break;
        ++msg[i];
        std::uint64_t w = 0;
        for (std::size_t t = 0; t < points.size(); ++t) {
            int v = 0;
            for (int r = 0; r < k; ++r) v = f.add(v, f.mul(msg[r], rows[r][t]));
            w += v != 0;
        }
        // Dependent rows can encode a nonzero message as the zero word.
        if (w > 0) best = std::min(best, w);
    }
    return best;
}

// Number of distinct classes of exponent vectors modulo q - 1, which is the
// dimension of the span of the corresponding characters of the torus.
inline std::size_t character_classes(const std::vector<std::vector<std::int64_t>>& exponents, int q) {
    std::set<std::vector<std::int64_t>> classes;
    for (auto u : exponents) {
        for (auto& x : u) x = ((x % (q - 1)) + (q - 1)) % (q - 1);
        classes.insert(u);
    }
    return classes.size();
}

}  // namespace oracle
