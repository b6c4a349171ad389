#include "posetcode/toric_code.hpp"

#include <algorithm>

#include "posetcode/errors.hpp"

namespace posetcode {

namespace {

// Reduces `row` against an echelon basis; returns the pivot column of the
// remainder or -1 when it reduces to zero.
int reduce_row(std::vector<FieldElement>& row, const std::vector<std::vector<FieldElement>>& basis,
               const std::vector<int>& pivots, const GaloisField& f) {
    for (std::size_t b = 0; b < basis.size(); ++b) {
        const FieldElement c = row[pivots[b]];
        if (c == 0) continue;
        // basis rows are normalized to 1 at their pivot
        for (std::size_t j = 0; j < row.size(); ++j)
            if (basis[b][j] != 0) row[j] = f.sub(row[j], f.mul(c, basis[b][j]));
    }
    for (std::size_t j = 0; j < row.size(); ++j)
        if (row[j] != 0) return static_cast<int>(j);
    return -1;
}

}  // namespace

BigInt int_power(std::int64_t base, int exponent) {
    BigInt r = 1;
    for (int i = 0; i < exponent; ++i) r *= base;
    return r;
}

ToricCode build_code(const LatticePolytope& polytope, const GaloisField& field) {
    const int m = polytope.ambient_dim();
    for (const auto& v : polytope.vertices())
        for (auto x : v)
            if (x < 0) throw NegativeExponentError("vertex " + to_string(v) + " has a negative coordinate");

    const std::uint64_t q1 = static_cast<std::uint64_t>(field.order() - 1);
    std::uint64_t n = 1;
    for (int i = 0; i < m; ++i) {
        n *= q1;
        if (n > max_code_length) {
            throw TooLargeError("code length (q-1)^m exceeds " + std::to_string(max_code_length));
        }
    }

    ToricCode code{field, m, lattice_points(polytope), {}, n, 0, std::nullopt, {}};
    // Column t has coordinates x_i = g^(e_i) where (e_1..e_m) are the base-(q-1)
    // digits of t, last coordinate fastest, so the entry for exponent u is
    // g^(sum u_i e_i).
    std::vector<std::uint64_t> digits(m, 0);
    code.generator.assign(code.exponents.size(), std::vector<FieldElement>(n));
    std::vector<FieldElement> unit_list = field.units();
    std::vector<int> unit_log(unit_list.size());
    for (std::size_t i = 0; i < unit_list.size(); ++i) unit_log[i] = field.log(unit_list[i]);
    for (std::uint64_t t = 0; t < n; ++t) {
        for (std::size_t r = 0; r < code.exponents.size(); ++r) {
            std::uint64_t e = 0;
            for (int i = 0; i < m; ++i)
                e += static_cast<std::uint64_t>(code.exponents[r][i]) * unit_log[digits[i]];
            code.generator[r][t] = field.exp(static_cast<int>(e % q1));
        }
        for (int i = m - 1; i >= 0; --i) {
            if (++digits[i] < q1) break;
            digits[i] = 0;
        }
    }
    code.dimension = generator_rank(code.generator, field);
    return code;
}

LatticePolytope normalize_to_box(const LatticePolytope& polytope, std::int64_t q) {
    const int d = polytope.ambient_dim();
    LatticePoint shift(d, 0);
    for (int i = 0; i < d; ++i) {
        std::int64_t lo = polytope.vertices().front()[i];
        for (const auto& v : polytope.vertices()) lo = std::min(lo, v[i]);
        shift[i] = -lo;
    }
    auto moved = translate(polytope, shift);
    if (!fits_in_box(moved, q)) {
        throw BoxOverflowError("polytope does not fit in [0," + std::to_string(q - 2) +
                               "]^m after translation");
    }
    return moved;
}

std::vector<FieldElement> encode(const ToricCode& code, std::span<const FieldElement> message) {
    if (message.size() != code.generator.size()) {
        throw InvalidInputError("message length does not match the number of monomials");
    }
    std::vector<FieldElement> word(code.length, 0);
    for (std::size_t r = 0; r < message.size(); ++r) {
        if (message[r] == 0) continue;
        for (std::uint64_t t = 0; t < code.length; ++t)
            word[t] = code.field.add(word[t], code.field.mul(message[r], code.generator[r][t]));
    }
    return word;
}

std::uint64_t hamming_weight(std::span<const FieldElement> word) {
    return static_cast<std::uint64_t>(std::count_if(word.begin(), word.end(), [](FieldElement x) { return x != 0; }));
}

std::vector<int> independent_rows(const std::vector<std::vector<FieldElement>>& rows,
                                  const GaloisField& field) {
    std::vector<std::vector<FieldElement>> basis;
    std::vector<int> pivots;
    std::vector<int> chosen;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        auto row = rows[r];
        const int pivot = reduce_row(row, basis, pivots, field);
        if (pivot < 0) continue;
        const FieldElement inv = field.inv(row[pivot]);
        for (auto& x : row) x = field.mul(x, inv);
        basis.push_back(std::move(row));
        pivots.push_back(pivot);
        chosen.push_back(static_cast<int>(r));
    }
    return chosen;
}

int generator_rank(const std::vector<std::vector<FieldElement>>& rows, const GaloisField& field) {
    return static_cast<int>(independent_rows(rows, field).size());
}

double search_cost(const ToricCode& code) {
    const double q = code.field.order();
    double classes = 0;
    double power = 1;
    for (int i = 0; i < code.dimension; ++i) {
        classes += power;
        power *= q;
    }
    return classes * static_cast<double>(code.length);
}

void compute_min_distance(ToricCode& code, const SearchOptions& options) {
    auto result = min_distance_exact(code, options);
    code.min_distance = result.distance;
    code.witness = std::move(result.witness);
}

std::uint64_t max_zeros(const ToricCode& code) {
    if (!code.min_distance) throw InvalidInputError("minimum distance has not been computed");
    return code.length - *code.min_distance;
}

boost::rational<std::int64_t> transmission_rate(const ToricCode& code) {
    return {code.dimension, static_cast<std::int64_t>(code.length)};
}

BigInt free_sum_distance_upper_bound(const CodeFacts& p, const CodeFacts& q, int field_order) {
    const std::int64_t q1 = field_order - 1;
    const int m = p.ambient_dim;
    const int n = q.ambient_dim;
    const BigInt total = int_power(q1, m + n);
    const BigInt zeros_f = int_power(q1, m) - p.min_distance;
    const BigInt zeros_g = int_power(q1, n) - q.min_distance;
    const BigInt via_f = total - zeros_f * int_power(q1, n);
    const BigInt via_g = total - zeros_g * int_power(q1, m);
    return std::max(via_f, via_g);
}

}  // namespace posetcode
