// Exhaustive minimum-distance search over projective message classes.
//
// A class is represented by the message whose first nonzero coefficient is 1.
// Messages sharing a leading position are walked with a modular q-ary Gray
// code, so each step adds a single precomputed multiple of one generator row
// to the running codeword.

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstdio>
#include <limits>
#include <thread>

#include "posetcode/errors.hpp"
#include "posetcode/toric_code.hpp"

namespace posetcode {

namespace {

// Characteristic 2: element bits are stored in separate bit planes, so field
// addition is XOR and a position is nonzero when any plane has its bit set.
// A nonzero FixedWords pins the word count so short codes fully unroll.
template <int Planes, std::size_t FixedWords = 0>
struct BitPlaneOps {
    using Word = std::uint64_t;
    std::size_t dynamic_words;

    std::size_t words() const { return FixedWords ? FixedWords : dynamic_words; }
    std::size_t stride() const { return Planes * words(); }

    void load(Word* dst, std::span<const FieldElement> row) const {
        const std::size_t w = words();
        std::fill(dst, dst + stride(), Word{0});
        for (std::size_t t = 0; t < row.size(); ++t)
            for (int b = 0; b < Planes; ++b)
                if ((row[t] >> b) & 1U) dst[b * w + t / 64] |= Word{1} << (t % 64);
    }

    void add(Word* __restrict acc, const Word* __restrict src) const {
        for (std::size_t i = 0; i < stride(); ++i) acc[i] ^= src[i];
    }

    std::uint64_t weight(const Word* acc) const {
        const std::size_t w = words();
        std::uint64_t total = 0;
        for (std::size_t i = 0; i < w; ++i) {
            Word any = acc[i];
            for (int b = 1; b < Planes; ++b) any |= acc[b * w + i];
            total += static_cast<std::uint64_t>(std::popcount(any));
        }
        return total;
    }

    // add() followed by weight() in a single pass.
    std::uint64_t add_weight(Word* __restrict acc, const Word* __restrict src) const {
        const std::size_t w = words();
        std::uint64_t total = 0;
        for (std::size_t i = 0; i < w; ++i) {
            Word any = 0;
            for (int b = 0; b < Planes; ++b) {
                acc[b * w + i] ^= src[b * w + i];
                any |= acc[b * w + i];
            }
            total += static_cast<std::uint64_t>(std::popcount(any));
        }
        return total;
    }
};

// Odd prime field: lanes hold residues and addition is a conditional
// subtraction, which vectorizes.
template <typename Lane>
struct PrimeLaneOps {
    using Word = Lane;
    std::size_t lanes;
    Lane p;

    std::size_t stride() const { return lanes; }

    void load(Word* dst, std::span<const FieldElement> row) const {
        std::fill(dst, dst + lanes, Lane{0});
        for (std::size_t t = 0; t < row.size(); ++t) dst[t] = static_cast<Lane>(row[t]);
    }

    void add(Word* __restrict acc, const Word* __restrict src) const {
        for (std::size_t i = 0; i < lanes; ++i) {
            const Lane s = static_cast<Lane>(acc[i] + src[i]);
            acc[i] = s >= p ? static_cast<Lane>(s - p) : s;
        }
    }

    std::uint64_t weight(const Word* acc) const {
        std::uint64_t w = 0;
        for (std::size_t i = 0; i < lanes; ++i) w += acc[i] != 0;
        return w;
    }

    std::uint64_t add_weight(Word* __restrict acc, const Word* __restrict src) const {
        add(acc, src);
        return weight(acc);
    }
};

// Odd prime power: addition by table lookup.
struct TableLaneOps {
    using Word = FieldElement;
    std::size_t lanes;
    const GaloisField* field;

    std::size_t stride() const { return lanes; }

    void load(Word* dst, std::span<const FieldElement> row) const {
        std::fill(dst, dst + lanes, Word{0});
        std::copy(row.begin(), row.end(), dst);
    }

    void add(Word* __restrict acc, const Word* __restrict src) const {
        for (std::size_t i = 0; i < lanes; ++i) acc[i] = field->add(acc[i], src[i]);
    }

    std::uint64_t weight(const Word* acc) const {
        std::uint64_t w = 0;
        for (std::size_t i = 0; i < lanes; ++i) w += acc[i] != 0;
        return w;
    }

    std::uint64_t add_weight(Word* __restrict acc, const Word* __restrict src) const {
        add(acc, src);
        return weight(acc);
    }
};

struct WorkUnit {
    int lead = 0;                // position of the leading 1
    std::uint64_t high = 0;      // counter value for the fixed positions
    int fixed = 0;               // number of fixed positions after the lead
    int gray = 0;                // number of Gray-walked trailing positions
};

struct UnitResult {
    std::uint64_t weight = std::numeric_limits<std::uint64_t>::max();
    std::vector<FieldElement> message;
};

bool better(std::uint64_t w, const std::vector<FieldElement>& msg, const UnitResult& r) {
    return w < r.weight || (w == r.weight && msg < r.message);
}

template <typename Ops>
MinDistanceResult run_search(const Ops& ops, const std::vector<std::vector<FieldElement>>& rows,
                             const GaloisField& field, int workers) {
    using Word = typename Ops::Word;
    const int k = static_cast<int>(rows.size());
    const int q = field.order();
    const std::size_t stride = ops.stride();

    // scaled[(i * q + e) * stride ...] holds e * row_i.
    std::vector<Word> scaled(static_cast<std::size_t>(k) * q * stride);
    std::vector<FieldElement> tmp(rows.front().size());
    for (int i = 0; i < k; ++i)
        for (int e = 0; e < q; ++e) {
            for (std::size_t t = 0; t < tmp.size(); ++t)
                tmp[t] = field.mul(static_cast<FieldElement>(e), rows[i][t]);
            ops.load(&scaled[(static_cast<std::size_t>(i) * q + e) * stride], tmp);
        }
    auto row_multiple = [&](int i, FieldElement e) {
        return &scaled[(static_cast<std::size_t>(i) * q + e) * stride];
    };
    // Stepping a Gray digit from element a to a + 1 (as encodings) adds
    // (a + 1) - a times the row.
    std::vector<FieldElement> step_delta(q);
    for (int a = 0; a < q; ++a)
        step_delta[a] = field.sub(static_cast<FieldElement>((a + 1) % q), static_cast<FieldElement>(a));

    // Gray-walked block size: at most about 2^20 messages per unit.
    int max_gray = 0;
    for (double size = q; size <= (1 << 20) && max_gray < k; size *= q) ++max_gray;
    max_gray = std::max(max_gray, 1);

    std::vector<WorkUnit> units;
    std::uint64_t classes = 0;
    for (int lead = 0; lead < k; ++lead) {
        const int free = k - 1 - lead;
        const int gray = std::min(free, max_gray);
        const int fixed = free - gray;
        std::uint64_t highs = 1;
        for (int i = 0; i < fixed; ++i) highs *= static_cast<std::uint64_t>(q);
        std::uint64_t block = 1;
        for (int i = 0; i < gray; ++i) block *= static_cast<std::uint64_t>(q);
        for (std::uint64_t h = 0; h < highs; ++h) units.push_back({lead, h, fixed, gray});
        classes += highs * block;
    }

    std::vector<UnitResult> results(units.size());
    std::atomic<std::uint64_t> global_best{std::numeric_limits<std::uint64_t>::max()};
    std::atomic<std::size_t> next{0};

    // inner[g] steps digit 0 (the last row) from encoding g to g + 1.
    std::vector<const Word*> inner(q);
    for (int g = 0; g < q; ++g) inner[g] = row_multiple(k - 1, step_delta[g]);

    auto work = [&]() {
        std::vector<Word> acc(stride);
        std::vector<int> counter;
        std::vector<FieldElement> gray_digit;
        std::vector<FieldElement> message(k);
        for (std::size_t u = next.fetch_add(1); u < units.size(); u = next.fetch_add(1)) {
            const WorkUnit& unit = units[u];
            UnitResult& result = results[u];
            std::fill(acc.begin(), acc.end(), Word{0});
            std::fill(message.begin(), message.end(), FieldElement{0});
            message[unit.lead] = 1;
            ops.add(acc.data(), row_multiple(unit.lead, 1));
            std::uint64_t h = unit.high;
            // Fixed positions lead+1 .. lead+fixed, least significant digit last.
            for (int i = unit.fixed; i >= 1; --i) {
                const auto e = static_cast<FieldElement>(h % static_cast<std::uint64_t>(q));
                h /= static_cast<std::uint64_t>(q);
                message[unit.lead + i] = e;
                if (e != 0) ops.add(acc.data(), row_multiple(unit.lead + i, e));
            }
            // Gray digit j drives position k - 1 - j. Digit 0 is stepped in an
            // unrolled inner loop; the carry logic only runs once per q messages.
            counter.assign(unit.gray, 0);
            gray_digit.assign(unit.gray, 0);
            auto consider = [&](std::uint64_t w) {
                for (int j = 0; j < unit.gray; ++j) message[k - 1 - j] = gray_digit[j];
                if (better(w, message, result)) {
                    result.weight = w;
                    result.message = message;
                    std::uint64_t seen = global_best.load(std::memory_order_relaxed);
                    while (w < seen && !global_best.compare_exchange_weak(seen, w)) {
                    }
                }
            };
            auto bound = [&] { return std::min(result.weight, global_best.load(std::memory_order_relaxed)); };
            std::uint64_t limit = bound();
            std::uint64_t w = ops.weight(acc.data());
            if (w <= limit) {
                consider(w);
                limit = bound();
            }
            if (unit.gray == 0) continue;
            while (true) {
                FieldElement g0 = gray_digit[0];
                for (int step = 1; step < q; ++step) {
                    w = ops.add_weight(acc.data(), inner[g0]);
                    g0 = static_cast<FieldElement>(g0 + 1 == q ? 0 : g0 + 1);
                    if (w <= limit) [[unlikely]] {
                        gray_digit[0] = g0;
                        consider(w);
                        limit = bound();
                    }
                }
                gray_digit[0] = g0;
                int j = 1;
                while (j < unit.gray && counter[j] == q - 1) {
                    counter[j] = 0;
                    ++j;
                }
                if (j >= unit.gray) break;
                ++counter[j];
                const FieldElement g = gray_digit[j];
                w = ops.add_weight(acc.data(), row_multiple(k - 1 - j, step_delta[g]));
                gray_digit[j] = static_cast<FieldElement>(g + 1 == q ? 0 : g + 1);
                limit = bound();
                if (w <= limit) {
                    consider(w);
                    limit = bound();
                }
            }
        }
    };

    const int threads = std::max(1, std::min<int>(workers, static_cast<int>(units.size())));
    if (threads == 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(work);
    }

    UnitResult best;
    for (auto& r : results)
        if (!r.message.empty() && better(r.weight, r.message, best)) best = std::move(r);
    return {best.weight, std::move(best.message), classes};
}

template <int Planes, std::size_t Words>
MinDistanceResult search_fixed_words(std::size_t words, const std::vector<std::vector<FieldElement>>& rows,
                                     const GaloisField& field, int workers) {
    if constexpr (Words == 0) {
        return run_search(BitPlaneOps<Planes>{words}, rows, field, workers);
    } else {
        if (words == Words) return run_search(BitPlaneOps<Planes, Words>{Words}, rows, field, workers);
        return search_fixed_words<Planes, Words - 1>(words, rows, field, workers);
    }
}

template <int Planes>
MinDistanceResult search_bitplanes(const std::vector<std::vector<FieldElement>>& rows,
                                   const GaloisField& field, int workers) {
    const std::size_t words = (rows.front().size() + 63) / 64;
    if constexpr (Planes <= 3) {
        if (words <= 8) return search_fixed_words<Planes, 8>(words, rows, field, workers);
    }
    return run_search(BitPlaneOps<Planes>{words}, rows, field, workers);
}

MinDistanceResult dispatch(const std::vector<std::vector<FieldElement>>& rows, const GaloisField& field,
                           int workers) {
    const std::size_t n = rows.front().size();
    if (field.characteristic() == 2) {
        switch (field.degree()) {
            case 1: return search_bitplanes<1>(rows, field, workers);
            case 2: return search_bitplanes<2>(rows, field, workers);
            case 3: return search_bitplanes<3>(rows, field, workers);
            case 4: return search_bitplanes<4>(rows, field, workers);
            case 5: return search_bitplanes<5>(rows, field, workers);
            case 6: return search_bitplanes<6>(rows, field, workers);
            case 7: return search_bitplanes<7>(rows, field, workers);
            case 8: return search_bitplanes<8>(rows, field, workers);
            case 9: return search_bitplanes<9>(rows, field, workers);
            default: break;
        }
    }
    const std::size_t lanes = (n + 63) / 64 * 64;
    if (field.degree() == 1) {
        if (field.order() <= 127) {
            PrimeLaneOps<std::uint8_t> ops{lanes, static_cast<std::uint8_t>(field.order())};
            return run_search(ops, rows, field, workers);
        }
        PrimeLaneOps<std::uint16_t> ops{lanes, static_cast<std::uint16_t>(field.order())};
        return run_search(ops, rows, field, workers);
    }
    TableLaneOps ops{lanes, &field};
    return run_search(ops, rows, field, workers);
}

}  // namespace

MinDistanceResult min_distance_exact(const ToricCode& code, const SearchOptions& options) {
    const auto chosen = independent_rows(code.generator, code.field);
    if (chosen.empty()) throw InvalidInputError("code has dimension zero");
    const double cost = search_cost(code);
    if (cost > options.max_cost) {
        char msg[128];
        std::snprintf(msg, sizeof msg, "exhaustive search needs about %.3g symbol operations, limit is %.3g", cost,
                      options.max_cost);
        throw SearchTooLargeError(msg, cost);
    }
    std::vector<std::vector<FieldElement>> rows;
    for (int r : chosen) rows.push_back(code.generator[r]);
    auto found = dispatch(rows, code.field, std::max(1, options.workers));

    MinDistanceResult out;
    out.distance = found.distance;
    out.classes = found.classes;
    out.witness.assign(code.generator.size(), 0);
    for (std::size_t i = 0; i < chosen.size(); ++i) out.witness[chosen[i]] = found.witness[i];
    return out;
}

}  // namespace posetcode
