#include "posetcode/predictor.hpp"

#include <algorithm>
#include <functional>

#include "posetcode/errors.hpp"

namespace posetcode {

namespace {

void check_field(int q) {
    if (q < 3 || !is_prime_power(q)) {
        throw InvalidInputError("predictions need a prime power q >= 3, got " + std::to_string(q));
    }
}

std::string power_term(const std::string& base, int e) {
    if (e == 0) return "";
    if (e == 1) return base;
    return base + "^" + std::to_string(e);
}

std::string formula_text(int a, int b) {
    std::string s = power_term("(q-1)", a);
    const std::string t = power_term("(q-2)", b);
    if (!s.empty() && !t.empty()) s += " ";
    s += t;
    return s.empty() ? "1" : s;
}

Prediction base_prediction(const Poset& p, int q) {
    Prediction out;
    out.q = q;
    out.size = p.size();
    out.length = int_power(q - 1, p.size());
    out.dimension = count_upper_ideals(p);
    return out;
}

struct Partial {
    BigInt distance;
    std::optional<std::pair<int, int>> exponents;
    bool used_exact = false;
    bool used_bipartite = false;
};

Partial reduce(const Poset& p, int q, const PredictOptions& options, int depth,
               std::vector<std::string>& cert) {
    const std::string indent(2 * static_cast<std::size_t>(depth), ' ');
    auto note = [&](const std::string& s) { cert.push_back(indent + s); };

    const auto comps = connected_components(p);
    if (comps.size() > 1) {
        const bool antichain = std::all_of(comps.begin(), comps.end(),
                                           [](const Component& c) { return c.poset.size() == 1; });
        const int r = static_cast<int>(comps.size());
        if (antichain) {
            note("cube " + formula_text(0, r) + " = " + distance_formula(q, 0, r).str() + " (antichain A_" +
                 std::to_string(r) + ")");
            return {distance_formula(q, 0, r), std::pair{0, r}};
        }
        note("components: " + std::to_string(r) + " (product)");
        Partial out{1, std::pair{0, 0}};
        for (const auto& c : comps) {
            auto part = reduce(c.poset, q, options, depth + 1, cert);
            out.distance *= part.distance;
            if (out.exponents && part.exponents) {
                out.exponents->first += part.exponents->first;
                out.exponents->second += part.exponents->second;
            } else {
                out.exponents.reset();
            }
            out.used_exact = out.used_exact || part.used_exact;
            out.used_bipartite = out.used_bipartite || part.used_bipartite;
        }
        return out;
    }

    if (p.size() == 1) {
        note("element: (q-2) = " + std::to_string(q - 2));
        return {BigInt(q - 2), std::pair{0, 1}};
    }

    if (p.minimal_elements().size() == 1) {
        const auto step = peel_minimum(p);
        note("pyramid ×" + std::to_string(q - 1) + " (remove minimum " + std::to_string(step.removed) +
             ", factor q-1)");
        auto part = reduce(step.rest, q, options, depth + 1, cert);
        part.distance *= (q - 1);
        if (part.exponents) ++part.exponents->first;
        return part;
    }

    const auto bc = classify_bipartite(p);
    if (bc.is_mm_bipartite && bc.has_perfect_matching && q >= 4) {
        note("(" + std::to_string(bc.m) + "," + std::to_string(bc.m) +
             ")-bipartite: O_{A+A} <= O_P <= O_{H_m}: " + formula_text(bc.m, bc.m) + " = " +
             distance_formula(q, bc.m, bc.m).str());
        Partial out{distance_formula(q, bc.m, bc.m), std::pair{bc.m, bc.m}};
        out.used_bipartite = true;
        return out;
    }

    const auto field = make_field(q);
    auto code = build_code(order_polytope(p), field);
    const auto result = min_distance_exact(code, options.search);
    std::string why = "no reduction applies";
    if (bc.is_mm_bipartite && !bc.has_perfect_matching) why = "bipartite without perfect matching";
    else if (bc.is_mm_bipartite) why = "bipartite theorem needs q > 3";
    note("exact search (" + why + ", " + to_string(p) + "): d = " + std::to_string(result.distance));
    Partial out{BigInt(result.distance), std::nullopt};
    out.used_exact = true;
    return out;
}

}  // namespace

std::string to_string(PredictionMethod method) {
    switch (method) {
        case PredictionMethod::tree_theorem: return "tree-theorem";
        case PredictionMethod::bipartite_theorem: return "bipartite-theorem";
        case PredictionMethod::reduction: return "reduction";
        case PredictionMethod::exact_fallback: return "exact-fallback";
    }
    return "unknown";
}

BigInt distance_formula(int q, int a, int b) { return int_power(q - 1, a) * int_power(q - 2, b); }

Prediction predict_tree(const Poset& p, int q) {
    check_field(q);
    if (!is_rooted_tree_poset(p)) throw NotTreeError("poset is not a rooted tree");
    Prediction out = base_prediction(p, q);
    out.method = PredictionMethod::tree_theorem;
    out.unverified_hypothesis = q <= 3;

    int a = 0;
    int b = 0;
    if (p.size() == 1) {
        b = 1;
        out.certificate.push_back("single element: segment code (q-2)");
    } else {
        const auto sb = shrubbery(p);
        std::string shrubs = "shrubbery:";
        for (const auto& s : sb.shrubs) {
            shrubs += " S_" + std::to_string(s.size()) + "(root " + std::to_string(s.root) + ")";
            b += s.size() - 1;
        }
        out.certificate.push_back(shrubs);
        out.certificate.push_back("removed vertices j = " + std::to_string(sb.removed_count));
        a = p.size() - b;
        out.certificate.push_back("pyramids x(q-1)^" + std::to_string(sb.removed_count) +
                                  ", shrubs prod (q-1)(q-2)^(m_i-1)");
    }
    const int leaves = static_cast<int>(p.maximal_elements().size());
    if (b != leaves || a != p.size() - leaves) {
        throw std::logic_error("shrubbery exponents disagree with the leaf count");
    }
    out.exponents = std::pair{a, b};
    out.min_distance = distance_formula(q, a, b);
    out.certificate.push_back("d = " + formula_text(a, b) + " = " + out.min_distance->str());
    if (out.unverified_hypothesis) out.certificate.push_back("UNVERIFIED-HYPOTHESIS: q <= 3");
    return out;
}

BipartiteClass classify_bipartite(const Poset& p) {
    BipartiteClass out;
    if (p.size() % 2 != 0) return out;
    const auto grading = rank_function(p);
    const auto minima = p.minimal_elements();
    const auto maxima = p.maximal_elements();
    const int m = p.size() / 2;
    if (!grading || grading->length != 1) return out;
    if (static_cast<int>(minima.size()) != m || static_cast<int>(maxima.size()) != m) return out;
    out.is_mm_bipartite = true;
    out.m = m;

    // Augmenting paths from each minimum to a maximum above it.
    std::vector<int> owner(p.size() + 1, 0);
    std::function<bool(int, std::vector<bool>&)> augment = [&](int x, std::vector<bool>& seen) {
        for (int y : p.upper_covers(x)) {
            if (seen[y]) continue;
            seen[y] = true;
            if (owner[y] == 0 || augment(owner[y], seen)) {
                owner[y] = x;
                return true;
            }
        }
        return false;
    };
    int matched = 0;
    for (int x : minima) {
        std::vector<bool> seen(p.size() + 1, false);
        if (augment(x, seen)) ++matched;
    }
    out.has_perfect_matching = matched == m;
    return out;
}

Prediction predict_bipartite(const Poset& p, int q) {
    check_field(q);
    const auto bc = classify_bipartite(p);
    if (!bc.is_mm_bipartite) throw NotBipartiteError("poset is not (m,m)-bipartite");
    if (!bc.has_perfect_matching) {
        throw MatchingWarning("minima cannot be matched to maxima above them; the sandwich "
                              "O_P <= O_{H_m} is unavailable");
    }
    Prediction out = base_prediction(p, q);
    out.method = PredictionMethod::bipartite_theorem;
    out.unverified_hypothesis = q <= 3;
    out.exponents = std::pair{bc.m, bc.m};
    out.min_distance = distance_formula(q, bc.m, bc.m);
    out.certificate.push_back("(" + std::to_string(bc.m) + "," + std::to_string(bc.m) +
                              ")-bipartite with perfect matching");
    out.certificate.push_back("sandwich O_{A_m+A_m} <= O_P <= O_{H_m}, both ends " +
                              formula_text(bc.m, bc.m));
    out.certificate.push_back("d = " + formula_text(bc.m, bc.m) + " = " + out.min_distance->str());
    if (out.unverified_hypothesis) out.certificate.push_back("UNVERIFIED-HYPOTHESIS: q <= 3");
    return out;
}

PeelStep peel_minimum(const Poset& p) {
    const auto minima = p.minimal_elements();
    if (minima.size() != 1 || !is_connected(p)) {
        throw NoUniqueMinimumError("poset has " + std::to_string(minima.size()) +
                                   " minimal elements");
    }
    if (p.size() == 1) throw InvalidInputError("cannot peel the only element of a poset");
    std::vector<int> rest;
    for (int i = 1; i <= p.size(); ++i)
        if (i != minima.front()) rest.push_back(i);
    return {induced_subposet(p, rest), minima.front()};
}

Prediction predict_components(const Poset& p, int q, const PredictOptions& options) {
    check_field(q);
    Prediction out = base_prediction(p, q);
    const auto comps = connected_components(p);
    out.certificate.push_back("components: " + std::to_string(comps.size()) + " (product)");
    BigInt d = 1;
    std::optional<std::pair<int, int>> exps = std::pair{0, 0};
    bool exact = false;
    for (const auto& c : comps) {
        auto part = predict_auto(c.poset, q, options);
        d *= *part.min_distance;
        if (exps && part.exponents) {
            exps->first += part.exponents->first;
            exps->second += part.exponents->second;
        } else {
            exps.reset();
        }
        exact = exact || part.method == PredictionMethod::exact_fallback;
        for (const auto& line : part.certificate) out.certificate.push_back("  " + line);
    }
    out.min_distance = d;
    out.exponents = exps;
    out.method = exact ? PredictionMethod::exact_fallback : PredictionMethod::reduction;
    return out;
}

Prediction predict_auto(const Poset& p, int q, const PredictOptions& options) {
    check_field(q);
    Prediction out = base_prediction(p, q);
    auto r = reduce(p, q, options, 0, out.certificate);
    out.min_distance = r.distance;
    out.exponents = r.exponents;
    if (r.used_exact) {
        out.method = PredictionMethod::exact_fallback;
    } else if (r.used_bipartite && is_connected(p) && classify_bipartite(p).is_mm_bipartite) {
        out.method = PredictionMethod::bipartite_theorem;
    } else {
        out.method = PredictionMethod::reduction;
    }
    return out;
}

std::pair<BigInt, BigInt> dimension_bounds(DimensionKind kind, int m) {
    if (m < 1) throw InvalidInputError("dimension bounds need m >= 1");
    if (kind == DimensionKind::tree) return {BigInt(m + 1), int_power(2, m - 1) + 1};
    return {int_power(2, m + 1) - 1, int_power(3, m)};
}

}  // namespace posetcode
