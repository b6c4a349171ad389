#include "posetcode/json_io.hpp"

#include "posetcode/errors.hpp"

namespace posetcode {

Poset poset_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("m") || !j.contains("covers")) {
        throw InvalidInputError("poset JSON needs fields \"m\" and \"covers\"");
    }
    if (!j["m"].is_number_integer()) throw InvalidInputError("\"m\" must be an integer");
    const auto m = j["m"].get<std::int64_t>();
    if (m < 1 || m > max_poset_size) {
        throw InvalidInputError("\"m\" must lie in 1.." + std::to_string(max_poset_size));
    }
    if (!j["covers"].is_array()) throw InvalidInputError("\"covers\" must be an array");
    std::vector<Cover> covers;
    for (const auto& c : j["covers"]) {
        if (!c.is_array() || c.size() != 2 || !c[0].is_number_integer() ||
            !c[1].is_number_integer()) {
            throw InvalidInputError("each cover must be a pair of integers");
        }
        covers.emplace_back(c[0].get<int>(), c[1].get<int>());
    }
    return Poset(static_cast<int>(m), std::move(covers));
}

Json to_json(const Poset& p) {
    Json covers = Json::array();
    for (const auto& [i, j] : p.covers()) covers.push_back({i, j});
    return {{"m", p.size()}, {"covers", covers}};
}

Json to_json(const Ideal& ideal) { return ideal.members(); }

Json to_json(const LatticePolytope& a) {
    Json out;
    out["dim"] = a.ambient_dim();
    out["vertices"] = a.vertices();
    if (a.halfspaces()) {
        Json hs = Json::array();
        for (const auto& h : *a.halfspaces()) hs.push_back({{"normal", h.normal}, {"offset", to_string(h.offset)}});
        out["halfspaces"] = hs;
    }
    return out;
}

Json to_json(const BigInt& value) {
    if (value >= 0 && value <= std::numeric_limits<std::uint64_t>::max()) {
        return static_cast<std::uint64_t>(value);
    }
    return value.str();
}

Json to_json(const Prediction& prediction) {
    Json out;
    out["q"] = prediction.q;
    out["m"] = prediction.size;
    out["n"] = to_json(prediction.length);
    out["k"] = prediction.dimension;
    out["d"] = prediction.min_distance ? to_json(*prediction.min_distance) : Json();
    if (prediction.exponents) {
        out["exponents"] = {{"q-1", prediction.exponents->first}, {"q-2", prediction.exponents->second}};
    }
    out["method"] = to_string(prediction.method);
    out["unverified_hypothesis"] = prediction.unverified_hypothesis;
    out["certificate"] = prediction.certificate;
    return out;
}

Json code_report(const ToricCode& code, std::optional<double> seconds) {
    Json out;
    out["q"] = code.field.order();
    out["modulus"] = code.field.modulus_string();
    out["n"] = code.length;
    out["k"] = code.dimension;
    out["d"] = code.min_distance ? Json(*code.min_distance) : Json();
    out["method"] = code.min_distance ? "exact" : "none";
    if (code.min_distance) {
        Json witness = Json::array();
        for (std::size_t i = 0; i < code.exponents.size(); ++i) {
            if (code.witness[i] != 0) witness.push_back({{"exponent", code.exponents[i]}, {"coefficient", code.witness[i]}});
        }
        out["witness"] = witness;
    } else {
        out["witness"] = Json();
    }
    const auto rate = transmission_rate(code);
    out["rate"] = std::to_string(rate.numerator()) + "/" + std::to_string(rate.denominator());
    if (seconds) out["seconds"] = *seconds;
    return out;
}

}  // namespace posetcode
