#include "specht/json_io.hpp"

#include <json.hpp>

#include <stdexcept>

namespace specht {

namespace {

using nlohmann::json;

json blocks_to_json(const std::map<Block, Int>& entries) {
    json arr = json::array();
    for (const auto& [b, c] : entries) {
        json pair = json::array();
        pair.push_back(b.elements());
        pair.push_back(c.str());
        arr.push_back(std::move(pair));
    }
    return arr;
}

Int int_from_string(const std::string& s) {
    try {
        if (!s.empty())
            return Int(s);
    } catch (const std::exception&) {
    }
    throw std::invalid_argument("expected a decimal integer string, got \"" + s + "\"");
}

std::map<Block, Int> blocks_from_json(const json& arr) {
    std::map<Block, Int> entries;
    for (const json& pair : arr) {
        if (!pair.is_array() || pair.size() != 2)
            throw std::invalid_argument("block entry must be [[elements], \"coeff\"]");
        const Block b(pair[0].get<std::vector<int>>());
        entries[b] = int_from_string(pair[1].get<std::string>());
    }
    return entries;
}

json parse(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded())
        throw std::invalid_argument("malformed JSON");
    return j;
}

// Missing keys and type mismatches surface as json exceptions; map them to
// the usage-error type the callers expect.
template <typename Fn>
auto guarded(Fn&& fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("bad JSON shape: ") + e.what());
    }
}

}  // namespace

std::string to_json(const BlockVector& c) {
    json j;
    j["v"] = c.ground().v();
    j["blocks"] = blocks_to_json(c.entries());
    return j.dump();
}

BlockVector block_vector_from_json(const std::string& text) {
    return guarded([&] {
        const json j = parse(text);
        const GroundSet ground(j.at("v").get<int>());
        return BlockVector(ground, blocks_from_json(j.at("blocks")));
    });
}

std::string design_to_json(const DesignParams& params, const BlockVector& c) {
    json j;
    j["v"] = params.v;
    j["l"] = params.l;
    j["t"] = params.t;
    json lambdas = json::array();
    for (const Int& l : params.lambdas)
        lambdas.push_back(l.str());
    j["lambdas"] = std::move(lambdas);
    j["blocks"] = blocks_to_json(c.entries());
    return j.dump();
}

std::pair<DesignParams, BlockVector> design_from_json(const std::string& text) {
    return guarded([&]() -> std::pair<DesignParams, BlockVector> {
        const json j = parse(text);
        std::vector<Int> lambdas;
        for (const json& l : j.at("lambdas"))
            lambdas.push_back(int_from_string(l.get<std::string>()));
        DesignParams params(j.at("v").get<int>(), j.at("l").get<int>(), j.at("t").get<int>(),
                            std::move(lambdas));
        BlockVector c(GroundSet(params.v), blocks_from_json(j.at("blocks")));
        return {std::move(params), std::move(c)};
    });
}

std::string to_json(const TabloidVector& u) {
    json j;
    j["parts"] = u.shape().parts();
    json entries = json::array();
    for (const auto& [t, c] : u.entries()) {
        json rows = json::array();
        for (const Block& row : t.rows)
            rows.push_back(row.elements());
        json pair = json::array();
        pair.push_back(std::move(rows));
        pair.push_back(c.str());
        entries.push_back(std::move(pair));
    }
    j["entries"] = std::move(entries);
    return j.dump();
}

TabloidVector tabloid_vector_from_json(const std::string& text) {
    return guarded([&] {
        const json j = parse(text);
        const Composition shape(j.at("parts").get<std::vector<int64_t>>());
        std::map<Tabloid, Int> entries;
        for (const json& pair : j.at("entries")) {
            if (!pair.is_array() || pair.size() != 2)
                throw std::invalid_argument("tabloid entry must be [[rows...], \"coeff\"]");
            Tabloid t;
            for (const json& row : pair[0])
                t.rows.emplace_back(row.get<std::vector<int>>());
            entries[t] = int_from_string(pair[1].get<std::string>());
        }
        return TabloidVector(shape, std::move(entries));
    });
}

std::string to_json(const HemmerReport& report) {
    json j;
    json entries = json::array();
    for (const auto& e : report.entries) {
        json je;
        je["i"] = e.i;
        je["v"] = e.v;
        je["is_multiple_of_f"] = e.is_multiple_of_f;
        if (e.is_multiple_of_f)
            je["scalar"] = e.scalar;
        else
            je["scalar"] = nullptr;
        entries.push_back(std::move(je));
    }
    j["entries"] = std::move(entries);
    j["condition_i"] = report.condition_i;
    j["condition_ii"] = report.condition_ii;
    j["verdict"] = report.verdict;
    return j.dump();
}

std::string witness_to_json(const Composition& lambda, const PrimeP& p, const std::string& family,
                            const TabloidVector& u, const std::vector<Int>& scalars,
                            const HemmerReport& report) {
    json j;
    j["lambda"] = lambda.parts();
    j["p"] = p.value();
    j["family"] = family;
    j["u"] = json::parse(to_json(u));
    json sc = json::array();
    for (const Int& s : scalars)
        sc.push_back(s.str());
    j["scalars"] = std::move(sc);
    j["report"] = json::parse(to_json(report));
    return j.dump();
}

}  // namespace specht
