#include "realhur/config.hpp"

#include <cstdlib>
#include <fstream>

#include "realhur/errors.hpp"

namespace realhur {

const char* to_string(OutputFormat f) noexcept {
    switch (f) {
        case OutputFormat::json: return "json";
        case OutputFormat::csv: return "csv";
        case OutputFormat::text: return "text";
    }
    return "json";
}

OutputFormat parse_format(const std::string& text) {
    if (text == "json") return OutputFormat::json;
    if (text == "csv") return OutputFormat::csv;
    if (text == "text") return OutputFormat::text;
    throw ValidationError("unknown output format '" + text + "'");
}

void RunConfig::validate() const {
    const auto& t = solver.tol;
    if (!(t.residual > 0) || !(t.dedup > 0) || !(t.realness > 0) || !(t.cluster > 0)) {
        throw ValidationError("tolerances must be positive");
    }
    if (solver.budget == 0) throw ValidationError("newton budget must be positive");
    if (solver.count.max_visits == 0) throw ValidationError("enumeration budget must be positive");
    if (solver.workers == 0) throw ValidationError("workers must be positive");
    if (max_degree < 1) throw ValidationError("max_degree must be positive");
}

RunConfig config_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw ValidationError("config must be a JSON object");
    RunConfig c;
    try {
        for (const auto& [key, value] : j.items()) {
            if (key == "tolerances") {
                for (const auto& [tk, tv] : value.items()) {
                    if (tk == "residual") c.solver.tol.residual = tv.get<double>();
                    else if (tk == "dedup") c.solver.tol.dedup = tv.get<double>();
                    else if (tk == "realness") c.solver.tol.realness = tv.get<double>();
                    else if (tk == "cluster") c.solver.tol.cluster = tv.get<double>();
                    else throw ValidationError("unknown tolerance '" + tk + "'");
                }
            } else if (key == "newton_budget") {
                c.solver.budget = value.get<std::uint64_t>();
            } else if (key == "enumeration_budget") {
                c.solver.count.max_visits = value.get<std::uint64_t>();
            } else if (key == "seed") {
                c.solver.seed = value.get<std::uint64_t>();
            } else if (key == "workers") {
                c.solver.workers = value.get<unsigned>();
                c.solver.count.workers = c.solver.workers;
            } else if (key == "cache") {
                if (value.is_null()) c.cache.reset();
                else c.cache = value.get<std::string>();
            } else if (key == "format") {
                c.format = parse_format(value.get<std::string>());
            } else if (key == "verbosity") {
                c.verbosity = value.get<int>();
            } else if (key == "max_degree") {
                c.max_degree = value.get<int>();
            } else {
                throw ValidationError("unknown config key '" + key + "'");
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("bad config value: ") + e.what());
    }
    c.validate();
    return c;
}

RunConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open config " + path.string());
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError("config " + path.string() + ": " + e.what());
    }
    return config_from_json(j);
}

RunConfig default_config() {
    if (const char* env = std::getenv(kConfigEnv); env && *env) return load_config(env);
    return {};
}

nlohmann::ordered_json to_json(const RunConfig& c) {
    nlohmann::ordered_json j;
    j["seed"] = c.solver.seed;
    j["tolerances"] = {{"residual", c.solver.tol.residual},
                       {"dedup", c.solver.tol.dedup},
                       {"realness", c.solver.tol.realness},
                       {"cluster", c.solver.tol.cluster}};
    j["newton_budget"] = c.solver.budget;
    j["enumeration_budget"] = c.solver.count.max_visits;
    j["max_degree"] = c.max_degree;
    j["cache"] = c.cache ? nlohmann::ordered_json(c.cache->string()) : nlohmann::ordered_json(nullptr);
    return j;
}

}  // namespace realhur
