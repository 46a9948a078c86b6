#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "realhur/polysolve.hpp"

namespace realhur {

enum class OutputFormat { json, csv, text };

const char* to_string(OutputFormat f) noexcept;
OutputFormat parse_format(const std::string& text);

/// Environment variable naming a JSON file with default run settings.
inline constexpr const char* kConfigEnv = "REALHUR_CONFIG";

struct RunConfig {
    SolverOptions solver;
    std::optional<std::filesystem::path> cache;
    OutputFormat format = OutputFormat::json;
    int verbosity = 0;
    /// Largest degree any command will attempt.
    int max_degree = 6;

    /// Throws ValidationError on non-positive tolerances or budgets.
    void validate() const;
};

/// Fields missing from the JSON keep their defaults; unknown keys are rejected.
RunConfig config_from_json(const nlohmann::json& j);
RunConfig load_config(const std::filesystem::path& path);
/// Defaults, overlaid with the file named by REALHUR_CONFIG when it is set.
RunConfig default_config();

nlohmann::ordered_json to_json(const RunConfig& config);

}  // namespace realhur
