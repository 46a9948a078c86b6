#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "realhur/polysolve.hpp"

namespace realhur {

/// FNV-1a 64 of the canonical spec key, as 16 hex digits.
std::string spec_hash(const BranchSpec& spec);

/// Line-delimited JSON file, one record per solution:
/// {"hash", "spec", "coefficients": [[re, im], ...], "roots": [[[re, im, order], ...], ...], "residual"}
class SolutionCache {
public:
    explicit SolutionCache(std::filesystem::path path);

    /// A complete set rebuilt from the file when exactly `target` records exist
    /// for the spec and each still passes the residual tolerance.
    std::optional<SolutionSet> lookup(const BranchSpec& spec, std::uint64_t target, const SolverOptions& options) const;

    void store(const SolutionSet& set);

private:
    std::filesystem::path path_;
    std::vector<nlohmann::json> records_;
};

}  // namespace realhur
