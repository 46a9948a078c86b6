#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "realhur/partition.hpp"
#include "realhur/polysolve.hpp"
#include "realhur/rational.hpp"

namespace realhur {

/// Profile multisets (nontrivial, common degree, Riemann-Hurwitz, k < d) with
/// 2 <= d <= dmax and k <= kmax, each sorted descending, in canonical order.
std::vector<std::vector<Partition>> enumerate_specs(int dmax, int kmax);

struct ValueConfig {
    std::string label;
    std::vector<double> values;  // strictly increasing
};

/// (1..k), a seeded randomly spaced set and a spread-out negative set.
std::vector<ValueConfig> value_configs(int k, std::uint64_t seed);

struct PropertyResult {
    std::string name;
    bool pass = true;
    /// Informational properties are reported but do not decide the record.
    bool required = true;
    std::string detail;
};

enum class RecordStatus { pass, fail, failed_infra };

const char* to_string(RecordStatus s) noexcept;

struct VerifyRecord {
    std::string key;
    std::vector<Partition> profiles;
    int d = 0;
    Parity parity = Parity::even;
    std::uint64_t N = 0;
    Rational H{0};
    std::optional<int> s;
    std::optional<int> s_reversed;
    std::optional<Rational> hr;
    std::optional<std::size_t> real_count;
    int orderings = 0;
    int configurations = 0;
    std::vector<PropertyResult> properties;
    RecordStatus status = RecordStatus::pass;
    std::string error;
};

struct VerifyOptions {
    int dmax = 4;
    int kmax = 3;
    /// Negative control: corrupts the sign route of the theorem check.
    bool corrupt_sign = false;
    /// Spec jobs run in parallel when > 1 and no cache file is shared.
    unsigned workers = 1;
};

struct VerifySummary {
    std::size_t total = 0;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t infra = 0;
};

struct VerifyReport {
    VerifyOptions options;
    std::vector<VerifyRecord> records;  // sorted by key
    VerifySummary summary;

    bool pass() const noexcept { return summary.total > 0 && summary.passed == summary.total; }
};

VerifyRecord verify_spec(SolveSession& session, const std::vector<Partition>& profiles, const VerifyOptions& options);

VerifyReport run_verify(const SolverOptions& solver, const std::optional<std::filesystem::path>& cache,
                        const VerifyOptions& options);

}  // namespace realhur
