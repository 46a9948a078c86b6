#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "realhur/partition.hpp"
#include "realhur/permutation.hpp"
#include "realhur/rational.hpp"

namespace realhur {

/// N = #{(s_1..s_k) : type(s_i) = lambda_i, s_1 * ... * s_k = base cycle}; H = N / d.
struct HurwitzCount {
    int d = 0;
    std::uint64_t N = 0;
    Rational H{0};
    std::uint64_t visited = 0;
};

struct CountOptions {
    /// Cap on visited tuple prefixes; BudgetExceeded past it.
    std::uint64_t max_visits = 2'000'000'000ULL;
    unsigned workers = 1;
    /// Sort factors by ascending class size before the search.
    bool reorder_for_pruning = true;
    /// Defaults to (1 2 ... d).
    std::optional<Perm> base_cycle;
};

/// Counts factorizations of a fixed d-cycle with the given cycle types.
/// Throws ValidationError when the profiles break the Riemann-Hurwitz constraint.
HurwitzCount count_factorizations(std::span<const Partition> profiles, const CountOptions& options = {});

}  // namespace realhur
