#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "realhur/partition.hpp"
#include "realhur/polysolve.hpp"

namespace realhur {

struct SeriesOptions {
    /// Largest degree d = |lambda| + m attempted.
    int max_degree = 6;
    /// Run the class computation even where parity forces h = 0.
    bool force_full = false;
};

/// h_lambda(m): real polynomial Hurwitz number of lambda u (1^m) with
/// l(lambda) + m - 1 simple profiles (2, 1^(d-2)), at branch values 1, 2, ...
struct HValue {
    int m = 0;
    int d = 0;
    std::int64_t value = 0;
    bool odd_degree = false;
    bool short_circuit = false;
    /// d = 1: the identity covering, h = 1 by convention.
    bool convention = false;
    std::string spec;
};

HValue h_value(SolveSession& session, const Partition& lambda, int m, const SeriesOptions& options = {});

struct SeriesTable {
    Partition lambda;
    int requested = 0;
    std::vector<HValue> entries;  // m = 0, 1, ... contiguous
    bool truncated = false;
    std::string truncation_reason;
};

/// Entries m = 0..M; stops at the first infeasible m and marks the table truncated.
SeriesTable series_table(SolveSession& session, const Partition& lambda, int max_m, const SeriesOptions& options = {});

/// Least-squares fit of the parity part of sum h(m) q^m / m! against
/// {q^a tanh(q)^b : a + b <= D} (even) or sech(q) * {q^a tanh(q)^b} (odd),
/// matched on exponential-generating coefficients m = 0..M.
struct BasisFit {
    Parity parity = Parity::even;
    int degree_bound = 0;
    std::vector<std::string> basis;
    std::vector<double> coefficients;
    double residual = 0;
    int data_points = 0;
    bool underdetermined = false;
};

BasisFit basis_fit(const SeriesTable& table, Parity parity, int degree_bound);

/// m! [q^m] of tanh(q) and sech(q), m = 0..order.
std::vector<std::int64_t> tanh_egf(int order);
std::vector<std::int64_t> sech_egf(int order);

}  // namespace realhur
