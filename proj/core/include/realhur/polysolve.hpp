#pragma once

#include <complex>
#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "realhur/branch_spec.hpp"
#include "realhur/factorizations.hpp"
#include "realhur/real_polynomial.hpp"

namespace realhur {

template <class T>
using ComplexVector = Eigen::Matrix<std::complex<T>, Eigen::Dynamic, 1>;
template <class T>
using ComplexMatrix = Eigen::Matrix<std::complex<T>, Eigen::Dynamic, Eigen::Dynamic>;

struct Tolerances {
    double residual = 1e-10;  // max |equation| accepted after polishing
    double dedup = 1e-6;      // relative, coefficient space
    double realness = 1e-8;   // relative max |Im a_j|
    double cluster = 1e-5;    // relative separation of distinct preimages
};

struct SolverOptions {
    Tolerances tol;
    std::uint64_t budget = 20000;  // multistart Newton starts
    int max_newton_iterations = 200;
    double step_tol = 1e-13;
    std::uint64_t seed = 20240611;
    unsigned workers = 1;
    std::size_t batch_size = 64;
    bool harvest_symmetries = true;
    bool extended_polish = true;
    /// Converged-but-clustered points tolerated before an incomplete run is
    /// reported as DegenerateConfiguration instead of IncompleteEnumeration.
    std::uint64_t degenerate_threshold = 50;
    CountOptions count;
};

/// One complex unknown: a preimage of branch value `branch` with ramification `order`.
struct Unknown {
    int branch = 0;
    int order = 0;
};

/// Square polynomial system in the preimage roots rho_{i,j}:
///   prod_j (z - rho_{i,j})^{lambda_{i,j}} + w_i  is one common polynomial for all i,
///   and its z^(d-1) coefficient vanishes.
/// Row 0 is the normalisation; rows 1 + (i-1) d + (d-1-c) compare coefficient c of
/// branch i with branch 0.
class SystemSpec {
public:
    explicit SystemSpec(BranchSpec spec);

    const BranchSpec& spec() const noexcept { return spec_; }
    int size() const noexcept { return static_cast<int>(unknowns_.size()); }
    int equations() const noexcept { return equations_; }
    std::span<const Unknown> unknowns() const noexcept { return unknowns_; }
    /// Index of the first unknown of a branch; unknowns of a branch are contiguous
    /// and ordered by non-increasing ramification order.
    int first_unknown(int branch) const { return first_[static_cast<std::size_t>(branch)]; }

    /// Residual F(x) and, when `jacobian` is non-null, the analytic dF/dx.
    template <class T>
    void evaluate(const ComplexVector<T>& x, ComplexVector<T>& residual, std::type_identity_t<ComplexMatrix<T>>* jacobian) const;

    /// Ascending coefficients of prod_j (z - rho_{i,j})^{lambda_{i,j}} + w_i.
    template <class T>
    std::vector<std::complex<T>> branch_polynomial(const ComplexVector<T>& x, int branch) const;

private:
    BranchSpec spec_;
    std::vector<Unknown> unknowns_;
    std::vector<int> first_;
    int equations_ = 0;
};

extern template void SystemSpec::evaluate<double>(const ComplexVector<double>&, ComplexVector<double>&,
                                                  ComplexMatrix<double>*) const;
extern template void SystemSpec::evaluate<long double>(const ComplexVector<long double>&,
                                                       ComplexVector<long double>&,
                                                       ComplexMatrix<long double>*) const;
extern template std::vector<std::complex<double>> SystemSpec::branch_polynomial<double>(
    const ComplexVector<double>&, int) const;
extern template std::vector<std::complex<long double>> SystemSpec::branch_polynomial<long double>(
    const ComplexVector<long double>&, int) const;

SystemSpec build_system(const BranchSpec& spec);

std::pair<Eigen::VectorXcd, Eigen::MatrixXcd> residual_and_jacobian(const SystemSpec& system,
                                                                      const Eigen::VectorXcd& point);

struct RootGroup {
    std::complex<double> root;
    int order = 0;
};

struct Solution {
    std::vector<std::complex<double>> coefficients;  // a_2, ..., a_d
    std::vector<std::vector<RootGroup>> roots;        // per branch, order desc then (re, im)
    double residual = 0;

    /// Roots flattened in SystemSpec unknown order.
    Eigen::VectorXcd point() const;
};

struct Certificate {
    bool complete = false;
    std::uint64_t found = 0;
    std::uint64_t target = 0;
};

struct SolveStats {
    std::uint64_t starts = 0;
    std::uint64_t converged = 0;
    std::uint64_t rejected_residual = 0;
    std::uint64_t rejected_profile = 0;
    std::uint64_t harvested = 0;
    bool from_cache = false;
};

struct SolutionSet {
    BranchSpec spec;
    std::vector<Solution> solutions;
    std::uint64_t target = 0;
    Certificate certificate;
    SolveStats stats;

    /// Throws IncompleteEnumeration unless the certificate is complete.
    void expect_complete() const;
};

/// Multistart damped Newton until all N = count_factorizations(spec) normalized
/// polynomials are found or the start budget runs out.
SolutionSet solve_all(const BranchSpec& spec, const SolverOptions& options);
SolutionSet solve_all(const BranchSpec& spec, const SolverOptions& options, std::uint64_t target);

/// Real members of a complete solution set, re-polished in real coordinates.
std::vector<RealPolynomial> classify_real(const SolutionSet& set, const SolverOptions& options);

/// Canonical solution order: lexicographic in the coefficients (re, im).
void sort_solutions(std::vector<Solution>& solutions);

/// max_j |a_j - b_j| <= tol * (1 + max_j |a_j|).
bool same_coefficients(std::span<const std::complex<double>> a, std::span<const std::complex<double>> b,
                       double tol) noexcept;

/// Closure of the set under complex conjugation of all coefficients.
bool conjugation_closed(const SolutionSet& set, double dedup_tol);
/// Closure under P(z) -> P(zeta z) for zeta a primitive d-th root of unity.
bool roots_of_unity_closed(const SolutionSet& set, double dedup_tol);
std::size_t count_real(const SolutionSet& set, double realness_tol);

class SolutionCache;

/// Memoising front end to the solver, optionally backed by an on-disk cache.
class SolveSession {
public:
    explicit SolveSession(SolverOptions options, std::optional<std::filesystem::path> cache_path = std::nullopt);
    ~SolveSession();
    SolveSession(const SolveSession&) = delete;
    SolveSession& operator=(const SolveSession&) = delete;

    const SolverOptions& options() const noexcept { return options_; }

    const SolutionSet& solve(const BranchSpec& spec);
    /// Real polynomials of a complete set; throws IncompleteEnumeration otherwise.
    const std::vector<RealPolynomial>& real_polynomials(const BranchSpec& spec);

private:
    SolverOptions options_;
    std::unique_ptr<SolutionCache> cache_;
    std::map<std::string, SolutionSet> sets_;
    std::map<std::string, std::vector<RealPolynomial>> reals_;
};

}  // namespace realhur
