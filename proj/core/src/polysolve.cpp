#include "realhur/polysolve.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numbers>
#include <random>
#include <thread>

#include "newton.hpp"
#include "realhur/errors.hpp"
#include "solution_cache.hpp"

namespace realhur {

// ---------------------------------------------------------------- system

SystemSpec::SystemSpec(BranchSpec spec) : spec_(std::move(spec)) {
    const auto& profiles = spec_.profiles();
    for (std::size_t i = 0; i < profiles.size(); ++i) {
        first_.push_back(static_cast<int>(unknowns_.size()));
        for (int part : profiles[i].parts()) unknowns_.push_back({static_cast<int>(i), part});
    }
    const int d = spec_.degree();
    equations_ = 1 + (spec_.size() - 1) * d;
}

namespace {

template <class T>
void multiply_linear(std::vector<std::complex<T>>& poly, std::complex<T> root) {
    poly.push_back(std::complex<T>(0));
    for (std::size_t j = poly.size() - 1; j > 0; --j) poly[j] = poly[j - 1] - root * poly[j];
    poly[0] = -root * poly[0];
}

}  // namespace

template <class T>
std::vector<std::complex<T>> SystemSpec::branch_polynomial(const ComplexVector<T>& x, int branch) const {
    std::vector<std::complex<T>> poly{std::complex<T>(1)};
    const int begin = first_unknown(branch);
    const int end = begin + spec_.profiles()[static_cast<std::size_t>(branch)].length();
    for (int u = begin; u < end; ++u) {
        for (int r = 0; r < unknowns_[static_cast<std::size_t>(u)].order; ++r) multiply_linear(poly, x[u]);
    }
    poly[0] += std::complex<T>(static_cast<T>(spec_.values()[static_cast<std::size_t>(branch)]));
    return poly;
}

template <class T>
void SystemSpec::evaluate(const ComplexVector<T>& x, ComplexVector<T>& residual, std::type_identity_t<ComplexMatrix<T>>* jacobian) const {
    using C = std::complex<T>;
    const int d = spec_.degree();
    const int k = spec_.size();
    const int n = size();

    std::vector<std::vector<C>> polys(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) polys[static_cast<std::size_t>(i)] = branch_polynomial(x, i);

    auto row = [d](int branch, int c) { return 1 + (branch - 1) * d + (d - 1 - c); };

    residual.resize(equations_);
    residual[0] = polys[0][static_cast<std::size_t>(d - 1)];
    for (int i = 1; i < k; ++i) {
        for (int c = 0; c < d; ++c) {
            residual[row(i, c)] = polys[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] -
                                  polys[0][static_cast<std::size_t>(c)];
        }
    }
    if (!jacobian) return;

    jacobian->setZero(equations_, n);
    std::vector<C> g;
    for (int u = 0; u < n; ++u) {
        const auto& unk = unknowns_[static_cast<std::size_t>(u)];
        const int begin = first_unknown(unk.branch);
        const int end = begin + spec_.profiles()[static_cast<std::size_t>(unk.branch)].length();
        // d/d rho_u of prod (z - rho)^order = -order * (z - rho_u)^(order-1) * prod_{v != u} (z - rho_v)^order_v
        g.assign(1, C(1));
        for (int v = begin; v < end; ++v) {
            const int times = unknowns_[static_cast<std::size_t>(v)].order - (v == u ? 1 : 0);
            for (int r = 0; r < times; ++r) multiply_linear(g, x[v]);
        }
        const C factor(static_cast<T>(-unk.order));
        if (unk.branch == 0) {
            (*jacobian)(0, u) = factor * g[static_cast<std::size_t>(d - 1)];
            for (int i = 1; i < k; ++i) {
                for (int c = 0; c < d; ++c) (*jacobian)(row(i, c), u) = -factor * g[static_cast<std::size_t>(c)];
            }
        } else {
            for (int c = 0; c < d; ++c) (*jacobian)(row(unk.branch, c), u) = factor * g[static_cast<std::size_t>(c)];
        }
    }
}

template void SystemSpec::evaluate<double>(const ComplexVector<double>&, ComplexVector<double>&,
                                           ComplexMatrix<double>*) const;
template void SystemSpec::evaluate<long double>(const ComplexVector<long double>&, ComplexVector<long double>&,
                                                ComplexMatrix<long double>*) const;
template std::vector<std::complex<double>> SystemSpec::branch_polynomial<double>(const ComplexVector<double>&,
                                                                                 int) const;
template std::vector<std::complex<long double>> SystemSpec::branch_polynomial<long double>(
    const ComplexVector<long double>&, int) const;

SystemSpec build_system(const BranchSpec& spec) { return SystemSpec(spec); }

std::pair<Eigen::VectorXcd, Eigen::MatrixXcd> residual_and_jacobian(const SystemSpec& system,
                                                                      const Eigen::VectorXcd& point) {
    if (point.size() != system.size()) throw ValidationError("point dimension does not match the system");
    Eigen::VectorXcd f;
    Eigen::MatrixXcd j;
    system.evaluate(point, f, &j);
    return {std::move(f), std::move(j)};
}

// ---------------------------------------------------------------- solutions

Eigen::VectorXcd Solution::point() const {
    std::size_t n = 0;
    for (const auto& branch : roots) n += branch.size();
    Eigen::VectorXcd x(static_cast<Eigen::Index>(n));
    Eigen::Index u = 0;
    for (const auto& branch : roots) {
        for (const auto& g : branch) x[u++] = g.root;
    }
    return x;
}

void SolutionSet::expect_complete() const {
    if (!certificate.complete) throw IncompleteEnumeration(certificate.found, certificate.target);
}

bool same_coefficients(std::span<const std::complex<double>> a, std::span<const std::complex<double>> b,
                       double tol) noexcept {
    if (a.size() != b.size()) return false;
    double scale = 1;
    for (const auto& c : a) scale = std::max(scale, 1 + std::abs(c));
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (std::abs(a[j] - b[j]) > tol * scale) return false;
    }
    return true;
}

namespace {

bool contains(const std::vector<Solution>& solutions, std::span<const std::complex<double>> coefficients,
              double tol) {
    return std::any_of(solutions.begin(), solutions.end(),
                       [&](const Solution& s) { return same_coefficients(s.coefficients, coefficients, tol); });
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

enum class Verdict { accepted, diverged, residual, profile };

struct Candidate {
    Verdict verdict = Verdict::diverged;
    Solution solution;
};

class Enumerator {
public:
    Enumerator(const BranchSpec& spec, const SolverOptions& options)
        : system_(spec), options_(options), d_(spec.degree()) {
        double wmax = 0;
        for (double w : spec.values()) wmax = std::max(wmax, std::abs(w));
        start_scale_ = std::pow(1 + wmax, 1.0 / d_);
    }

    ComplexVector<double> start(std::uint64_t index) const {
        std::mt19937_64 rng(splitmix64(options_.seed ^ splitmix64(index)));
        std::normal_distribution<double> normal(0.0, start_scale_ / std::numbers::sqrt2);
        ComplexVector<double> x(system_.size());
        for (Eigen::Index u = 0; u < x.size(); ++u) {
            const double re = normal(rng);
            const double im = normal(rng);
            x[u] = {re, im};
        }
        return x;
    }

    Candidate refine(ComplexVector<double> x, int max_iterations) const {
        Candidate out;
        auto coarse = detail::newton<double>(system_, std::move(x), max_iterations, options_.step_tol,
                                             options_.tol.residual);
        if (!coarse.converged) return out;
        ComplexVector<double> root = coarse.x;
        if (options_.extended_polish) {
            ComplexVector<long double> xl = root.cast<std::complex<long double>>();
            auto fine = detail::newton<long double>(system_, xl, 4, 1e-17L, static_cast<long double>(options_.tol.residual));
            if (detail::finite(fine.x)) {
                ComplexVector<double> candidate = fine.x.template cast<std::complex<double>>();
                if (residual_of(candidate) <= residual_of(root)) root = candidate;
            }
        }
        const double residual = residual_of(root);
        if (!(residual <= options_.tol.residual)) {
            out.verdict = Verdict::residual;
            return out;
        }
        if (!profile_exact(root)) {
            out.verdict = Verdict::profile;
            return out;
        }
        out.verdict = Verdict::accepted;
        out.solution = make_solution(root, residual);
        return out;
    }

    const SystemSpec& system() const noexcept { return system_; }

    /// Residual evaluated in extended precision at the double-precision point.
    double residual_of(const ComplexVector<double>& x) const {
        ComplexVector<long double> xl = x.cast<std::complex<long double>>();
        ComplexVector<long double> f;
        system_.evaluate(xl, f, nullptr);
        return static_cast<double>(detail::max_abs(f));
    }

private:
    bool profile_exact(const ComplexVector<double>& x) const {
        for (int i = 0; i < system_.spec().size(); ++i) {
            const int begin = system_.first_unknown(i);
            const int end = begin + system_.spec().profiles()[static_cast<std::size_t>(i)].length();
            double scale = 1;
            for (int u = begin; u < end; ++u) scale = std::max(scale, 1 + std::abs(x[u]));
            for (int u = begin; u < end; ++u) {
                for (int v = u + 1; v < end; ++v) {
                    if (std::abs(x[u] - x[v]) <= options_.tol.cluster * scale) return false;
                }
            }
        }
        return true;
    }

    Solution make_solution(const ComplexVector<double>& x, double residual) const {
        Solution s;
        s.residual = residual;
        const int k = system_.spec().size();
        ComplexVector<long double> xl = x.cast<std::complex<long double>>();
        std::vector<std::complex<long double>> sum(static_cast<std::size_t>(d_ + 1));
        for (int i = 0; i < k; ++i) {
            auto poly = system_.branch_polynomial(xl, i);
            for (int c = 0; c <= d_; ++c) sum[static_cast<std::size_t>(c)] += poly[static_cast<std::size_t>(c)];
        }
        for (int j = 2; j <= d_; ++j) {
            auto c = sum[static_cast<std::size_t>(d_ - j)] / static_cast<long double>(k);
            s.coefficients.emplace_back(static_cast<double>(c.real()), static_cast<double>(c.imag()));
        }
        for (int i = 0; i < k; ++i) {
            const int begin = system_.first_unknown(i);
            const int end = begin + system_.spec().profiles()[static_cast<std::size_t>(i)].length();
            std::vector<RootGroup> groups;
            for (int u = begin; u < end; ++u) groups.push_back({x[u], system_.unknowns()[static_cast<std::size_t>(u)].order});
            std::sort(groups.begin(), groups.end(), [](const RootGroup& a, const RootGroup& b) {
                if (a.order != b.order) return a.order > b.order;
                if (a.root.real() != b.root.real()) return a.root.real() < b.root.real();
                return a.root.imag() < b.root.imag();
            });
            s.roots.push_back(std::move(groups));
        }
        return s;
    }

    SystemSpec system_;
    const SolverOptions& options_;
    int d_;
    double start_scale_ = 1;
};

template <class F>
void parallel_for(std::size_t count, unsigned workers, F&& body) {
    workers = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(count)));
    if (workers == 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::vector<std::jthread> threads;
    for (unsigned w = 0; w < workers; ++w) {
        threads.emplace_back([&, w] {
            for (std::size_t i = w; i < count; i += workers) body(i);
        });
    }
}

// Deterministic order: lexicographic on rounded coefficients, exact values as tie-break.
bool solution_less(const Solution& a, const Solution& b) {
    auto key = [](double v) { return std::llround(v * 1e8); };
    for (std::size_t j = 0; j < a.coefficients.size(); ++j) {
        const auto& x = a.coefficients[j];
        const auto& y = b.coefficients[j];
        if (key(x.real()) != key(y.real())) return key(x.real()) < key(y.real());
        if (key(x.imag()) != key(y.imag())) return key(x.imag()) < key(y.imag());
    }
    for (std::size_t j = 0; j < a.coefficients.size(); ++j) {
        const auto& x = a.coefficients[j];
        const auto& y = b.coefficients[j];
        if (x.real() != y.real()) return x.real() < y.real();
        if (x.imag() != y.imag()) return x.imag() < y.imag();
    }
    return false;
}

std::vector<std::complex<double>> rotated(std::span<const std::complex<double>> a, int d, int s) {
    // P(zeta z) with zeta = exp(2 pi i s / d) maps a_j to a_j zeta^(-j).
    std::vector<std::complex<double>> out(a.size());
    for (std::size_t idx = 0; idx < a.size(); ++idx) {
        const int j = static_cast<int>(idx) + 2;
        const double angle = -2 * std::numbers::pi * s * j / d;
        out[idx] = a[idx] * std::polar(1.0, angle);
    }
    return out;
}

}  // namespace

void sort_solutions(std::vector<Solution>& solutions) { std::sort(solutions.begin(), solutions.end(), solution_less); }

SolutionSet solve_all(const BranchSpec& spec, const SolverOptions& options) {
    const auto count = count_factorizations(spec.profiles(), options.count);
    return solve_all(spec, options, count.N);
}

SolutionSet solve_all(const BranchSpec& spec, const SolverOptions& options, std::uint64_t target) {
    Enumerator enumerator(spec, options);
    SolutionSet set{spec, {}, target, {}, {}};
    auto& found = set.solutions;
    auto& stats = set.stats;
    const int d = spec.degree();
    const double dedup = options.tol.dedup;

    std::deque<std::size_t> pending;
    auto offer = [&](Candidate&& c) {
        if (c.verdict == Verdict::residual) ++stats.rejected_residual;
        if (c.verdict == Verdict::profile) ++stats.rejected_profile;
        if (c.verdict != Verdict::accepted) return false;
        if (contains(found, c.solution.coefficients, dedup)) return false;
        found.push_back(std::move(c.solution));
        if (found.size() > target) throw OvercountDetected(found.size(), target);
        pending.push_back(found.size() - 1);
        return true;
    };

    // Orbit mates under conjugation and z -> zeta z are exact solutions; polish and offer them.
    auto harvest = [&] {
        while (!pending.empty() && found.size() < target) {
            const auto x = found[pending.front()].point();
            pending.pop_front();
            std::vector<ComplexVector<double>> mates;
            mates.push_back(x.conjugate());
            for (int s = 1; s < d; ++s) mates.push_back(x * std::polar(1.0, -2 * std::numbers::pi * s / d));
            for (auto& m : mates) {
                if (found.size() >= target) break;
                if (offer(enumerator.refine(std::move(m), 20))) ++stats.harvested;
            }
        }
        pending.clear();
    };

    std::vector<Candidate> batch;
    std::uint64_t next = 0;
    while (found.size() < target && next < options.budget) {
        const std::size_t size = static_cast<std::size_t>(std::min<std::uint64_t>(options.batch_size, options.budget - next));
        batch.assign(size, Candidate{});
        parallel_for(size, options.workers, [&](std::size_t j) {
            batch[j] = enumerator.refine(enumerator.start(next + j), options.max_newton_iterations);
        });
        for (std::size_t j = 0; j < size && found.size() < target; ++j) {
            ++stats.starts;
            if (batch[j].verdict != Verdict::diverged) ++stats.converged;
            offer(std::move(batch[j]));
            if (options.harvest_symmetries) harvest();
            pending.clear();
        }
        next += size;
    }

    // A full set must be closed under the symmetries; a valid mate outside it means N was exceeded.
    if (found.size() == target && options.harvest_symmetries) {
        const std::size_t n = found.size();
        for (std::size_t i = 0; i < n; ++i) {
            const auto x = found[i].point();
            std::vector<ComplexVector<double>> mates{x.conjugate()};
            for (int s = 1; s < d; ++s) mates.push_back(x * std::polar(1.0, -2 * std::numbers::pi * s / d));
            for (auto& m : mates) {
                auto c = enumerator.refine(std::move(m), 20);
                if (c.verdict == Verdict::accepted && !contains(found, c.solution.coefficients, dedup)) {
                    throw OvercountDetected(found.size() + 1, target);
                }
            }
        }
    }

    sort_solutions(found);
    set.certificate = {found.size() == target, found.size(), target};
    if (!set.certificate.complete && stats.rejected_profile >= options.degenerate_threshold) {
        throw DegenerateConfiguration("spec " + spec.key() + ": " + std::to_string(stats.rejected_profile) +
                                      " converged points violate profile exactness; found " +
                                      std::to_string(found.size()) + " of " + std::to_string(target));
    }
    return set;
}

bool conjugation_closed(const SolutionSet& set, double dedup_tol) {
    for (const auto& s : set.solutions) {
        std::vector<std::complex<double>> c(s.coefficients.size());
        std::transform(s.coefficients.begin(), s.coefficients.end(), c.begin(),
                       [](auto v) { return std::conj(v); });
        if (!contains(set.solutions, c, dedup_tol)) return false;
    }
    return true;
}

bool roots_of_unity_closed(const SolutionSet& set, double dedup_tol) {
    const int d = set.spec.degree();
    for (const auto& s : set.solutions) {
        for (int r = 1; r < d; ++r) {
            if (!contains(set.solutions, rotated(s.coefficients, d, r), dedup_tol)) return false;
        }
    }
    return true;
}

std::size_t count_real(const SolutionSet& set, double realness_tol) {
    std::size_t n = 0;
    for (const auto& s : set.solutions) {
        double scale = 1, imag = 0;
        for (const auto& c : s.coefficients) {
            scale = std::max(scale, 1 + std::abs(c));
            imag = std::max(imag, std::abs(c.imag()));
        }
        if (imag <= realness_tol * scale) ++n;
    }
    return n;
}

// ---------------------------------------------------------------- session

SolveSession::SolveSession(SolverOptions options, std::optional<std::filesystem::path> cache_path)
    : options_(std::move(options)) {
    if (cache_path) cache_ = std::make_unique<SolutionCache>(*cache_path);
}

SolveSession::~SolveSession() = default;

const SolutionSet& SolveSession::solve(const BranchSpec& spec) {
    const auto key = spec.key();
    if (auto it = sets_.find(key); it != sets_.end()) return it->second;

    const auto target = count_factorizations(spec.profiles(), options_.count).N;
    if (cache_) {
        if (auto cached = cache_->lookup(spec, target, options_)) {
            return sets_.emplace(key, std::move(*cached)).first->second;
        }
    }
    auto set = solve_all(spec, options_, target);
    if (cache_ && set.certificate.complete) cache_->store(set);
    return sets_.emplace(key, std::move(set)).first->second;
}

const std::vector<RealPolynomial>& SolveSession::real_polynomials(const BranchSpec& spec) {
    const auto key = spec.key();
    if (auto it = reals_.find(key); it != reals_.end()) return it->second;
    const auto& set = solve(spec);
    set.expect_complete();
    return reals_.emplace(key, classify_real(set, options_)).first->second;
}

}  // namespace realhur
