#include "realhur/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>
#include <thread>

#include "realhur/branch_spec.hpp"
#include "realhur/coverings.hpp"
#include "realhur/errors.hpp"
#include "realhur/factorizations.hpp"
#include "realhur/real_signs.hpp"

namespace realhur {

namespace {

void multisets(const std::vector<Partition>& pool, std::size_t from, int k, std::vector<Partition>& current,
               const std::function<void(const std::vector<Partition>&)>& emit) {
    if (static_cast<int>(current.size()) == k) {
        emit(current);
        return;
    }
    for (std::size_t i = from; i < pool.size(); ++i) {
        current.push_back(pool[i]);
        multisets(pool, i, k, current, emit);
        current.pop_back();
    }
}

bool close_real(std::span<const double> a, std::span<const double> b, double tol) {
    if (a.size() != b.size()) return false;
    double scale = 0, diff = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        scale = std::max(scale, std::abs(a[i]));
        diff = std::max(diff, std::abs(a[i] - b[i]));
    }
    return diff <= tol * (1 + scale);
}

const RealPolynomial* find_partner(std::span<const RealPolynomial> polys, const RealPolynomial& p, double tol) {
    std::vector<double> mirrored = p.coefficients;
    // d even: a_j picks up (-1)^j, and mirrored[i] is a_(i+2).
    for (std::size_t i = 1; i < mirrored.size(); i += 2) mirrored[i] = -mirrored[i];
    for (const auto& q : polys) {
        if (close_real(q.coefficients, mirrored, tol)) return &q;
    }
    return nullptr;
}

class Recorder {
public:
    explicit Recorder(VerifyRecord& r) : r_(r) {}

    void check(std::string name, bool pass, std::string detail = {}, bool required = true) {
        r_.properties.push_back({std::move(name), pass, required, pass ? std::string{} : std::move(detail)});
    }

private:
    VerifyRecord& r_;
};

std::string describe(std::span<const Partition> profiles, std::span<const double> values) {
    std::ostringstream os;
    os << format_profile_list(profiles) << " @";
    for (std::size_t i = 0; i < values.size(); ++i) os << (i ? "," : "") << values[i];
    return os.str();
}

// Parity properties over one side's real polynomials (d even).
void parity_laws(Recorder& rec, const std::string& side, const BranchSpec& spec,
                 std::span<const RealPolynomial> polys, double tol) {
    const int fs_sign = floor_sum_parity(spec.profiles()) == Parity::odd ? -1 : 1;
    bool orbit = true, reflection = true, branch = true;
    std::string orbit_detail, reflection_detail, branch_detail;
    for (const auto& p : polys) {
        const auto* q = find_partner(polys, p, tol);
        if (!q) {
            orbit = reflection = false;
            orbit_detail = reflection_detail = "mirror partner missing";
            continue;
        }
        if (p.sign != fs_sign * q->sign) {
            orbit = false;
            orbit_detail = "sign(P) != (-1)^floor_sum * sign(P(-z))";
        }
        if (q->t != p.ord) {
            reflection = false;
            reflection_detail = "t(P(-z)) = " + std::to_string(q->t) + ", ord(P) = " + std::to_string(p.ord);
        }
        for (int i = 0; i < spec.size(); ++i) {
            const auto idx = static_cast<std::size_t>(i);
            const int lhs = (p.disorders_per_branch[idx] + p.ordered_pairs_per_branch[idx]) % 2;
            if (lhs != (o_count(spec.profiles()[idx]) / 2) % 2) {
                branch = false;
                branch_detail = "branch " + std::to_string(i);
            }
        }
    }
    rec.check("orbit_sign_law" + side, orbit, orbit_detail);
    rec.check("reflection_identity" + side, reflection, reflection_detail);
    rec.check("per_branch_parity" + side, branch, branch_detail);
}

// Distinct orderings of a profile multiset.
std::vector<std::vector<Partition>> orderings(std::vector<Partition> profiles) {
    std::sort(profiles.begin(), profiles.end());
    std::vector<std::vector<Partition>> out;
    do {
        out.push_back(profiles);
    } while (std::next_permutation(profiles.begin(), profiles.end()));
    return out;
}

void run_record(SolveSession& session, const std::vector<Partition>& profiles, const VerifyOptions& options,
                VerifyRecord& r) {
    Recorder rec(r);
    const auto& tol = session.options().tol;
    const auto base = BranchSpec::with_default_values(profiles);
    const int d = base.degree();

    CountOptions count = session.options().count;
    const auto hc = count_factorizations(profiles, count);
    r.N = hc.N;
    r.H = hc.H;

    const auto& set = session.solve(base);
    rec.check("certificate", set.certificate.complete && set.certificate.found == hc.N,
              "found " + std::to_string(set.certificate.found) + " of " + std::to_string(hc.N));
    set.expect_complete();
    const bool residuals = std::all_of(set.solutions.begin(), set.solutions.end(),
                                       [&](const Solution& s) { return s.residual < tol.residual; });
    rec.check("residuals", residuals, "residual above tolerance");
    rec.check("conjugation_closure", conjugation_closed(set, tol.dedup));
    rec.check("root_of_unity_closure", roots_of_unity_closed(set, tol.dedup));
    r.real_count = count_real(set, tol.realness);
    rec.check("real_count_parity", *r.real_count % 2 == hc.N % 2,
              std::to_string(*r.real_count) + " real of " + std::to_string(hc.N));

    const auto report = theorem_check(session, base, {options.corrupt_sign});
    r.s = report.s;
    r.s_reversed = report.s_reversed;
    r.hr = report.hr;
    std::string why;
    for (const auto& f : report.failures) why += (why.empty() ? "" : "; ") + f;
    rec.check("theorem_equality", report.equality, why);
    rec.check("integrality", report.hr_integral, why);
    if (report.half_sum) rec.check("half_sum", *report.half_sum, why);
    if (report.hr_forced) rec.check("short_circuit_agrees", *report.hr_forced == Rational(0), why);
    if (!report.pass && report.equality && report.hr_integral && report.half_sum.value_or(true)) {
        rec.check("theorem_check", false, why);
    }

    const int s_true = s_number(session, base).s;
    if (d % 2 == 0) {
        parity_laws(rec, "", base, session.real_polynomials(base), tol.dedup);
        parity_laws(rec, "_reversed", base.reversed(), session.real_polynomials(base.reversed()), tol.dedup);
        if (r.parity == Parity::odd) {
            rec.check("vanishing", s_true == 0 && report.hr == Rational(0),
                      "s = " + std::to_string(s_true) + ", H^R = " + to_string(report.hr));
        }
    } else {
        // Measured only: the parity lemma is stated for even degree.
        bool branch = true;
        for (const auto& p : session.real_polynomials(base)) {
            for (int i = 0; i < base.size(); ++i) {
                const auto idx = static_cast<std::size_t>(i);
                const int lhs = (p.disorders_per_branch[idx] + p.ordered_pairs_per_branch[idx]) % 2;
                branch = branch && lhs == (o_count(base.profiles()[idx]) / 2) % 2;
            }
        }
        rec.check("per_branch_parity", branch, "holds only for even degree in general", false);
    }

    const auto perms = orderings(profiles);
    const auto configs = value_configs(base.size(), session.options().seed);
    r.orderings = static_cast<int>(perms.size());
    r.configurations = static_cast<int>(configs.size());
    std::string order_detail, position_detail;
    for (std::size_t c = 0; c < configs.size(); ++c) {
        for (const auto& perm : perms) {
            const auto spec = BranchSpec::validate(perm, configs[c].values);
            const int s = s_number(session, spec).s;
            const auto hr = real_hurwitz(session, spec).value;
            if (s == s_true && hr == Rational(s_true)) continue;
            auto& detail = c == 0 ? order_detail : position_detail;
            if (detail.empty()) {
                detail = describe(perm, configs[c].values) + ": s = " + std::to_string(s) + ", H^R = " + to_string(hr);
            }
        }
    }
    rec.check("order_invariance", order_detail.empty(), order_detail);
    rec.check("position_invariance", position_detail.empty(), position_detail);
}

}  // namespace

std::vector<std::vector<Partition>> enumerate_specs(int dmax, int kmax) {
    std::vector<std::vector<Partition>> out;
    for (int d = 2; d <= dmax; ++d) {
        std::vector<Partition> pool;
        for (auto& p : partitions_of(d)) {
            if (!p.is_trivial()) pool.push_back(std::move(p));
        }
        for (int k = 1; k <= std::min(kmax, d - 1); ++k) {
            std::vector<Partition> current;
            multisets(pool, 0, k, current, [&](const std::vector<Partition>& m) {
                if (satisfies_riemann_hurwitz(m)) out.push_back(m);
            });
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return format_profile_list(a) < format_profile_list(b);
    });
    return out;
}

std::vector<ValueConfig> value_configs(int k, std::uint64_t seed) {
    std::vector<ValueConfig> out;
    ValueConfig unit{"unit", {}};
    for (int i = 1; i <= k; ++i) unit.values.push_back(i);
    out.push_back(std::move(unit));

    std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(k)));
    std::uniform_real_distribution<double> start(-3.0, 3.0), gap(0.5, 2.5);
    ValueConfig spaced{"random-spaced", {start(rng)}};
    for (int i = 1; i < k; ++i) spaced.values.push_back(spaced.values.back() + gap(rng));
    out.push_back(std::move(spaced));

    ValueConfig negative{"negative", {}};
    for (int i = k; i >= 1; --i) negative.values.push_back(-3.0 * i);
    out.push_back(std::move(negative));
    return out;
}

const char* to_string(RecordStatus s) noexcept {
    switch (s) {
        case RecordStatus::pass: return "PASS";
        case RecordStatus::fail: return "FAIL";
        case RecordStatus::failed_infra: return "FAILED-INFRA";
    }
    return "FAIL";
}

VerifyRecord verify_spec(SolveSession& session, const std::vector<Partition>& profiles, const VerifyOptions& options) {
    VerifyRecord r;
    r.profiles = profiles;
    r.key = format_profile_list(profiles);
    r.d = profiles.empty() ? 0 : profiles.front().degree();
    r.parity = floor_sum_parity(profiles);
    try {
        run_record(session, profiles, options, r);
    } catch (const IncompleteEnumeration& e) {
        r.status = RecordStatus::failed_infra;
        r.error = e.what();
    } catch (const BudgetExceeded& e) {
        r.status = RecordStatus::failed_infra;
        r.error = e.what();
    } catch (const DegenerateConfiguration& e) {
        r.status = RecordStatus::failed_infra;
        r.error = e.what();
    } catch (const ScaleExceeded& e) {
        r.status = RecordStatus::failed_infra;
        r.error = e.what();
    } catch (const Error& e) {
        r.status = RecordStatus::fail;
        r.error = e.what();
    }
    if (r.status == RecordStatus::pass) {
        const bool ok = std::all_of(r.properties.begin(), r.properties.end(),
                                    [](const PropertyResult& p) { return p.pass || !p.required; });
        if (!ok) r.status = RecordStatus::fail;
    }
    return r;
}

VerifyReport run_verify(const SolverOptions& solver, const std::optional<std::filesystem::path>& cache,
                        const VerifyOptions& options) {
    if (options.dmax < 2) throw ValidationError("dmax must be at least 2");
    if (options.kmax < 1) throw ValidationError("kmax must be at least 1");
    VerifyReport report;
    report.options = options;
    const auto specs = enumerate_specs(options.dmax, options.kmax);
    report.records.resize(specs.size());

    if (options.workers > 1 && !cache) {
        // Independent sessions per spec job; the solver itself is worker-count invariant.
        SolverOptions single = solver;
        single.workers = 1;
        single.count.workers = 1;
        std::atomic<std::size_t> next{0};
        {
            std::vector<std::jthread> pool;
            for (unsigned w = 0; w < options.workers; ++w) {
                pool.emplace_back([&] {
                    for (std::size_t i; (i = next.fetch_add(1)) < specs.size();) {
                        SolveSession session(single);
                        report.records[i] = verify_spec(session, specs[i], options);
                    }
                });
            }
        }
    } else {
        SolveSession session(solver, cache);
        for (std::size_t i = 0; i < specs.size(); ++i) report.records[i] = verify_spec(session, specs[i], options);
    }

    std::sort(report.records.begin(), report.records.end(),
              [](const VerifyRecord& a, const VerifyRecord& b) { return a.key < b.key; });
    for (const auto& r : report.records) {
        ++report.summary.total;
        switch (r.status) {
            case RecordStatus::pass: ++report.summary.passed; break;
            case RecordStatus::fail: ++report.summary.failed; break;
            case RecordStatus::failed_infra: ++report.summary.infra; break;
        }
    }
    return report;
}

}  // namespace realhur
