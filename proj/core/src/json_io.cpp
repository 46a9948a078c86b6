#include "realhur/json_io.hpp"

#include <algorithm>
#include <cmath>

namespace realhur {

namespace {

ojson complex_pair(std::complex<double> z) { return ojson::array({z.real(), z.imag()}); }

ojson rational(const Rational& r) { return to_string(r); }

}  // namespace

ojson to_json(const BranchSpec& spec) {
    ojson j;
    j["profiles"] = format_profile_list(spec.profiles());
    j["values"] = spec.values();
    j["degree"] = spec.degree();
    return j;
}

ojson to_json(const HurwitzCount& c) {
    ojson j;
    j["d"] = c.d;
    j["N"] = c.N;
    j["H"] = rational(c.H);
    j["visited"] = c.visited;
    return j;
}

ojson to_json(const SolutionSet& set, double realness_tol) {
    ojson j;
    j["spec"] = to_json(set.spec);
    j["certificate"] = {{"status", set.certificate.complete ? "COMPLETE" : "INCOMPLETE"},
                        {"found", set.certificate.found},
                        {"target", set.certificate.target}};
    j["stats"] = {{"starts", set.stats.starts},
                  {"converged", set.stats.converged},
                  {"rejected_residual", set.stats.rejected_residual},
                  {"rejected_profile", set.stats.rejected_profile},
                  {"harvested", set.stats.harvested},
                  {"from_cache", set.stats.from_cache}};
    j["real_count"] = count_real(set, realness_tol);
    auto& sols = j["solutions"] = ojson::array();
    for (const auto& s : set.solutions) {
        ojson js;
        auto& coeffs = js["coefficients"] = ojson::array();
        for (auto a : s.coefficients) coeffs.push_back(complex_pair(a));
        auto& roots = js["roots"] = ojson::array();
        for (const auto& branch : s.roots) {
            ojson b = ojson::array();
            for (const auto& g : branch) b.push_back({{"root", complex_pair(g.root)}, {"order", g.order}});
            roots.push_back(std::move(b));
        }
        js["residual"] = s.residual;
        sols.push_back(std::move(js));
    }
    return j;
}

ojson to_json(const RealPolynomial& p) {
    ojson j;
    j["coefficients"] = p.coefficients;
    auto& fibers = j["fibers"] = ojson::array();
    for (std::size_t i = 0; i < p.fibers.size(); ++i) {
        const auto& f = p.fibers[i];
        ojson jf;
        jf["value"] = f.value;
        auto& real = jf["real"] = ojson::array();
        for (const auto& r : f.real) real.push_back({{"x", r.x}, {"order", r.order}});
        jf["nonreal_order_sum"] = f.nonreal_order_sum();
        jf["disorders"] = p.disorders_per_branch[i];
        jf["ordered_pairs"] = p.ordered_pairs_per_branch[i];
        fibers.push_back(std::move(jf));
    }
    j["t"] = p.t;
    j["ord"] = p.ord;
    j["sign"] = p.sign;
    return j;
}

ojson to_json(const SNumber& s) {
    ojson j;
    j["s"] = s.s;
    auto& polys = j["polynomials"] = ojson::array();
    for (const auto& p : s.polynomials) polys.push_back(to_json(p));
    return j;
}

ojson to_json(const RealHurwitz& hr) {
    ojson j;
    j["value"] = rational(hr.value);
    j["short_circuit"] = hr.short_circuit;
    j["reason"] = hr.reason;
    auto& classes = j["classes"] = ojson::array();
    for (const auto& c : hr.classes) {
        ojson jc;
        jc["side"] = to_string(c.side);
        auto& reps = jc["representatives"] = ojson::array();
        for (const auto& p : c.representatives) reps.push_back({{"coefficients", p.coefficients}, {"sign", p.sign}});
        jc["aut_order"] = c.aut_order;
        jc["class_sign"] = c.class_sign;
        jc["weight"] = rational(c.weight);
        classes.push_back(std::move(jc));
    }
    return j;
}

ojson to_json(const TheoremReport& r) {
    ojson j;
    j["s"] = r.s;
    j["s_reversed"] = r.s_reversed ? ojson(*r.s_reversed) : ojson(nullptr);
    j["HR"] = rational(r.hr);
    j["HR_forced"] = r.hr_forced ? rational(*r.hr_forced) : ojson(nullptr);
    j["equality"] = r.equality;
    j["half_sum"] = r.half_sum ? ojson(*r.half_sum) : ojson(nullptr);
    j["failures"] = r.failures;
    j["pass"] = r.pass;
    return j;
}

ojson to_json(const SeriesTable& t) {
    ojson j;
    j["lambda"] = t.lambda.to_string();
    j["mmax"] = t.requested;
    auto& entries = j["entries"] = ojson::array();
    for (const auto& e : t.entries) {
        ojson je;
        je["m"] = e.m;
        je["d"] = e.d;
        je["h"] = e.value;
        je["parity"] = e.odd_degree ? "odd" : "even";
        je["short_circuit"] = e.short_circuit;
        je["convention"] = e.convention;
        je["spec"] = e.spec;
        entries.push_back(std::move(je));
    }
    j["truncated"] = t.truncated;
    if (t.truncated) j["truncation_reason"] = t.truncation_reason;
    return j;
}

ojson to_json(const BasisFit& f) {
    ojson j;
    j["parity"] = to_string(f.parity);
    j["degree_bound"] = f.degree_bound;
    j["basis"] = f.basis;
    j["coefficients"] = f.coefficients;
    j["residual"] = f.residual;
    j["data_points"] = f.data_points;
    j["basis_dimension"] = f.basis.size();
    j["underdetermined"] = f.underdetermined;
    j["status"] = f.underdetermined ? "structural" : "determined";
    return j;
}

ojson to_json(const VerifyRecord& r) {
    ojson j;
    j["spec"] = r.key;
    j["d"] = r.d;
    j["parity"] = to_string(r.parity);
    j["N"] = r.N;
    j["H"] = rational(r.H);
    j["s"] = r.s ? ojson(*r.s) : ojson(nullptr);
    j["s_reversed"] = r.s_reversed ? ojson(*r.s_reversed) : ojson(nullptr);
    j["HR"] = r.hr ? rational(*r.hr) : ojson(nullptr);
    j["real_count"] = r.real_count ? ojson(*r.real_count) : ojson(nullptr);
    j["orderings"] = r.orderings;
    j["configurations"] = r.configurations;
    auto& props = j["properties"] = ojson::object();
    for (const auto& p : r.properties) {
        ojson jp = {{"pass", p.pass}, {"required", p.required}};
        if (!p.detail.empty()) jp["detail"] = p.detail;
        props[p.name] = std::move(jp);
    }
    j["status"] = to_string(r.status);
    if (!r.error.empty()) j["error"] = r.error;
    return j;
}

ojson to_json(const VerifyReport& report) {
    ojson j;
    j["dmax"] = report.options.dmax;
    j["kmax"] = report.options.kmax;
    j["corrupt_sign"] = report.options.corrupt_sign;
    auto& recs = j["records"] = ojson::array();
    for (const auto& r : report.records) recs.push_back(to_json(r));
    j["summary"] = {{"total", report.summary.total},
                    {"passed", report.summary.passed},
                    {"failed", report.summary.failed},
                    {"failed_infra", report.summary.infra}};
    j["pass"] = report.pass();
    return j;
}

ojson envelope(const std::string& command, const RunConfig& config, ojson result) {
    ojson j;
    j["command"] = command;
    j["config"] = to_json(config);
    j["result"] = std::move(result);
    return j;
}

}  // namespace realhur
