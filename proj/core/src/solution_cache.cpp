#include "solution_cache.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>

#include "newton.hpp"
#include "realhur/errors.hpp"

namespace realhur {

std::string spec_hash(const BranchSpec& spec) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : spec.key()) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

SolutionCache::SolutionCache(std::filesystem::path path) : path_(std::move(path)) {
    std::ifstream in(path_);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto record = nlohmann::json::parse(line, nullptr, false);
        if (record.is_discarded() || !record.is_object()) continue;
        records_.push_back(std::move(record));
    }
}

std::optional<SolutionSet> SolutionCache::lookup(const BranchSpec& spec, std::uint64_t target,
                                                 const SolverOptions& options) const {
    const auto hash = spec_hash(spec);
    const auto key = spec.key();
    const SystemSpec system(spec);
    SolutionSet set{spec, {}, target, {}, {}};
    try {
        for (const auto& r : records_) {
            if (r.value("hash", "") != hash || r.value("spec", "") != key) continue;
            Solution s;
            for (const auto& c : r.at("coefficients")) s.coefficients.emplace_back(c.at(0).get<double>(), c.at(1).get<double>());
            for (const auto& branch : r.at("roots")) {
                std::vector<RootGroup> groups;
                for (const auto& g : branch) groups.push_back({{g.at(0).get<double>(), g.at(1).get<double>()}, g.at(2).get<int>()});
                s.roots.push_back(std::move(groups));
            }
            if (static_cast<int>(s.roots.size()) != spec.size()) return std::nullopt;
            const Eigen::VectorXcd x = s.point();
            if (x.size() != system.size()) return std::nullopt;
            ComplexVector<long double> xl = x.cast<std::complex<long double>>();
            ComplexVector<long double> f;
            system.evaluate(xl, f, nullptr);
            s.residual = static_cast<double>(detail::max_abs(f));
            if (!(s.residual <= options.tol.residual)) return std::nullopt;
            if (std::any_of(set.solutions.begin(), set.solutions.end(), [&](const Solution& o) {
                    return same_coefficients(o.coefficients, s.coefficients, options.tol.dedup);
                })) {
                continue;
            }
            set.solutions.push_back(std::move(s));
        }
    } catch (const nlohmann::json::exception&) {
        return std::nullopt;
    }
    if (set.solutions.size() != target) return std::nullopt;
    sort_solutions(set.solutions);
    set.certificate = {true, target, target};
    set.stats.from_cache = true;
    return set;
}

void SolutionCache::store(const SolutionSet& set) {
    std::ofstream out(path_, std::ios::app);
    if (!out) throw Error("cannot open cache file " + path_.string());
    const auto hash = spec_hash(set.spec);
    const auto key = set.spec.key();
    for (const auto& s : set.solutions) {
        nlohmann::json r;
        r["hash"] = hash;
        r["spec"] = key;
        r["coefficients"] = nlohmann::json::array();
        for (const auto& c : s.coefficients) r["coefficients"].push_back({c.real(), c.imag()});
        r["roots"] = nlohmann::json::array();
        for (const auto& branch : s.roots) {
            auto groups = nlohmann::json::array();
            for (const auto& g : branch) groups.push_back({g.root.real(), g.root.imag(), g.order});
            r["roots"].push_back(std::move(groups));
        }
        r["residual"] = s.residual;
        out << r.dump() << '\n';
        records_.push_back(std::move(r));
    }
}

}  // namespace realhur
