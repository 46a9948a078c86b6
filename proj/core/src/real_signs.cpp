#include "realhur/real_signs.hpp"

#include <algorithm>
#include <cmath>

#include "realhur/errors.hpp"

namespace realhur {

int RealFiber::nonreal_order_sum() const noexcept {
    int total = 0;
    for (const auto& p : pairs) total += 2 * p.order;
    return total;
}

std::vector<RealRoot> real_preimage_sequence(const RealFiber& fiber, double cluster_tol) {
    auto seq = fiber.real;
    std::sort(seq.begin(), seq.end(), [](const RealRoot& a, const RealRoot& b) { return a.x < b.x; });
    double scale = 1;
    for (const auto& r : seq) scale = std::max(scale, 1 + std::abs(r.x));
    for (std::size_t i = 1; i < seq.size(); ++i) {
        if (seq[i].x - seq[i - 1].x <= cluster_tol * scale) {
            throw ClusterAmbiguity("real preimages " + std::to_string(seq[i - 1].x) + " and " +
                                   std::to_string(seq[i].x) + " of value " + std::to_string(fiber.value) +
                                   " are within the cluster tolerance");
        }
    }
    return seq;
}

int disorder_count(std::span<const int> orders) noexcept {
    int n = 0;
    for (std::size_t i = 0; i < orders.size(); ++i) {
        for (std::size_t j = i + 1; j < orders.size(); ++j) n += orders[i] > orders[j];
    }
    return n;
}

int ordered_pair_count(std::span<const int> orders) noexcept {
    int n = 0;
    for (std::size_t i = 0; i < orders.size(); ++i) {
        for (std::size_t j = i + 1; j < orders.size(); ++j) n += orders[i] < orders[j];
    }
    return n;
}

RealPolynomial make_real_polynomial(int d, std::vector<double> coefficients, std::vector<RealFiber> fibers,
                                    double cluster_tol) {
    RealPolynomial p;
    p.d = d;
    p.coefficients = std::move(coefficients);
    p.fibers = std::move(fibers);
    for (auto& fiber : p.fibers) {
        fiber.real = real_preimage_sequence(fiber, cluster_tol);
        int total = fiber.nonreal_order_sum();
        std::vector<int> orders;
        for (const auto& r : fiber.real) {
            total += r.order;
            orders.push_back(r.order);
        }
        if (total != d) {
            throw ValidationError("preimage orders over " + std::to_string(fiber.value) + " sum to " +
                                  std::to_string(total) + ", expected " + std::to_string(d));
        }
        p.disorders_per_branch.push_back(disorder_count(orders));
        p.ordered_pairs_per_branch.push_back(ordered_pair_count(orders));
        p.t += p.disorders_per_branch.back();
        p.ord += p.ordered_pairs_per_branch.back();
    }
    p.sign = p.t % 2 == 0 ? 1 : -1;
    return p;
}

int signed_count(std::span<const RealPolynomial> polys) noexcept {
    int s = 0;
    for (const auto& p : polys) s += p.sign;
    return s;
}

RealPolynomial mirror(const RealPolynomial& p, double cluster_tol) {
    if (p.d % 2 != 0) throw ValidationError("P(-z) is normalized only for even degree");
    auto coefficients = p.coefficients;
    for (std::size_t idx = 0; idx < coefficients.size(); ++idx) {
        const int j = static_cast<int>(idx) + 2;
        if (j % 2 == 1) coefficients[idx] = -coefficients[idx];
    }
    auto fibers = p.fibers;
    for (auto& f : fibers) {
        for (auto& r : f.real) r.x = -r.x;
        for (auto& c : f.pairs) c.re = -c.re;
    }
    return make_real_polynomial(p.d, std::move(coefficients), std::move(fibers), cluster_tol);
}

SNumber s_number(SolveSession& session, const BranchSpec& spec) {
    SNumber out;
    out.polynomials = session.real_polynomials(spec);
    out.s = signed_count(out.polynomials);
    return out;
}

}  // namespace realhur
