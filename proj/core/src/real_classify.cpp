#include <algorithm>
#include <cmath>
#include <limits>

#include "newton.hpp"
#include "realhur/errors.hpp"
#include "realhur/polysolve.hpp"

namespace realhur {

namespace {

using RealVector = Eigen::Matrix<long double, Eigen::Dynamic, 1>;
using RealMatrix = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;

// Real coordinates of a real solution: each real preimage contributes its
// position, each conjugate pair (u +- iv) contributes u and v.
struct RealParam {
    bool pair = false;
    int slot = 0;     // the root, or the member with positive imaginary part
    int partner = 0;  // conjugate slot of a pair
};

class RealPolisher {
public:
    RealPolisher(const SystemSpec& system, const Solution& s, const Tolerances& tol) : system_(system), tol_(tol) {
        x_ = s.point().cast<std::complex<long double>>();
        for (int i = 0; i < system.spec().size(); ++i) split_branch(i);
    }

    /// Newton in real coordinates; returns the max residual at the end.
    long double polish() {
        RealVector y = coordinates();
        long double best = residual_at(y);
        RealVector best_y = y;
        for (int it = 0; it < 12; ++it) {
            ComplexVector<long double> f;
            ComplexMatrix<long double> j;
            system_.evaluate(to_complex(y), f, &j);
            RealMatrix jr(f.size(), system_.size());
            Eigen::Index col = 0;
            for (const auto& p : params_) {
                if (!p.pair) {
                    jr.col(col++) = j.col(p.slot).real();
                } else {
                    jr.col(col++) = (j.col(p.slot) + j.col(p.partner)).real();
                    jr.col(col++) = (std::complex<long double>(0, 1) * (j.col(p.slot) - j.col(p.partner))).real();
                }
            }
            RealVector delta = Eigen::PartialPivLU<RealMatrix>(jr).solve(RealVector(f.real()));
            if (!delta.allFinite()) break;
            y -= delta;
            const long double r = residual_at(y);
            if (r < best) {
                best = r;
                best_y = y;
            }
            if (delta.cwiseAbs().maxCoeff() <= 1e-18L * (1 + y.cwiseAbs().maxCoeff())) break;
        }
        x_ = to_complex(best_y);
        return best;
    }

    RealPolynomial build() const {
        const auto& spec = system_.spec();
        const int d = spec.degree();
        const int k = spec.size();
        std::vector<long double> sum(static_cast<std::size_t>(d + 1), 0);
        for (int i = 0; i < k; ++i) {
            auto poly = system_.branch_polynomial(x_, i);
            for (int c = 0; c <= d; ++c) sum[static_cast<std::size_t>(c)] += poly[static_cast<std::size_t>(c)].real();
        }
        std::vector<double> coefficients;
        for (int j = 2; j <= d; ++j) coefficients.push_back(static_cast<double>(sum[static_cast<std::size_t>(d - j)] / k));

        std::vector<RealFiber> fibers(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) fibers[static_cast<std::size_t>(i)].value = spec.values()[static_cast<std::size_t>(i)];
        for (const auto& p : params_) {
            const auto& unk = system_.unknowns()[static_cast<std::size_t>(p.slot)];
            auto& fiber = fibers[static_cast<std::size_t>(unk.branch)];
            const auto root = x_[p.slot];
            if (!p.pair) {
                fiber.real.push_back({static_cast<double>(root.real()), unk.order});
            } else {
                fiber.pairs.push_back({static_cast<double>(root.real()), static_cast<double>(std::abs(root.imag())), unk.order});
            }
        }
        return make_real_polynomial(d, std::move(coefficients), std::move(fibers), tol_.cluster);
    }

private:
    void split_branch(int branch) {
        const int begin = system_.first_unknown(branch);
        const int end = begin + system_.spec().profiles()[static_cast<std::size_t>(branch)].length();
        long double scale = 1;
        for (int u = begin; u < end; ++u) scale = std::max(scale, 1 + std::abs(x_[u]));
        const long double real_band = tol_.cluster * scale / 2;
        std::vector<char> used(static_cast<std::size_t>(end - begin), 0);
        for (int u = begin; u < end; ++u) {
            if (used[static_cast<std::size_t>(u - begin)]) continue;
            if (std::abs(x_[u].imag()) <= real_band) {
                used[static_cast<std::size_t>(u - begin)] = 1;
                params_.push_back({false, u, u});
                continue;
            }
            const int order = system_.unknowns()[static_cast<std::size_t>(u)].order;
            int partner = -1;
            long double best = std::numeric_limits<long double>::infinity();
            for (int v = begin; v < end; ++v) {
                if (v == u || used[static_cast<std::size_t>(v - begin)]) continue;
                if (system_.unknowns()[static_cast<std::size_t>(v)].order != order) continue;
                const long double dist = std::abs(std::conj(x_[u]) - x_[v]);
                if (dist < best) {
                    best = dist;
                    partner = v;
                }
            }
            if (partner < 0 || best > tol_.cluster * scale) {
                throw AmbiguousRealness("real solution of " + system_.spec().key() +
                                        " has a non-real preimage without a conjugate partner");
            }
            used[static_cast<std::size_t>(u - begin)] = 1;
            used[static_cast<std::size_t>(partner - begin)] = 1;
            if (x_[u].imag() > 0) {
                params_.push_back({true, u, partner});
            } else {
                params_.push_back({true, partner, u});
            }
        }
    }

    RealVector coordinates() const {
        RealVector y(system_.size());
        Eigen::Index c = 0;
        for (const auto& p : params_) {
            y[c++] = x_[p.slot].real();
            if (p.pair) y[c++] = x_[p.slot].imag();
        }
        return y;
    }

    ComplexVector<long double> to_complex(const RealVector& y) const {
        ComplexVector<long double> x(system_.size());
        Eigen::Index c = 0;
        for (const auto& p : params_) {
            if (!p.pair) {
                x[p.slot] = {y[c++], 0};
            } else {
                const long double re = y[c++];
                const long double im = y[c++];
                x[p.slot] = {re, im};
                x[p.partner] = {re, -im};
            }
        }
        return x;
    }

    long double residual_at(const RealVector& y) const {
        ComplexVector<long double> f;
        system_.evaluate(to_complex(y), f, nullptr);
        return detail::max_abs(f);
    }

    const SystemSpec& system_;
    const Tolerances& tol_;
    ComplexVector<long double> x_;
    std::vector<RealParam> params_;
};

}  // namespace

std::vector<RealPolynomial> classify_real(const SolutionSet& set, const SolverOptions& options) {
    set.expect_complete();
    const SystemSpec system(set.spec);
    const double tol = options.tol.realness;
    std::vector<RealPolynomial> out;
    for (const auto& s : set.solutions) {
        double scale = 1, imag = 0;
        for (const auto& c : s.coefficients) {
            scale = std::max(scale, 1 + std::abs(c));
            imag = std::max(imag, std::abs(c.imag()));
        }
        const double ratio = imag / scale;
        if (ratio > 10 * tol) continue;
        if (ratio > tol / 10) {
            throw AmbiguousRealness("solution of " + set.spec.key() + " has relative imaginary part " +
                                    std::to_string(ratio) + " within 10x of the realness tolerance");
        }
        RealPolisher polisher(system, s, options.tol);
        const auto residual = polisher.polish();
        if (!(residual <= options.tol.residual)) {
            throw AmbiguousRealness("real re-polish of a solution of " + set.spec.key() + " left residual " +
                                    std::to_string(static_cast<double>(residual)));
        }
        out.push_back(polisher.build());
    }
    return out;
}

}  // namespace realhur
