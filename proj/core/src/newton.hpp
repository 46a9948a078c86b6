#pragma once

#include <cmath>

#include "realhur/polysolve.hpp"

namespace realhur::detail {

template <class T>
struct NewtonOutcome {
    bool converged = false;
    ComplexVector<T> x;
    T residual = 0;
    int iterations = 0;
};

template <class T>
T max_abs(const ComplexVector<T>& v) {
    T m = 0;
    for (Eigen::Index i = 0; i < v.size(); ++i) m = std::max(m, std::abs(v[i]));
    return m;
}

template <class T>
bool finite(const ComplexVector<T>& v) {
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (!std::isfinite(v[i].real()) || !std::isfinite(v[i].imag())) return false;
    }
    return true;
}

/// Damped Newton with step halving on max |F|. Converged once a full step is
/// below step_tol * (1 + max |x|); a stalled line search still counts as
/// converged when max |F| <= accept.
template <class T>
NewtonOutcome<T> newton(const SystemSpec& system, ComplexVector<T> x, int max_iterations, T step_tol, T accept) {
    NewtonOutcome<T> out;
    ComplexVector<T> f, f_try, x_try;
    ComplexMatrix<T> jac;
    system.evaluate(x, f, &jac);
    T norm = max_abs(f);
    if (!std::isfinite(norm)) {
        out.x = std::move(x);
        out.residual = norm;
        return out;
    }
    for (int it = 0; it < max_iterations; ++it) {
        out.iterations = it + 1;
        Eigen::PartialPivLU<ComplexMatrix<T>> lu(jac);
        ComplexVector<T> delta = lu.solve(f);
        if (!finite(delta)) break;
        const T scale = 1 + max_abs(x);
        const T step = max_abs(delta);
        if (step <= step_tol * scale) {
            x -= delta;
            system.evaluate(x, f, nullptr);
            out.converged = true;
            out.x = std::move(x);
            out.residual = max_abs(f);
            return out;
        }
        T alpha = 1;
        bool accepted = false;
        T norm_try = norm;
        for (int h = 0; h < 40; ++h) {
            x_try = x - alpha * delta;
            system.evaluate(x_try, f_try, nullptr);
            norm_try = max_abs(f_try);
            if (std::isfinite(norm_try) && norm_try < norm) {
                accepted = true;
                break;
            }
            alpha /= 2;
        }
        if (!accepted) {
            out.converged = norm <= accept;
            break;
        }
        x = x_try;
        system.evaluate(x, f, &jac);
        norm = norm_try;
        if (alpha * step <= step_tol * scale) {
            out.converged = true;
            break;
        }
        if (max_abs(x) > T(1e8)) break;
    }
    out.x = std::move(x);
    out.residual = norm;
    return out;
}

}  // namespace realhur::detail
