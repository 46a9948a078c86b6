#include "realhur/series.hpp"

#include <Eigen/Dense>

#include "realhur/branch_spec.hpp"
#include "realhur/coverings.hpp"
#include "realhur/errors.hpp"

namespace realhur {

namespace {

constexpr int kMaxOrder = 20;

std::int64_t binomial(int n, int k) {
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Binomial convolution: EGF coefficients of a product.
std::vector<std::int64_t> egf_product(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
    std::vector<std::int64_t> out(a.size(), 0);
    for (std::size_t m = 0; m < a.size(); ++m) {
        for (std::size_t i = 0; i <= m; ++i) out[m] += binomial(static_cast<int>(m), static_cast<int>(i)) * a[i] * b[m - i];
    }
    return out;
}

std::string basis_label(Parity parity, int a, int b) {
    std::string s = parity == Parity::odd ? "g" : "";
    auto append = [&s](const std::string& term) {
        if (!s.empty()) s += "*";
        s += term;
    };
    if (a > 0) append(a == 1 ? "q" : "q^" + std::to_string(a));
    if (b > 0) append(b == 1 ? "f" : "f^" + std::to_string(b));
    return s.empty() ? "1" : s;
}

}  // namespace

std::vector<std::int64_t> sech_egf(int order) {
    if (order > kMaxOrder) throw ScaleExceeded("series order above " + std::to_string(kMaxOrder));
    // sech * cosh = 1, cosh has EGF coefficients 1 at even m.
    std::vector<std::int64_t> e(static_cast<std::size_t>(order + 1), 0);
    for (int m = 0; m <= order; ++m) {
        std::int64_t acc = m == 0 ? 1 : 0;
        for (int i = 2; i <= m; i += 2) acc -= binomial(m, i) * e[static_cast<std::size_t>(m - i)];
        e[static_cast<std::size_t>(m)] = acc;
    }
    return e;
}

std::vector<std::int64_t> tanh_egf(int order) {
    // tanh = sinh * sech, sinh has EGF coefficients 1 at odd m.
    const auto e = sech_egf(order);
    std::vector<std::int64_t> t(static_cast<std::size_t>(order + 1), 0);
    for (int m = 0; m <= order; ++m) {
        for (int i = 1; i <= m; i += 2) t[static_cast<std::size_t>(m)] += binomial(m, i) * e[static_cast<std::size_t>(m - i)];
    }
    return t;
}

HValue h_value(SolveSession& session, const Partition& lambda, int m, const SeriesOptions& options) {
    if (lambda.empty()) throw ValidationError("h_lambda needs a nonempty partition");
    if (m < 0) throw ValidationError("m must be nonnegative");
    HValue out;
    out.m = m;
    out.d = lambda.degree() + m;
    out.odd_degree = out.d % 2 == 1;
    if (out.d == 1) {
        out.value = 1;
        out.convention = true;
        out.spec = "identity covering (d=1)";
        return out;
    }
    if (out.d > options.max_degree) {
        throw ScaleExceeded("h_" + lambda.to_string() + "(" + std::to_string(m) + ") needs degree " +
                            std::to_string(out.d) + " > " + std::to_string(options.max_degree));
    }
    const Partition full = lambda.with_ones(m);
    std::vector<int> simple_parts(static_cast<std::size_t>(out.d - 1), 1);
    simple_parts[0] = 2;
    const Partition simple(simple_parts);
    const int simple_count = full.length() - 1;
    std::vector<Partition> profiles{full};
    profiles.insert(profiles.end(), static_cast<std::size_t>(simple_count), simple);
    if (!satisfies_riemann_hurwitz(profiles)) {
        throw Error("one-part profile list " + format_profile_list(profiles) + " violates Riemann-Hurwitz");
    }
    const auto spec = BranchSpec::with_default_values(std::move(profiles));
    out.spec = spec.key();
    const auto hr = real_hurwitz(session, spec, options.force_full);
    if (hr.value.denominator() != 1) {
        throw Error("non-integral h value " + to_string(hr.value) + " for " + spec.key());
    }
    out.value = hr.value.numerator();
    out.short_circuit = hr.short_circuit;
    return out;
}

SeriesTable series_table(SolveSession& session, const Partition& lambda, int max_m, const SeriesOptions& options) {
    SeriesTable table;
    table.lambda = lambda;
    table.requested = max_m;
    for (int m = 0; m <= max_m; ++m) {
        try {
            table.entries.push_back(h_value(session, lambda, m, options));
        } catch (const ScaleExceeded& e) {
            table.truncated = true;
            table.truncation_reason = e.what();
            break;
        } catch (const IncompleteEnumeration& e) {
            table.truncated = true;
            table.truncation_reason = e.what();
            break;
        }
    }
    return table;
}

BasisFit basis_fit(const SeriesTable& table, Parity parity, int degree_bound) {
    if (degree_bound < 0) throw ValidationError("degree bound must be nonnegative");
    const int rows = static_cast<int>(table.entries.size());
    const int lambda_size = table.lambda.degree();
    auto matches = [&](int m) { return ((lambda_size + m) % 2 == 1) == (parity == Parity::odd); };
    int same_parity = 0;
    for (int m = 0; m < rows; ++m) same_parity += matches(m);
    if (same_parity < 2) throw ValidationError("basis fit needs at least two entries of the requested parity");

    const int order = rows - 1;
    const auto f = tanh_egf(order);
    std::vector<std::int64_t> q(static_cast<std::size_t>(rows), 0);
    if (rows > 1) q[1] = 1;
    std::vector<std::int64_t> one(static_cast<std::size_t>(rows), 0);
    one[0] = 1;
    const auto base = parity == Parity::odd ? sech_egf(order) : one;

    BasisFit fit;
    fit.parity = parity;
    fit.degree_bound = degree_bound;
    fit.data_points = rows;
    std::vector<std::vector<std::int64_t>> columns;
    auto q_power = one;
    for (int a = 0; a <= degree_bound; ++a) {
        auto element = egf_product(base, q_power);
        for (int b = 0; a + b <= degree_bound; ++b) {
            columns.push_back(element);
            fit.basis.push_back(basis_label(parity, a, b));
            element = egf_product(element, f);
        }
        q_power = egf_product(q_power, q);
    }

    Eigen::MatrixXd a(rows, static_cast<Eigen::Index>(columns.size()));
    Eigen::VectorXd target(rows);
    for (int m = 0; m < rows; ++m) {
        target[m] = matches(m) ? static_cast<double>(table.entries[static_cast<std::size_t>(m)].value) : 0.0;
        for (std::size_t c = 0; c < columns.size(); ++c) a(m, static_cast<Eigen::Index>(c)) = static_cast<double>(columns[c][static_cast<std::size_t>(m)]);
    }
    const Eigen::VectorXd coef = a.completeOrthogonalDecomposition().solve(target);
    fit.coefficients.assign(coef.data(), coef.data() + coef.size());
    fit.residual = (a * coef - target).cwiseAbs().maxCoeff();
    fit.underdetermined = static_cast<int>(columns.size()) >= rows;
    return fit;
}

}  // namespace realhur
