#pragma once

// Reference computations that share no code with the library.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

namespace oracle {

using Word = std::vector<int>;

inline std::vector<int> cycle_lengths(const Word& p) {
    std::vector<int> out;
    std::vector<char> seen(p.size(), 0);
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) {
            seen[j] = 1;
            ++len;
        }
        out.push_back(len);
    }
    std::sort(out.rbegin(), out.rend());
    return out;
}

/// Every k-tuple of S_d, no pruning: #{types match, product = (0 1 ... d-1)}.
inline std::uint64_t brute_force_factorizations(int d, const std::vector<std::vector<int>>& types) {
    std::vector<Word> all;
    Word w(static_cast<std::size_t>(d));
    std::iota(w.begin(), w.end(), 0);
    do {
        all.push_back(w);
    } while (std::next_permutation(w.begin(), w.end()));

    std::vector<std::vector<const Word*>> classes;
    for (auto t : types) {
        std::sort(t.rbegin(), t.rend());
        classes.emplace_back();
        for (const auto& p : all) {
            if (cycle_lengths(p) == t) classes.back().push_back(&p);
        }
    }
    Word cycle(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) cycle[static_cast<std::size_t>(i)] = (i + 1) % d;

    std::uint64_t n = 0;
    std::vector<std::size_t> idx(classes.size(), 0);
    for (const auto& c : classes) {
        if (c.empty()) return 0;
    }
    while (true) {
        // product s_1 s_2 ... s_k, applied right to left
        Word prod(static_cast<std::size_t>(d));
        for (int x = 0; x < d; ++x) {
            int y = x;
            for (std::size_t f = classes.size(); f-- > 0;) y = (*classes[f][idx[f]])[static_cast<std::size_t>(y)];
            prod[static_cast<std::size_t>(x)] = y;
        }
        if (prod == cycle) ++n;
        std::size_t f = 0;
        while (f < classes.size() && ++idx[f] == classes[f].size()) idx[f++] = 0;
        if (f == classes.size()) break;
    }
    return n;
}

/// Roots of sum c[j] z^j (ascending, leading nonzero) as companion eigenvalues.
inline std::vector<std::complex<double>> roots(const std::vector<std::complex<double>>& c) {
    const int n = static_cast<int>(c.size()) - 1;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 1; i < n; ++i) m(i, i - 1) = 1;
    for (int i = 0; i < n; ++i) m(i, n - 1) = -c[static_cast<std::size_t>(i)] / c[static_cast<std::size_t>(n)];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(m);
    std::vector<std::complex<double>> out(es.eigenvalues().data(), es.eigenvalues().data() + n);
    return out;
}

/// Ascending coefficients of z^d + a_2 z^(d-2) + ... + a_d - w.
inline std::vector<std::complex<double>> shifted(const std::vector<std::complex<double>>& a, int d, double w) {
    std::vector<std::complex<double>> c(static_cast<std::size_t>(d + 1), 0.0);
    c[static_cast<std::size_t>(d)] = 1;
    for (int j = 2; j <= d; ++j) c[static_cast<std::size_t>(d - j)] = a[static_cast<std::size_t>(j - 2)];
    c[0] -= w;
    return c;
}

/// Real roots of a real polynomial clustered into (x, multiplicity), x increasing.
inline std::vector<std::pair<double, int>> real_root_multiplicities(const std::vector<std::complex<double>>& c,
                                                                    double cluster = 1e-3) {
    auto r = roots(c);
    std::vector<std::complex<double>> sorted = r;
    std::sort(sorted.begin(), sorted.end(), [](auto a, auto b) { return a.real() < b.real(); });
    std::vector<std::vector<std::complex<double>>> groups;
    for (auto z : sorted) {
        bool placed = false;
        for (auto& g : groups) {
            if (std::abs(g.front() - z) < cluster) {
                g.push_back(z);
                placed = true;
                break;
            }
        }
        if (!placed) groups.push_back({z});
    }
    std::vector<std::pair<double, int>> out;
    for (const auto& g : groups) {
        std::complex<double> mean = 0;
        for (auto z : g) mean += z;
        mean /= static_cast<double>(g.size());
        if (std::abs(mean.imag()) < cluster) out.emplace_back(mean.real(), static_cast<int>(g.size()));
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Pairs i < j with strictly larger multiplicity at i.
inline int disorders(const std::vector<std::pair<double, int>>& seq) {
    int t = 0;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        for (std::size_t j = i + 1; j < seq.size(); ++j) t += seq[i].second > seq[j].second;
    }
    return t;
}

}  // namespace oracle
