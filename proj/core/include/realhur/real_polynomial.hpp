#pragma once

#include <span>
#include <vector>

namespace realhur {

/// A real preimage x of a branch value with ramification order r.
struct RealRoot {
    double x = 0;
    int order = 0;
};

/// The preimages re +- i*im (im > 0), both of order `order`.
struct ConjugatePair {
    double re = 0;
    double im = 0;
    int order = 0;
};

/// Preimages of one branch value under a real polynomial.
struct RealFiber {
    double value = 0;
    std::vector<RealRoot> real;  // sorted by x after construction
    std::vector<ConjugatePair> pairs;

    int nonreal_order_sum() const noexcept;
};

/// A real normalized polynomial z^d + a_2 z^(d-2) + ... + a_d with its preimage
/// data over each branch value and derived disorder statistics.
struct RealPolynomial {
    int d = 0;
    std::vector<double> coefficients;  // a_2, ..., a_d
    std::vector<RealFiber> fibers;

    std::vector<int> disorders_per_branch;
    std::vector<int> ordered_pairs_per_branch;
    int t = 0;
    int ord = 0;
    int sign = 1;
};

/// Sorts real preimages by x. Throws ClusterAmbiguity when two are closer than
/// `cluster_tol * (1 + max |x|)`.
std::vector<RealRoot> real_preimage_sequence(const RealFiber& fiber, double cluster_tol);

/// Pairs i < j with orders[i] > orders[j].
int disorder_count(std::span<const int> orders) noexcept;
/// Pairs i < j with orders[i] < orders[j].
int ordered_pair_count(std::span<const int> orders) noexcept;

/// Assembles a RealPolynomial, sorting fibers and filling t, ord and sign.
/// Throws ValidationError when a fiber's orders do not sum to d.
RealPolynomial make_real_polynomial(int d, std::vector<double> coefficients, std::vector<RealFiber> fibers,
                                    double cluster_tol);

inline int disorder_count(const RealPolynomial& p) noexcept { return p.t; }
inline int ordered_pair_count(const RealPolynomial& p) noexcept { return p.ord; }
inline int sign(const RealPolynomial& p) noexcept { return p.sign; }

/// Sum of signs.
int signed_count(std::span<const RealPolynomial> polys) noexcept;

/// P(-z) for d even, with fibers mirrored. Throws ValidationError for odd d.
RealPolynomial mirror(const RealPolynomial& p, double cluster_tol);

}  // namespace realhur
