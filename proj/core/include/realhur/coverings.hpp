#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "realhur/branch_spec.hpp"
#include "realhur/polysolve.hpp"
#include "realhur/rational.hpp"
#include "realhur/real_polynomial.hpp"

namespace realhur {

enum class Side { positive_leading, negative_leading };

const char* to_string(Side side) noexcept;

struct NormalizedForms {
    Side side = Side::positive_leading;
    /// One or two normalized forms, each as (a_2, ..., a_d).
    std::vector<std::vector<double>> forms;
};

/// Normalized real polynomials real-isomorphic to P (or to -P when d is even
/// and the leading coefficient is negative). `raw` lists c_d, ..., c_0.
/// Two forms that agree within `tol` (relative) are reported once.
NormalizedForms normalize(std::span<const double> raw, double tol = 1e-9);

/// A real isomorphism class of real polynomial coverings, represented by the
/// normalized polynomials it contains.
struct CoveringClass {
    Side side = Side::positive_leading;
    std::vector<RealPolynomial> representatives;
    int aut_order = 1;
    int class_sign = 1;
    Rational weight{1};
};

/// Sign of a class. Odd d: the representative's sign. Even d with even floor-sum
/// parity: the common sign of the representatives (SignMismatch if they differ).
/// Even d with odd parity: the average of the representatives' signs.
int class_sign(const CoveringClass& c, Parity parity, int d);

/// Groups real normalized polynomials into classes. `positive` are the real
/// solutions of the spec; for even d, `negative` are those of the reversed spec.
/// Throws Error when the mirror P(-z) of a polynomial is missing from its set.
std::vector<CoveringClass> assemble_classes(int d, Parity parity, std::span<const RealPolynomial> positive,
                                            std::span<const RealPolynomial> negative, double dedup_tol);

std::vector<CoveringClass> covering_classes(SolveSession& session, const BranchSpec& spec);

struct RealHurwitz {
    Rational value{0};
    bool short_circuit = false;
    std::string reason;
    std::vector<CoveringClass> classes;
};

/// Aut-weighted signed count of real covering classes. Even d with odd
/// floor-sum parity is 0 by definition unless `force_full` asks for the
/// class computation with averaged signs.
RealHurwitz real_hurwitz(SolveSession& session, const BranchSpec& spec, bool force_full = false);

struct TheoremReport {
    int s = 0;
    std::optional<int> s_reversed;
    Rational hr{0};
    RealHurwitz hurwitz;
    /// Full class computation in the odd-parity branch (averaged signs).
    std::optional<Rational> hr_forced;
    bool hr_integral = true;
    bool equality = false;
    std::optional<bool> half_sum;
    std::vector<RealPolynomial> polynomials;
    std::vector<std::string> failures;
    bool pass = false;
};

struct TheoremOptions {
    /// Debug negative control: flips the sign of the first real polynomial in the s route.
    bool corrupt_sign = false;
};

/// H^R via covering classes against s via signed polynomials; for even d also
/// H^R = (s + s_reversed) / 2. Failures are reported, not thrown.
TheoremReport theorem_check(SolveSession& session, const BranchSpec& spec, const TheoremOptions& options = {});

}  // namespace realhur
