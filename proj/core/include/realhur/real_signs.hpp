#pragma once

#include <vector>

#include "realhur/branch_spec.hpp"
#include "realhur/polysolve.hpp"
#include "realhur/real_polynomial.hpp"

namespace realhur {

struct SNumber {
    int s = 0;
    std::vector<RealPolynomial> polynomials;
};

/// Signed count of the real normalized polynomials realising the spec.
/// Propagates IncompleteEnumeration and the other solver errors.
SNumber s_number(SolveSession& session, const BranchSpec& spec);

}  // namespace realhur
