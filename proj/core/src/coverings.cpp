#include "realhur/coverings.hpp"

#include <cmath>

#include "realhur/errors.hpp"
#include "realhur/real_signs.hpp"

namespace realhur {

const char* to_string(Side side) noexcept {
    return side == Side::positive_leading ? "positive-leading" : "negative-leading";
}

namespace {

bool same_real(std::span<const double> a, std::span<const double> b, double tol) {
    if (a.size() != b.size()) return false;
    double scale = 1;
    for (double v : a) scale = std::max(scale, 1 + std::abs(v));
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (std::abs(a[j] - b[j]) > tol * scale) return false;
    }
    return true;
}

// Coefficients of P(alpha z + beta) for ascending input p, normalized output a_2..a_d.
std::vector<double> substitute(std::vector<long double> p, long double alpha, long double beta) {
    const std::size_t d = p.size() - 1;
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = d; j-- > i;) p[j] += beta * p[j + 1];
    }
    long double power = 1;
    for (std::size_t j = 0; j <= d; ++j) {
        p[j] *= power;
        power *= alpha;
    }
    std::vector<double> out;
    for (std::size_t j = 2; j <= d; ++j) out.push_back(static_cast<double>(p[d - j]));
    return out;
}

std::vector<double> raw_of(const RealPolynomial& p) {
    std::vector<double> raw{1.0, 0.0};
    raw.insert(raw.end(), p.coefficients.begin(), p.coefficients.end());
    return raw;
}

}  // namespace

NormalizedForms normalize(std::span<const double> raw, double tol) {
    if (raw.empty() || raw.front() == 0 || !std::isfinite(raw.front())) {
        throw ValidationError("normalize needs a nonzero leading coefficient");
    }
    const std::size_t d = raw.size() - 1;
    NormalizedForms out;
    std::vector<long double> p(d + 1);
    for (std::size_t j = 0; j <= d; ++j) p[d - j] = raw[j];
    if (d == 0) return out;
    long double lead = p[d];
    if (lead < 0) {
        out.side = Side::negative_leading;
        if (d % 2 == 0) {
            for (auto& c : p) c = -c;
            lead = -lead;
        }
    }
    const long double beta = -p[d - 1] / (static_cast<long double>(d) * lead);
    const long double magnitude = std::pow(std::abs(lead), -1.0L / static_cast<long double>(d));
    if (d % 2 == 1) {
        out.forms.push_back(substitute(p, lead > 0 ? magnitude : -magnitude, beta));
        return out;
    }
    auto plus = substitute(p, magnitude, beta);
    auto minus = substitute(p, -magnitude, beta);
    out.forms.push_back(plus);
    if (!same_real(plus, minus, tol)) out.forms.push_back(std::move(minus));
    return out;
}

int class_sign(const CoveringClass& c, Parity parity, int d) {
    const auto& reps = c.representatives;
    if (reps.empty()) throw Error("covering class without representatives");
    if (d % 2 == 1) return reps.front().sign;
    if (parity == Parity::even) {
        for (const auto& r : reps) {
            if (r.sign != reps.front().sign) {
                throw SignMismatch("representatives of one class have opposite signs under even parity");
            }
        }
        return reps.front().sign;
    }
    int total = 0;
    for (const auto& r : reps) total += r.sign;
    // Averaged sign; with two representatives of opposite sign this is 0.
    return total / static_cast<int>(reps.size());
}

namespace {

void group_side(int d, Parity parity, Side side, std::span<const RealPolynomial> polys, double dedup_tol,
                std::vector<CoveringClass>& out) {
    std::vector<char> used(polys.size(), 0);
    for (std::size_t i = 0; i < polys.size(); ++i) {
        if (used[i]) continue;
        used[i] = 1;
        CoveringClass c;
        c.side = side;
        c.representatives.push_back(polys[i]);
        if (d % 2 == 0) {
            const auto forms = normalize(raw_of(polys[i]), dedup_tol);
            if (forms.forms.size() == 1) {
                c.aut_order = 2;
            } else {
                const auto& other = same_real(forms.forms[0], polys[i].coefficients, dedup_tol) ? forms.forms[1]
                                                                                                 : forms.forms[0];
                std::size_t match = polys.size();
                for (std::size_t j = 0; j < polys.size(); ++j) {
                    if (!used[j] && same_real(polys[j].coefficients, other, dedup_tol)) {
                        match = j;
                        break;
                    }
                }
                if (match == polys.size()) {
                    throw Error("mirror image P(-z) of a real solution is missing from the solution set");
                }
                used[match] = 1;
                c.representatives.push_back(polys[match]);
            }
        }
        c.class_sign = class_sign(c, parity, d);
        c.weight = Rational(c.class_sign, c.aut_order);
        out.push_back(std::move(c));
    }
}

}  // namespace

std::vector<CoveringClass> assemble_classes(int d, Parity parity, std::span<const RealPolynomial> positive,
                                            std::span<const RealPolynomial> negative, double dedup_tol) {
    std::vector<CoveringClass> out;
    group_side(d, parity, Side::positive_leading, positive, dedup_tol, out);
    if (d % 2 == 0) group_side(d, parity, Side::negative_leading, negative, dedup_tol, out);
    return out;
}

std::vector<CoveringClass> covering_classes(SolveSession& session, const BranchSpec& spec) {
    const int d = spec.degree();
    const auto parity = floor_sum_parity(spec.profiles());
    const auto& positive = session.real_polynomials(spec);
    if (d % 2 == 1) return assemble_classes(d, parity, positive, {}, session.options().tol.dedup);
    const auto& negative = session.real_polynomials(spec.reversed());
    return assemble_classes(d, parity, positive, negative, session.options().tol.dedup);
}

RealHurwitz real_hurwitz(SolveSession& session, const BranchSpec& spec, bool force_full) {
    RealHurwitz out;
    const int d = spec.degree();
    const bool odd_branch = d % 2 == 0 && floor_sum_parity(spec.profiles()) == Parity::odd;
    if (odd_branch && !force_full) {
        out.short_circuit = true;
        out.reason = "parity-odd branch";
        return out;
    }
    out.classes = covering_classes(session, spec);
    for (const auto& c : out.classes) out.value += c.weight;
    out.reason = odd_branch ? "parity-odd branch, averaged class signs" : "covering classes";
    return out;
}

TheoremReport theorem_check(SolveSession& session, const BranchSpec& spec, const TheoremOptions& options) {
    TheoremReport r;
    const int d = spec.degree();
    auto fail = [&](std::string what) { r.failures.push_back(std::move(what)); };
    try {
        auto s = s_number(session, spec);
        r.polynomials = std::move(s.polynomials);
        r.s = s.s;
        if (options.corrupt_sign) r.s += r.polynomials.empty() ? 1 : -2 * r.polynomials.front().sign;

        r.hurwitz = real_hurwitz(session, spec);
        r.hr = r.hurwitz.value;
        if (r.hurwitz.short_circuit) {
            const auto forced = real_hurwitz(session, spec, true);
            r.hr_forced = forced.value;
            if (forced.value != Rational(0)) fail("averaged class signs do not cancel in the parity-odd branch");
        }
        r.hr_integral = r.hr.denominator() == 1;
        if (!r.hr_integral) fail("H^R = " + to_string(r.hr) + " is not an integer");
        r.equality = r.hr == Rational(r.s);
        if (!r.equality) fail("H^R = " + to_string(r.hr) + " differs from s = " + std::to_string(r.s));
        if (d % 2 == 0) {
            r.s_reversed = s_number(session, spec.reversed()).s;
            r.half_sum = r.hr == Rational(r.s + *r.s_reversed, 2);
            if (!*r.half_sum) fail("H^R differs from (s + s_reversed) / 2");
        }
    } catch (const SignMismatch& e) {
        fail(e.what());
    }
    r.pass = r.failures.empty();
    return r;
}

}  // namespace realhur
