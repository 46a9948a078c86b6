#include <gtest/gtest.h>

#include <algorithm>

#include "oracles.hpp"
#include "realhur/errors.hpp"
#include "realhur/real_signs.hpp"
#include "realhur/verify.hpp"

using namespace realhur;

namespace {

BranchSpec spec(const char* profiles, std::vector<double> values) {
    return BranchSpec::from_attachment(parse_profile_list(profiles), std::move(values));
}

RealFiber fiber(double w, std::vector<RealRoot> real, std::vector<ConjugatePair> pairs = {}) {
    return {w, std::move(real), std::move(pairs)};
}

// z^3 - 3z with its two critical fibers.
RealPolynomial cubic() {
    return make_real_polynomial(3, {-3, 0}, {fiber(-2, {{1, 2}, {-2, 1}}), fiber(2, {{2, 1}, {-1, 2}})}, 1e-5);
}

}  // namespace

TEST(RealSigns, PreimageSequences) {
    const auto p = cubic();
    const auto& f0 = p.fibers[0].real;
    ASSERT_EQ(f0.size(), 2u);
    EXPECT_EQ(f0[0].x, -2);
    EXPECT_EQ(f0[0].order, 1);
    EXPECT_EQ(f0[1].x, 1);
    EXPECT_EQ(f0[1].order, 2);
    const auto& f1 = p.fibers[1].real;
    EXPECT_EQ(f1[0].x, -1);
    EXPECT_EQ(f1[0].order, 2);
    EXPECT_EQ(f1[1].order, 1);
}

TEST(RealSigns, CubicCounts) {
    const auto p = cubic();
    EXPECT_EQ(disorder_count(p), 1);
    EXPECT_EQ(ordered_pair_count(p), 1);
    EXPECT_EQ(sign(p), -1);
    EXPECT_EQ(p.disorders_per_branch, (std::vector<int>{0, 1}));
    EXPECT_EQ(p.ordered_pairs_per_branch, (std::vector<int>{1, 0}));
}

TEST(RealSigns, EmptyFiberAndTies) {
    // (z^2 + 1)^2 + 1 over w = 1: no real preimages
    const auto p = make_real_polynomial(
        4, {2, 0, 2}, {fiber(1, {{0, 2}}, {{0, std::sqrt(2.0), 1}}), fiber(2, {}, {{0, 1, 2}})}, 1e-5);
    EXPECT_TRUE(p.fibers[1].real.empty());
    EXPECT_EQ(p.t, 0);
    EXPECT_EQ(p.sign, 1);
    const int equal[] = {2, 2, 2};
    EXPECT_EQ(disorder_count(std::span<const int>(equal)), 0);
    EXPECT_EQ(ordered_pair_count(std::span<const int>(equal)), 0);
    const int mixed[] = {3, 1, 2, 1};
    EXPECT_EQ(disorder_count(std::span<const int>(mixed)), 4);
    EXPECT_EQ(ordered_pair_count(std::span<const int>(mixed)), 1);
}

TEST(RealSigns, ClusterAmbiguity) {
    EXPECT_THROW(real_preimage_sequence(fiber(0, {{1.0, 1}, {1.0 + 1e-8, 1}, {-2, 1}}), 1e-5), ClusterAmbiguity);
}

TEST(RealSigns, FiberOrdersMustSumToDegree) {
    EXPECT_THROW(make_real_polynomial(3, {-3, 0}, {fiber(-2, {{1, 2}})}, 1e-5), ValidationError);
}

TEST(RealSigns, MirrorReflectsDisorders) {
    const auto p = make_real_polynomial(
        4, {-2, 0, 2}, {fiber(1, {{0, 2}, {-std::sqrt(2.0), 1}, {std::sqrt(2.0), 1}}), fiber(2, {}, {{0, 1, 2}})}, 1e-5);
    const auto q = mirror(p, 1e-5);
    EXPECT_EQ(q.coefficients, (std::vector<double>{-2, 0, 2}));
    EXPECT_EQ(q.t, p.ord);
    EXPECT_EQ(p.t, q.ord);
    EXPECT_THROW(mirror(cubic(), 1e-5), ValidationError);
}

TEST(SNumber, ClosedForms) {
    SolveSession session({});
    auto s = s_number(session, spec("2,1|2,1", {-2, 2}));
    EXPECT_EQ(s.s, -1);
    ASSERT_EQ(s.polynomials.size(), 1u);
    EXPECT_NEAR(s.polynomials[0].coefficients[0], -3, 1e-8);
    EXPECT_NEAR(s.polynomials[0].coefficients[1], 0, 1e-8);
    EXPECT_EQ(s.polynomials[0].t, 1);

    s = s_number(session, spec("2,1,1|2,2", {2, 1}));
    EXPECT_EQ(s.s, 0);
    ASSERT_EQ(s.polynomials.size(), 2u);
    for (const auto& p : s.polynomials) {
        // (z^2 + v)^2 + 1 with v = +-1; v = -1 has orders (1,2,1) over 2
        const double v = p.coefficients[0] / 2;
        EXPECT_NEAR(std::abs(v), 1, 1e-8);
        EXPECT_NEAR(p.coefficients[2], 2, 1e-8);
        EXPECT_EQ(p.sign, v > 0 ? 1 : -1);
    }

    s = s_number(session, spec("2,1,1|2,2", {1, 2}));
    EXPECT_EQ(s.s, 0);
    EXPECT_TRUE(s.polynomials.empty());

    s = s_number(session, spec("3,1|2,1,1", {28, 1}));
    EXPECT_EQ(s.s, 0);
    ASSERT_EQ(s.polynomials.size(), 2u);
    EXPECT_EQ(s.polynomials[0].sign + s.polynomials[1].sign, 0);
    for (const auto& p : s.polynomials) {
        // (z - a)^3 (z + 3a) + 28, a = +-1; a = 1 puts the triple root right of the simple one
        const double a = p.coefficients[1] / 8;
        EXPECT_NEAR(std::abs(a), 1, 1e-8);
        EXPECT_EQ(p.ord, a > 0 ? 1 : 0);
    }
}

TEST(SNumber, SingleFullBranchPoint) {
    SolveSession session({});
    for (int d = 2; d <= 5; ++d) {
        for (double w : {-3.5, 0.0, 5.0}) {
            EXPECT_EQ(s_number(session, BranchSpec::validate({Partition({d})}, {w})).s, 1) << d << " " << w;
        }
    }
}

TEST(SNumber, DisordersMatchCompanionRoots) {
    SolveSession session({});
    for (const auto& profiles : enumerate_specs(5, 4)) {
        for (const auto& config : value_configs(static_cast<int>(profiles.size()), 3)) {
            const auto s = BranchSpec::validate(profiles, config.values);
            for (const auto& p : s_number(session, s).polynomials) {
                EXPECT_EQ(p.sign, p.t % 2 == 0 ? 1 : -1);
                int t = 0;
                std::vector<std::complex<double>> a(p.coefficients.begin(), p.coefficients.end());
                for (std::size_t i = 0; i < p.fibers.size(); ++i) {
                    const auto seq = oracle::real_root_multiplicities(oracle::shifted(a, s.degree(), s.values()[i]));
                    t += oracle::disorders(seq);
                    int orders = p.fibers[i].nonreal_order_sum();
                    EXPECT_EQ(orders % 2, 0);
                    for (const auto& r : p.fibers[i].real) orders += r.order;
                    EXPECT_EQ(orders, s.degree());
                    ASSERT_EQ(seq.size(), p.fibers[i].real.size()) << s.key();
                    for (std::size_t j = 0; j < seq.size(); ++j) {
                        EXPECT_EQ(seq[j].second, p.fibers[i].real[j].order) << s.key();
                        EXPECT_NEAR(seq[j].first, p.fibers[i].real[j].x, 1e-4);
                    }
                }
                EXPECT_EQ(t, p.t) << s.key();
            }
        }
    }
}

TEST(SNumber, OrderAndPositionInvariance) {
    SolveSession session({});
    for (const auto& base : enumerate_specs(4, 3)) {
        const int expected = s_number(session, BranchSpec::with_default_values(base)).s;
        auto profiles = base;
        std::sort(profiles.begin(), profiles.end());
        do {
            for (const auto& config : value_configs(static_cast<int>(profiles.size()), 5)) {
                EXPECT_EQ(s_number(session, BranchSpec::validate(profiles, config.values)).s, expected)
                    << format_profile_list(profiles) << " " << config.label;
            }
        } while (std::next_permutation(profiles.begin(), profiles.end()));
    }
}

TEST(SNumber, PerBranchParityForEvenDegree) {
    SolveSession session({});
    for (const auto& profiles : enumerate_specs(4, 3)) {
        const auto s = BranchSpec::with_default_values(profiles);
        if (s.degree() % 2) continue;
        for (const auto& p : s_number(session, s).polynomials) {
            for (int i = 0; i < s.size(); ++i) {
                const auto idx = static_cast<std::size_t>(i);
                EXPECT_EQ((p.disorders_per_branch[idx] + p.ordered_pairs_per_branch[idx]) % 2,
                          (o_count(s.profiles()[idx]) / 2) % 2);
            }
        }
    }
}

TEST(SNumber, VanishesInOddParityBranch) {
    SolveSession session({});
    for (const auto& profiles : enumerate_specs(4, 3)) {
        if (profiles.front().degree() % 2 || floor_sum_parity(profiles) == Parity::even) continue;
        for (const auto& config : value_configs(static_cast<int>(profiles.size()), 9)) {
            EXPECT_EQ(s_number(session, BranchSpec::validate(profiles, config.values)).s, 0);
        }
    }
}
