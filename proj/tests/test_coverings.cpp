#include <gtest/gtest.h>

#include "realhur/coverings.hpp"
#include "realhur/errors.hpp"
#include "realhur/real_signs.hpp"
#include "realhur/verify.hpp"

using namespace realhur;

namespace {

BranchSpec spec(const char* profiles, std::vector<double> values) {
    return BranchSpec::from_attachment(parse_profile_list(profiles), std::move(values));
}

void expect_form(const std::vector<double>& got, const std::vector<double>& want) {
    ASSERT_EQ(got.size(), want.size());
    for (std::size_t i = 0; i < got.size(); ++i) EXPECT_NEAR(got[i], want[i], 1e-12) << i;
}

RealPolynomial with_sign(int d, std::vector<double> coefficients, int sign) {
    RealPolynomial p;
    p.d = d;
    p.coefficients = std::move(coefficients);
    p.sign = sign;
    p.t = sign > 0 ? 0 : 1;
    return p;
}

}  // namespace

TEST(Normalize, OddDegreeShift) {
    // x^3 + 3x^2 at x = z - 1
    const std::vector<double> raw{1, 3, 0, 0};
    const auto n = normalize(raw);
    ASSERT_EQ(n.forms.size(), 1u);
    expect_form(n.forms[0], {-3, 2});
    EXPECT_EQ(n.side, Side::positive_leading);
}

TEST(Normalize, EvenDegreeTwoForms) {
    const std::vector<double> raw{1, 1, 0, 0, 0};
    const auto n = normalize(raw);
    ASSERT_EQ(n.forms.size(), 2u);
    // z -> -z relates the two: a_3 flips sign, a_2 and a_4 agree
    EXPECT_NEAR(n.forms[0][0], n.forms[1][0], 1e-12);
    EXPECT_NEAR(n.forms[0][1], -n.forms[1][1], 1e-12);
    EXPECT_NEAR(n.forms[0][2], n.forms[1][2], 1e-12);
    EXPECT_GT(std::abs(n.forms[0][1]), 1e-3);
    // (z - 1/4)^4 + (z - 1/4)^3: a_2 = 6/16 - 3/4
    EXPECT_NEAR(n.forms[0][0], 6.0 / 16 - 3.0 / 4, 1e-12);
}

TEST(Normalize, EvenPolynomialSingleForm) {
    const std::vector<double> raw{1, 0, 1, 0, 0};
    const auto n = normalize(raw);
    ASSERT_EQ(n.forms.size(), 1u);
    expect_form(n.forms[0], {1, 0, 0});
}

TEST(Normalize, NegativeLeadingUsesMinusP) {
    // -4x^2 + 5 -> 4x^2 - 5 -> z^2 - 5 at x = z/2
    const std::vector<double> raw{-4, 0, 5};
    const auto n = normalize(raw);
    EXPECT_EQ(n.side, Side::negative_leading);
    ASSERT_EQ(n.forms.size(), 1u);
    expect_form(n.forms[0], {-5});
}

TEST(Normalize, OddDegreeScalesLeadingCoefficient) {
    // -8x^3 at x = -z/2 gives z^3
    const std::vector<double> raw{-8, 0, 0, 1};
    const auto n = normalize(raw);
    ASSERT_EQ(n.forms.size(), 1u);
    expect_form(n.forms[0], {0, 1});
}

TEST(Classes, QuadraticBothSides) {
    SolveSession session({});
    const auto classes = covering_classes(session, spec("2", {5}));
    ASSERT_EQ(classes.size(), 2u);
    EXPECT_EQ(classes[0].side, Side::positive_leading);
    EXPECT_EQ(classes[0].aut_order, 2);
    EXPECT_NEAR(classes[0].representatives[0].coefficients[0], 5, 1e-10);
    EXPECT_EQ(classes[1].side, Side::negative_leading);
    EXPECT_EQ(classes[1].aut_order, 2);
    EXPECT_NEAR(classes[1].representatives[0].coefficients[0], -5, 1e-10);
    EXPECT_EQ(classes[0].class_sign, 1);
    EXPECT_EQ(real_hurwitz(session, spec("2", {5})).value, Rational(1));
}

TEST(Classes, CubicSingleClass) {
    SolveSession session({});
    const auto classes = covering_classes(session, spec("2,1|2,1", {-2, 2}));
    ASSERT_EQ(classes.size(), 1u);
    EXPECT_EQ(classes[0].aut_order, 1);
    EXPECT_EQ(classes[0].class_sign, -1);
    EXPECT_EQ(real_hurwitz(session, spec("2,1|2,1", {-2, 2})).value, Rational(-1));
}

TEST(Classes, MirrorPairAveragesToZero) {
    SolveSession session({});
    const auto s = spec("3,1|2,1,1", {28, 1});
    const auto classes = covering_classes(session, s);
    std::vector<const CoveringClass*> positive;
    for (const auto& c : classes) {
        if (c.side == Side::positive_leading) positive.push_back(&c);
    }
    ASSERT_EQ(positive.size(), 1u);
    EXPECT_EQ(positive[0]->representatives.size(), 2u);
    EXPECT_EQ(positive[0]->aut_order, 1);
    EXPECT_EQ(positive[0]->class_sign, 0);

    const auto hr = real_hurwitz(session, s);
    EXPECT_TRUE(hr.short_circuit);
    EXPECT_EQ(hr.value, Rational(0));
    EXPECT_EQ(hr.reason, "parity-odd branch");
    EXPECT_EQ(real_hurwitz(session, s, true).value, Rational(0));
}

TEST(Classes, NegativeSideMatchesReversedRealCount) {
    SolveSession session({});
    for (const auto& profiles : enumerate_specs(4, 3)) {
        const auto s = BranchSpec::with_default_values(profiles);
        if (s.degree() % 2) continue;
        std::size_t negative_reps = 0;
        for (const auto& c : covering_classes(session, s)) {
            if (c.side == Side::negative_leading) negative_reps += c.representatives.size();
            EXPECT_EQ(c.aut_order == 2, c.representatives.size() == 1);
        }
        EXPECT_EQ(negative_reps, session.real_polynomials(s.reversed()).size()) << s.key();
    }
}

TEST(Classes, TwoRepresentativeSignLaw) {
    SolveSession session({});
    for (const auto& profiles : enumerate_specs(4, 3)) {
        const auto s = BranchSpec::with_default_values(profiles);
        if (s.degree() % 2) continue;
        const bool even = floor_sum_parity(profiles) == Parity::even;
        for (const auto& c : covering_classes(session, s)) {
            if (c.representatives.size() != 2) continue;
            const int a = c.representatives[0].sign, b = c.representatives[1].sign;
            EXPECT_EQ(a == b, even) << s.key();
        }
    }
}

TEST(ClassSign, Rules) {
    CoveringClass c;
    c.representatives = {with_sign(4, {1, 1, 0}, 1), with_sign(4, {1, -1, 0}, -1)};
    EXPECT_THROW(class_sign(c, Parity::even, 4), SignMismatch);
    EXPECT_EQ(class_sign(c, Parity::odd, 4), 0);
    c.representatives = {with_sign(4, {1, 0, 0}, -1)};
    EXPECT_EQ(class_sign(c, Parity::odd, 4), -1);
    c.representatives = {with_sign(3, {-3, 0}, -1)};
    EXPECT_EQ(class_sign(c, Parity::even, 3), -1);
}

TEST(Classes, MissingMirrorIsAnError) {
    const std::vector<RealPolynomial> lone{with_sign(4, {1, 1, 0}, 1)};
    EXPECT_THROW(assemble_classes(4, Parity::even, lone, {}, 1e-6), Error);
}

TEST(Theorem, Examples) {
    SolveSession session({});
    auto r = theorem_check(session, spec("2,1|2,1", {-2, 2}));
    EXPECT_TRUE(r.pass);
    EXPECT_EQ(r.s, -1);
    EXPECT_EQ(r.hr, Rational(-1));

    r = theorem_check(session, spec("2,1,1|2,2", {2, 1}));
    EXPECT_TRUE(r.pass);
    EXPECT_EQ(r.s, 0);
    ASSERT_TRUE(r.half_sum.has_value());
    EXPECT_TRUE(*r.half_sum);
    EXPECT_EQ(r.s_reversed, 0);

    for (int d = 2; d <= 5; ++d) {
        r = theorem_check(session, BranchSpec::validate({Partition({d})}, {1}));
        EXPECT_TRUE(r.pass) << d;
        EXPECT_EQ(r.s, 1);
        EXPECT_EQ(r.hr, Rational(1));
    }
}

TEST(Theorem, CorruptSignFails) {
    SolveSession session({});
    const auto r = theorem_check(session, spec("2,1|2,1", {-2, 2}), {true});
    EXPECT_FALSE(r.pass);
    EXPECT_FALSE(r.equality);
    EXPECT_FALSE(r.failures.empty());
}

TEST(Theorem, HoldsOnSmallSweepWithPermutations) {
    SolveSession session({});
    for (const auto& base : enumerate_specs(4, 3)) {
        auto profiles = base;
        std::sort(profiles.begin(), profiles.end());
        const auto expected = real_hurwitz(session, BranchSpec::with_default_values(base)).value;
        do {
            for (const auto& config : value_configs(static_cast<int>(profiles.size()), 1)) {
                const auto s = BranchSpec::validate(profiles, config.values);
                const auto r = theorem_check(session, s);
                EXPECT_TRUE(r.pass) << s.key();
                EXPECT_EQ(r.hr, expected) << s.key();
            }
        } while (std::next_permutation(profiles.begin(), profiles.end()));
    }
}
