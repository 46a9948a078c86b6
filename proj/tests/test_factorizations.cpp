#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "oracles.hpp"
#include "realhur/errors.hpp"
#include "realhur/factorizations.hpp"
#include "realhur/permutation.hpp"
#include "realhur/verify.hpp"

using namespace realhur;

namespace {

std::vector<std::vector<int>> types_of(const std::vector<Partition>& profiles) {
    std::vector<std::vector<int>> out;
    for (const auto& p : profiles) out.emplace_back(p.parts().begin(), p.parts().end());
    return out;
}

std::uint64_t count(const char* profiles, bool reorder = true) {
    CountOptions o;
    o.reorder_for_pruning = reorder;
    return count_factorizations(parse_profile_list(profiles), o).N;
}

}  // namespace

TEST(Perm, CycleType) {
    EXPECT_EQ(cycle_type(Perm::identity(4)), Partition::parse("1,1,1,1"));
    EXPECT_EQ(cycle_type(Perm::full_cycle(4)), Partition::parse("4"));
    EXPECT_EQ(cycle_type(Perm::from_cycles(4, {{1, 3}})), Partition::parse("2,1,1"));
}

TEST(Perm, CompositionAndInverse) {
    const auto a = Perm::from_cycles(3, {{1, 2}});
    const auto b = Perm::from_cycles(3, {{2, 3}});
    // a(b(1)) = a(1) = 2, a(b(2)) = a(3) = 3, a(b(3)) = a(2) = 1
    EXPECT_EQ(a * b, Perm::from_cycles(3, {{1, 2, 3}}));
    EXPECT_EQ(a * b, Perm::full_cycle(3));
    const auto c = Perm::full_cycle(5);
    EXPECT_EQ(c * c.inverse(), Perm::identity(5));
    EXPECT_EQ(c.to_string(), "(1 2 3 4 5)");
    EXPECT_THROW(Perm({0, 0, 1}), ValidationError);
}

TEST(Perm, EnumerateClassSizes) {
    EXPECT_EQ(enumerate_class(3, Partition::parse("2,1")).size(), 3u);
    EXPECT_EQ(enumerate_class(4, Partition::parse("2,2")).size(), 3u);
    EXPECT_EQ(enumerate_class(4, Partition::parse("4")).size(), 6u);
}

TEST(Perm, EnumerateClassMatchesBruteForce) {
    for (int d = 1; d <= 6; ++d) {
        std::map<std::vector<int>, std::size_t> by_type;
        oracle::Word w(static_cast<std::size_t>(d));
        std::iota(w.begin(), w.end(), 0);
        do {
            ++by_type[oracle::cycle_lengths(w)];
        } while (std::next_permutation(w.begin(), w.end()));
        for (const auto& lambda : partitions_of(d)) {
            const auto members = enumerate_class(d, lambda);
            const std::vector<int> key(lambda.parts().begin(), lambda.parts().end());
            EXPECT_EQ(members.size(), by_type[key]) << lambda.to_string();
            EXPECT_EQ(class_size(lambda), by_type[key]);
            std::set<std::vector<int>> distinct;
            for (const auto& p : members) {
                EXPECT_EQ(cycle_type(p), lambda);
                distinct.emplace(p.images().begin(), p.images().end());
            }
            EXPECT_EQ(distinct.size(), members.size());
        }
    }
}

TEST(Perm, EnumerateClassDeterministic) {
    EXPECT_EQ(enumerate_class(5, Partition::parse("2,2,1")), enumerate_class(5, Partition::parse("2,2,1")));
}

TEST(Factorizations, ClosedFormExamples) {
    auto c = count_factorizations(parse_profile_list("2,1|2,1"));
    EXPECT_EQ(c.N, 3u);
    EXPECT_EQ(c.H, Rational(1));
    c = count_factorizations(parse_profile_list("3,1|2,1,1"));
    EXPECT_EQ(c.N, 4u);
    EXPECT_EQ(c.H, Rational(1));
    c = count_factorizations(parse_profile_list("2,1,1|2,2"));
    EXPECT_EQ(c.N, 2u);
    EXPECT_EQ(c.H, Rational(1, 2));
}

TEST(Factorizations, SingleFullCycle) {
    for (int d = 2; d <= 7; ++d) {
        auto c = count_factorizations(std::vector<Partition>{Partition({d})});
        EXPECT_EQ(c.N, 1u);
        EXPECT_EQ(c.H, Rational(1, d));
    }
}

TEST(Factorizations, TranspositionCountsAreCayley) {
    for (int d = 3; d <= 6; ++d) {
        std::vector<int> parts(static_cast<std::size_t>(d - 1), 1);
        parts[0] = 2;
        std::vector<Partition> profiles(static_cast<std::size_t>(d - 1), Partition(parts));
        std::uint64_t cayley = 1;
        for (int i = 0; i < d - 2; ++i) cayley *= static_cast<std::uint64_t>(d);
        EXPECT_EQ(count_factorizations(profiles).N, cayley) << d;
    }
}

TEST(Factorizations, MatchesBruteForceForSmallDegrees) {
    for (const auto& profiles : enumerate_specs(4, 3)) {
        const int d = profiles.front().degree();
        const auto expected = oracle::brute_force_factorizations(d, types_of(profiles));
        EXPECT_EQ(count_factorizations(profiles).N, expected) << format_profile_list(profiles);
    }
}

TEST(Factorizations, OrderInvariance) {
    for (const auto& base : enumerate_specs(5, 4)) {
        auto profiles = base;
        std::sort(profiles.begin(), profiles.end());
        const auto expected = count(format_profile_list(profiles).c_str(), false);
        do {
            CountOptions o;
            o.reorder_for_pruning = false;
            EXPECT_EQ(count_factorizations(profiles, o).N, expected) << format_profile_list(profiles);
        } while (std::next_permutation(profiles.begin(), profiles.end()));
    }
}

TEST(Factorizations, ConjugatedBaseCycle) {
    const auto tau = Perm::from_cycles(5, {{1, 4}, {2, 5, 3}});
    CountOptions o;
    o.base_cycle = tau * Perm::full_cycle(5) * tau.inverse();
    for (const auto& profiles : enumerate_specs(5, 4)) {
        if (profiles.front().degree() != 5) continue;
        EXPECT_EQ(count_factorizations(profiles, o).N, count_factorizations(profiles).N)
            << format_profile_list(profiles);
    }
}

TEST(Factorizations, WorkerCountInvariance) {
    const auto profiles = parse_profile_list("2,1,1,1,1|2,1,1,1,1|2,1,1,1,1|2,1,1,1,1|2,1,1,1,1");
    CountOptions o;
    o.workers = 3;
    EXPECT_EQ(count_factorizations(profiles, o).N, count_factorizations(profiles).N);
    EXPECT_EQ(count_factorizations(profiles, o).N, 1296u);
}

TEST(Factorizations, Budget) {
    CountOptions o;
    o.max_visits = 10;
    EXPECT_THROW(count_factorizations(parse_profile_list("2,1,1,1|2,1,1,1|2,1,1,1|2,1,1,1"), o), BudgetExceeded);
}

TEST(Factorizations, RejectsInvalidProfiles) {
    EXPECT_THROW(count_factorizations(parse_profile_list("2,2|2,2")), ValidationError);
    EXPECT_THROW(count_factorizations(parse_profile_list("2,1|2,2")), ValidationError);
}
