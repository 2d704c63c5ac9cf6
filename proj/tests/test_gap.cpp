#include "oracles.hpp"

#include "padelab/errors.hpp"
#include "padelab/gap_transfer.hpp"

#include <gtest/gtest.h>

using namespace padelab;
using oracle::G;
using oracle::P;

namespace {

DiskSampleSpec small_disk() {
    DiskSampleSpec l;
    l.radius = Rational(1, 2);
    l.samples = disk_samples(l.radius, 2, 8);
    return l;
}

UniversalTask one_near_minus_two() {
    UniversalTask t;
    t.target = RationalFunction(Polynomial::constant(1));
    t.K.samples = circle_samples(G("-2"), Rational(1, 2), 24);
    t.K.margin = Rational(1, 2);
    t.K.excluded = {2, 3};
    t.epsilon = Rational(1, 100);
    return t;
}

}  // namespace

TEST(GapSchedule, Validation) {
    GapSchedule ok = GapSchedule::with_minimal_weight({{2, 5}, {24, 60}});
    EXPECT_NO_THROW(ok.validate());
    EXPECT_THROW(GapSchedule::with_minimal_weight({{3, 3}}).validate(), PreconditionError);
    EXPECT_THROW(GapSchedule::with_minimal_weight({{2, 8}, {6, 20}}).validate(), PreconditionError);
    EXPECT_THROW(GapSchedule::with_minimal_weight({{2, 8}, {10, 20}}).validate(), PreconditionError);  // ratio drops
    GapSchedule flat = ok;
    flat.phi.assign(flat.phi.size(), 1);
    EXPECT_THROW(flat.validate(), PreconditionError);
}

TEST(GapBuild, EmptyTaskListIsT) {
    GapSchedule s = GapSchedule::with_minimal_weight({{2, 6}});
    GapBuild b = build_gap_series({2}, s, {}, P({"1", "1", "1"}), small_disk(), Rational(1, 10), 0);
    EXPECT_TRUE(b.series.gaps_are_zero());
    EXPECT_EQ(b.series.g.partial_sum(6), P({"1", "1", "1"}));
}

TEST(GapBuild, QuadrupledWindowsMeetTheTask) {
    GapSchedule s = GapSchedule::with_minimal_weight({{2, 8}, {24, 96}, {110, 440}});
    std::vector<std::size_t> mu{2, 24, 110};
    GapBuild b = build_gap_series(mu, s, {one_near_minus_two()}, P({"1", "1", "1"}), small_disk(), Rational(1, 10), 2);
    EXPECT_TRUE(b.series.gaps_are_zero());
    ASSERT_EQ(b.certificates.size(), 2u);
    for (const auto& c : b.certificates) {
        EXPECT_TRUE(c.within_epsilon);
        EXPECT_FALSE(b.series.g.at(c.p).is_zero());
    }
}

TEST(GapBuild, TooTightBlockEscalates) {
    GapSchedule s = GapSchedule::with_minimal_weight({{2, 8}, {10, 44}});
    UniversalTask t = one_near_minus_two();
    t.epsilon = Rational(1, 1000000);
    EXPECT_THROW(build_gap_series({2, 10}, s, {t}, P({"1", "1", "1"}), small_disk(), Rational(1, 10), 1),
                 EscalationError);
}

TEST(Transfer, ConstantOverLinear) {
    GapSeries g;
    g.schedule = GapSchedule::with_minimal_weight({{1, 4}});
    g.g = PowerSeries::from_polynomial(Polynomial::constant(1), 5);
    // a_1 = 0, so the only window is not a checkpoint.
    DenominatorSpec d = DenominatorSpec::from_roots({2});
    Transfer t = transfer_to_pade(g, d);
    EXPECT_TRUE(t.certificates.empty());
    PowerSeries expected({1, G("1/2"), G("1/4"), G("1/8"), G("1/16")});
    EXPECT_EQ(t.f, expected);
    PadeResult r = pade_via_system(t.f, 0, 1);
    EXPECT_EQ(r.numerator, Polynomial::constant(1));
    EXPECT_EQ(r.denominator, d.Q);
}

TEST(Transfer, BuiltSeriesMatchesAtEveryCheckpoint) {
    GapSchedule s = GapSchedule::with_minimal_weight({{2, 5}, {24, 60}, {80, 200}});
    GapBuild b = build_gap_series({2, 24, 80}, s, {one_near_minus_two()}, P({"1", "1", "1"}), small_disk(),
                                  Rational(1, 10), 2);
    DenominatorSpec d = DenominatorSpec::from_roots({2, 3});
    Transfer t = transfer_to_pade(b.series, d);
    ASSERT_EQ(t.certificates.size(), 3u);
    for (const auto& c : t.certificates) {
        EXPECT_TRUE(c.coprime);
        EXPECT_TRUE(c.exact_match);
        EXPECT_EQ(c.status, PadeStatus::Normal);
        EXPECT_EQ(c.denominator, d.Q);
    }
}

TEST(Transfer, RootOfPartialSumIsRejected) {
    GapSeries g;
    g.schedule = GapSchedule::with_minimal_weight({{1, 5}});
    g.g = PowerSeries::from_polynomial(P({"-2", "1"}), 6);  // S_1(g) vanishes at 2
    EXPECT_THROW(transfer_to_pade(g, DenominatorSpec::from_roots({2})), PreconditionError);
}

TEST(Transfer, NarrowWindowIsRejected) {
    GapSeries g;
    g.schedule = GapSchedule::with_minimal_weight({{2, 4}});
    g.g = PowerSeries::from_polynomial(P({"1", "1", "1"}), 5);
    EXPECT_THROW(transfer_to_pade(g, DenominatorSpec::from_roots({2, 3})), PreconditionError);
}

TEST(ScheduleForS, Diagonal) {
    std::vector<std::pair<std::size_t, std::size_t>> S;
    for (std::size_t k = 1; k <= 6; ++k) S.emplace_back(k, k);
    SSchedule ss = schedule_for_S(S, 6);
    ASSERT_EQ(ss.schedule.windows.size(), 2u);
    EXPECT_EQ(ss.schedule.windows[0], (std::pair<std::size_t, std::size_t>{1, 5}));
    EXPECT_EQ(ss.schedule.windows[1], (std::pair<std::size_t, std::size_t>{6, 30}));
    for (auto [p, q] : ss.schedule.windows) EXPECT_GE(q, 2 * p);
    EXPECT_EQ(ss.rows.size(), 6u);
    for (const auto& row : ss.rows) {
        EXPECT_TRUE(row.ok);
        EXPECT_LT(ss.schedule.phi[row.x], row.n);
    }
}

TEST(ScheduleForS, Row) {
    std::vector<std::pair<std::size_t, std::size_t>> S;
    for (std::size_t k = 1; k <= 8; ++k) S.emplace_back(k, 1);
    SSchedule ss = schedule_for_S(S, 8);
    for (auto [p, q] : ss.schedule.windows) EXPECT_GE(q - p, 1u);
    for (const auto& row : ss.rows) EXPECT_TRUE(row.ok);
}

TEST(ScheduleForS, EmptyHorizon) {
    SSchedule ss = schedule_for_S({{1, 1}}, 0);
    EXPECT_TRUE(ss.schedule.windows.empty());
    EXPECT_TRUE(ss.rows.empty());
}

TEST(ScheduleForS, GapSeriesSatisfiesSIdentity) {
    std::vector<std::pair<std::size_t, std::size_t>> S;
    for (std::size_t k = 1; k <= 6; ++k) S.emplace_back(k, k);
    SSchedule ss = schedule_for_S(S, 6);
    UniversalTask t = one_near_minus_two();
    t.epsilon = Rational(1, 10);
    t.target = RationalFunction(P({"1", "1"}));
    GapBuild b = build_gap_series(ss.mu, ss.schedule, {t}, P({"1", "1"}), small_disk(), Rational(1, 10), 1);
    auto checks = generalized_s_check(b.series, S);
    ASSERT_EQ(checks.size(), 2u);
    for (const auto& c : checks) EXPECT_TRUE(c.exact) << c.p << "/" << c.q;
}
