#include <doctest.h>

#include <map>
#include <random>

#include "gaugetop/homotopy.hpp"
#include "test_util.hpp"

using namespace gaugetop;

namespace {

std::map<int, long long> table(const GradedRanks& r) {
    return {r.entries().begin(), r.entries().end()};
}

// The worked SU(2) and E8 degree lists.
std::map<int, long long> ranks_at(const std::vector<int>& degrees, long long value) {
    std::map<int, long long> t;
    for (int d : degrees)
        t[d] += value;
    return t;
}

std::map<int, long long> merged(std::map<int, long long> a, const std::map<int, long long>& b) {
    for (const auto& [deg, rank] : b)
        a[deg] += rank;
    return a;
}

} // namespace

TEST_CASE("SU(2) rank tables") {
    GroupSpec g = parse_group_spec("SU(2)");
    for (long long b2 : {1LL, 2LL, 5LL, 22LL}) {
        CAPTURE(b2);
        BaseData base(b2);
        CHECK(table(ranks_g0(g, base)) == std::map<int, long long>{{1, b2}});
        CHECK(table(ranks_gauge(g, base)) == std::map<int, long long>{{1, b2}, {3, 1}});
        CHECK(table(ranks_b_tilde(g, base)) == std::map<int, long long>{{2, b2}});
        CHECK(table(ranks_b_star(g, base)) == std::map<int, long long>{{2, b2}, {4, 1}});
    }
    // b2 = 0: the based table dies entirely
    CHECK(ranks_g0(g, BaseData(0)).empty());
    CHECK(table(ranks_gauge(g, BaseData(0))) == std::map<int, long long>{{3, 1}});
}

TEST_CASE("E8 rank tables") {
    GroupSpec g = parse_group_spec("E8");
    const std::vector<int> g0_ones = {11, 19, 23, 31, 35, 43, 55};
    const std::vector<int> g0_b2s = {1, 13, 21, 25, 33, 37, 45, 57};
    const std::vector<int> gauge_ones = {3, 11, 15, 19, 27, 31, 39, 43, 47, 55, 59};
    const std::vector<int> gauge_twos = {23, 35};
    const std::vector<int> bt_ones = {12, 20, 24, 32, 36, 44, 56};
    const std::vector<int> bt_b2s = {2, 14, 22, 26, 34, 38, 46, 58};
    const std::vector<int> bs_ones = {4, 12, 16, 20, 28, 32, 40, 44, 48, 56, 60};
    const std::vector<int> bs_twos = {24, 36};

    for (long long b2 : {1LL, 3LL, 7LL}) {
        CAPTURE(b2);
        BaseData base(b2);
        CHECK(table(ranks_g0(g, base)) == merged(ranks_at(g0_ones, 1), ranks_at(g0_b2s, b2)));
        CHECK(table(ranks_gauge(g, base)) ==
              merged(merged(ranks_at(gauge_ones, 1), ranks_at(gauge_twos, 2)),
                     ranks_at(g0_b2s, b2)));
        CHECK(table(ranks_b_tilde(g, base)) == merged(ranks_at(bt_ones, 1), ranks_at(bt_b2s, b2)));
        CHECK(table(ranks_b_star(g, base)) ==
              merged(merged(ranks_at(bs_ones, 1), ranks_at(bs_twos, 2)), ranks_at(bt_b2s, b2)));
    }

    // b2 = 0 keeps only the cell contribution
    CHECK(table(ranks_b_tilde(g, BaseData(0))) == ranks_at(bt_ones, 1));
}

TEST_CASE("SU(3) gauge table, b2 = 2") {
    // j=1: 2*rk pi3 + rk pi5 = 3; j=3: 2*rk pi5 + rk pi3 = 3; j=5: rk pi5 = 1
    GroupSpec g = parse_group_spec("SU(3)");
    CHECK(table(ranks_gauge(g, BaseData(2))) ==
          std::map<int, long long>{{1, 3}, {3, 3}, {5, 1}});
}

TEST_CASE("classifying-space table") {
    CHECK(table(ranks_bg(parse_group_spec("SU(2)"))) == std::map<int, long long>{{4, 1}});
    CHECK(table(ranks_bg(parse_group_spec("E8"))) ==
          ranks_at({4, 16, 24, 28, 36, 40, 48, 60}, 1));
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        GroupSpec g = testutil::random_group(rng);
        CHECK(ranks_bg(g).total() == g.rank());
    }
}

TEST_CASE("connectivity report") {
    CHECK(connectivity_report(parse_group_spec("E8")) == Connectivity::Connected);
    CHECK(connectivity_report(parse_group_spec("SU(3)")) == Connectivity::Connected);
    CHECK(connectivity_report(parse_group_spec("SU(2)")) == Connectivity::FiniteUnknown);
    CHECK(connectivity_report(parse_group_spec("SU(3)xSp(2)")) == Connectivity::FiniteUnknown);
}

TEST_CASE("BaseData validation") {
    CHECK_THROWS_AS(BaseData(-1), std::invalid_argument);
    CHECK(BaseData(0).b2 == 0);
}

TEST_CASE("property: exactness, parity, totals, support") {
    std::mt19937 rng(20240518);
    for (int trial = 0; trial < 200; ++trial) {
        GroupSpec g = testutil::random_group(rng);
        BaseData base(testutil::random_b2(rng));
        CAPTURE(g.canonical_name());
        CAPTURE(base.b2);

        GradedRanks pi = rational_homotopy(g);
        GradedRanks g0 = ranks_g0(g, base);
        GradedRanks gauge = ranks_gauge(g, base);
        GradedRanks bt = ranks_b_tilde(g, base);
        GradedRanks bs = ranks_b_star(g, base);

        int top = 2 * g.max_exponent() + 4;
        for (int j = 1; j <= top; ++j) {
            CHECK(gauge.at(j) == g0.at(j) + pi.at(j));
            CHECK(bt.at(j) == g0.at(j - 1));
            CHECK(bs.at(j) == gauge.at(j - 1));
        }
        for (const auto& [deg, rank] : g0.entries())
            CHECK(deg % 2 == 1);
        for (const auto& [deg, rank] : gauge.entries())
            CHECK(deg % 2 == 1);
        for (const auto& [deg, rank] : bt.entries())
            CHECK(deg % 2 == 0);
        for (const auto& [deg, rank] : bs.entries())
            CHECK(deg % 2 == 0);

        long long rk = g.rank();
        long long s = static_cast<long long>(g.factor_count());
        CHECK(g0.total() == (base.b2 + 1) * rk - s);
        CHECK(gauge.total() == (base.b2 + 2) * rk - s);
        CHECK(bt.total() == (base.b2 + 1) * rk - s);
        CHECK(bs.total() == (base.b2 + 2) * rk - s);

        CHECK(gauge.max_degree() <= 2 * g.max_exponent() - 1);
        CHECK(g0.max_degree() <= 2 * g.max_exponent() - 1);
        CHECK(bt.max_degree() <= 2 * g.max_exponent());
        CHECK(bs.max_degree() <= 2 * g.max_exponent());
    }
}

TEST_CASE("graded ranks parity and degree guards") {
    GradedRanks gauge(Space::Gauge);
    CHECK_THROWS_AS(gauge.set(2, 1), std::logic_error);
    CHECK_THROWS_AS(gauge.set(0, 1), std::logic_error);
    CHECK_THROWS_AS(gauge.set(3, -1), std::logic_error);
    gauge.set(3, 2);
    CHECK(gauge.at(3) == 2);
    gauge.set(3, 0);
    CHECK(gauge.empty());
    CHECK(gauge.at(3) == 0);
    CHECK(gauge.at(-5) == 0);

    GradedRanks bt(Space::BTilde);
    CHECK_THROWS_AS(bt.set(3, 1), std::logic_error);
    bt.set(2, 1);
    CHECK(bt.total() == 1);
}
