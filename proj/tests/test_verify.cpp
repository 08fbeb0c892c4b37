#include <doctest.h>

#include "gaugetop/verify.hpp"

using namespace gaugetop;

namespace {

const Check* find_check(const CheckReport& r, const std::string& fragment) {
    for (const auto& c : r.checks)
        if (c.name.find(fragment) != std::string::npos)
            return &c;
    return nullptr;
}

} // namespace

TEST_CASE("group data checks pass for the worked groups") {
    CHECK(check_group_data(parse_group_spec("E8")).all_passed());
    CHECK(check_group_data(parse_group_spec("SU(2)")).all_passed());
    CHECK(check_group_data(parse_group_spec("Spin(11)xSp(3)xG2")).all_passed());
}

TEST_CASE("fault injection: corrupted exponent table is caught") {
    // pretend SU(3) had exponents {2,7}: the rank count survives but
    // sum(2k-1) = 3 + 13 = 16 != 8
    CheckReport r = check_exponent_data("SU(3)", {2, 7}, 2, 8, 1);
    CHECK_FALSE(r.all_passed());
    CHECK(r.failure_count() == 1);
    const Check* dim = find_check(r, "sum(2k-1) = dimension");
    REQUIRE(dim != nullptr);
    CHECK_FALSE(dim->passed);
    CHECK(dim->detail.find("16") != std::string::npos);
    const Check* count = find_check(r, "exponent count = rank");
    REQUIRE(count != nullptr);
    CHECK(count->passed);

    // missing minimal exponent
    CheckReport r2 = check_exponent_data("bad", {3, 4}, 2, 10, 1);
    const Check* min = find_check(r2, "min exponent 2");
    REQUIRE(min != nullptr);
    CHECK_FALSE(min->passed);
}

TEST_CASE("sequence consistency on the worked examples") {
    CHECK(check_sequence_consistency(parse_group_spec("E8"), BaseData(3), 60).all_passed());
    CHECK(check_sequence_consistency(parse_group_spec("SU(2)"), BaseData(22), 10).all_passed());
    CHECK(check_sequence_consistency(parse_group_spec("SU(3)xE7"), BaseData(5), 40).all_passed());
    CHECK_THROWS_AS(check_sequence_consistency(parse_group_spec("SU(2)"), BaseData(1), 0),
                    std::invalid_argument);
}

TEST_CASE("totals") {
    // E8, b2=3: 8*3 + 15 = 39 generators for the gauge group
    CheckReport e8 = check_totals(parse_group_spec("E8"), BaseData(3));
    CHECK(e8.all_passed());
    REQUIRE(find_check(e8, "closed form") != nullptr); // s = 1 includes the -1 forms

    for (long long b2 : {0LL, 1LL, 7LL, 22LL}) {
        CheckReport su2 = check_totals(parse_group_spec("SU(2)"), BaseData(b2));
        CHECK(su2.all_passed());
    }

    // two factors: only the generalized -s form applies
    CheckReport prod = check_totals(parse_group_spec("SU(2)xSU(2)"), BaseData(1));
    CHECK(prod.all_passed());
    CHECK(find_check(prod, "closed form") == nullptr);
    const Check* gauge_total = find_check(prod, "sum gauge");
    REQUIRE(gauge_total != nullptr);
    CHECK(gauge_total->passed); // 3*2 - 2 = 4
}

TEST_CASE("check_all and the zoo") {
    CHECK(check_all(parse_group_spec("E8"), BaseData(3)).all_passed());
    for (const auto& [label, report] : run_selftest()) {
        CAPTURE(label);
        CHECK(report.all_passed());
    }
}
