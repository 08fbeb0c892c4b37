#include "gaugetop/verify.hpp"

#include <algorithm>
#include <sstream>

namespace gaugetop {

void CheckReport::add(std::string name, bool passed, std::string detail) {
    checks.push_back(Check{std::move(name), passed, std::move(detail)});
}

void CheckReport::merge(const CheckReport& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

bool CheckReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

size_t CheckReport::failure_count() const {
    size_t n = 0;
    for (const auto& c : checks)
        if (!c.passed)
            ++n;
    return n;
}

CheckReport check_exponent_data(const std::string& label, const std::vector<int>& exponents,
                                long long rank, long long dimension, long long factor_count) {
    CheckReport report;

    long long count = static_cast<long long>(exponents.size());
    report.add(label + ": exponent count = rank", count == rank,
               count == rank ? "" : "got " + std::to_string(count) + ", want " + std::to_string(rank));

    long long dim_sum = 0;
    for (int k : exponents)
        dim_sum += 2LL * k - 1;
    report.add(label + ": sum(2k-1) = dimension", dim_sum == dimension,
               dim_sum == dimension
                   ? ""
                   : "got " + std::to_string(dim_sum) + ", want " + std::to_string(dimension));

    long long twos = static_cast<long long>(std::count(exponents.begin(), exponents.end(), 2));
    bool min_ok = !exponents.empty() &&
                  *std::min_element(exponents.begin(), exponents.end()) == 2 &&
                  twos == factor_count;
    report.add(label + ": min exponent 2, multiplicity = factor count", min_ok,
               min_ok ? ""
                      : "multiplicity of 2 is " + std::to_string(twos) + ", want " +
                            std::to_string(factor_count));
    return report;
}

CheckReport check_group_data(const GroupSpec& g) {
    CheckReport report;
    for (const auto& f : g.factors())
        report.merge(check_exponent_data(f.canonical_name(), f.exponents(), f.rank(),
                                         f.dimension(), 1));
    report.merge(check_exponent_data(g.canonical_name(), g.exponents(), g.rank(), g.dimension(),
                                     static_cast<long long>(g.factor_count())));

    // rk G = sum_j rk pi_j(G)
    GradedRanks pi = rational_homotopy(g);
    report.add(g.canonical_name() + ": sum of homotopy ranks = rank", pi.total() == g.rank(),
               pi.total() == g.rank() ? ""
                                      : "got " + std::to_string(pi.total()) + ", want " +
                                            std::to_string(g.rank()));
    return report;
}

namespace {

bool parity_clean(const GradedRanks& t) {
    for (const auto& [deg, rank] : t.entries())
        if ((deg % 2 == 1) != odd_graded(t.space()) && rank != 0)
            return false;
    return true;
}

} // namespace

CheckReport check_sequence_consistency(const GroupSpec& g, const BaseData& base, int max_degree) {
    if (max_degree < 1)
        throw std::invalid_argument("check_sequence_consistency: max_degree must be >= 1");

    CheckReport report;
    GradedRanks pi = rational_homotopy(g);
    GradedRanks g0 = ranks_g0(g, base);
    GradedRanks gauge = ranks_gauge(g, base);
    GradedRanks bt = ranks_b_tilde(g, base);
    GradedRanks bs = ranks_b_star(g, base);

    auto degreewise = [&](const std::string& name, auto&& lhs, auto&& rhs) {
        for (int j = 1; j <= max_degree; ++j) {
            if (lhs(j) != rhs(j)) {
                report.add(name, false,
                           "mismatch at degree " + std::to_string(j) + ": " +
                               std::to_string(lhs(j)) + " != " + std::to_string(rhs(j)));
                return;
            }
        }
        report.add(name, true);
    };

    degreewise("gauge(j) = g0(j) + rk pi_j(G)",
               [&](int j) { return gauge.at(j); },
               [&](int j) { return g0.at(j) + pi.at(j); });
    degreewise("b-tilde(j) = g0(j-1)",
               [&](int j) { return bt.at(j); },
               [&](int j) { return g0.at(j - 1); });
    degreewise("b-star(j) = gauge(j-1)",
               [&](int j) { return bs.at(j); },
               [&](int j) { return gauge.at(j - 1); });

    // Tensor decomposition of B*: generator multisets satisfy B* = B~ u BG.
    {
        FreeGradedAlgebra lhs = cohomology_b_star(g, base);
        FreeGradedAlgebra bg = cohomology_bg(g);
        std::map<int, long long> expected = cohomology_b_tilde(g, base).generators();
        for (const auto& [deg, count] : bg.generators())
            expected[deg] += count;
        bool ok = lhs.generators() == expected;
        std::string detail;
        if (!ok) {
            for (const auto& [deg, count] : expected)
                if (lhs.count_at(deg) != count) {
                    detail = "mismatch at degree " + std::to_string(deg);
                    break;
                }
            if (detail.empty())
                detail = "extra generators on the B* side";
        }
        report.add("B* generators = B~ generators + BG generators", ok, detail);
    }

    bool parity_ok = parity_clean(pi) && parity_clean(g0) && parity_clean(gauge) &&
                     parity_clean(bt) && parity_clean(bs);
    report.add("parity constraints", parity_ok);
    return report;
}

CheckReport check_totals(const GroupSpec& g, const BaseData& base) {
    CheckReport report;
    long long rk = g.rank();
    long long s = static_cast<long long>(g.factor_count());
    long long b2 = base.b2;

    auto total_check = [&](const std::string& name, long long got, long long want) {
        report.add(name, got == want,
                   got == want ? ""
                               : "got " + std::to_string(got) + ", want " + std::to_string(want));
    };

    total_check("sum g0 = (b2+1) rk G - s", ranks_g0(g, base).total(), (b2 + 1) * rk - s);
    total_check("sum gauge = (b2+2) rk G - s", ranks_gauge(g, base).total(), (b2 + 2) * rk - s);
    total_check("sum b-tilde = (b2+1) rk G - s", ranks_b_tilde(g, base).total(), (b2 + 1) * rk - s);
    total_check("sum b-star = (b2+2) rk G - s", ranks_b_star(g, base).total(), (b2 + 2) * rk - s);

    if (s == 1) {
        // The closed forms as stated, valid for a single simple factor.
        total_check("closed form: sum gauge = (b2+2) rk G - 1", ranks_gauge(g, base).total(),
                    (b2 + 2) * rk - 1);
        total_check("closed form: sum b-tilde = (b2+1) rk G - 1", ranks_b_tilde(g, base).total(),
                    (b2 + 1) * rk - 1);
        total_check("closed form: sum b-star = (b2+2) rk G - 1", ranks_b_star(g, base).total(),
                    (b2 + 2) * rk - 1);
    }
    return report;
}

CheckReport check_all(const GroupSpec& g, const BaseData& base) {
    CheckReport report;
    report.merge(check_group_data(g));
    report.merge(check_sequence_consistency(g, base, 2 * g.max_exponent() + 2));
    report.merge(check_totals(g, base));
    return report;
}

std::vector<std::pair<std::string, CheckReport>> run_selftest() {
    const std::vector<std::string> zoo = {
        "SU(2)", "SU(3)", "SU(4)", "SU(5)", "SU(9)",
        "Sp(1)", "Sp(2)", "Sp(3)", "Sp(8)",
        "Spin(7)", "Spin(8)", "Spin(9)", "Spin(10)", "Spin(16)",
        "G2", "F4", "E6", "E7", "E8",
        "SU(2)xSU(2)", "SU(2)xE8", "SU(3)xE7", "Sp(2)xG2xSU(4)", "Spin(8)^2xSU(2)",
    };
    const std::vector<long long> b2_values = {0, 1, 2, 3, 22};

    std::vector<std::pair<std::string, CheckReport>> results;
    for (const auto& name : zoo) {
        GroupSpec g = parse_group_spec(name);
        for (long long b2 : b2_values) {
            std::ostringstream label;
            label << name << ", b2=" << b2;
            results.emplace_back(label.str(), check_all(g, BaseData(b2)));
        }
    }
    return results;
}

} // namespace gaugetop
