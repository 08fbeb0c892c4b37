/*
 * verify.hpp
 * ----------
 * Runnable consistency checks. The rank tables, the algebra structures and
 * the closed-form totals are tied together by a web of identities (exact
 * fibration sequences, degree shifts, tensor decompositions); this module
 * turns them into CheckReports so both the tests and the CLI (`--check`,
 * `selftest`) can exercise them on demand.
 */
#pragma once

#include <string>
#include <vector>

#include "gaugetop/free_algebra.hpp"

namespace gaugetop {

struct Check {
    std::string name;
    bool passed;
    std::string detail; // offending degree/value on failure, empty on pass
};

struct CheckReport {
    std::vector<Check> checks;

    void add(std::string name, bool passed, std::string detail = "");
    void merge(const CheckReport& other);
    bool all_passed() const;
    size_t failure_count() const;
};

// Data-level core shared by check_group_data and the fault-injection tests:
// validates an exponent multiset against a claimed rank, dimension and
// simple-factor count (sum of multiplicities = rank, sum of (2k-1) =
// dimension, minimal exponent 2 with multiplicity = factor count).
CheckReport check_exponent_data(const std::string& label, const std::vector<int>& exponents,
                                long long rank, long long dimension, long long factor_count);

// Classification-data integrity for each factor and for the whole group.
CheckReport check_group_data(const GroupSpec& g);

// Degree-wise identities up to max_degree: gauge(j) = g0(j) + rk pi_j(G),
// b~(j) = g0(j-1), b*(j) = gauge(j-1), generator multiset of B* = B~ u BG,
// and the parity constraints of every table.
CheckReport check_sequence_consistency(const GroupSpec& g, const BaseData& base, int max_degree);

// Summed generator counts against the closed forms, s = number of simple
// factors: sum gauge = (b2+2) rk G - s, sum b~ = (b2+1) rk G - s,
// sum b* = (b2+2) rk G - s (plus the verbatim "-1" forms when s = 1).
CheckReport check_totals(const GroupSpec& g, const BaseData& base);

// All three checks for one (group, b2) pair; sequence consistency runs to
// the full support bound plus slack.
CheckReport check_all(const GroupSpec& g, const BaseData& base);

// The built-in zoo: simple groups and small products crossed with a spread
// of b2 values (0, 1, 2, 3 and the K3 value 22). Returns one labelled
// report per (group, b2) pair.
std::vector<std::pair<std::string, CheckReport>> run_selftest();

} // namespace gaugetop
