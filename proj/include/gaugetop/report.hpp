/*
 * report.hpp
 * ----------
 * Structured result bundle for one (group, b2, space) query, with renderers
 * for aligned text tables, a machine-readable JSON schema, and LaTeX in the
 * classical notation (wedge algebras for the group-like spaces, Q[...] for
 * the even-degree ones).
 *
 * JSON schema: one top-level object with keys "group", "b2", "space",
 * "homotopy_ranks", "algebra", "connectivity", "poincare", "caveats".
 * All numbers are exact integers; Poincare coefficients that exceed 64 bits
 * are emitted as decimal strings to stay exact.
 */
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gaugetop/series.hpp"
#include "gaugetop/verify.hpp"

namespace gaugetop {

enum class OutputFormat { Text, Json, Latex };

struct FactorInfo {
    std::string display_name;
    std::string canonical_name;
    Family family;
    int rank_param;
    long long rank;
    long long dimension;
    long long center_order;
    bool pi4_trivial;
    std::vector<int> exponents;

    bool operator==(const FactorInfo&) const = default;
};

struct Report {
    std::string group_canonical;
    std::vector<FactorInfo> factors;
    long long b2 = 0;
    Space requested_space = Space::Gauge;
    Space computed_space = Space::Gauge; // alias target; equals requested_space otherwise
    std::vector<std::pair<int, long long>> homotopy_ranks; // sorted by degree
    AlgebraKind algebra_kind = AlgebraKind::Polynomial;
    std::vector<std::pair<int, long long>> algebra_generators; // sorted by degree
    long long algebra_total = 0;
    Connectivity connectivity = Connectivity::Connected;
    std::optional<std::vector<BigInt>> poincare; // coefficients of t^0..t^N
    std::vector<std::string> caveats;

    bool operator==(const Report&) const = default;
};

struct ReportOptions {
    std::optional<int> series_max;  // include Poincare coefficients up to t^N
    std::optional<int> max_degree;  // default: 2 * max exponent + 2 (full support)
};

Report build_report(const GroupSpec& g, const BaseData& base, Space requested,
                    const ReportOptions& options = {});

std::string render_report(const Report& r, OutputFormat format);

// Inverse of the JSON renderer; parse_report_json(render_report(r, Json)) == r.
Report parse_report_json(const std::string& text);

std::string connectivity_name(Connectivity c);
Connectivity connectivity_from_name(const std::string& name);

// Rebuilds the group a report was computed from.
GroupSpec group_from_report(const Report& r);

} // namespace gaugetop
