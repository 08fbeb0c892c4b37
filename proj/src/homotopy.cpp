#include "gaugetop/homotopy.hpp"

namespace gaugetop {

namespace {

// Shared core: rank at j is b2 * rk pi_{j+s2}(G) + rk pi_{j+s4}(G), plus the
// group's own rank at j when with_group_term is set (s2, s4 are the degree
// shifts of the two wedge/cell contributions).
GradedRanks shifted_table(const GroupSpec& g, long long b2, Space tag, int s2, int s4,
                          bool with_group_term) {
    GradedRanks group = rational_homotopy(g);
    GradedRanks out(tag);
    int top = 2 * g.max_exponent(); // nothing survives above the support bound
    for (int j = 1; j <= top; ++j) {
        long long r = b2 * group.at(j + s2) + group.at(j + s4);
        if (with_group_term)
            r += group.at(j);
        if (r != 0)
            out.set(j, r);
    }
    return out;
}

} // namespace

GradedRanks ranks_g0(const GroupSpec& g, const BaseData& base) {
    return shifted_table(g, base.b2, Space::G0, 2, 4, false);
}

GradedRanks ranks_gauge(const GroupSpec& g, const BaseData& base) {
    return shifted_table(g, base.b2, Space::Gauge, 2, 4, true);
}

GradedRanks ranks_b_tilde(const GroupSpec& g, const BaseData& base) {
    return shifted_table(g, base.b2, Space::BTilde, 1, 3, false);
}

GradedRanks ranks_b_star(const GroupSpec& g, const BaseData& base) {
    GradedRanks group = rational_homotopy(g);
    GradedRanks out(Space::BStar);
    int top = 2 * g.max_exponent();
    for (int j = 1; j <= top; ++j) {
        long long r = base.b2 * group.at(j + 1) + group.at(j + 3) + group.at(j - 1);
        if (r != 0)
            out.set(j, r);
    }
    return out;
}

GradedRanks ranks_bg(const GroupSpec& g) {
    GradedRanks out(Space::BG);
    for (int k : g.exponents())
        out.add(2 * k, 1);
    return out;
}

GradedRanks ranks_for_space(const GroupSpec& g, const BaseData& base, Space space) {
    switch (space) {
    case Space::G:
        return rational_homotopy(g);
    case Space::G0:
        return ranks_g0(g, base);
    case Space::Gauge:
        return ranks_gauge(g, base);
    case Space::GaugeTilde: {
        GradedRanks gauge = ranks_gauge(g, base);
        GradedRanks out(Space::GaugeTilde);
        for (const auto& [deg, rank] : gauge.entries())
            out.set(deg, rank);
        return out;
    }
    case Space::BTilde:
        return ranks_b_tilde(g, base);
    case Space::BTildeStar: {
        GradedRanks bt = ranks_b_tilde(g, base);
        GradedRanks out(Space::BTildeStar);
        for (const auto& [deg, rank] : bt.entries())
            out.set(deg, rank);
        return out;
    }
    case Space::BStar:
        return ranks_b_star(g, base);
    case Space::BG:
        return ranks_bg(g);
    }
    throw std::logic_error("bad Space");
}

Connectivity connectivity_report(const GroupSpec& g) {
    return g.pi4_trivial() ? Connectivity::Connected : Connectivity::FiniteUnknown;
}

} // namespace gaugetop
