/*
 * homotopy.hpp
 * ------------
 * Rational homotopy rank tables for the gauge groups and the quotients of
 * the space of (irreducible) connections of a principal G-bundle over a
 * compact simply connected four-manifold M.
 *
 * M enters only through b2(M): up to homotopy M is a wedge of b2 two-spheres
 * with a four-cell attached, and the rank formulas consume nothing else.
 * With rk pi_d(G) the rank table of the group itself, the tables are, for
 * j >= 1:
 *
 *   based gauge group  G0 :   b2 * rk pi_{j+2}(G) + rk pi_{j+4}(G)
 *   gauge group        .. :   b2 * rk pi_{j+2}(G) + rk pi_{j+4}(G) + rk pi_j(G)
 *   connections mod G0 B~ :   b2 * rk pi_{j+1}(G) + rk pi_{j+3}(G)
 *   irreducible mod all B* :  b2 * rk pi_{j+1}(G) + rk pi_{j+3}(G) + rk pi_{j-1}(G)
 *
 * The gauge-group table also serves the central quotient G/Z(G) of the gauge
 * group (same rational homotopy), and the B~ table also serves the
 * irreducible-connection variant B~* (weakly homotopy equivalent).
 */
#pragma once

#include "gaugetop/graded_ranks.hpp"
#include "gaugetop/lie_group.hpp"

namespace gaugetop {

// Topological data of the base four-manifold: its second Betti number.
struct BaseData {
    long long b2;

    explicit BaseData(long long b2_in) : b2(b2_in) {
        if (b2 < 0)
            throw std::invalid_argument("BaseData: b2 must be >= 0");
    }
};

GradedRanks ranks_g0(const GroupSpec& g, const BaseData& base);
GradedRanks ranks_gauge(const GroupSpec& g, const BaseData& base);
GradedRanks ranks_b_tilde(const GroupSpec& g, const BaseData& base);
GradedRanks ranks_b_star(const GroupSpec& g, const BaseData& base);

// rk pi_j(BG) = rk pi_{j-1}(G): one entry of rank nu(k) at each degree 2k.
GradedRanks ranks_bg(const GroupSpec& g);

// Rank table of the requested space (aliases report their canonical space's
// table under their own tag).
GradedRanks ranks_for_space(const GroupSpec& g, const BaseData& base, Space space);

// Connected when pi_4(G) = 0; otherwise pi_0 of the gauge groups is finite
// but its size is not determined here.
enum class Connectivity { Connected, FiniteUnknown };

Connectivity connectivity_report(const GroupSpec& g);

} // namespace gaugetop
