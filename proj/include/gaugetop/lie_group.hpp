/*
 * lie_group.hpp
 * -------------
 * Classification data for compact simply connected simple Lie groups and a
 * parser for product expressions over them.
 *
 * A GroupSpec is a formal product of simple factors drawn from the nine
 * families A, B, C, D, G2, F4, E6, E7, E8. Only these are admitted, so every
 * GroupSpec is semisimple, compact and simply connected by construction.
 * Low-rank coincidences (B1, B2, C1, D2, D3) are rewritten at construction
 * time, so each datum has exactly one home:
 *
 *   A: n >= 1,  B: n >= 3,  C: n >= 2,  D: n >= 4.
 *
 * Per-factor data: rank, dimension, exponents (the degrees k with a
 * cohomology generator of G in degree 2k-1), center order, and whether
 * pi_4 is trivial. The exponent multiset of every factor satisfies
 * sum(2k-1) = dim and |multiset| = rank.
 */
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gaugetop/graded_ranks.hpp"

namespace gaugetop {

enum class Family { A, B, C, D, G2, F4, E6, E7, E8 };

// Single-letter family label: "A", "B", ..., "E8".
std::string family_name(Family f);
Family family_from_name(const std::string& name);

class SimpleFactor {
public:
    // Validates the canonical rank ranges above; throws std::invalid_argument
    // outside them. display_name defaults to the canonical name.
    static SimpleFactor make(Family family, int rank_param, std::string display_name = "");

    Family family() const { return family_; }
    int rank_param() const { return rank_param_; }
    const std::string& display_name() const { return display_name_; }

    int rank() const;
    long long dimension() const;
    long long center_order() const;
    bool pi4_trivial() const;

    // Exponents sorted ascending, with multiplicity (D_n repeats n when n is even).
    std::vector<int> exponents() const;

    // "SU(n+1)", "Spin(2n+1)", "Sp(n)", "Spin(2n)", "G2", ..., "E8".
    std::string canonical_name() const;

    // Identity of the underlying group; display_name is presentation only.
    bool operator==(const SimpleFactor& other) const {
        return family_ == other.family_ && rank_param_ == other.rank_param_;
    }
    bool operator!=(const SimpleFactor& other) const { return !(*this == other); }

private:
    SimpleFactor(Family family, int rank_param, std::string display_name)
        : family_(family), rank_param_(rank_param), display_name_(std::move(display_name)) {}

    Family family_;
    int rank_param_;
    std::string display_name_;
};

class GroupSpec {
public:
    // Throws std::invalid_argument on an empty factor list.
    explicit GroupSpec(std::vector<SimpleFactor> factors);

    const std::vector<SimpleFactor>& factors() const { return factors_; }
    size_t factor_count() const { return factors_.size(); }

    long long rank() const;
    long long dimension() const;
    long long center_order() const;
    bool pi4_trivial() const;

    // Multiset union over factors, sorted ascending.
    std::vector<int> exponents() const;
    int max_exponent() const;

    // Factor canonical names joined by "x", e.g. "SU(2)xE8".
    std::string canonical_name() const;

    bool operator==(const GroupSpec& other) const { return factors_ == other.factors_; }
    bool operator!=(const GroupSpec& other) const { return !(*this == other); }

private:
    std::vector<SimpleFactor> factors_;
};

// Parse errors. UnsupportedGroupError covers groups that exist but fall
// outside the supported class (not simply connected or not semisimple);
// RankOutOfRangeError covers rank parameters with no compact simple group
// behind them; GroupSyntaxError covers everything malformed.
struct GroupParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct GroupSyntaxError : GroupParseError {
    using GroupParseError::GroupParseError;
};
struct UnsupportedGroupError : GroupParseError {
    using GroupParseError::GroupParseError;
};
struct RankOutOfRangeError : GroupParseError {
    using GroupParseError::GroupParseError;
};

/*
 * Grammar (case-insensitive, whitespace ignored):
 *
 *   expr := term (("x" | "*") term)*
 *   term := atom ("^" INT)?
 *   atom := "SU(" INT ")" | "Spin(" INT ")" | "Sp(" INT ")"
 *         | "G2" | "F4" | "E6" | "E7" | "E8"
 *
 * Canonicalization: SU(n) -> A_{n-1}; Sp(1) -> A1; Spin(3) -> A1,
 * Spin(4) -> A1 x A1, Spin(5) -> C2, Spin(6) -> A3; higher Spin to B or D.
 *
 * U(n), SO(n), O(n), T^k and the adjoint forms PSU/PU/PSO/PSp are rejected
 * with UnsupportedGroupError: they are not simply connected (or not
 * semisimple), and the rank and cohomology formulas of this library fail
 * for them.
 */
GroupSpec parse_group_spec(std::string_view text);

// rk pi_{2k-1}(G) = nu(k), the multiplicity of k in exponents(g); all even
// degrees vanish. Tagged Space::G.
GradedRanks rational_homotopy(const GroupSpec& g);

} // namespace gaugetop
