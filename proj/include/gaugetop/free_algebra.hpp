/*
 * free_algebra.hpp
 * ----------------
 * Free graded-commutative algebra descriptions for the cohomology of the
 * gauge groups and connection-moduli spaces. Everything here is free: the
 * identity component of the gauge group is an H-space with odd-degree
 * generators (exterior), the moduli quotients and BG live in even degrees
 * (polynomial). Generator counts at each degree equal the corresponding
 * rational homotopy ranks, so the algebras are read off the rank tables.
 *
 * All these algebras are their own minimal models with zero differential;
 * the spaces are formal in the sense of Sullivan.
 */
#pragma once

#include <map>
#include <optional>

#include "gaugetop/homotopy.hpp"

namespace gaugetop {

enum class AlgebraKind { Exterior, Polynomial, MixedFree };

std::string algebra_kind_name(AlgebraKind kind);
AlgebraKind algebra_kind_from_name(const std::string& name);

class FreeGradedAlgebra {
public:
    // Kind must be consistent with the generator parities (all odd for
    // Exterior, all even for Polynomial); throws std::invalid_argument
    // otherwise. Zero counts are dropped; degrees must be >= 1.
    static FreeGradedAlgebra exterior(std::map<int, long long> generators);
    static FreeGradedAlgebra polynomial(std::map<int, long long> generators);

    // Derives the kind: all-odd -> Exterior, all-even -> Polynomial,
    // otherwise MixedFree. The empty set derives Polynomial (the trivial
    // algebra Q).
    static FreeGradedAlgebra from_generators(std::map<int, long long> generators);

    AlgebraKind kind() const { return kind_; }
    const std::map<int, long long>& generators() const { return generators_; }
    long long count_at(int degree) const;
    long long total_generators() const;
    bool trivial() const { return generators_.empty(); }

    bool operator==(const FreeGradedAlgebra& other) const {
        return kind_ == other.kind_ && generators_ == other.generators_;
    }
    bool operator!=(const FreeGradedAlgebra& other) const { return !(*this == other); }

private:
    FreeGradedAlgebra(AlgebraKind kind, std::map<int, long long> generators);

    AlgebraKind kind_;
    std::map<int, long long> generators_;
};

// Minimal model of a formal space with free cohomology: the algebra itself.
// The differential is identically zero; that is the formality statement.
struct MinimalModel {
    FreeGradedAlgebra algebra;

    static constexpr bool differential_is_zero() { return true; }
};

MinimalModel minimal_model(const FreeGradedAlgebra& a);

// H*(full gauge group) as a direct sum of copies of the identity-component
// algebra, one per connected component. The copy count is 1 exactly when
// pi_4(G) = 0; otherwise it is finite but undetermined.
enum class CopyCount { ExactlyOne, FiniteUnknown };

struct DirectSumDescription {
    FreeGradedAlgebra summand;
    CopyCount copies;
};

// Exterior/polynomial algebra with one generator of degree j per unit of
// rank at j. The rank table's parity tag decides which constructor fits.
FreeGradedAlgebra exterior_from_ranks(const GradedRanks& ranks);
FreeGradedAlgebra polynomial_from_ranks(const GradedRanks& ranks);

// H*(G) itself: exterior on generators of degree 2k-1 per exponent k.
FreeGradedAlgebra cohomology_group(const GroupSpec& g);

// H* of the identity component of the based gauge group (an H-space, so
// exterior on its rank table).
FreeGradedAlgebra cohomology_g0_identity(const GroupSpec& g, const BaseData& base);

// H* of the identity component of the gauge group.
FreeGradedAlgebra cohomology_gauge_identity(const GroupSpec& g, const BaseData& base);

// H*(B~); also serves B~* (weakly homotopy equivalent).
FreeGradedAlgebra cohomology_b_tilde(const GroupSpec& g, const BaseData& base);

// H*(B*); its generator multiset is the disjoint union of those of B~ and BG.
FreeGradedAlgebra cohomology_b_star(const GroupSpec& g, const BaseData& base);

// H*(BG): polynomial on one degree-2k generator per exponent k.
FreeGradedAlgebra cohomology_bg(const GroupSpec& g);

// Full (possibly disconnected) gauge group.
DirectSumDescription cohomology_full_gauge(const GroupSpec& g, const BaseData& base);

// Cohomology algebra of the requested space.
FreeGradedAlgebra cohomology_for_space(const GroupSpec& g, const BaseData& base, Space space);

} // namespace gaugetop
