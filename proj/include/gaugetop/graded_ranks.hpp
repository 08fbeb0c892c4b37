/*
 * graded_ranks.hpp
 * ----------------
 * GradedRanks: a finitely supported map degree -> rank, tagged by the space
 * it describes. Houses the rational homotopy rank tables of the group G, the
 * gauge groups, the connection-moduli quotients and the classifying space BG.
 *
 * Tags with odd-graded support: G, G0, Gauge, GaugeTilde.
 * Tags with even-graded support: BTilde, BTildeStar, BStar, BG.
 * Zero ranks are never stored; degrees are >= 1.
 */
#pragma once

#include <map>
#include <stdexcept>
#include <string>

namespace gaugetop {

enum class Space { G, G0, Gauge, GaugeTilde, BTilde, BTildeStar, BStar, BG };

// True for the group-like spaces, whose rational homotopy sits in odd degrees.
bool odd_graded(Space s);

// Flag-style name: "g", "g0", "gauge", "gauge-tilde", "b-tilde",
// "b-tilde-star", "b-star", "bg".
const std::string& space_name(Space s);

// Inverse of space_name; throws std::invalid_argument on unknown names.
Space space_from_name(const std::string& name);

class GradedRanks {
public:
    explicit GradedRanks(Space space) : space_(space) {}

    Space space() const { return space_; }

    // Rank at a degree; 0 for degrees outside the support (including j < 1).
    long long at(int degree) const;

    // Stores a rank. Rank 0 erases the entry. Degrees < 1 and entries on the
    // wrong parity for the tag are programming errors.
    void set(int degree, long long rank);
    void add(int degree, long long rank);

    const std::map<int, long long>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }

    // Sum of all ranks.
    long long total() const;

    // Largest degree with a nonzero rank; 0 for the empty table.
    int max_degree() const;

    bool operator==(const GradedRanks& other) const {
        return space_ == other.space_ && entries_ == other.entries_;
    }
    bool operator!=(const GradedRanks& other) const { return !(*this == other); }

private:
    Space space_;
    std::map<int, long long> entries_;
};

} // namespace gaugetop
