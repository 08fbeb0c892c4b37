/*
 * Shared generators for the hand-rolled property tests.
 */
#pragma once

#include <random>
#include <string>
#include <vector>

#include "gaugetop/lie_group.hpp"

namespace gaugetop::testutil {

inline SimpleFactor random_factor(std::mt19937& rng) {
    auto pick = [&rng](int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(rng);
    };
    switch (pick(0, 8)) {
    case 0: return SimpleFactor::make(Family::A, pick(1, 8));
    case 1: return SimpleFactor::make(Family::B, pick(3, 8));
    case 2: return SimpleFactor::make(Family::C, pick(2, 8));
    case 3: return SimpleFactor::make(Family::D, pick(4, 8));
    case 4: return SimpleFactor::make(Family::G2, 2);
    case 5: return SimpleFactor::make(Family::F4, 4);
    case 6: return SimpleFactor::make(Family::E6, 6);
    case 7: return SimpleFactor::make(Family::E7, 7);
    default: return SimpleFactor::make(Family::E8, 8);
    }
}

inline GroupSpec random_group(std::mt19937& rng, int max_factors = 3) {
    std::vector<SimpleFactor> factors;
    int n = std::uniform_int_distribution<int>(1, max_factors)(rng);
    for (int i = 0; i < n; ++i)
        factors.push_back(random_factor(rng));
    return GroupSpec(std::move(factors));
}

inline long long random_b2(std::mt19937& rng) {
    // Weighted toward small values; 22 is the K3 surface.
    static const long long values[] = {0, 0, 1, 1, 2, 3, 4, 5, 22};
    return values[std::uniform_int_distribution<size_t>(0, 8)(rng)];
}

// Every simple group of rank <= 8, by canonical name.
inline std::vector<std::string> simple_groups_rank_le_8() {
    std::vector<std::string> names;
    for (int n = 2; n <= 9; ++n)
        names.push_back("SU(" + std::to_string(n) + ")");
    for (int n = 3; n <= 8; ++n)
        names.push_back("Spin(" + std::to_string(2 * n + 1) + ")"); // B3..B8
    for (int n = 2; n <= 8; ++n)
        names.push_back("Sp(" + std::to_string(n) + ")");
    for (int n = 4; n <= 8; ++n)
        names.push_back("Spin(" + std::to_string(2 * n) + ")"); // D4..D8
    names.insert(names.end(), {"G2", "F4", "E6", "E7", "E8"});
    return names;
}

} // namespace gaugetop::testutil
