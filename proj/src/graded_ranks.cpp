#include "gaugetop/graded_ranks.hpp"

#include <array>

namespace gaugetop {

bool odd_graded(Space s) {
    switch (s) {
    case Space::G:
    case Space::G0:
    case Space::Gauge:
    case Space::GaugeTilde:
        return true;
    default:
        return false;
    }
}

namespace {
const std::array<std::string, 8> kSpaceNames = {
    "g", "g0", "gauge", "gauge-tilde", "b-tilde", "b-tilde-star", "b-star", "bg"};
} // namespace

const std::string& space_name(Space s) {
    return kSpaceNames[static_cast<size_t>(s)];
}

Space space_from_name(const std::string& name) {
    for (size_t i = 0; i < kSpaceNames.size(); ++i) {
        if (kSpaceNames[i] == name)
            return static_cast<Space>(i);
    }
    throw std::invalid_argument("unknown space tag: " + name);
}

long long GradedRanks::at(int degree) const {
    auto it = entries_.find(degree);
    return it == entries_.end() ? 0 : it->second;
}

void GradedRanks::set(int degree, long long rank) {
    if (degree < 1)
        throw std::logic_error("GradedRanks: degree must be >= 1");
    if (rank < 0)
        throw std::logic_error("GradedRanks: rank must be >= 0");
    if (rank != 0 && (degree % 2 == 1) != odd_graded(space_))
        throw std::logic_error("GradedRanks: degree " + std::to_string(degree) +
                               " has the wrong parity for space " + space_name(space_));
    if (rank == 0)
        entries_.erase(degree);
    else
        entries_[degree] = rank;
}

void GradedRanks::add(int degree, long long rank) {
    set(degree, at(degree) + rank);
}

long long GradedRanks::total() const {
    long long sum = 0;
    for (const auto& [deg, rank] : entries_)
        sum += rank;
    return sum;
}

int GradedRanks::max_degree() const {
    return entries_.empty() ? 0 : entries_.rbegin()->first;
}

} // namespace gaugetop
