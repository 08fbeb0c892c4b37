#include "gaugetop/free_algebra.hpp"

namespace gaugetop {

std::string algebra_kind_name(AlgebraKind kind) {
    switch (kind) {
    case AlgebraKind::Exterior: return "exterior";
    case AlgebraKind::Polynomial: return "polynomial";
    case AlgebraKind::MixedFree: return "mixed-free";
    }
    throw std::logic_error("bad AlgebraKind");
}

AlgebraKind algebra_kind_from_name(const std::string& name) {
    for (AlgebraKind k : {AlgebraKind::Exterior, AlgebraKind::Polynomial, AlgebraKind::MixedFree})
        if (algebra_kind_name(k) == name)
            return k;
    throw std::invalid_argument("unknown algebra kind: " + name);
}

FreeGradedAlgebra::FreeGradedAlgebra(AlgebraKind kind, std::map<int, long long> generators)
    : kind_(kind), generators_(std::move(generators)) {
    for (auto it = generators_.begin(); it != generators_.end();) {
        const auto [degree, count] = *it;
        if (degree < 1 || count < 0)
            throw std::invalid_argument("FreeGradedAlgebra: bad generator entry");
        if (count == 0) {
            it = generators_.erase(it);
            continue;
        }
        if (kind_ == AlgebraKind::Exterior && degree % 2 == 0)
            throw std::invalid_argument("FreeGradedAlgebra: exterior kind needs odd degrees");
        if (kind_ == AlgebraKind::Polynomial && degree % 2 == 1)
            throw std::invalid_argument("FreeGradedAlgebra: polynomial kind needs even degrees");
        ++it;
    }
}

FreeGradedAlgebra FreeGradedAlgebra::exterior(std::map<int, long long> generators) {
    return FreeGradedAlgebra(AlgebraKind::Exterior, std::move(generators));
}

FreeGradedAlgebra FreeGradedAlgebra::polynomial(std::map<int, long long> generators) {
    return FreeGradedAlgebra(AlgebraKind::Polynomial, std::move(generators));
}

FreeGradedAlgebra FreeGradedAlgebra::from_generators(std::map<int, long long> generators) {
    bool any_odd = false, any_even = false;
    for (const auto& [degree, count] : generators) {
        if (count == 0)
            continue;
        (degree % 2 == 1 ? any_odd : any_even) = true;
    }
    AlgebraKind kind = any_odd && any_even ? AlgebraKind::MixedFree
                       : any_odd          ? AlgebraKind::Exterior
                                          : AlgebraKind::Polynomial;
    return FreeGradedAlgebra(kind, std::move(generators));
}

long long FreeGradedAlgebra::count_at(int degree) const {
    auto it = generators_.find(degree);
    return it == generators_.end() ? 0 : it->second;
}

long long FreeGradedAlgebra::total_generators() const {
    long long total = 0;
    for (const auto& [degree, count] : generators_)
        total += count;
    return total;
}

MinimalModel minimal_model(const FreeGradedAlgebra& a) {
    return MinimalModel{a};
}

FreeGradedAlgebra exterior_from_ranks(const GradedRanks& ranks) {
    std::map<int, long long> gens(ranks.entries().begin(), ranks.entries().end());
    return FreeGradedAlgebra::exterior(std::move(gens));
}

FreeGradedAlgebra polynomial_from_ranks(const GradedRanks& ranks) {
    std::map<int, long long> gens(ranks.entries().begin(), ranks.entries().end());
    return FreeGradedAlgebra::polynomial(std::move(gens));
}

FreeGradedAlgebra cohomology_group(const GroupSpec& g) {
    return exterior_from_ranks(rational_homotopy(g));
}

FreeGradedAlgebra cohomology_g0_identity(const GroupSpec& g, const BaseData& base) {
    return exterior_from_ranks(ranks_g0(g, base));
}

FreeGradedAlgebra cohomology_gauge_identity(const GroupSpec& g, const BaseData& base) {
    return exterior_from_ranks(ranks_gauge(g, base));
}

FreeGradedAlgebra cohomology_b_tilde(const GroupSpec& g, const BaseData& base) {
    return polynomial_from_ranks(ranks_b_tilde(g, base));
}

FreeGradedAlgebra cohomology_b_star(const GroupSpec& g, const BaseData& base) {
    return polynomial_from_ranks(ranks_b_star(g, base));
}

FreeGradedAlgebra cohomology_bg(const GroupSpec& g) {
    return polynomial_from_ranks(ranks_bg(g));
}

DirectSumDescription cohomology_full_gauge(const GroupSpec& g, const BaseData& base) {
    CopyCount copies = connectivity_report(g) == Connectivity::Connected
                           ? CopyCount::ExactlyOne
                           : CopyCount::FiniteUnknown;
    return DirectSumDescription{cohomology_gauge_identity(g, base), copies};
}

FreeGradedAlgebra cohomology_for_space(const GroupSpec& g, const BaseData& base, Space space) {
    switch (space) {
    case Space::G:
        return cohomology_group(g);
    case Space::G0:
        return cohomology_g0_identity(g, base);
    case Space::Gauge:
    case Space::GaugeTilde:
        return cohomology_gauge_identity(g, base);
    case Space::BTilde:
    case Space::BTildeStar:
        return cohomology_b_tilde(g, base);
    case Space::BStar:
        return cohomology_b_star(g, base);
    case Space::BG:
        return cohomology_bg(g);
    }
    throw std::logic_error("bad Space");
}

} // namespace gaugetop
