#include "gaugetop/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <iomanip>
#include <limits>
#include <sstream>

namespace gaugetop {

namespace {

Space alias_target(Space s) {
    if (s == Space::GaugeTilde)
        return Space::Gauge;
    if (s == Space::BTildeStar)
        return Space::BTilde;
    return s;
}

std::string space_description(Space s) {
    switch (s) {
    case Space::G: return "the structure group itself";
    case Space::G0: return "based gauge group, identity-component data";
    case Space::Gauge: return "gauge group, identity-component data";
    case Space::GaugeTilde: return "gauge group modulo the center";
    case Space::BTilde: return "connections modulo based gauge group";
    case Space::BTildeStar: return "irreducible connections modulo based gauge group";
    case Space::BStar: return "irreducible connections modulo full gauge group";
    case Space::BG: return "classifying space of the structure group";
    }
    throw std::logic_error("bad Space");
}

std::string latex_space_symbol(Space s) {
    switch (s) {
    case Space::G: return "H^{*}(G;\\mathbb{Q})";
    case Space::G0: return "H^{*}(\\mathcal{G}_{0}^{e};\\mathbb{Q})";
    case Space::Gauge: return "H^{*}(\\mathcal{G}^{e};\\mathbb{Q})";
    case Space::GaugeTilde: return "H^{*}(\\tilde{\\mathcal{G}}^{e};\\mathbb{Q})";
    case Space::BTilde: return "H^{*}(\\tilde{\\mathcal{B}};\\mathbb{Q})";
    case Space::BTildeStar: return "H^{*}(\\tilde{\\mathcal{B}}^{*};\\mathbb{Q})";
    case Space::BStar: return "H^{*}(\\mathcal{B}^{*};\\mathbb{Q})";
    case Space::BG: return "H^{*}(B_{G};\\mathbb{Q})";
    }
    throw std::logic_error("bad Space");
}

FactorInfo factor_info(const SimpleFactor& f) {
    return FactorInfo{f.display_name(), f.canonical_name(), f.family(),  f.rank_param(),
                      f.rank(),         f.dimension(),      f.center_order(),
                      f.pi4_trivial(),  f.exponents()};
}

} // namespace

std::string connectivity_name(Connectivity c) {
    return c == Connectivity::Connected ? "connected" : "finite-unknown";
}

Connectivity connectivity_from_name(const std::string& name) {
    if (name == "connected")
        return Connectivity::Connected;
    if (name == "finite-unknown")
        return Connectivity::FiniteUnknown;
    throw std::invalid_argument("unknown connectivity: " + name);
}

GroupSpec group_from_report(const Report& r) {
    std::vector<SimpleFactor> factors;
    for (const auto& f : r.factors)
        factors.push_back(SimpleFactor::make(f.family, f.rank_param, f.display_name));
    return GroupSpec(std::move(factors));
}

Report build_report(const GroupSpec& g, const BaseData& base, Space requested,
                    const ReportOptions& options) {
    Report r;
    r.group_canonical = g.canonical_name();
    for (const auto& f : g.factors())
        r.factors.push_back(factor_info(f));
    r.b2 = base.b2;
    r.requested_space = requested;
    r.computed_space = alias_target(requested);

    int max_degree = options.max_degree.value_or(2 * g.max_exponent() + 2);
    if (max_degree < 1)
        throw std::invalid_argument("build_report: max_degree must be >= 1");

    GradedRanks ranks = ranks_for_space(g, base, requested);
    for (const auto& [deg, rank] : ranks.entries())
        if (deg <= max_degree)
            r.homotopy_ranks.emplace_back(deg, rank);

    FreeGradedAlgebra algebra = cohomology_for_space(g, base, requested);
    r.algebra_kind = algebra.kind();
    for (const auto& [deg, count] : algebra.generators())
        if (deg <= max_degree)
            r.algebra_generators.emplace_back(deg, count);
    for (const auto& [deg, count] : r.algebra_generators)
        r.algebra_total += count;

    r.connectivity = connectivity_report(g);

    if (options.series_max) {
        int n = *options.series_max;
        if (n < 0)
            throw std::invalid_argument("build_report: series degree must be >= 0");
        RationalSeries series;
        for (const auto& [deg, count] : r.algebra_generators) {
            if (deg % 2 == 1)
                series.push_numerator_factor(deg, count);
            else
                series.push_denominator_factor(deg, count);
        }
        r.poincare = series.expand(n);
    }

    if (g.factor_count() > 1)
        r.caveats.push_back(
            "product of " + std::to_string(g.factor_count()) +
            " simple factors: summed generator counts follow the (b2+c)*rk(G) - s rule with s = " +
            std::to_string(g.factor_count()) + "; the classical -1 closed forms hold for simple G only");
    if (!g.pi4_trivial())
        r.caveats.push_back(
            "pi4(G) != 0: the gauge groups may be disconnected; pi0 is finite (size not "
            "determined here) and H* of the full gauge group is the direct sum of |pi0| copies "
            "of the identity-component algebra");
    return r;
}

/* ------------------------------------------------------------------ */
/* Text                                                                */
/* ------------------------------------------------------------------ */

namespace {

std::string join_ints(const std::vector<int>& xs) {
    std::string out;
    for (size_t i = 0; i < xs.size(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(xs[i]);
    }
    return out;
}

std::string render_text(const Report& r) {
    std::ostringstream out;
    out << "group:        " << r.group_canonical << "\n";
    for (const auto& f : r.factors) {
        out << "  - " << f.canonical_name;
        if (f.display_name != f.canonical_name)
            out << " (input: " << f.display_name << ")";
        out << "  [" << family_name(f.family);
        if (f.family == Family::A || f.family == Family::B || f.family == Family::C ||
            f.family == Family::D)
            out << f.rank_param;
        out << "]  rank " << f.rank << ", dim " << f.dimension << ", |Z| = " << f.center_order
            << ", exponents {" << join_ints(f.exponents) << "}\n";
    }
    out << "b2:           " << r.b2 << "\n";
    out << "space:        " << space_name(r.requested_space) << "  ("
        << space_description(r.requested_space);
    if (r.computed_space != r.requested_space)
        out << "; same rational data as " << space_name(r.computed_space);
    out << ")\n";
    out << "connectivity: "
        << (r.connectivity == Connectivity::Connected
                ? "connected (pi4(G) = 0)"
                : "pi0 of the gauge groups is finite; exact count not determined")
        << "\n";

    out << "homotopy ranks (degree: rank):\n";
    if (r.homotopy_ranks.empty())
        out << "  (all ranks zero)\n";
    int width = 1;
    for (const auto& [deg, rank] : r.homotopy_ranks)
        width = std::max(width, static_cast<int>(std::to_string(deg).size()));
    for (const auto& [deg, rank] : r.homotopy_ranks)
        out << "  " << std::setw(width) << deg << ": " << rank << "\n";

    if (r.algebra_generators.empty()) {
        out << "cohomology: H* = Q (trivial)\n";
    } else {
        out << "cohomology: " << algebra_kind_name(r.algebra_kind) << " algebra on "
            << r.algebra_total << " generators (degree: count):\n";
        for (const auto& [deg, count] : r.algebra_generators)
            out << "  " << std::setw(width) << deg << ": " << count << "\n";
    }

    if (r.poincare) {
        RationalSeries series;
        for (const auto& [deg, count] : r.algebra_generators) {
            if (deg % 2 == 1)
                series.push_numerator_factor(deg, count);
            else
                series.push_denominator_factor(deg, count);
        }
        out << "poincare series: " << series.str() << "\n";
        out << "betti numbers (t^0..t^" << (r.poincare->size() - 1) << "):";
        for (const auto& c : *r.poincare)
            out << " " << c.str();
        out << "\n";
    }

    if (!r.caveats.empty()) {
        out << "caveats:\n";
        for (const auto& c : r.caveats)
            out << "  - " << c << "\n";
    }
    return out.str();
}

/* ------------------------------------------------------------------ */
/* LaTeX                                                               */
/* ------------------------------------------------------------------ */

// One named block of generators: a letter plus the sorted list of degrees
// (with multiplicity) it covers.
struct LetterBlock {
    char letter;
    std::vector<int> degrees;
};

// Generator naming follows the classical worked examples: x for the
// b-tilde part, y for the BG part, z for the based part, w for the group's
// own generators.
std::vector<LetterBlock> letter_blocks(const Report& r) {
    GroupSpec g = group_from_report(r);
    BaseData base(r.b2);

    auto take = [&](char letter, const std::map<int, long long>& part) {
        LetterBlock block{letter, {}};
        for (const auto& [deg, count] : part)
            for (long long i = 0; i < count; ++i)
                block.degrees.push_back(deg);
        return block;
    };
    auto clip = [&](const GradedRanks& table) {
        // Honor the report's (possibly truncated) generator list.
        std::map<int, long long> part;
        for (const auto& [deg, count] : r.algebra_generators) {
            long long c = std::min(count, table.at(deg));
            if (c > 0)
                part[deg] = c;
        }
        return part;
    };
    auto rest = [&](const std::map<int, long long>& part) {
        std::map<int, long long> out;
        for (const auto& [deg, count] : r.algebra_generators) {
            auto it = part.find(deg);
            long long used = it == part.end() ? 0 : it->second;
            if (count > used)
                out[deg] = count - used;
        }
        return out;
    };

    std::vector<LetterBlock> blocks;
    switch (r.computed_space) {
    case Space::G:
    case Space::G0:
        blocks.push_back(take('z', rest({})));
        break;
    case Space::Gauge:
    case Space::GaugeTilde: {
        auto z_part = clip(ranks_g0(g, base));
        blocks.push_back(take('z', z_part));
        blocks.push_back(take('w', rest(z_part)));
        break;
    }
    case Space::BTilde:
    case Space::BTildeStar:
        blocks.push_back(take('x', rest({})));
        break;
    case Space::BStar: {
        auto x_part = clip(ranks_b_tilde(g, base));
        blocks.push_back(take('x', x_part));
        blocks.push_back(take('y', rest(x_part)));
        break;
    }
    case Space::BG:
        blocks.push_back(take('y', rest({})));
        break;
    }
    blocks.erase(std::remove_if(blocks.begin(), blocks.end(),
                                [](const LetterBlock& b) { return b.degrees.empty(); }),
                 blocks.end());
    return blocks;
}

std::string block_symbols(const LetterBlock& b) {
    size_t m = b.degrees.size();
    std::string L(1, b.letter);
    if (m == 1)
        return L;
    if (m == 2)
        return L + "_1, " + L + "_2";
    return L + "_1,\\ldots ," + L + "_{" + std::to_string(m) + "}";
}

std::string block_degrees(const LetterBlock& b) {
    std::string L(1, b.letter);
    size_t m = b.degrees.size();
    if (m == 1)
        return "\\deg " + L + " = " + std::to_string(b.degrees[0]);
    bool homogeneous = std::all_of(b.degrees.begin(), b.degrees.end(),
                                   [&](int d) { return d == b.degrees[0]; });
    if (homogeneous)
        return "\\deg " + L + "_i = " + std::to_string(b.degrees[0]);
    // Runs of equal degree over the sorted list.
    std::string out;
    size_t i = 0;
    while (i < m) {
        size_t j = i;
        while (j + 1 < m && b.degrees[j + 1] == b.degrees[i])
            ++j;
        if (!out.empty())
            out += ",\\ ";
        if (i == j)
            out += "\\deg " + L + "_{" + std::to_string(i + 1) + "} = " + std::to_string(b.degrees[i]);
        else
            out += "\\deg " + L + "_{" + std::to_string(i + 1) + "} = \\cdots = \\deg " + L + "_{" +
                   std::to_string(j + 1) + "} = " + std::to_string(b.degrees[i]);
        i = j + 1;
    }
    return out;
}

std::string render_latex(const Report& r) {
    std::ostringstream out;
    bool gauge_like = r.computed_space == Space::G0 || r.computed_space == Space::Gauge;
    if (gauge_like && r.connectivity == Connectivity::FiniteUnknown) {
        const char* full = r.computed_space == Space::G0 ? "\\mathcal{G}_{0}" : "\\mathcal{G}";
        const char* comp = r.computed_space == Space::G0 ? "\\mathcal{G}_{0}^{e}" : "\\mathcal{G}^{e}";
        out << "\\[\n"
            << "H^{*}(" << full << ";\\mathbb{Q}) = \\bigoplus_{|\\pi_{0}(" << full << ")|} H^{*}("
            << comp << ";\\mathbb{Q}) \\ .\n"
            << "\\]\n";
    }

    out << "\\[\n" << latex_space_symbol(r.requested_space) << " = ";
    if (r.algebra_generators.empty()) {
        out << "\\mathbb{Q} \\ .\n\\]\n";
        return out.str();
    }

    std::vector<LetterBlock> blocks = letter_blocks(r);
    std::string symbols;
    std::string degrees;
    for (const auto& b : blocks) {
        if (!symbols.empty())
            symbols += ", ";
        symbols += block_symbols(b);
        if (!degrees.empty())
            degrees += ",\\ ";
        degrees += block_degrees(b);
    }

    switch (r.algebra_kind) {
    case AlgebraKind::Exterior:
        out << "\\wedge (" << symbols << ")";
        break;
    case AlgebraKind::Polynomial:
        out << "\\mathbb{Q} [" << symbols << "]";
        break;
    case AlgebraKind::MixedFree:
        out << "\\Lambda (" << symbols << ")";
        break;
    }
    out << " , \\quad " << degrees << " \\ .\n\\]\n";

    if (r.poincare) {
        RationalSeries series;
        for (const auto& [deg, count] : r.algebra_generators) {
            if (deg % 2 == 1)
                series.push_numerator_factor(deg, count);
            else
                series.push_denominator_factor(deg, count);
        }
        std::string numer = "1";
        std::string denom;
        auto power = [](const char* sign, int deg, long long mult) {
            std::string s = "(1" + std::string(sign) + "t";
            if (deg > 1)
                s += "^{" + std::to_string(deg) + "}";
            s += ")";
            if (mult > 1)
                s += "^{" + std::to_string(mult) + "}";
            return s;
        };
        if (!series.numerator_factors().empty()) {
            numer.clear();
            for (const auto& [deg, mult] : series.numerator_factors())
                numer += power("+", deg, mult);
        }
        for (const auto& [deg, mult] : series.denominator_factors())
            denom += power("-", deg, mult);
        out << "\\[\nP(t) = ";
        if (denom.empty())
            out << numer;
        else
            out << "\\frac{" << numer << "}{" << denom << "}";
        out << " \\ .\n\\]\n";
    }
    return out.str();
}

/* ------------------------------------------------------------------ */
/* JSON                                                                */
/* ------------------------------------------------------------------ */

using nlohmann::json;

json coefficient_to_json(const BigInt& c) {
    static const BigInt lo = std::numeric_limits<long long>::min();
    static const BigInt hi = std::numeric_limits<long long>::max();
    if (c >= lo && c <= hi)
        return json(c.convert_to<long long>());
    return json(c.str()); // exceeds 64 bits; keep exact as a decimal string
}

BigInt coefficient_from_json(const json& j) {
    if (j.is_string())
        return BigInt(j.get<std::string>());
    if (j.is_number_unsigned())
        return BigInt(j.get<unsigned long long>());
    if (j.is_number_integer())
        return BigInt(j.get<long long>());
    throw std::invalid_argument("poincare coefficient must be an integer or decimal string");
}

std::string render_json(const Report& r) {
    json j;
    j["group"]["canonical"] = r.group_canonical;
    j["group"]["factors"] = json::array();
    for (const auto& f : r.factors) {
        json jf;
        jf["display_name"] = f.display_name;
        jf["canonical_name"] = f.canonical_name;
        jf["family"] = family_name(f.family);
        jf["rank_param"] = f.rank_param;
        jf["rank"] = f.rank;
        jf["dimension"] = f.dimension;
        jf["center_order"] = f.center_order;
        jf["pi4_trivial"] = f.pi4_trivial;
        jf["exponents"] = f.exponents;
        j["group"]["factors"].push_back(std::move(jf));
    }
    j["b2"] = r.b2;
    j["space"]["requested"] = space_name(r.requested_space);
    j["space"]["computed"] = space_name(r.computed_space);
    j["homotopy_ranks"] = json::array();
    for (const auto& [deg, rank] : r.homotopy_ranks)
        j["homotopy_ranks"].push_back(json::array({deg, rank}));
    j["algebra"]["kind"] = algebra_kind_name(r.algebra_kind);
    j["algebra"]["generators"] = json::array();
    for (const auto& [deg, count] : r.algebra_generators)
        j["algebra"]["generators"].push_back(json::array({deg, count}));
    j["algebra"]["total"] = r.algebra_total;
    j["connectivity"] = connectivity_name(r.connectivity);
    if (r.poincare) {
        j["poincare"] = json::array();
        for (const auto& c : *r.poincare)
            j["poincare"].push_back(coefficient_to_json(c));
    } else {
        j["poincare"] = nullptr;
    }
    j["caveats"] = r.caveats;
    return j.dump(2) + "\n";
}

} // namespace

Report parse_report_json(const std::string& text) {
    json j = json::parse(text);
    Report r;
    r.group_canonical = j.at("group").at("canonical").get<std::string>();
    for (const auto& jf : j.at("group").at("factors")) {
        FactorInfo f;
        f.display_name = jf.at("display_name").get<std::string>();
        f.canonical_name = jf.at("canonical_name").get<std::string>();
        f.family = family_from_name(jf.at("family").get<std::string>());
        f.rank_param = jf.at("rank_param").get<int>();
        f.rank = jf.at("rank").get<long long>();
        f.dimension = jf.at("dimension").get<long long>();
        f.center_order = jf.at("center_order").get<long long>();
        f.pi4_trivial = jf.at("pi4_trivial").get<bool>();
        f.exponents = jf.at("exponents").get<std::vector<int>>();
        r.factors.push_back(std::move(f));
    }
    r.b2 = j.at("b2").get<long long>();
    r.requested_space = space_from_name(j.at("space").at("requested").get<std::string>());
    r.computed_space = space_from_name(j.at("space").at("computed").get<std::string>());
    for (const auto& pair : j.at("homotopy_ranks"))
        r.homotopy_ranks.emplace_back(pair.at(0).get<int>(), pair.at(1).get<long long>());
    r.algebra_kind = algebra_kind_from_name(j.at("algebra").at("kind").get<std::string>());
    for (const auto& pair : j.at("algebra").at("generators"))
        r.algebra_generators.emplace_back(pair.at(0).get<int>(), pair.at(1).get<long long>());
    r.algebra_total = j.at("algebra").at("total").get<long long>();
    r.connectivity = connectivity_from_name(j.at("connectivity").get<std::string>());
    if (!j.at("poincare").is_null()) {
        std::vector<BigInt> coeffs;
        for (const auto& c : j.at("poincare"))
            coeffs.push_back(coefficient_from_json(c));
        r.poincare = std::move(coeffs);
    }
    r.caveats = j.at("caveats").get<std::vector<std::string>>();
    return r;
}

std::string render_report(const Report& r, OutputFormat format) {
    switch (format) {
    case OutputFormat::Text: return render_text(r);
    case OutputFormat::Json: return render_json(r);
    case OutputFormat::Latex: return render_latex(r);
    }
    throw std::logic_error("bad OutputFormat");
}

} // namespace gaugetop
