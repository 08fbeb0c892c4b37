#include "gaugetop/lie_group.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace gaugetop {

std::string family_name(Family f) {
    switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::G2: return "G2";
    case Family::F4: return "F4";
    case Family::E6: return "E6";
    case Family::E7: return "E7";
    case Family::E8: return "E8";
    }
    throw std::logic_error("bad Family");
}

Family family_from_name(const std::string& name) {
    for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::G2,
                     Family::F4, Family::E6, Family::E7, Family::E8}) {
        if (family_name(f) == name)
            return f;
    }
    throw std::invalid_argument("unknown family: " + name);
}

SimpleFactor SimpleFactor::make(Family family, int rank_param, std::string display_name) {
    int min_rank = 1;
    switch (family) {
    case Family::A: min_rank = 1; break;
    case Family::B: min_rank = 3; break; // B1 -> A1, B2 -> C2
    case Family::C: min_rank = 2; break; // C1 -> A1
    case Family::D: min_rank = 4; break; // D2 -> A1xA1, D3 -> A3
    case Family::G2: min_rank = 2; break;
    case Family::F4: min_rank = 4; break;
    case Family::E6: min_rank = 6; break;
    case Family::E7: min_rank = 7; break;
    case Family::E8: min_rank = 8; break;
    }
    bool exceptional = family != Family::A && family != Family::B &&
                       family != Family::C && family != Family::D;
    if (exceptional ? rank_param != min_rank : rank_param < min_rank)
        throw std::invalid_argument("SimpleFactor: rank parameter " + std::to_string(rank_param) +
                                    " out of canonical range for family " + family_name(family));
    SimpleFactor factor(family, rank_param, std::move(display_name));
    if (factor.display_name_.empty())
        factor.display_name_ = factor.canonical_name();
    return factor;
}

int SimpleFactor::rank() const {
    return rank_param_;
}

long long SimpleFactor::dimension() const {
    long long n = rank_param_;
    switch (family_) {
    case Family::A: return n * (n + 2);
    case Family::B: return n * (2 * n + 1);
    case Family::C: return n * (2 * n + 1);
    case Family::D: return n * (2 * n - 1);
    case Family::G2: return 14;
    case Family::F4: return 52;
    case Family::E6: return 78;
    case Family::E7: return 133;
    case Family::E8: return 248;
    }
    throw std::logic_error("bad Family");
}

long long SimpleFactor::center_order() const {
    switch (family_) {
    case Family::A: return rank_param_ + 1;
    case Family::B: return 2;
    case Family::C: return 2;
    case Family::D: return 4;
    case Family::G2: return 1;
    case Family::F4: return 1;
    case Family::E6: return 3;
    case Family::E7: return 2;
    case Family::E8: return 1;
    }
    throw std::logic_error("bad Family");
}

// pi_4 is nontrivial exactly for A1 and the symplectic family; Spin(5) is
// covered through its C2 canonical form.
bool SimpleFactor::pi4_trivial() const {
    if (family_ == Family::C)
        return false;
    if (family_ == Family::A && rank_param_ == 1)
        return false;
    return true;
}

std::vector<int> SimpleFactor::exponents() const {
    int n = rank_param_;
    std::vector<int> exps;
    switch (family_) {
    case Family::A: // 2, 3, ..., n+1
        for (int k = 2; k <= n + 1; ++k)
            exps.push_back(k);
        break;
    case Family::B: // 2, 4, ..., 2n
    case Family::C:
        for (int k = 2; k <= 2 * n; k += 2)
            exps.push_back(k);
        break;
    case Family::D: // 2, 4, ..., 2n-2 together with n
        for (int k = 2; k <= 2 * n - 2; k += 2)
            exps.push_back(k);
        exps.push_back(n);
        std::sort(exps.begin(), exps.end());
        break;
    case Family::G2: exps = {2, 6}; break;
    case Family::F4: exps = {2, 6, 8, 12}; break;
    case Family::E6: exps = {2, 5, 6, 8, 9, 12}; break;
    case Family::E7: exps = {2, 6, 8, 10, 12, 14, 18}; break;
    case Family::E8: exps = {2, 8, 12, 14, 18, 20, 24, 30}; break;
    }
    return exps;
}

std::string SimpleFactor::canonical_name() const {
    int n = rank_param_;
    switch (family_) {
    case Family::A: return "SU(" + std::to_string(n + 1) + ")";
    case Family::B: return "Spin(" + std::to_string(2 * n + 1) + ")";
    case Family::C: return "Sp(" + std::to_string(n) + ")";
    case Family::D: return "Spin(" + std::to_string(2 * n) + ")";
    default: return family_name(family_);
    }
}

GroupSpec::GroupSpec(std::vector<SimpleFactor> factors) : factors_(std::move(factors)) {
    if (factors_.empty())
        throw std::invalid_argument("GroupSpec: factor list must be nonempty");
}

long long GroupSpec::rank() const {
    long long r = 0;
    for (const auto& f : factors_)
        r += f.rank();
    return r;
}

long long GroupSpec::dimension() const {
    long long d = 0;
    for (const auto& f : factors_)
        d += f.dimension();
    return d;
}

long long GroupSpec::center_order() const {
    long long z = 1;
    for (const auto& f : factors_)
        z *= f.center_order();
    return z;
}

bool GroupSpec::pi4_trivial() const {
    return std::all_of(factors_.begin(), factors_.end(),
                       [](const SimpleFactor& f) { return f.pi4_trivial(); });
}

std::vector<int> GroupSpec::exponents() const {
    std::vector<int> all;
    for (const auto& f : factors_) {
        auto exps = f.exponents();
        all.insert(all.end(), exps.begin(), exps.end());
    }
    std::sort(all.begin(), all.end());
    return all;
}

int GroupSpec::max_exponent() const {
    int m = 0;
    for (const auto& f : factors_) {
        auto exps = f.exponents();
        m = std::max(m, *std::max_element(exps.begin(), exps.end()));
    }
    return m;
}

std::string GroupSpec::canonical_name() const {
    std::string name;
    for (const auto& f : factors_) {
        if (!name.empty())
            name += "x";
        name += f.canonical_name();
    }
    return name;
}

GradedRanks rational_homotopy(const GroupSpec& g) {
    GradedRanks ranks(Space::G);
    for (int k : g.exponents())
        ranks.add(2 * k - 1, 1);
    return ranks;
}

/* ------------------------------------------------------------------ */
/* Parser                                                              */
/* ------------------------------------------------------------------ */

namespace {

// Rank parameters beyond this have no use here and would only blow up the
// exponent tables.
constexpr long long kMaxRankParam = 1000000;

class Parser {
public:
    explicit Parser(std::string_view text) {
        // Whitespace is insignificant everywhere.
        for (char c : text)
            if (!std::isspace(static_cast<unsigned char>(c)))
                text_.push_back(c);
    }

    GroupSpec parse() {
        if (text_.empty())
            throw GroupSyntaxError("empty group expression");
        std::vector<SimpleFactor> factors;
        parse_term(factors);
        while (!at_end()) {
            char c = peek();
            if (c == 'x' || c == 'X' || c == '*') {
                ++pos_;
                parse_term(factors);
            } else {
                throw GroupSyntaxError("unexpected character '" + std::string(1, c) +
                                       "' at position " + std::to_string(pos_));
            }
        }
        return GroupSpec(std::move(factors));
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    void parse_term(std::vector<SimpleFactor>& factors) {
        size_t atom_begin = pos_;
        std::vector<SimpleFactor> atom = parse_atom(atom_begin);
        long long repeat = 1;
        if (!at_end() && peek() == '^') {
            ++pos_;
            repeat = parse_int("repetition count");
            if (repeat < 1)
                throw GroupSyntaxError("repetition count must be >= 1");
            if (repeat > kMaxRankParam)
                throw GroupSyntaxError("repetition count too large");
        }
        for (long long i = 0; i < repeat; ++i)
            factors.insert(factors.end(), atom.begin(), atom.end());
    }

    // An atom can expand to two factors (Spin(4)).
    std::vector<SimpleFactor> parse_atom(size_t atom_begin) {
        std::string word = parse_word();
        if (word.empty())
            throw GroupSyntaxError("expected a group name at position " + std::to_string(pos_));

        std::string lower = word;
        std::transform(lower.begin(), lower.end(), lower.begin(),
                       [](unsigned char c) { return std::tolower(c); });

        if (lower == "su" || lower == "spin" || lower == "sp") {
            long long n = parse_paren_int(word);
            std::string display = text_.substr(atom_begin, pos_ - atom_begin);
            return canonical_factors(lower, n, display);
        }
        if (lower == "g" || lower == "f" || lower == "e") {
            long long n = parse_int("family index");
            std::string display = text_.substr(atom_begin, pos_ - atom_begin);
            if (lower == "g" && n == 2) return {SimpleFactor::make(Family::G2, 2, display)};
            if (lower == "f" && n == 4) return {SimpleFactor::make(Family::F4, 4, display)};
            if (lower == "e" && n == 6) return {SimpleFactor::make(Family::E6, 6, display)};
            if (lower == "e" && n == 7) return {SimpleFactor::make(Family::E7, 7, display)};
            if (lower == "e" && n == 8) return {SimpleFactor::make(Family::E8, 8, display)};
            throw GroupSyntaxError("unknown group \"" + word + std::to_string(n) + "\"");
        }
        reject_unsupported(lower, word);
        throw GroupSyntaxError("unknown group name \"" + word + "\"");
    }

    // The rejection rule: these are genuine Lie groups, but not simply
    // connected (or not semisimple), and the formulas implemented here are
    // false for them.
    void reject_unsupported(const std::string& lower, const std::string& word) {
        auto with_argument = [this, &word]() {
            std::string token = word;
            if (!at_end() && peek() == '(') {
                while (!at_end() && peek() != ')')
                    token.push_back(text_[pos_++]);
                if (!at_end())
                    token.push_back(text_[pos_++]);
            }
            return token;
        };
        if (lower == "u" || lower == "t") {
            throw UnsupportedGroupError(
                with_argument() +
                ": not simply connected (and not semisimple: it contains a central torus); "
                "the structure group must be semisimple, compact and simply connected");
        }
        if (lower == "so" || lower == "o") {
            throw UnsupportedGroupError(
                with_argument() +
                ": not simply connected; use the universal cover Spin(n) instead");
        }
        if (lower == "psu" || lower == "pu" || lower == "pso" || lower == "psp") {
            throw UnsupportedGroupError(
                with_argument() +
                ": adjoint/central-quotient forms are not simply connected; "
                "use the simply connected form instead");
        }
    }

    std::vector<SimpleFactor> canonical_factors(const std::string& family, long long n,
                                                const std::string& display) {
        if (family == "su") {
            if (n < 2)
                throw RankOutOfRangeError("SU(" + std::to_string(n) +
                                          "): rank parameter out of range (need n >= 2)");
            return {SimpleFactor::make(Family::A, static_cast<int>(n - 1), display)};
        }
        if (family == "sp") {
            if (n < 1)
                throw RankOutOfRangeError("Sp(" + std::to_string(n) +
                                          "): rank parameter out of range (need n >= 1)");
            if (n == 1) // Sp(1) ~ SU(2)
                return {SimpleFactor::make(Family::A, 1, display)};
            return {SimpleFactor::make(Family::C, static_cast<int>(n), display)};
        }
        // spin
        if (n < 3)
            throw RankOutOfRangeError("Spin(" + std::to_string(n) +
                                      "): rank parameter out of range (need n >= 3)");
        switch (n) {
        case 3: return {SimpleFactor::make(Family::A, 1, display)};
        case 4: return {SimpleFactor::make(Family::A, 1, display),
                        SimpleFactor::make(Family::A, 1, display)};
        case 5: return {SimpleFactor::make(Family::C, 2, display)};
        case 6: return {SimpleFactor::make(Family::A, 3, display)};
        default:
            if (n % 2 == 1)
                return {SimpleFactor::make(Family::B, static_cast<int>(n / 2), display)};
            return {SimpleFactor::make(Family::D, static_cast<int>(n / 2), display)};
        }
    }

    std::string parse_word() {
        std::string word;
        while (!at_end()) {
            char c = peek();
            // 'x' never starts or continues a family name; it is the product sign.
            if (std::isalpha(static_cast<unsigned char>(c)) && c != 'x' && c != 'X')
                word.push_back(c), ++pos_;
            else
                break;
        }
        return word;
    }

    long long parse_int(const std::string& what) {
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
            throw GroupSyntaxError("expected " + what + " at position " + std::to_string(pos_));
        long long value = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            value = value * 10 + (peek() - '0');
            if (value > kMaxRankParam)
                throw RankOutOfRangeError(what + " too large");
            ++pos_;
        }
        return value;
    }

    long long parse_paren_int(const std::string& word) {
        if (at_end() || peek() != '(')
            throw GroupSyntaxError("expected '(' after \"" + word + "\"");
        ++pos_;
        long long n = parse_int("rank parameter");
        if (at_end() || peek() != ')')
            throw GroupSyntaxError("expected ')' after rank parameter of \"" + word + "\"");
        ++pos_;
        return n;
    }

    std::string text_;
    size_t pos_ = 0;
};

} // namespace

GroupSpec parse_group_spec(std::string_view text) {
    return Parser(text).parse();
}

} // namespace gaugetop
