#include "gaugetop/series.hpp"

#include <sstream>

namespace gaugetop {

Polynomial::Polynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

Polynomial Polynomial::one() {
    return Polynomial({BigInt(1)});
}

Polynomial Polynomial::one_plus_power(int d) {
    if (d < 1)
        throw std::invalid_argument("Polynomial: power must be >= 1");
    std::vector<BigInt> c(d + 1);
    c[0] = 1;
    c[d] = 1;
    return Polynomial(std::move(c));
}

Polynomial Polynomial::one_minus_power(int d) {
    if (d < 1)
        throw std::invalid_argument("Polynomial: power must be >= 1");
    std::vector<BigInt> c(d + 1);
    c[0] = 1;
    c[d] = -1;
    return Polynomial(std::move(c));
}

BigInt Polynomial::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size()))
        return 0;
    return coeffs_[i];
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
    if (is_zero() || other.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<BigInt> result(coeffs_.size() + other.coeffs_.size() - 1);
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0)
            continue;
        for (size_t j = 0; j < other.coeffs_.size(); ++j)
            result[i + j] += coeffs_[i] * other.coeffs_[j];
    }
    coeffs_ = std::move(result);
    trim();
    return *this;
}

BigInt Polynomial::value_at_one() const {
    BigInt sum = 0;
    for (const auto& c : coeffs_)
        sum += c;
    return sum;
}

std::string Polynomial::str() const {
    if (is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        const BigInt& c = coeffs_[i];
        if (c == 0)
            continue;
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (first) {
            if (c < 0)
                out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (i == 0)
            out << mag.str();
        else {
            if (mag != 1)
                out << mag.str() << "*";
            out << "t";
            if (i > 1)
                out << "^" << i;
        }
    }
    return out.str();
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

namespace {

void push_factor(std::map<int, long long>& factors, int degree, long long multiplicity) {
    if (degree < 1)
        throw std::invalid_argument("RationalSeries: factor degree must be >= 1");
    if (multiplicity < 0)
        throw std::invalid_argument("RationalSeries: multiplicity must be >= 0");
    if (multiplicity > 0)
        factors[degree] += multiplicity;
}

Polynomial factor_product(const std::map<int, long long>& factors, bool plus) {
    Polynomial p = Polynomial::one();
    for (const auto& [degree, multiplicity] : factors) {
        Polynomial f = plus ? Polynomial::one_plus_power(degree)
                            : Polynomial::one_minus_power(degree);
        for (long long i = 0; i < multiplicity; ++i)
            p *= f;
    }
    return p;
}

std::string factor_string(const std::map<int, long long>& factors, char sign) {
    if (factors.empty())
        return "1";
    std::ostringstream out;
    bool first = true;
    for (const auto& [degree, multiplicity] : factors) {
        if (!first)
            out << " ";
        first = false;
        out << "(1" << sign << "t";
        if (degree > 1)
            out << "^" << degree;
        out << ")";
        if (multiplicity > 1)
            out << "^" << multiplicity;
    }
    return out.str();
}

} // namespace

void RationalSeries::push_numerator_factor(int d, long long multiplicity) {
    push_factor(numer_factors_, d, multiplicity);
}

void RationalSeries::push_denominator_factor(int e, long long multiplicity) {
    push_factor(denom_factors_, e, multiplicity);
}

Polynomial RationalSeries::numerator() const {
    return factor_product(numer_factors_, true);
}

Polynomial RationalSeries::denominator() const {
    return factor_product(denom_factors_, false);
}

std::vector<BigInt> RationalSeries::expand(int max_degree) const {
    if (max_degree < 0)
        throw std::invalid_argument("RationalSeries: max_degree must be >= 0");
    std::vector<BigInt> c(max_degree + 1);
    c[0] = 1;
    // (1 + t^d): convolve in place, descending so each old value is used once.
    for (const auto& [d, multiplicity] : numer_factors_)
        for (long long m = 0; m < multiplicity; ++m)
            for (int i = max_degree; i >= d; --i)
                c[i] += c[i - d];
    // 1/(1 - t^e) = 1 + t^e + t^{2e} + ...: ascending accumulation.
    for (const auto& [e, multiplicity] : denom_factors_)
        for (long long m = 0; m < multiplicity; ++m)
            for (int i = e; i <= max_degree; ++i)
                c[i] += c[i - e];
    return c;
}

std::string RationalSeries::str() const {
    std::string num = factor_string(numer_factors_, '+');
    std::string den = factor_string(denom_factors_, '-');
    if (den == "1")
        return num;
    return num + " / (" + den + ")";
}

RationalSeries poincare_series(const FreeGradedAlgebra& a) {
    RationalSeries s;
    for (const auto& [degree, count] : a.generators()) {
        if (degree % 2 == 1)
            s.push_numerator_factor(degree, count);
        else
            s.push_denominator_factor(degree, count);
    }
    return s;
}

std::vector<BigInt> expand(const RationalSeries& s, int max_degree) {
    return s.expand(max_degree);
}

BigInt betti(const FreeGradedAlgebra& a, int degree) {
    if (degree < 0)
        throw std::invalid_argument("betti: degree must be >= 0");
    return poincare_series(a).expand(degree)[degree];
}

} // namespace gaugetop
