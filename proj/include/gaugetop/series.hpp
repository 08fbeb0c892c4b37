/*
 * series.hpp
 * ----------
 * Exact Poincare-series arithmetic. The free algebras produced by this
 * library have series
 *
 *     prod (1 + t^d)  over odd-degree generators
 *   -----------------------------------------------
 *     prod (1 - t^e)  over even-degree generators
 *
 * RationalSeries keeps the factored form; numerator() and denominator()
 * expand it to integer-coefficient polynomials (denominator constant term
 * is always 1, so the power-series expansion exists). All arithmetic is
 * exact: coefficients grow combinatorially and live in arbitrary-precision
 * integers. Expansion multiplies factor by factor with truncation, so every
 * intermediate step is exact.
 */
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <string>
#include <vector>

#include "gaugetop/free_algebra.hpp"

namespace gaugetop {

using BigInt = boost::multiprecision::cpp_int;

// Dense univariate polynomial with exact integer coefficients. Only what the
// series arithmetic needs; no general ring machinery.
class Polynomial {
public:
    Polynomial() = default; // zero
    explicit Polynomial(std::vector<BigInt> coeffs);

    static Polynomial one();
    static Polynomial one_plus_power(int d);  // 1 + t^d
    static Polynomial one_minus_power(int d); // 1 - t^d

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; } // -1 for zero
    BigInt coeff(int i) const;
    const std::vector<BigInt>& coeffs() const { return coeffs_; }

    Polynomial& operator*=(const Polynomial& other);
    friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
    bool operator==(const Polynomial& other) const { return coeffs_ == other.coeffs_; }
    bool operator!=(const Polynomial& other) const { return !(*this == other); }

    BigInt value_at_one() const;

    // "1 - t^2 + 3t^5" style; "0" for the zero polynomial.
    std::string str() const;

private:
    void trim();
    std::vector<BigInt> coeffs_;
};

class RationalSeries {
public:
    // The constant series 1/1.
    RationalSeries() = default;

    // Multiply in (1 + t^d)^m resp. 1/(1 - t^e)^m. Degrees must be >= 1,
    // multiplicities >= 0.
    void push_numerator_factor(int d, long long multiplicity = 1);
    void push_denominator_factor(int e, long long multiplicity = 1);

    const std::map<int, long long>& numerator_factors() const { return numer_factors_; }
    const std::map<int, long long>& denominator_factors() const { return denom_factors_; }

    Polynomial numerator() const;
    Polynomial denominator() const;

    // Coefficients of t^0..t^max_degree of the power-series expansion.
    std::vector<BigInt> expand(int max_degree) const;

    // Factored display, e.g. "(1+t^3) / ((1-t^2)^2 (1-t^4))".
    std::string str() const;

    bool operator==(const RationalSeries& other) const {
        return numer_factors_ == other.numer_factors_ && denom_factors_ == other.denom_factors_;
    }

private:
    std::map<int, long long> numer_factors_;
    std::map<int, long long> denom_factors_;
};

RationalSeries poincare_series(const FreeGradedAlgebra& a);

std::vector<BigInt> expand(const RationalSeries& s, int max_degree);

// dim H^j of the algebra: coefficient of t^j in its Poincare series.
BigInt betti(const FreeGradedAlgebra& a, int degree);

} // namespace gaugetop
