/*
 * The graded ring Q[xi]/(xi^N) with exact rational coefficients.
 *
 * xi is the theta-divisor class on the Prym variety; N is fixed to the
 * genus g, so the top surviving degree g-1 matches the dimension of the
 * variety and any class of higher codimension vanishes automatically.
 */
#pragma once

#include <map>
#include <string>

#include "prymbn/rational.hpp"

#include "json.hpp"

namespace prymbn {

class TruncatedPoly {
public:
    // The zero polynomial in Q[xi]/(xi^N).
    explicit TruncatedPoly(int truncation);

    static TruncatedPoly constant(const Rational& c, int truncation);
    static TruncatedPoly monomial(const Rational& c, int degree, int truncation);
    static TruncatedPoly xi_power(int degree, int truncation);

    // sum_{k < N} (s xi)^k / k! — the truncation of e^{s xi}.
    static TruncatedPoly exp_scaled_xi(long s, int truncation);

    int truncation() const { return trunc_; }
    bool is_zero() const { return coeffs_.empty(); }

    // Coefficient of xi^k (zero when absent).
    Rational coeff(int degree) const;

    // Nonzero terms only, keyed by degree. No zero coefficient is ever stored,
    // so map equality is canonical polynomial equality.
    const std::map<int, Rational>& terms() const { return coeffs_; }

    TruncatedPoly& operator+=(const TruncatedPoly& o);
    TruncatedPoly& operator-=(const TruncatedPoly& o);
    TruncatedPoly& operator*=(const TruncatedPoly& o);
    TruncatedPoly& operator*=(const Rational& c);
    TruncatedPoly operator-() const;

    friend TruncatedPoly operator+(TruncatedPoly a, const TruncatedPoly& b) { return a += b; }
    friend TruncatedPoly operator-(TruncatedPoly a, const TruncatedPoly& b) { return a -= b; }
    friend TruncatedPoly operator*(TruncatedPoly a, const TruncatedPoly& b) { return a *= b; }
    friend TruncatedPoly operator*(TruncatedPoly a, const Rational& c) { return a *= c; }
    friend TruncatedPoly operator*(const Rational& c, TruncatedPoly a) { return a *= c; }

    bool operator==(const TruncatedPoly&) const = default;

    std::string str() const;

    // {"trunc": N, "coeffs": {"k": "p/q", ...}}
    nlohmann::json to_json() const;
    static TruncatedPoly from_json(const nlohmann::json& j);

private:
    void add_term(int degree, const Rational& c);  // drops degrees >= trunc_

    int trunc_;
    std::map<int, Rational> coeffs_;
};

// (coefficient of xi^{g-1} in p) * (g-1)!; the evaluation deg xi^{g-1} = (g-1)!
// on the (g-1)-dimensional Prym variety. Requires p.truncation() >= g.
Rational poincare_degree(const TruncatedPoly& p, int g);

}  // namespace prymbn
