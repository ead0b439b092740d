#include "prymbn/truncated_poly.hpp"

#include <stdexcept>

namespace prymbn {

namespace {

void require_valid_truncation(int truncation) {
    if (truncation < 1) throw std::invalid_argument("TruncatedPoly: truncation must be >= 1");
}

void require_same_truncation(const TruncatedPoly& a, const TruncatedPoly& b) {
    if (a.truncation() != b.truncation()) {
        throw std::invalid_argument("TruncatedPoly: mismatched truncations " +
                                    std::to_string(a.truncation()) + " vs " +
                                    std::to_string(b.truncation()));
    }
}

}  // namespace

TruncatedPoly::TruncatedPoly(int truncation) : trunc_(truncation) {
    require_valid_truncation(truncation);
}

TruncatedPoly TruncatedPoly::constant(const Rational& c, int truncation) {
    return monomial(c, 0, truncation);
}

TruncatedPoly TruncatedPoly::monomial(const Rational& c, int degree, int truncation) {
    if (degree < 0) throw std::invalid_argument("TruncatedPoly: negative degree");
    TruncatedPoly p(truncation);
    p.add_term(degree, c);
    return p;
}

TruncatedPoly TruncatedPoly::xi_power(int degree, int truncation) {
    return monomial(Rational(1), degree, truncation);
}

TruncatedPoly TruncatedPoly::exp_scaled_xi(long s, int truncation) {
    TruncatedPoly p(truncation);
    Rational term(1);  // s^k / k!
    p.add_term(0, term);
    for (int k = 1; k < truncation; ++k) {
        term *= Rational(Int(s), Int(k));
        p.add_term(k, term);
    }
    return p;
}

Rational TruncatedPoly::coeff(int degree) const {
    auto it = coeffs_.find(degree);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

void TruncatedPoly::add_term(int degree, const Rational& c) {
    if (degree >= trunc_ || c.is_zero()) return;
    auto [it, inserted] = coeffs_.try_emplace(degree, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

TruncatedPoly& TruncatedPoly::operator+=(const TruncatedPoly& o) {
    require_same_truncation(*this, o);
    for (const auto& [d, c] : o.coeffs_) add_term(d, c);
    return *this;
}

TruncatedPoly& TruncatedPoly::operator-=(const TruncatedPoly& o) {
    require_same_truncation(*this, o);
    for (const auto& [d, c] : o.coeffs_) add_term(d, -c);
    return *this;
}

TruncatedPoly& TruncatedPoly::operator*=(const TruncatedPoly& o) {
    require_same_truncation(*this, o);
    TruncatedPoly prod(trunc_);
    for (const auto& [d1, c1] : coeffs_) {
        if (d1 >= trunc_) break;
        for (const auto& [d2, c2] : o.coeffs_) {
            if (d1 + d2 >= trunc_) break;  // degrees ascend within the map
            prod.add_term(d1 + d2, c1 * c2);
        }
    }
    *this = std::move(prod);
    return *this;
}

TruncatedPoly& TruncatedPoly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& [d, v] : coeffs_) v *= c;
    return *this;
}

TruncatedPoly TruncatedPoly::operator-() const {
    TruncatedPoly p(trunc_);
    for (const auto& [d, c] : coeffs_) p.coeffs_.emplace(d, -c);
    return p;
}

std::string TruncatedPoly::str() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [d, c] : coeffs_) {
        Rational abs = c.sign() < 0 ? -c : c;
        if (first) {
            if (c.sign() < 0) out += "-";
            first = false;
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        bool unit = (abs == Rational(1));
        if (d == 0) {
            out += abs.str();
        } else {
            if (!unit) out += abs.str() + " ";
            out += d == 1 ? "xi" : "xi^" + std::to_string(d);
        }
    }
    return out;
}

nlohmann::json TruncatedPoly::to_json() const {
    nlohmann::json coeffs = nlohmann::json::object();
    for (const auto& [d, c] : coeffs_) coeffs[std::to_string(d)] = c.str();
    return {{"trunc", trunc_}, {"coeffs", coeffs}};
}

TruncatedPoly TruncatedPoly::from_json(const nlohmann::json& j) {
    TruncatedPoly p(j.at("trunc").get<int>());
    for (const auto& [key, value] : j.at("coeffs").items()) {
        p.add_term(std::stoi(key), Rational::parse(value.get<std::string>()));
    }
    return p;
}

Rational poincare_degree(const TruncatedPoly& p, int g) {
    if (g < 1) throw std::invalid_argument("poincare_degree: g must be >= 1");
    if (p.truncation() < g) {
        throw std::invalid_argument("poincare_degree: truncation " +
                                    std::to_string(p.truncation()) + " < g = " + std::to_string(g));
    }
    return p.coeff(g - 1) * Rational::factorial(static_cast<unsigned long>(g - 1));
}

}  // namespace prymbn
