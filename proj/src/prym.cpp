#include "prymbn/prym.hpp"

#include <algorithm>
#include <stdexcept>

namespace prymbn {

namespace {

void require_genus(int g) {
    if (g < 2) {
        throw std::invalid_argument("genus must be >= 2 (got " + std::to_string(g) + ")");
    }
}

}  // namespace

VanishingSequence::VanishingSequence(std::vector<int> values) : values_(std::move(values)) {
    if (values_.empty()) {
        throw std::invalid_argument("vanishing sequence must have at least one entry");
    }
    for (size_t i = 0; i < values_.size(); ++i) {
        if (values_[i] < 0) {
            throw std::invalid_argument("vanishing sequence entries must be nonnegative (got " +
                                        std::to_string(values_[i]) + ")");
        }
        if (i > 0 && values_[i] <= values_[i - 1]) {
            throw std::invalid_argument(
                "vanishing sequence must be strictly increasing; "
                "note: sequences are ascending, shapes are descending");
        }
    }
}

VanishingSequence VanishingSequence::parse(std::string_view csv) {
    return VanishingSequence(parse_csv_ints(csv, "vanishing sequence"));
}

long VanishingSequence::weight() const {
    long w = 0;
    for (int v : values_) w += v;
    return w;
}

int VanishingSequence::positive_count() const {
    return static_cast<int>(std::count_if(values_.begin(), values_.end(),
                                          [](int v) { return v > 0; }));
}

StrictPartition VanishingSequence::shape() const {
    std::vector<int> parts;
    for (auto it = values_.rbegin(); it != values_.rend(); ++it) {
        if (*it > 0) parts.push_back(*it);
    }
    return StrictPartition(parts);
}

std::string VanishingSequence::str() const {
    std::string out = "(";
    for (size_t i = 0; i < values_.size(); ++i) {
        if (i > 0) out += ",";
        out += std::to_string(values_[i]);
    }
    return out + ")";
}

std::string PrymClass::str() const {
    if (coeff.is_zero()) return "0";
    if (codim == 0) return coeff.str();
    return coeff.str() + " xi^" + std::to_string(codim);
}

nlohmann::json PrymClass::to_json() const {
    return {{"g", genus}, {"codim", codim}, {"coeff", coeff.str()}};
}

long beta(int g, const VanishingSequence& a) {
    require_genus(g);
    return g - 1 - a.weight();
}

bool general_nonempty(int g, const VanishingSequence& a) {
    return beta(g, a) >= 0;
}

PrymClass class_B_closed(int g, const VanishingSequence& a) {
    require_genus(g);
    const long w = a.weight();
    if (w > g - 1) return {g, w, Rational(0)};  // truncated away
    const auto& v = a.values();
    Rational coeff = Rational::pow2(w - a.positive_count());
    for (int ai : v) coeff /= Rational::factorial(static_cast<unsigned long>(ai));
    // The pair factor for a_j = 0 is a_i / a_i = 1 and can be skipped.
    for (size_t i = 0; i < v.size(); ++i) {
        for (size_t j = 0; j < i; ++j) {
            if (v[j] == 0) continue;
            coeff *= Rational(v[i] - v[j], v[i] + v[j]);
        }
    }
    return {g, w, coeff};
}

Rational degree_B(int g, const VanishingSequence& a) {
    PrymClass b = class_B_closed(g, a);
    Rational degree =
        Rational::factorial(static_cast<unsigned long>(a.weight())) * b.coeff;
    if (!degree.is_integer()) {
        throw std::logic_error("degree_B: non-integral degree " + degree.str() + " for a = " +
                               a.str());
    }
    return degree;
}

Int n_a_formula(const VanishingSequence& a) {
    unsigned long e = static_cast<unsigned long>(a.weight() - a.positive_count());
    return int_pow2(e) * count_sst_formula(a.shape());
}

Int n_a_bruteforce(const VanishingSequence& a, int bound) {
    unsigned long e = static_cast<unsigned long>(a.weight() - a.positive_count());
    return int_pow2(e) * count_sst_bruteforce(a.shape(), bound);
}

Int prym_tyurin_exponent(int g, const VanishingSequence& a) {
    long b = beta(g, a);
    if (b != 1) {
        throw std::invalid_argument("prym_tyurin_exponent requires beta(g,a) = 1; got beta(" +
                                    std::to_string(g) + "," + a.str() + ") = " +
                                    std::to_string(b));
    }
    // beta = 1 forces g - 2 = |a|.
    Rational e = Rational::factorial(static_cast<unsigned long>(g - 2)) *
                 class_B_closed(g, a).coeff;
    return e.to_integer();
}

std::vector<std::vector<int>> enumerate_vanishing_sequences(int max_weight) {
    std::vector<std::vector<int>> out;
    for (int w = 0; w <= max_weight; ++w) {
        std::vector<std::vector<int>> batch;
        for (const auto& lambda : strict_partitions_of_weight(w)) {
            std::vector<int> ascending(lambda.parts().rbegin(), lambda.parts().rend());
            if (!ascending.empty()) batch.push_back(ascending);
            std::vector<int> with_zero;
            with_zero.reserve(ascending.size() + 1);
            with_zero.push_back(0);
            with_zero.insert(with_zero.end(), ascending.begin(), ascending.end());
            batch.push_back(std::move(with_zero));
        }
        std::sort(batch.begin(), batch.end());
        out.insert(out.end(), batch.begin(), batch.end());
    }
    return out;
}

}  // namespace prymbn
