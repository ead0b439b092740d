#include "prymbn/pfaffian.hpp"

#include <cstdint>
#include <stdexcept>
#include <unordered_map>

namespace prymbn {

AntisymmetricMatrix::AntisymmetricMatrix(int size, int truncation)
    : size_(size), trunc_(truncation) {
    if (size < 0) throw std::invalid_argument("AntisymmetricMatrix: negative size");
    upper_.assign(static_cast<size_t>(size) * (size - 1) / 2, TruncatedPoly(truncation));
}

int AntisymmetricMatrix::upper_index(int i, int j) const {
    if (i < 0 || j <= i || j >= size_) {
        throw std::out_of_range("AntisymmetricMatrix: upper-triangle index (i < j) required");
    }
    // Row-major over the strictly upper triangle.
    return i * size_ - i * (i + 1) / 2 + (j - i - 1);
}

const TruncatedPoly& AntisymmetricMatrix::at(int i, int j) const {
    return upper_[upper_index(i, j)];
}

void AntisymmetricMatrix::set(int i, int j, TruncatedPoly value) {
    if (value.truncation() != trunc_) {
        throw std::invalid_argument("AntisymmetricMatrix: entry truncation mismatch");
    }
    upper_[upper_index(i, j)] = std::move(value);
}

namespace {

class PfaffianEvaluator {
public:
    explicit PfaffianEvaluator(const AntisymmetricMatrix& m) : m_(m) {}

    TruncatedPoly eval(uint64_t alive) {
        if (alive == 0) return TruncatedPoly::constant(Rational(1), m_.truncation());
        auto it = memo_.find(alive);
        if (it != memo_.end()) return it->second;

        const int first = __builtin_ctzll(alive);
        TruncatedPoly sum(m_.truncation());
        int sign = 1;  // (-1)^j starting from j = 2
        for (int j = first + 1; j < m_.size(); ++j) {
            if (!(alive & (uint64_t{1} << j))) continue;
            const uint64_t rest = alive & ~(uint64_t{1} << first) & ~(uint64_t{1} << j);
            TruncatedPoly term = m_.at(first, j) * eval(rest);
            if (sign < 0) term = -term;
            sum += term;
            sign = -sign;
        }
        memo_.emplace(alive, sum);
        return sum;
    }

private:
    const AntisymmetricMatrix& m_;
    std::unordered_map<uint64_t, TruncatedPoly> memo_;
};

// Single class Q_m = (2 xi)^m / m! (zero for m < 0).
TruncatedPoly q_single(int m, int truncation) {
    if (m < 0) return TruncatedPoly(truncation);
    Rational c = Rational::pow2(m) / Rational::factorial(static_cast<unsigned long>(m));
    return TruncatedPoly::monomial(c, m, truncation);
}

}  // namespace

TruncatedPoly pfaffian(const AntisymmetricMatrix& m) {
    if (m.size() % 2 != 0) {
        throw std::invalid_argument("pfaffian: matrix size must be even (got " +
                                    std::to_string(m.size()) + ")");
    }
    if (m.size() > 62) {
        throw std::invalid_argument("pfaffian: matrix size above engine limit of 62");
    }
    PfaffianEvaluator evaluator(m);
    uint64_t all = m.size() == 0 ? 0 : (uint64_t{1} << m.size()) - 1;
    return evaluator.eval(all);
}

TruncatedPoly q_entry(int a, int b, int truncation) {
    if (a < b || b < 0) {
        throw std::invalid_argument("q_entry: requires a >= b >= 0 (got a=" + std::to_string(a) +
                                    ", b=" + std::to_string(b) + ")");
    }
    // Diagonal pair classes vanish. The recursion cancels on its own for
    // a = b >= 1; (0,0) is pinned to 0 as the entry of an antisymmetric
    // matrix, where the bare product would give Q_0^2 = 1.
    if (a == 0 && b == 0) return TruncatedPoly(truncation);
    TruncatedPoly entry = q_single(a, truncation) * q_single(b, truncation);
    for (int k = 1; k <= b; ++k) {
        TruncatedPoly cross = q_single(a + k, truncation) * q_single(b - k, truncation);
        cross *= Rational(k % 2 == 0 ? 2 : -2);
        entry += cross;
    }
    return entry;
}

PrymClass class_B_pfaffian(int g, const VanishingSequence& a) {
    if (g < 2) {
        throw std::invalid_argument("genus must be >= 2 (got " + std::to_string(g) + ")");
    }
    std::vector<int> lambda = a.shape().parts();
    const int ell = static_cast<int>(lambda.size());  // l(a), before padding
    if (lambda.size() % 2 != 0) lambda.push_back(0);

    AntisymmetricMatrix m(static_cast<int>(lambda.size()), g);
    for (size_t i = 0; i < lambda.size(); ++i) {
        for (size_t j = i + 1; j < lambda.size(); ++j) {
            m.set(static_cast<int>(i), static_cast<int>(j),
                  q_entry(lambda[i], lambda[j], g));
        }
    }

    TruncatedPoly pf = pfaffian(m) * Rational::pow2(-ell);
    const long w = a.weight();
    // Every entry is homogeneous of degree lambda_i + lambda_j, so the
    // Pfaffian is homogeneous of degree |a| or has been truncated to zero.
    for (const auto& [d, c] : pf.terms()) {
        if (d != w) {
            throw std::logic_error("class_B_pfaffian: non-homogeneous Pfaffian at a = " + a.str());
        }
    }
    return {g, w, pf.coeff(static_cast<int>(w))};
}

}  // namespace prymbn
