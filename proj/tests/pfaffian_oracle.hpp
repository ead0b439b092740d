/*
 * Test-only oracles for the Pfaffian engine, deliberately independent of the
 * recursive-expansion implementation:
 *
 *   - Pf(M) as the signed sum over perfect matchings, with the sign computed
 *     from the number of crossing pairs;
 *   - det(M) by the Leibniz permutation sum.
 */
#pragma once

#include <algorithm>
#include <vector>

#include "prymbn/pfaffian.hpp"
#include "prymbn/rational.hpp"

namespace prymbn::testing {

// All perfect matchings of {0, ..., n-1} as lists of (i < j) pairs.
inline void perfect_matchings(std::vector<int> unmatched,
                              std::vector<std::pair<int, int>>& current,
                              std::vector<std::vector<std::pair<int, int>>>& out) {
    if (unmatched.empty()) {
        out.push_back(current);
        return;
    }
    int first = unmatched.front();
    for (size_t k = 1; k < unmatched.size(); ++k) {
        std::vector<int> rest;
        for (size_t t = 1; t < unmatched.size(); ++t) {
            if (t != k) rest.push_back(unmatched[t]);
        }
        current.push_back({first, unmatched[k]});
        perfect_matchings(rest, current, out);
        current.pop_back();
    }
}

// sign = (-1)^{#crossings}: pairs (a,b), (c,d) with a < c < b < d.
inline int matching_sign(const std::vector<std::pair<int, int>>& matching) {
    int crossings = 0;
    for (size_t x = 0; x < matching.size(); ++x) {
        for (size_t y = x + 1; y < matching.size(); ++y) {
            auto [a, b] = matching[x];
            auto [c, d] = matching[y];
            if (c < a) std::swap(a, c), std::swap(b, d);
            if (a < c && c < b && b < d) ++crossings;
        }
    }
    return crossings % 2 == 0 ? 1 : -1;
}

inline TruncatedPoly pfaffian_matching_sum(const AntisymmetricMatrix& m) {
    TruncatedPoly sum(m.truncation());
    if (m.size() == 0) return TruncatedPoly::constant(Rational(1), m.truncation());
    std::vector<int> all(m.size());
    for (int i = 0; i < m.size(); ++i) all[i] = i;
    std::vector<std::vector<std::pair<int, int>>> matchings;
    std::vector<std::pair<int, int>> current;
    perfect_matchings(all, current, matchings);
    for (const auto& matching : matchings) {
        TruncatedPoly prod = TruncatedPoly::constant(Rational(matching_sign(matching)),
                                                     m.truncation());
        for (auto [i, j] : matching) prod *= m.at(i, j);
        sum += prod;
    }
    return sum;
}

// Leibniz determinant of the full antisymmetric matrix with constant entries.
inline Rational determinant_leibniz(const AntisymmetricMatrix& m) {
    const int n = m.size();
    auto entry = [&](int i, int j) -> Rational {
        if (i == j) return Rational(0);
        Rational upper = m.at(std::min(i, j), std::max(i, j)).coeff(0);
        return i < j ? upper : -upper;
    };
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    Rational det(0);
    do {
        int inversions = 0;
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                if (perm[i] > perm[j]) ++inversions;
            }
        }
        Rational term(inversions % 2 == 0 ? 1 : -1);
        for (int i = 0; i < n; ++i) term *= entry(i, perm[i]);
        det += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

// Antisymmetric matrix with uniformly random small-rational constant entries.
template <typename Rng>
AntisymmetricMatrix random_constant_matrix(int size, Rng& rng) {
    AntisymmetricMatrix m(size, 1);
    for (int i = 0; i < size; ++i) {
        for (int j = i + 1; j < size; ++j) {
            long num = static_cast<long>(rng() % 19) - 9;
            long den = static_cast<long>(rng() % 9) + 1;
            m.set(i, j, TruncatedPoly::constant(Rational(num, den), 1));
        }
    }
    return m;
}

}  // namespace prymbn::testing
