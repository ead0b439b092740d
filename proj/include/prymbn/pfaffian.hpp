/*
 * The Pfaffian engine: the second, independent route to the class B(g, a).
 *
 * The locus is a type-D degeneracy locus, so its class is the Pfaffian of an
 * antisymmetric matrix of Schur-Q-type pair classes. With the Chern-class
 * specialization relevant here (trivial classes on one side, e^{2 xi} on the
 * other) the single classes are Q_m = (2 xi)^m / m! and the pair entries
 * follow the classical recursion
 *
 *     Q_{a,b} = Q_a Q_b + 2 sum_{k=1}^{b} (-1)^k Q_{a+k} Q_{b-k}.
 *
 * Nothing in this module is trusted on its own: the result must coincide
 * with the closed product formula, and the acceptance suite checks exactly
 * that over every sequence at desk scale.
 */
#pragma once

#include "prymbn/prym.hpp"
#include "prymbn/truncated_poly.hpp"

#include <vector>

namespace prymbn {

// Antisymmetric matrix over Q[xi]/(xi^N); only the upper triangle is stored,
// M[j][i] = -M[i][j] and M[i][i] = 0 are implied.
class AntisymmetricMatrix {
public:
    AntisymmetricMatrix(int size, int truncation);

    int size() const { return size_; }
    int truncation() const { return trunc_; }

    // Upper-triangle access, 0-indexed, i < j required.
    const TruncatedPoly& at(int i, int j) const;
    void set(int i, int j, TruncatedPoly value);

private:
    int upper_index(int i, int j) const;

    int size_;
    int trunc_;
    std::vector<TruncatedPoly> upper_;
};

// Pf(M) by recursive first-row expansion
//     Pf(M) = sum_{j=2}^{n} (-1)^j M[1][j] Pf(M with rows/cols 1, j removed),
// memoized on the set of surviving indices. Pf of the 0x0 matrix is 1.
// Throws on odd size.
TruncatedPoly pfaffian(const AntisymmetricMatrix& m);

// The pair entry Q_{a,b} above, truncated at degree N. Requires a >= b >= 0;
// q_entry(a, 0) is the single class Q_a, and q_entry(a, a) = 0.
TruncatedPoly q_entry(int a, int b, int truncation);

// B(g, a) via the Pfaffian route: take the positive parts of a in decreasing
// order, pad with one 0 part if their number is odd, form the matrix of pair
// entries at truncation N = g, and scale Pf by 2^{-l(a)}. Codimension |a|
// beyond g-1 comes out zero through the ring truncation itself.
PrymClass class_B_pfaffian(int g, const VanishingSequence& a);

}  // namespace prymbn
