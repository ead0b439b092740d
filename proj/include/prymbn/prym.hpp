/*
 * Pointed Prym-Brill-Noether invariants.
 *
 * A vanishing sequence a = (a_0 < a_1 < ... < a_r) of nonnegative integers
 * prescribes vanishing orders at a marked point. For a double cover of a
 * genus-g curve the associated locus in the Prym variety has expected
 * dimension beta(g, a) = g - 1 - |a| and, when that dimension is attained,
 * class
 *
 *     B(g, a) = 2^{|a|-l(a)} * prod_i 1/a_i! * prod_{j<i} (a_i-a_j)/(a_i+a_j) * xi^{|a|},
 *
 * with l(a) the number of positive entries and xi the theta-divisor class.
 * Everything downstream of this header (degree, point counts, tableau count
 * n_a, Prym-Tyurin exponent) is an exact-rational evaluation of that class.
 */
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "prymbn/rational.hpp"
#include "prymbn/shifted_tableaux.hpp"
#include "prymbn/strict_partition.hpp"

#include "json.hpp"

namespace prymbn {

class VanishingSequence {
public:
    // Values must be strictly increasing and nonnegative; at least one entry.
    explicit VanishingSequence(std::vector<int> values);

    // "0,1,3" (ascending).
    static VanishingSequence parse(std::string_view csv);

    const std::vector<int>& values() const { return values_; }
    int size() const { return static_cast<int>(values_.size()); }  // r + 1
    long weight() const;                                           // |a|
    int positive_count() const;                                    // l(a)

    // Positive entries in decreasing order: the strict partition
    // (a_r, ..., a_0) with a leading zero entry dropped.
    StrictPartition shape() const;

    // "(0,1,3)"
    std::string str() const;

    auto operator<=>(const VanishingSequence&) const = default;

private:
    std::vector<int> values_;
};

// One graded term coeff * xi^codim in the ring truncated at degree g-1;
// codim > g-1 forces coeff = 0.
struct PrymClass {
    int genus = 0;
    long codim = 0;
    Rational coeff;

    bool is_zero() const { return coeff.is_zero(); }
    bool operator==(const PrymClass&) const = default;

    // "1/3 xi^3", "1" for codim 0, "0" for the zero class.
    std::string str() const;

    // {"g": 4, "codim": 3, "coeff": "1/3"}
    nlohmann::json to_json() const;
};

// Expected dimension g - 1 - |a|; may be negative. Genus must be >= 2.
long beta(int g, const VanishingSequence& a);

// The general-triple prediction: the locus is nonempty iff beta >= 0.
bool general_nonempty(int g, const VanishingSequence& a);

// The class B(g, a) by direct evaluation of the closed product.
PrymClass class_B_closed(int g, const VanishingSequence& a);

// |a|! * coeff(B(g, a)); integral, asserted. Counts points when beta = 0.
Rational degree_B(int g, const VanishingSequence& a);

// n_a = 2^{|a|-l(a)} * #SST(shape(a)), formula-backed (no bound).
Int n_a_formula(const VanishingSequence& a);

// Same quantity with the tableau count obtained by brute-force enumeration.
Int n_a_bruteforce(const VanishingSequence& a, int bound = kDefaultEnumerationBound);

// Prym-Tyurin exponent (g-2)! * coeff(B(g, a)); requires beta(g, a) = 1,
// which forces g - 2 = |a|. Equals n_a.
Int prym_tyurin_exponent(int g, const VanishingSequence& a);

// Every vanishing sequence with |a| <= max_weight: the reversals of strict
// partitions of each weight, with and without a leading 0. Sorted by weight,
// then lexicographically.
std::vector<std::vector<int>> enumerate_vanishing_sequences(int max_weight);

}  // namespace prymbn
