#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ribbon/common.hpp"
#include "ribbon/knuth_growth.hpp"
#include "ribbon/partition.hpp"

namespace ribbon {

// A sparse polynomial (or truncated power series) in two variables X and Y
// with exact integer coefficients. X counts ribbons, Y their total height.
struct GenPoly {
    // (x_deg, y_deg) -> coefficient; zero coefficients are never stored.
    std::map<std::pair<Int, Int>, Int> terms;
    // Set when X-degrees above the bound were cut off; absent for exact
    // polynomials.
    std::optional<Int> x_bound;

    static GenPoly one();
    void add(Int x_deg, Int y_deg, Int c);
    Int coeff(Int x_deg, Int y_deg) const;
    // The Y-polynomial multiplying X^x_deg, as y_deg -> coefficient.
    std::map<Int, Int> x_slice(Int x_deg) const;
    Int max_x() const;
    // Product, truncated to the tighter of the two bounds when present.
    GenPoly times(const GenPoly& other) const;
    GenPoly truncated(Int bound) const;
    // Specialise Y := 1.
    GenPoly y_one() const;
    std::string to_string() const;
    bool operator==(const GenPoly&) const = default;
};

// The bit value filling the path beyond each end of the word: 1 extends
// with upward steps, 0 with rightward steps.
struct WordFills {
    int left = 1;
    int right = 1;
};

using BitWord = std::vector<int>;

BitWord reversed_word(const BitWord& w);
// The subword of bits at positions congruent to residue modulo r
// (0-based).
BitWord residue_subword(const BitWord& w, Int r, Int residue);

// Number of r-multisets: vectors in N^r with component sum k.
Int multichoose(Int r, Int k);

// Placements of r-ribbons below the extended path of w, summed as
// X^(number of ribbons) * Y^(total height). Each ribbon is placed with its
// whole top-left border on the current path, its final (top-rightmost)
// border segment on the original path and strictly to the top-right of all
// earlier ribbons; placing a ribbon swaps a 1-bit with the 0-bit r places
// further along. The result is an exact polynomial when the right fill
// is 1; with right fill 0 infinitely many ribbons fit as soon as any 1-bit
// is present, and x_bound must then be given (MissingBound otherwise).
// A supplied x_bound always truncates and is recorded on the result.
GenPoly placement_poly(const BitWord& w, Int r, WordFills fills,
                       std::optional<Int> x_bound = std::nullopt);

// The same values from a direct search over placements on the evolving
// path, kept independent of the recursive computation: candidate positions
// are re-scanned from the full path at every step and the two geometric
// rules are enforced literally. Oracle of record for placement_poly.
GenPoly placement_poly_brute(const BitWord& w, Int r, WordFills fills,
                             std::optional<Int> x_bound = std::nullopt);

// Visit every placement once, reporting the per-ribbon heights in
// placement order (the empty placement included).
void placement_enumerate(const BitWord& w, Int r, WordFills fills, std::optional<Int> x_bound,
                         const std::function<void(const std::vector<Int>&)>& visit);

// Product over h < r of 1/(1 - X*Y^h), truncated at x_bound: multisets of
// ribbon heights, X counting ribbons and Y total height.
GenPoly height_multiset_series(Int r, Int x_bound);

struct CheckReport {
    bool ok = true;
    std::vector<std::string> details;

    void record(bool pass, const std::string& what);
};

// The placement-count claims for one word: invariance under word reversal
// for fills (1,1) (exact) and (0,0) (to x_bound); the fills (1,0) series
// equals the reversed word's fills (0,1) polynomial times
// height_multiset_series (to x_bound); and specialising Y := 1 factors the
// fills (1,1) polynomial over the r residue subwords at ribbon size 1.
CheckReport check_claims(const BitWord& w, Int r, Int x_bound);

// An exact series in s (s^2 = q) and variables X_0..X_{n-1}, Y_0..Y_{m-1},
// truncated at a total-degree bound over the X and Y variables jointly;
// the s-degree is not bounded.
struct TruncatedSeries {
    Int n_vars = 0;
    Int m_vars = 0;
    Int degree_bound = 0;
    // key: [s_exp, x_exps..., y_exps...] of length 1 + n_vars + m_vars.
    std::map<std::vector<Int>, Int> terms;

    static TruncatedSeries one(Int n_vars, Int m_vars, Int degree_bound);
    void add(const std::vector<Int>& key, Int c);
    TruncatedSeries times(const TruncatedSeries& other) const;
    std::string term_string(const std::vector<Int>& key) const;
    std::string to_string() const;
    bool operator==(const TruncatedSeries&) const = default;
};

// Pair-of-tableaux sum against the matching product over variable pairs,
// compared coefficientwise up to the total-degree bound. The datum picks
// the flavour: unit and factored data count chains with no s-weight
// against factors 1/(1-X_i*Y_j)^r; the symmetric spin datum weights chains
// by s^dspin against factors 1/(1-s^(2k)*X_i*Y_j) for k < r; the
// asymmetric spin datum pairs horizontal P-chains with vertical Q-chains
// against factors (1+s^(2k)*X_i*Y_j).
CheckReport check_cauchy(GrowthDatum datum, Int r, const Partition& core, Int n_vars, Int m_vars,
                         Int degree_bound);

// Operator form of the same identities on a finite set of shapes:
// removing b strips after adding a strips equals adding after removing
// with the surplus carried by the entry series, for all a + b up to the
// degree bound. Same flavour selection as check_cauchy.
CheckReport check_commutation(GrowthDatum datum, Int r, const Partition& core, Int degree_bound);

// Exhaustive pair counts over the r-coloured permutations of n via the
// bumping correspondence: the plain count is n! * r^n, and refining by
// s^(dspin(P)+dspin(Q)) gives n! * (sum_{i<r} s^(2i))^n. Requires n <= 4
// and r <= 3 (PreconditionViolated beyond).
CheckReport schensted_count(Int r, const Partition& core, Int n);

}  // namespace ribbon
