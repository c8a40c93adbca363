#pragma once

#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "ribbon/ribbons.hpp"
#include "ribbon/strips.hpp"

namespace ribbon {

// The bumping rules available for growth diagrams. RowY and ColY are the two
// classical single-square rules (r = 1); SW bumps ribbons of equal height
// towards the bottom left on insertion, WS towards the top right; BVG (r = 2)
// picks the direction from the form of the domino; the factored rules act on
// one quotient component at a time with the corresponding square rule.
enum class CorrTag { RowY, ColY, SW, WS, BVG, FactoredRow, FactoredCol };

// A bumping step either produces a shape below the base or ends with an
// exceptional colour h in [0, r).
using CorrValue = std::variant<Partition, Int>;

// For kappa covering mu (one r-ribbon apart), the value b_mu(kappa): a shape
// covered by mu, or a colour. The map from covers of mu to covered shapes
// and colours is a bijection. Throws NotCovering when kappa/mu is not a
// single r-ribbon, InvalidInput when the tag does not allow this r.
CorrValue r_corr(CorrTag tag, const Partition& mu, const Partition& ka, Int r);

// Inverse bumping step: recover the cover kappa of mu with
// r_corr(tag, mu, kappa, r) == value.
Partition r_corr_inverse(CorrTag tag, const Partition& mu, const CorrValue& value, Int r);

// A coloured permutation: a placement of one point per row and column of an
// n x n grid, each carrying a colour in [0, r). Stored sparsely.
struct ColoredPermutation {
    Int n = 0;
    Int r = 1;
    std::map<std::pair<Int, Int>, Int> points;  // (row, col) -> colour

    std::optional<Int> colour_at(Int row, Int col) const;
    // Throws InvalidInput unless the support is a permutation matrix and all
    // colours lie in [0, r).
    void validate() const;

    bool operator==(const ColoredPermutation&) const = default;
};

// A filled growth grid: shapes at the (n+1) x (n+1) grid points, the matrix
// entries in the n x n cells between them. Row 0 and column 0 stay at the
// core; the bottom row and right column are the two chains P and Q.
struct SchenstedGrowth {
    Int n = 0;
    Int r = 1;
    CorrTag tag = CorrTag::SW;
    Partition core;
    std::vector<std::vector<Partition>> shapes;  // indexed [row][col]
    ColoredPermutation matrix;

    std::vector<Partition> P() const;  // bottom row, left to right
    std::vector<Partition> Q() const;  // right column, top to bottom

    bool operator==(const SchenstedGrowth&) const = default;
};

// Fill the grid from the matrix (insertion direction). The core must be an
// r-core; the matrix must validate.
SchenstedGrowth grow_schensted(const ColoredPermutation& A, CorrTag tag, const Partition& core);

// Reconstruct the grid from the two chains (extraction direction). P and Q
// must be chains of single r-ribbon additions with equal first and last
// shapes. Mutually inverse with grow_schensted.
SchenstedGrowth shrink_schensted(const std::vector<Partition>& P, const std::vector<Partition>& Q,
                                 CorrTag tag, Int r);

// Sum of the heights of the ribbons added along a chain of covers.
Int chain_dspin(const std::vector<Partition>& chain, Int r);

}  // namespace ribbon
