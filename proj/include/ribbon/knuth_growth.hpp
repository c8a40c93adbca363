#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ribbon/partition.hpp"
#include "ribbon/shape_data.hpp"
#include "ribbon/spin_data.hpp"
#include "ribbon/strips.hpp"

namespace ribbon {

// The square-completion rules a growth grid can run on. The first three act
// on single squares (r must be 1); the factored pair applies a single-square
// rule to each r-quotient component; the spin pair works on ribbons directly
// and keeps the height bookkeeping exact.
enum class GrowthDatum {
    Rsk,
    Burge,
    BurgeEdge,
    FactoredRsk,
    FactoredBurge,
    SpinSym,
    SpinAsym,
};

// Stable textual names: rsk, burge, burge-edge, factored-rsk, factored-burge,
// spin-sym, spin-asym. Used by the JSON and command-line layers.
std::string growth_datum_name(GrowthDatum datum);
std::optional<GrowthDatum> growth_datum_from_name(std::string_view name);

// Whether the datum runs on single squares and therefore requires r == 1.
bool growth_datum_is_unit(GrowthDatum datum);

// Orientation of the chains a growth over this datum produces. P chains are
// always horizontal; Q chains are vertical exactly for the mixed rule.
Orientation growth_q_orientation(GrowthDatum datum);

// One square completion, insertion direction: from the top-left shape la,
// its right neighbour mu, its lower neighbour nu and the cell entry a,
// produce the bottom-right shape ka. The colour vector must have exactly r
// components (one for unit data).
Partition growth_insert(GrowthDatum datum, const Partition& la, const Partition& mu,
                        const Partition& nu, const ColorVector& a, Int r);

// One square completion, extraction direction: from mu, nu and the
// bottom-right shape ka recover the cell entry and the top-left shape.
std::pair<ColorVector, Partition> growth_extract(GrowthDatum datum, const Partition& mu,
                                                 const Partition& nu, const Partition& ka,
                                                 Int r);

// A chain of shapes read letter by letter: chain[0] is the base shape and
// step i adds a (possibly empty) r-ribbon strip of the declared orientation.
// Trailing constant steps are legal and carry weight 0; equality of tableaux
// disregards them.
struct RibbonTableau {
    Partition core;                 // base shape; must equal chain[0]
    std::vector<Partition> chain;   // base included, so steps() + 1 shapes
    Orientation orientation = Orientation::Horizontal;
    Int r = 1;

    Int steps() const { return static_cast<Int>(chain.size()) - 1; }
    const Partition& shape() const { return chain.back(); }

    // Number of leading shapes that remain once trailing constant steps are
    // dropped (always at least 1).
    Int trimmed_size() const;

    // Throws InvalidInput when structurally malformed (empty chain, r < 1,
    // base mismatch) and PreconditionViolated when some step is not a strip
    // of the declared orientation.
    void validate() const;

    std::string to_string() const;

    // Same base, r and orientation, and the same chain up to trailing
    // constant steps.
    bool operator==(const RibbonTableau& other) const;
};

// Weight and double spin of a tableau: weight lists ribbons added per step,
// dspin is the total height of all ribbons in the per-step standardisations.
struct TableauStats {
    std::vector<Int> weight;
    Int dspin = 0;

    bool operator==(const TableauStats&) const = default;
};

TableauStats tableau_stats(const RibbonTableau& t);

using ColorMatrix = std::vector<std::vector<ColorVector>>;

// A filled growth grid: shapes at the (m+1) x (n+1) grid points and colour
// vector entries in the m x n cells between them. Row 0 and column 0 hold
// the core; the bottom row read left to right is the P chain, the right
// column read top to bottom is the Q chain. Each cell satisfies
// shapes[k+1][l+1] == growth_insert(datum, shapes[k][l], shapes[k][l+1],
// shapes[k+1][l], entries[k][l], r). A cell depends only on its upper-left
// neighbours, so cells on a common anti-diagonal are independent and any
// fill order produces the same grid.
struct KnuthGrowth {
    Int m = 0;
    Int n = 0;
    GrowthDatum datum = GrowthDatum::Rsk;
    Int r = 1;
    Partition core;
    std::vector<std::vector<Partition>> shapes;  // (m+1) x (n+1), [row][col]
    ColorMatrix entries;                         // m x n

    RibbonTableau P() const;  // bottom row, left to right
    RibbonTableau Q() const;  // right column, top to bottom

    // Full re-check: sizes, core row and column, entry shape, and every
    // square completion. Throws on the first violation.
    void validate() const;

    bool operator==(const KnuthGrowth&) const = default;
};

struct GrowResult {
    RibbonTableau P;
    RibbonTableau Q;
    KnuthGrowth diagram;
};

struct ShrinkResult {
    ColorMatrix entries;
    KnuthGrowth diagram;
};

// Fill a growth grid from its matrix: start from the all-core row 0 and
// column 0 and complete squares in increasing (k, l). The core must be an
// r-core and the matrix rectangular with r-component entries throughout.
GrowResult grow_knuth(const ColorMatrix& A, GrowthDatum datum, const Partition& core, Int r);

// Reconstruct the grid from its two border chains by completing squares in
// decreasing (k, l), recovering the matrix. P must be horizontal, Q of the
// orientation the datum demands, and both must share base shape, final
// shape and r. Mutually inverse with grow_knuth up to trailing constant
// steps of the chains.
ShrinkResult shrink_knuth(const RibbonTableau& P, const RibbonTableau& Q, GrowthDatum datum);

}  // namespace ribbon
