#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ribbon/partition.hpp"
#include "ribbon/ribbons.hpp"

namespace ribbon {

// Multiplicity vector with one natural entry per colour 0..r-1.
struct ColorVector {
    std::vector<Int> comps;

    static ColorVector zeros(Int r);

    Int r() const { return static_cast<Int>(comps.size()); }
    // Total number of coloured items.
    Int rank() const;
    // Sum of colour * multiplicity.
    Int weight() const;
    bool is_zero() const;

    bool operator==(const ColorVector&) const = default;

    std::string to_string() const;
};

// Square completion for ordinary horizontal strips, row-bumping flavour.
//
// Given mu/la and nu/la horizontal strips plus a surplus a of first-row
// squares, produce the unique ka with ka/mu and ka/nu horizontal strips such
// that every row satisfies the bumping recurrences
//   ka_0     = max(mu_0, nu_0) + a
//   ka_{i+1} = min(mu_i, nu_i) + max(mu_{i+1}, nu_{i+1}) - la_i.
// The extract direction inverts this, returning the surplus and la.
Partition rsk_insert(const Partition& la, const Partition& mu,
                     const Partition& nu, Int a);
std::pair<Int, Partition> rsk_extract(const Partition& mu, const Partition& nu,
                                      const Partition& ka);

// Square completion for ordinary horizontal strips, column-bumping flavour.
// Columns are treated left to right; each column grows by one when exactly
// one of mu/la, nu/la occupies it, grows and releases a surplus unit when
// both do, and absorbs a surplus unit when neither does and surplus remains.
Partition burge_insert(const Partition& la, const Partition& mu,
                       const Partition& nu, Int a);
std::pair<Int, Partition> burge_extract(const Partition& mu,
                                        const Partition& nu,
                                        const Partition& ka);

// One step of the edge-sequence formulation of the column-bumping datum:
// which diagonal was treated, how many of the two strips occupy it, what
// happened to the tracked bit pair, and the full state afterwards.
struct BurgeEdgeStep {
    enum class Action {
        Skip,      // bit pair not eligible at this diagonal
        Swap,      // exactly one strip occupies it: swap the pair
        SwapUp,    // both strips occupy it: swap and increment the surplus
        SwapDown,  // neither does: swap and decrement the surplus
        Hold,      // neither does and no surplus: leave the pair alone
    };

    Int k = 0;
    int c = 0;
    Action action = Action::Skip;
    Int a_after = 0;
    EdgeSeq after;
};

// Single left-to-right pass over the edge sequence of la. At each diagonal k
// whose bit pair (k-1, k) reads (1,0), count the strips mu/la and nu/la
// occupying diagonal k and swap / hold per the column-bumping rules above;
// the pass stops once the surplus is exhausted and every occupied diagonal
// has been passed. Produces the same shape as burge_insert.
Partition burge_edge_insert(const Partition& la, const Partition& mu,
                            const Partition& nu, Int a,
                            std::vector<BurgeEdgeStep>* trace = nullptr);

// Right-to-left inverse pass: walks the diagonals of ka downwards, undoing
// swaps against the occupancies of ka/mu and ka/nu and re-collecting the
// surplus. Produces the same result as burge_extract.
std::pair<Int, Partition> burge_edge_extract(
    const Partition& mu, const Partition& nu, const Partition& ka,
    std::vector<BurgeEdgeStep>* trace = nullptr);

// Which square completion a factored operation applies on each r-quotient
// component.
enum class FactoredBase { Rsk, Burge };

// Square completion acting through the r-quotient: mu and nu must share
// their r-core, and the chosen base operation is applied componentwise with
// one surplus entry per component. Colour i of the surplus vector belongs to
// quotient component i.
Partition factored_insert(FactoredBase base, const Partition& la,
                          const Partition& mu, const Partition& nu,
                          const ColorVector& a, Int r);
std::pair<ColorVector, Partition> factored_extract(FactoredBase base,
                                                   const Partition& mu,
                                                   const Partition& nu,
                                                   const Partition& ka, Int r);

// The column-bumping flavour admits a merged formulation that never splits
// the edge sequence: one left-to-right pass over the full edge sequence of
// la in which diagonal k manipulates the bit pair (k-r, k) and draws its
// surplus from the residue class of k. Must agree with the componentwise
// Burge version.
Partition factored_merged_insert(const Partition& la, const Partition& mu,
                                 const Partition& nu, const ColorVector& a,
                                 Int r);
std::pair<ColorVector, Partition> factored_merged_extract(const Partition& mu,
                                                          const Partition& nu,
                                                          const Partition& ka,
                                                          Int r);

}  // namespace ribbon
