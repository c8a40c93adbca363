#pragma once

#include <map>
#include <utility>
#include <vector>

#include "ribbon/shape_data.hpp"
#include "ribbon/strips.hpp"

namespace ribbon {

// A square of horizontal r-ribbon strips l <= m,n <= k of edge sequences,
// together with the running colour vector that interpolates between the two
// carried vectors. The running vector a(i) equals a_ll far to the left and
// a_gg far to the right, and is stored sparsely: a(i) is the value attached
// to the greatest checkpoint <= i, or a_ll when there is none.
//
// validate() checks the defining local rules, with w the witness of l <= k
// and h(i) = w(i-1) + ... + w(i-r+1):
//  - between consecutive indices the running vector changes only at a head
//    of k/l, where it steps by +1 in colour h(i) when both m/l and n/l have
//    a head there, by -1 when both k/m and k/n do, and not at all otherwise;
//  - wherever w(i-r) != w(i), colour h(i) of a(i) vanishes;
//  - the stored witness, the strip containments, and the two limits match.
struct BasicSquareConfig {
    EdgeSeq l, m, n, k;
    ColorVector a_ll, a_gg;
    std::map<Int, ColorVector> checkpoints;
    EdgeSeq witness;
    Int r = 1;

    ColorVector a_at(Int i) const;
    void validate() const;
};

// Result of completing or unwinding one corner of a square of strips: the
// computed corner sequence, the colour vector carried out at that corner,
// and the full validated square.
struct SpinSymResult {
    EdgeSeq corner;
    ColorVector carried;
    BasicSquareConfig config;
};

// Complete the square upwards: given m >= l <= n by horizontal r-ribbon
// strips and a left-carried vector (which must vanish in every colour at or
// above r * left_fill(l)), produce the unique top corner k and right-carried
// vector admitting a valid square. Runs one left-to-right scan that places a
// head of k/l at an addable pair exactly when a strip head or a matching
// carried colour demands it.
SpinSymResult spin_sym_insert(const EdgeSeq& l, const EdgeSeq& m,
                              const EdgeSeq& n, const ColorVector& a_ll, Int r);

// Complete the square downwards: given m <= k >= n and the right-carried
// vector (which must vanish in every colour at or above r * right_fill(k)),
// recover the bottom corner l and left-carried vector. Implemented by
// running the upward completion on the reversed sequences (which exchanges
// the roles of m and n) and reversing the outcome.
SpinSymResult spin_sym_extract(const EdgeSeq& m, const EdgeSeq& n,
                               const EdgeSeq& k, const ColorVector& a_gg,
                               Int r);

// Partition form of the square completion: mu, nu, ka sharing one r-core,
// with mu <= ka >= nu by horizontal r-ribbon strips, correspond to a colour
// vector and a base shape la <= mu, nu. Inverse pair of maps; the carried
// vector at the top corner of a partition square is always zero.
std::pair<ColorVector, Partition> spin_sym_datum(const Partition& mu,
                                                 const Partition& nu,
                                                 const Partition& ka, Int r);
Partition spin_sym_datum_inverse(const Partition& mu, const Partition& nu,
                                 const ColorVector& a, const Partition& la,
                                 Int r);

// The staircase profile of a pair of shapes: value at k is the cumulated
// edge of mu at k-r minus the cumulated edge of nu at k. Values are stored
// over a window covering all variation; below it they equal r, above it 0.
// rises lists the k with value(k+1) = value(k) + 1 (downward steps read off
// the bit pair (edge mu(k-r), edge nu(k)) = (0,1)), falls those with
// value(k+1) = value(k) - 1.
struct DeltaProfile {
    std::map<Int, Int> values;
    Int r = 1;
    std::vector<Int> rises;
    std::vector<Int> falls;

    Int at(Int k) const;
};

DeltaProfile delta_profile(const Partition& mu, const Partition& nu, Int r);

// Mixed-orientation square completion: given mu/la a horizontal and nu/la a
// vertical r-ribbon strip plus a 0/1 colour vector, produce the unique ka
// with ka/mu vertical and ka/nu horizontal making the profile bookkeeping
// consistent: scanning diagonals upward, each downward step of the profile
// consumes the flag of its level and emits a head into both upper strips
// when the flag was set, each upward step stores a flag exactly when both
// lower strips have a head there, and on level diagonals heads pass
// straight through to the opposite strip. The extract direction replays the
// same scan against the upper strips and recovers the flags and la.
Partition spin_asym_insert(const Partition& la, const Partition& mu,
                           const Partition& nu, const ColorVector& a, Int r);
std::pair<ColorVector, Partition> spin_asym_extract(const Partition& mu,
                                                    const Partition& nu,
                                                    const Partition& ka,
                                                    Int r);

}  // namespace ribbon
