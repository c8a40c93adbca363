#pragma once

#include <optional>
#include <vector>

#include "ribbon/partition.hpp"
#include "ribbon/ribbons.hpp"

namespace ribbon {

enum class Orientation { Horizontal, Vertical };

// The result of a successful witness scan between two edge sequences:
// positions where ribbons sit in the left-to-right standardisation, the
// height of each, and the certifying sequence itself. The witness w is the
// unique sequence with
//   (w[i-r], hi[i-r], lo[i], w[i]) in {(a,a,b,b)} or (1,0,0,1)  for all i,
// with finitely many occurrences of (1,0,0,1); those occurrences are the
// ribbon positions, and the height at i is the sum w[i-1] + ... + w[i-r+1].
struct StripScan {
    EdgeSeq witness;
    std::vector<Int> positions;  // ascending scan order
    std::vector<Int> heights;    // aligned with positions
    Int dspin = 0;               // twice the spin: the plain sum of heights
};

// Scan lo -> hi. Returns nothing when hi/lo is not a horizontal r-ribbon
// strip (mismatched fills, a forbidden bit pattern, or an unbounded tail).
std::optional<StripScan> strip_scan(const EdgeSeq& lo, const EdgeSeq& hi, Int r);

// Rebuild the upper sequence from the lower one and the scan positions.
// Throws PreconditionViolated when the positions are not realizable.
EdgeSeq strip_from_positions(const EdgeSeq& lo, const std::vector<Int>& positions, Int r);

// A horizontal or vertical r-ribbon strip between two partitions. Vertical
// strips are scanned on the transposed shapes; their positions and heights
// are reported in the original coordinates (a transposed scan hit at i is a
// ribbon with head content r-1-i and height r-1-h), so `positions` always
// lists head contents of the standardisation and `dspin` is always the sum
// of the listed heights.
struct RibbonStrip {
    Partition lo;
    Partition hi;
    Orientation orientation = Orientation::Horizontal;
    Int r = 1;
    EdgeSeq witness;             // of the scan actually performed
    std::vector<Int> positions;  // ascending head contents
    std::vector<Int> heights;    // aligned with positions
    Int dspin = 0;

    Int count() const { return static_cast<Int>(positions.size()); }
};

std::optional<RibbonStrip> strip_check(const Partition& lo, const Partition& hi, Int r,
                                       Orientation orientation = Orientation::Horizontal);

// The standardisation: the chain lo = p0 < p1 < ... < pm = hi that adds the
// strip's ribbons one at a time, by increasing head content for horizontal
// strips and decreasing for vertical ones.
std::vector<Partition> standardise(const RibbonStrip& strip);

}  // namespace ribbon
