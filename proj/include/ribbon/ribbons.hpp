#pragma once

#include <vector>

#include "ribbon/partition.hpp"

namespace ribbon {

// An r-ribbon rooted at the boundary of some shape: r squares on r
// consecutive diagonals. It is encoded by the content of its head (the
// top-right square) together with the r-1 boundary bits strictly between
// the swapped pair; their sum is the ribbon's height (number of row drops).
struct Ribbon {
    Int head_content = 0;
    std::vector<uint8_t> form;  // bits at head_content-r+1 .. head_content-1, in index order
    Int r = 1;

    Int height() const;

    bool operator==(const Ribbon&) const = default;
};

enum class RibbonMode { Addable, Removable };

// All ribbons that can be added to (removed from) mu, sorted by head content.
// A head k is addable when the edge bit pair at (k-r, k) is (1,0) and
// removable when it is (0,1); the form is read off the bits in between.
std::vector<Ribbon> list_ribbons(const Partition& mu, Int r, RibbonMode mode);
std::vector<Ribbon> list_ribbons(const EdgeSeq& e, Int r, RibbonMode mode);

enum class RibbonDir { Add, Remove };

// Swap the edge bit pair at (head-r, head): (1,0) -> (0,1) for Add and back
// for Remove. Throws NotApplicable when the pair does not match.
Partition apply_ribbon(const Partition& la, Int head, Int r, RibbonDir dir);
EdgeSeq apply_ribbon(const EdgeSeq& e, Int head, Int r, RibbonDir dir);

// A shape split into its r-core (no ribbon can be removed) and the r-tuple
// of partitions carried by the residue classes of its edge sequence.
struct CoreQuotient {
    Partition core;
    std::vector<Partition> quotient;  // exactly r components
    Int r = 1;

    bool operator==(const CoreQuotient&) const = default;
};

// Mutually inverse bijection between partitions and core/quotient pairs:
// quotient component i is the partition carried by the bits of edge(la) at
// indices congruent to i mod r, shifted to charge 0; the core keeps each
// class's charge but pushes all its 1-bits left.
CoreQuotient r_quotient(const Partition& la, Int r);
Partition from_core_quotient(const CoreQuotient& cq);

// True iff no r-ribbon can be removed.
bool is_r_core(const Partition& p, Int r);

}  // namespace ribbon
