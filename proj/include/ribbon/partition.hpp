#pragma once

#include <compare>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include "ribbon/common.hpp"

namespace ribbon {

// A partition: weakly decreasing finite sequence of positive integers.
// Trailing zeros are trimmed on construction so equality is structural.
// Immutable after construction.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<Int> parts);
    explicit Partition(std::vector<Int> parts);

    // Part at row index i, with absent rows read as 0.
    Int part(Int i) const;
    Int num_parts() const { return static_cast<Int>(parts_.size()); }
    // Total number of diagram squares.
    Int size() const;
    bool empty() const { return parts_.empty(); }

    const std::vector<Int>& parts() const { return parts_; }

    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;

    std::string to_string() const;  // e.g. "(6,4,3,3,1)", "()" for the empty shape

private:
    std::vector<Int> parts_;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

// Eventually-constant doubly infinite bit sequence. The value at index i is
// bits[i - offset] inside the stored window, left_fill for i below it and
// right_fill for i at or beyond its end. Canonical form trims window bits
// equal to the adjacent fill, so equality is structural equality.
class EdgeSeq {
public:
    EdgeSeq() : offset_(0), left_fill_(1), right_fill_(0) {}
    EdgeSeq(Int offset, std::vector<uint8_t> bits, int left_fill, int right_fill);

    int at(Int i) const;

    int left_fill() const { return left_fill_; }
    int right_fill() const { return right_fill_; }
    // Window bounds after trimming: every index below lo() carries left_fill,
    // every index at or above hi() carries right_fill. lo() == hi() for a
    // constant-fill sequence.
    Int lo() const { return offset_; }
    Int hi() const { return offset_ + static_cast<Int>(bits_.size()); }

    bool operator==(const EdgeSeq&) const = default;

    // The sequence i -> at(i + d) (window slides left by d for d > 0).
    EdgeSeq shifted(Int d) const;
    // The sequence i -> at(-1 - i); exchanges the two fills.
    EdgeSeq reversed() const;
    // The subsequence j -> at(cls + j*r) of one residue class of indices.
    EdgeSeq residue_class(Int r, Int cls) const;
    // Copy with the bit at index i replaced (window is widened as needed).
    EdgeSeq with_bit(Int i, int value) const;

    // offset + number of 1-bits in the window. Zero exactly for the edge
    // sequences of partitions (among sequences with fills 1,0).
    Int charge() const;

    // Bits over [from, to) as a "0"/"1" string, regardless of the window.
    std::string window_string(Int from, Int to) const;
    std::string to_string() const;  // fills marked as "...1|" and "|0..."

private:
    void canonicalize();

    Int offset_;
    std::vector<uint8_t> bits_;
    int left_fill_;
    int right_fill_;
};

std::ostream& operator<<(std::ostream& os, const EdgeSeq& e);

// The boundary encoding of a partition: bit 1 exactly at the indices
// {p.part(j) - j - 1 : j >= 0}, so with left fill 1 and right fill 0.
// Adding a square of content k (column - row) swaps the bit pair at
// (k-1, k) from (1,0) to (0,1).
EdgeSeq edge_of_partition(const Partition& p);

// Inverse of edge_of_partition. Requires fills (1,0) and charge 0.
Partition partition_of_edge(const EdgeSeq& e);

// Cumulative profile: sum of e at all indices >= k (the height at which the
// boundary of the shape crosses diagonal k). Requires right fill 0.
Int big_edge(const EdgeSeq& e, Int k);

// Conjugate partition (rows exchanged with columns). Satisfies
// edge(transpose(p)) at i == 1 - edge(p) at (-1 - i).
Partition transpose(const Partition& p);

// True iff mu/la is a horizontal strip: mu.part(i+1) <= la.part(i) <= mu.part(i)
// for all i (at most one new square per column). The vertical-strip test is
// this applied to transposes.
bool is_horizontal_strip(const Partition& la, const Partition& mu);
bool is_vertical_strip(const Partition& la, const Partition& mu);

}  // namespace ribbon
