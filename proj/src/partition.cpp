#include "ribbon/partition.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

namespace ribbon {

Partition::Partition(std::initializer_list<Int> parts) : Partition(std::vector<Int>(parts)) {}

Partition::Partition(std::vector<Int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0 || (i + 1 < parts_.size() && parts_[i] < parts_[i + 1]))
            throw Error(Error::Kind::InvalidInput,
                        "partition parts must be positive and weakly decreasing");
    }
}

Int Partition::part(Int i) const {
    if (i < 0) throw Error(Error::Kind::InvalidInput, "negative row index");
    return i < num_parts() ? parts_[static_cast<size_t>(i)] : 0;
}

Int Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), Int{0});
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    os << ')';
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.to_string(); }

EdgeSeq::EdgeSeq(Int offset, std::vector<uint8_t> bits, int left_fill, int right_fill)
    : offset_(offset), bits_(std::move(bits)), left_fill_(left_fill ? 1 : 0),
      right_fill_(right_fill ? 1 : 0) {
    for (auto& b : bits_) b = b ? 1 : 0;
    canonicalize();
}

void EdgeSeq::canonicalize() {
    size_t lead = 0;
    while (lead < bits_.size() && bits_[lead] == left_fill_) ++lead;
    if (lead) {
        bits_.erase(bits_.begin(), bits_.begin() + static_cast<std::ptrdiff_t>(lead));
        offset_ += static_cast<Int>(lead);
    }
    while (!bits_.empty() && bits_.back() == right_fill_) bits_.pop_back();
    // With an empty window and distinct fills the offset still carries
    // information: it is where the fill switches over.  Only an all-fill
    // sequence may forget it.
    if (bits_.empty() && left_fill_ == right_fill_) offset_ = 0;
}

int EdgeSeq::at(Int i) const {
    if (i < offset_) return left_fill_;
    Int rel = i - offset_;
    if (rel >= static_cast<Int>(bits_.size())) return right_fill_;
    return bits_[static_cast<size_t>(rel)];
}

EdgeSeq EdgeSeq::shifted(Int d) const { return EdgeSeq(offset_ - d, bits_, left_fill_, right_fill_); }

EdgeSeq EdgeSeq::reversed() const {
    std::vector<uint8_t> rev(bits_.rbegin(), bits_.rend());
    // Window [lo, hi) maps to [-hi, -lo); the stored bit order reverses.
    return EdgeSeq(-hi(), std::move(rev), right_fill_, left_fill_);
}

EdgeSeq EdgeSeq::residue_class(Int r, Int cls) const {
    if (r <= 0) throw Error(Error::Kind::InvalidInput, "residue class needs r >= 1");
    // Smallest j with cls + j*r >= lo(), found without relying on the
    // direction C++ division rounds negative values.
    Int j0 = (lo() - cls) / r;
    while (cls + j0 * r >= lo()) --j0;
    while (cls + j0 * r < lo()) ++j0;
    std::vector<uint8_t> sub;
    Int j = j0;
    for (; cls + j * r < hi(); ++j) sub.push_back(static_cast<uint8_t>(at(cls + j * r)));
    return EdgeSeq(j0, std::move(sub), left_fill_, right_fill_);
}

EdgeSeq EdgeSeq::with_bit(Int i, int value) const {
    Int new_lo = std::min(lo(), i);
    Int new_hi = std::max(hi(), i + 1);
    std::vector<uint8_t> bits;
    bits.reserve(static_cast<size_t>(new_hi - new_lo));
    for (Int p = new_lo; p < new_hi; ++p)
        bits.push_back(static_cast<uint8_t>(p == i ? (value ? 1 : 0) : at(p)));
    return EdgeSeq(new_lo, std::move(bits), left_fill_, right_fill_);
}

Int EdgeSeq::charge() const {
    Int ones = std::count(bits_.begin(), bits_.end(), uint8_t{1});
    return offset_ + ones;
}

std::string EdgeSeq::window_string(Int from, Int to) const {
    std::string s;
    for (Int i = from; i < to; ++i) s.push_back(at(i) ? '1' : '0');
    return s;
}

std::string EdgeSeq::to_string() const {
    std::ostringstream os;
    os << "..." << left_fill_ << '|';
    os << window_string(lo(), hi());
    os << '|' << right_fill_ << "...   (window starts at " << lo() << ')';
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const EdgeSeq& e) { return os << e.to_string(); }

EdgeSeq edge_of_partition(const Partition& p) {
    Int n = p.num_parts();
    // Particles (1-bits) sit at p.part(j) - j - 1; for j >= n that is -j - 1,
    // which the left fill covers once the window starts at -n.
    Int lo = -n;
    Int hi = n ? p.part(0) : 0;  // largest particle is part(0) - 1
    std::vector<uint8_t> bits(static_cast<size_t>(hi - lo), 0);
    for (Int j = 0; j < n; ++j) bits[static_cast<size_t>(p.part(j) - j - 1 - lo)] = 1;
    return EdgeSeq(lo, std::move(bits), 1, 0);
}

Partition partition_of_edge(const EdgeSeq& e) {
    if (e.left_fill() != 1 || e.right_fill() != 0)
        throw Error(Error::Kind::FillMismatch, "partition edges have fills (1,0)");
    if (e.charge() != 0)
        throw Error(Error::Kind::FillMismatch,
                    "edge sequence is a shifted boundary (charge != 0), not a partition edge");
    std::vector<Int> parts;
    Int j = 0;
    for (Int i = e.hi() - 1; i >= e.lo(); --i) {
        if (e.at(i)) {
            Int part = i + j + 1;
            if (part > 0) parts.push_back(part);
            ++j;
        }
    }
    // Below the window every index is a particle and contributes part 0
    // (charge 0 makes the first of them land exactly at 0).
    return Partition(std::move(parts));
}

Int big_edge(const EdgeSeq& e, Int k) {
    if (e.right_fill() != 0)
        throw Error(Error::Kind::Divergent, "cumulation diverges when the right fill is 1");
    Int sum = 0;
    if (k < e.lo()) sum += (e.lo() - k) * e.left_fill();
    for (Int i = std::max(k, e.lo()); i < e.hi(); ++i) sum += e.at(i);
    return sum;
}

Partition transpose(const Partition& p) {
    std::vector<Int> cols;
    if (!p.empty()) {
        cols.assign(static_cast<size_t>(p.part(0)), 0);
        for (Int j = 0; j < p.num_parts(); ++j)
            for (Int c = 0; c < p.part(j); ++c) ++cols[static_cast<size_t>(c)];
    }
    return Partition(std::move(cols));
}

bool is_horizontal_strip(const Partition& la, const Partition& mu) {
    Int rows = std::max(la.num_parts(), mu.num_parts());
    for (Int i = 0; i < rows; ++i)
        if (!(mu.part(i + 1) <= la.part(i) && la.part(i) <= mu.part(i))) return false;
    return true;
}

bool is_vertical_strip(const Partition& la, const Partition& mu) {
    return is_horizontal_strip(transpose(la), transpose(mu));
}

}  // namespace ribbon
