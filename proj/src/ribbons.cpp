#include "ribbon/ribbons.hpp"

#include <algorithm>
#include <numeric>

namespace ribbon {

Int Ribbon::height() const {
    return std::accumulate(form.begin(), form.end(), Int{0});
}

std::vector<Ribbon> list_ribbons(const EdgeSeq& e, Int r, RibbonMode mode) {
    if (r < 1) throw Error(Error::Kind::InvalidInput, "ribbon size must be >= 1");
    int want_tail = mode == RibbonMode::Addable ? 1 : 0;  // bit at k-r
    std::vector<Ribbon> out;
    for (Int k = e.lo(); k < e.hi() + r; ++k) {
        if (e.at(k - r) == want_tail && e.at(k) == 1 - want_tail) {
            Ribbon rb;
            rb.head_content = k;
            rb.r = r;
            for (Int j = k - r + 1; j < k; ++j) rb.form.push_back(static_cast<uint8_t>(e.at(j)));
            out.push_back(std::move(rb));
        }
    }
    return out;
}

std::vector<Ribbon> list_ribbons(const Partition& mu, Int r, RibbonMode mode) {
    return list_ribbons(edge_of_partition(mu), r, mode);
}

EdgeSeq apply_ribbon(const EdgeSeq& e, Int head, Int r, RibbonDir dir) {
    if (r < 1) throw Error(Error::Kind::InvalidInput, "ribbon size must be >= 1");
    int lo_bit = dir == RibbonDir::Add ? 1 : 0;  // required value at head-r
    if (e.at(head - r) != lo_bit || e.at(head) != 1 - lo_bit)
        throw Error(Error::Kind::NotApplicable, "edge bit pair does not admit this ribbon move");
    return e.with_bit(head - r, 1 - lo_bit).with_bit(head, lo_bit);
}

Partition apply_ribbon(const Partition& la, Int head, Int r, RibbonDir dir) {
    return partition_of_edge(apply_ribbon(edge_of_partition(la), head, r, dir));
}

bool is_r_core(const Partition& p, Int r) {
    return list_ribbons(p, r, RibbonMode::Removable).empty();
}

CoreQuotient r_quotient(const Partition& la, Int r) {
    if (r < 1) throw Error(Error::Kind::InvalidInput, "quotient needs r >= 1");
    EdgeSeq e = edge_of_partition(la);
    CoreQuotient cq;
    cq.r = r;
    std::vector<Int> charges(static_cast<size_t>(r));
    for (Int cls = 0; cls < r; ++cls) {
        EdgeSeq sub = e.residue_class(r, cls);
        Int c = sub.charge();
        charges[static_cast<size_t>(cls)] = c;
        cq.quotient.push_back(partition_of_edge(sub.shifted(c)));
    }
    // The core's class-cls subsequence is 1 exactly below index charge(cls).
    Int jlo = 0, jhi = 0;
    for (Int c : charges) {
        jlo = std::min(jlo, c);
        jhi = std::max(jhi, c);
    }
    std::vector<uint8_t> bits;
    Int lo = (jlo - 1) * r;
    Int hi = (jhi + 1) * r;
    for (Int i = lo; i < hi; ++i) {
        Int cls = ((i % r) + r) % r;
        Int j = (i - cls) / r;
        bits.push_back(static_cast<uint8_t>(j < charges[static_cast<size_t>(cls)] ? 1 : 0));
    }
    cq.core = partition_of_edge(EdgeSeq(lo, std::move(bits), 1, 0));
    return cq;
}

Partition from_core_quotient(const CoreQuotient& cq) {
    Int r = cq.r;
    if (r < 1 || static_cast<Int>(cq.quotient.size()) != r)
        throw Error(Error::Kind::InvalidInput, "core/quotient pair needs exactly r components");
    if (!is_r_core(cq.core, r))
        throw Error(Error::Kind::NotACore, "claimed core still has a removable ribbon");
    EdgeSeq core_edge = edge_of_partition(cq.core);
    std::vector<Int> charges;
    std::vector<EdgeSeq> class_edges;
    Int jlo = 0, jhi = 1;
    for (Int cls = 0; cls < r; ++cls) {
        Int c = core_edge.residue_class(r, cls).charge();
        charges.push_back(c);
        // Class subsequence of the result: quotient edge shifted to charge c.
        EdgeSeq q = edge_of_partition(cq.quotient[static_cast<size_t>(cls)]).shifted(-c);
        class_edges.push_back(q);
        jlo = std::min(jlo, q.lo());
        jhi = std::max(jhi, q.hi());
    }
    std::vector<uint8_t> bits;
    Int lo = (jlo - 1) * r;
    Int hi = (jhi + 1) * r;
    for (Int i = lo; i < hi; ++i) {
        Int cls = ((i % r) + r) % r;
        Int j = (i - cls) / r;
        bits.push_back(static_cast<uint8_t>(class_edges[static_cast<size_t>(cls)].at(j)));
    }
    return partition_of_edge(EdgeSeq(lo, std::move(bits), 1, 0));
}

}  // namespace ribbon
