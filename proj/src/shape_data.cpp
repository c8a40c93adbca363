#include "ribbon/shape_data.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "ribbon/strips.hpp"

namespace ribbon {

namespace {

void require(bool ok, Error::Kind kind, const std::string& msg) {
    if (!ok) throw Error(kind, msg);
}

Int floor_mod(Int k, Int r) {
    Int m = k % r;
    return m < 0 ? m + r : m;
}

}  // namespace

ColorVector ColorVector::zeros(Int r) {
    ColorVector v;
    v.comps.assign(static_cast<size_t>(r), 0);
    return v;
}

Int ColorVector::rank() const {
    Int s = 0;
    for (Int x : comps) s += x;
    return s;
}

Int ColorVector::weight() const {
    Int s = 0;
    for (size_t i = 0; i < comps.size(); ++i) s += static_cast<Int>(i) * comps[i];
    return s;
}

bool ColorVector::is_zero() const {
    return std::all_of(comps.begin(), comps.end(), [](Int x) { return x == 0; });
}

std::string ColorVector::to_string() const {
    std::string s = "(";
    for (size_t i = 0; i < comps.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(comps[i]);
    }
    return s + ")";
}

namespace {

void require_natural(Int a) {
    require(a >= 0, Error::Kind::InvalidInput, "surplus must be a natural number");
}

void require_color_vector(const ColorVector& a, Int r) {
    require(a.r() == r, Error::Kind::InvalidInput,
            "colour vector must have exactly r components");
    for (Int x : a.comps) require_natural(x);
}

// Largest row index that any of the given shapes still occupies.
Int max_rows(const Partition& p, const Partition& q) {
    return std::max(p.num_parts(), q.num_parts());
}

Partition partition_from_rows(std::vector<Int> rows, const char* what) {
    while (!rows.empty() && rows.back() == 0) rows.pop_back();
    for (size_t i = 0; i < rows.size(); ++i) {
        require(rows[i] > 0 && (i == 0 || rows[i - 1] >= rows[i]),
                Error::Kind::Internal,
                std::string(what) + " produced a non-partition");
    }
    return Partition(std::move(rows));
}

}  // namespace

// ---------------------------------------------------------------------------
// Row-bumping square completion.
// ---------------------------------------------------------------------------

Partition rsk_insert(const Partition& la, const Partition& mu,
                     const Partition& nu, Int a) {
    require_natural(a);
    require(is_horizontal_strip(la, mu), Error::Kind::PreconditionViolated,
            "first middle shape does not contain the base by a horizontal strip");
    require(is_horizontal_strip(la, nu), Error::Kind::PreconditionViolated,
            "second middle shape does not contain the base by a horizontal strip");
    const Int rows = max_rows(mu, nu);
    std::vector<Int> ka;
    ka.push_back(std::max(mu.part(0), nu.part(0)) + a);
    for (Int i = 0; i < rows; ++i) {
        ka.push_back(std::min(mu.part(i), nu.part(i)) +
                     std::max(mu.part(i + 1), nu.part(i + 1)) - la.part(i));
    }
    Partition result = partition_from_rows(std::move(ka), "row bumping");
    require(is_horizontal_strip(mu, result) && is_horizontal_strip(nu, result),
            Error::Kind::Internal, "row bumping produced a non-strip cover");
    return result;
}

std::pair<Int, Partition> rsk_extract(const Partition& mu, const Partition& nu,
                                      const Partition& ka) {
    require(is_horizontal_strip(mu, ka), Error::Kind::PreconditionViolated,
            "top shape does not contain the first middle shape by a horizontal strip");
    require(is_horizontal_strip(nu, ka), Error::Kind::PreconditionViolated,
            "top shape does not contain the second middle shape by a horizontal strip");
    const Int a = ka.part(0) - std::max(mu.part(0), nu.part(0));
    require(a >= 0, Error::Kind::Internal, "row extraction surplus went negative");
    const Int rows = max_rows(mu, nu);
    std::vector<Int> la;
    for (Int i = 0; i < rows; ++i) {
        la.push_back(std::min(mu.part(i), nu.part(i)) +
                     std::max(mu.part(i + 1), nu.part(i + 1)) - ka.part(i + 1));
    }
    Partition result = partition_from_rows(std::move(la), "row extraction");
    require(is_horizontal_strip(result, mu) && is_horizontal_strip(result, nu),
            Error::Kind::Internal, "row extraction produced a non-strip base");
    return {a, result};
}

// ---------------------------------------------------------------------------
// Column-bumping square completion.
// ---------------------------------------------------------------------------

Partition burge_insert(const Partition& la, const Partition& mu,
                       const Partition& nu, Int a) {
    require_natural(a);
    require(is_horizontal_strip(la, mu), Error::Kind::PreconditionViolated,
            "first middle shape does not contain the base by a horizontal strip");
    require(is_horizontal_strip(la, nu), Error::Kind::PreconditionViolated,
            "second middle shape does not contain the base by a horizontal strip");
    const Partition lt = transpose(la), mt = transpose(mu), nt = transpose(nu);
    const Int width = std::max(mu.part(0), nu.part(0));
    std::vector<Int> kt;
    for (Int j = 0; j < width || a > 0; ++j) {
        const Int lj = lt.part(j);
        const Int c = (mt.part(j) - lj) + (nt.part(j) - lj);
        if (c >= 1) {
            kt.push_back(lj + 1);
            if (c == 2) ++a;
        } else if (a > 0) {
            kt.push_back(lj + 1);
            --a;
        } else {
            kt.push_back(lj);
        }
    }
    Partition result = transpose(partition_from_rows(std::move(kt), "column bumping"));
    require(is_horizontal_strip(mu, result) && is_horizontal_strip(nu, result),
            Error::Kind::Internal, "column bumping produced a non-strip cover");
    return result;
}

std::pair<Int, Partition> burge_extract(const Partition& mu,
                                        const Partition& nu,
                                        const Partition& ka) {
    require(is_horizontal_strip(mu, ka), Error::Kind::PreconditionViolated,
            "top shape does not contain the first middle shape by a horizontal strip");
    require(is_horizontal_strip(nu, ka), Error::Kind::PreconditionViolated,
            "top shape does not contain the second middle shape by a horizontal strip");
    const Partition mt = transpose(mu), nt = transpose(nu), kt = transpose(ka);
    const Int width = ka.part(0);
    std::vector<Int> lt(static_cast<size_t>(width), 0);
    Int a = 0;
    for (Int j = width - 1; j >= 0; --j) {
        const Int kj = kt.part(j);
        const Int c = (kj - mt.part(j)) + (kj - nt.part(j));
        if (c >= 1) {
            lt[static_cast<size_t>(j)] = kj - 1;
            if (c == 2) ++a;
        } else if (a > 0) {
            lt[static_cast<size_t>(j)] = kj - 1;
            --a;
        } else {
            lt[static_cast<size_t>(j)] = kj;
        }
    }
    Partition result = transpose(partition_from_rows(std::move(lt), "column extraction"));
    require(is_horizontal_strip(result, mu) && is_horizontal_strip(result, nu),
            Error::Kind::Internal, "column extraction produced a non-strip base");
    return {a, result};
}

// ---------------------------------------------------------------------------
// Edge-sequence pass shared by the single-diagonal and the merged factored
// formulations. Diagonal k manipulates the bit pair (k-r, k) and draws its
// surplus from the residue class of k mod r.
// ---------------------------------------------------------------------------

namespace {

struct EdgePassResult {
    EdgeSeq seq;
    std::vector<Int> surplus;
};

EdgeSeq merged_insert_pass(const EdgeSeq& start, const std::set<Int>& occ_mu,
                           const std::set<Int>& occ_nu, std::vector<Int> a,
                           Int r, std::vector<BurgeEdgeStep>* trace) {
    EdgeSeq w = start;
    Int total = 0;
    for (Int x : a) total += x;
    bool any_occ = false;
    Int last_occ = 0;
    for (const auto* s : {&occ_mu, &occ_nu}) {
        if (!s->empty()) {
            last_occ = any_occ ? std::max(last_occ, *s->rbegin()) : *s->rbegin();
            any_occ = true;
        }
    }
    const Int occ_count =
        static_cast<Int>(occ_mu.size()) + static_cast<Int>(occ_nu.size());
    const Int hard_stop = std::max(w.hi(), any_occ ? last_occ : w.hi()) +
                          r * (total + occ_count + 2) + r;
    for (Int k = w.lo(); total > 0 || (any_occ && k <= last_occ); ++k) {
        require(k <= hard_stop, Error::Kind::Internal,
                "edge bumping pass failed to terminate");
        const Int cls = floor_mod(k, r);
        const int c = static_cast<int>(occ_mu.count(k)) +
                      static_cast<int>(occ_nu.count(k));
        const bool eligible = w.at(k - r) == 1 && w.at(k) == 0;
        auto act = BurgeEdgeStep::Action::Skip;
        if (eligible) {
            if (c >= 1) {
                w = w.with_bit(k - r, 0).with_bit(k, 1);
                if (c == 2) {
                    ++a[static_cast<size_t>(cls)];
                    ++total;
                    act = BurgeEdgeStep::Action::SwapUp;
                } else {
                    act = BurgeEdgeStep::Action::Swap;
                }
            } else if (a[static_cast<size_t>(cls)] > 0) {
                w = w.with_bit(k - r, 0).with_bit(k, 1);
                --a[static_cast<size_t>(cls)];
                --total;
                act = BurgeEdgeStep::Action::SwapDown;
            } else {
                act = BurgeEdgeStep::Action::Hold;
            }
        } else {
            require(c == 0, Error::Kind::Internal,
                    "strip occupies a diagonal whose bit pair is not addable");
        }
        if (trace) trace->push_back({k, c, act, total, w});
    }
    return w;
}

EdgePassResult merged_extract_pass(const EdgeSeq& start,
                                   const std::set<Int>& occ_mu,
                                   const std::set<Int>& occ_nu, Int r,
                                   std::vector<BurgeEdgeStep>* trace) {
    EdgeSeq w = start;
    std::vector<Int> surplus(static_cast<size_t>(r), 0);
    Int total = 0;
    // Every diagonal a forward pass can treat carries a window bit of the
    // result, so walking the stored window downwards undoes all of them.
    const Int k_hi = start.hi() - 1, k_lo = start.lo();
    for (Int k = k_hi; k >= k_lo; --k) {
        const Int cls = floor_mod(k, r);
        const int c = static_cast<int>(occ_mu.count(k)) +
                      static_cast<int>(occ_nu.count(k));
        const bool removable = w.at(k - r) == 0 && w.at(k) == 1;
        auto act = BurgeEdgeStep::Action::Skip;
        if (c >= 1) {
            require(removable, Error::Kind::Internal,
                    "strip occupies a diagonal whose bit pair is not removable");
            w = w.with_bit(k - r, 1).with_bit(k, 0);
            if (c == 2) {
                ++surplus[static_cast<size_t>(cls)];
                ++total;
                act = BurgeEdgeStep::Action::SwapUp;
            } else {
                act = BurgeEdgeStep::Action::Swap;
            }
        } else if (removable && surplus[static_cast<size_t>(cls)] > 0) {
            w = w.with_bit(k - r, 1).with_bit(k, 0);
            --surplus[static_cast<size_t>(cls)];
            --total;
            act = BurgeEdgeStep::Action::SwapDown;
        } else if (removable) {
            act = BurgeEdgeStep::Action::Hold;
        }
        if (trace) trace->push_back({k, c, act, total, w});
    }
    return {w, std::move(surplus)};
}

// Head positions of a horizontal ribbon strip, failing with the given error
// kind when the containment does not hold.
std::set<Int> strip_heads(const EdgeSeq& lo, const EdgeSeq& hi, Int r,
                          Error::Kind kind, const std::string& msg) {
    auto scan = strip_scan(lo, hi, r);
    require(scan.has_value(), kind, msg);
    return {scan->positions.begin(), scan->positions.end()};
}

}  // namespace

Partition burge_edge_insert(const Partition& la, const Partition& mu,
                            const Partition& nu, Int a,
                            std::vector<BurgeEdgeStep>* trace) {
    require_natural(a);
    const EdgeSeq el = edge_of_partition(la);
    const auto occ_mu = strip_heads(
        el, edge_of_partition(mu), 1, Error::Kind::PreconditionViolated,
        "first middle shape does not contain the base by a horizontal strip");
    const auto occ_nu = strip_heads(
        el, edge_of_partition(nu), 1, Error::Kind::PreconditionViolated,
        "second middle shape does not contain the base by a horizontal strip");
    return partition_of_edge(merged_insert_pass(el, occ_mu, occ_nu, {a}, 1, trace));
}

std::pair<Int, Partition> burge_edge_extract(const Partition& mu,
                                             const Partition& nu,
                                             const Partition& ka,
                                             std::vector<BurgeEdgeStep>* trace) {
    const EdgeSeq ek = edge_of_partition(ka);
    const auto occ_mu = strip_heads(
        edge_of_partition(mu), ek, 1, Error::Kind::PreconditionViolated,
        "top shape does not contain the first middle shape by a horizontal strip");
    const auto occ_nu = strip_heads(
        edge_of_partition(nu), ek, 1, Error::Kind::PreconditionViolated,
        "top shape does not contain the second middle shape by a horizontal strip");
    auto res = merged_extract_pass(ek, occ_mu, occ_nu, 1, trace);
    return {res.surplus[0], partition_of_edge(res.seq)};
}

// ---------------------------------------------------------------------------
// Factored square completions through the r-quotient.
// ---------------------------------------------------------------------------

namespace {

void require_common_core(const CoreQuotient& x, const CoreQuotient& y) {
    require(x.core == y.core, Error::Kind::CoreMismatch,
            "shapes do not share their r-core");
}

}  // namespace

Partition factored_insert(FactoredBase base, const Partition& la,
                          const Partition& mu, const Partition& nu,
                          const ColorVector& a, Int r) {
    require(r >= 1, Error::Kind::InvalidInput, "ribbon size must be positive");
    require_color_vector(a, r);
    const CoreQuotient ql = r_quotient(la, r);
    const CoreQuotient qm = r_quotient(mu, r);
    const CoreQuotient qn = r_quotient(nu, r);
    require_common_core(qm, qn);
    require_common_core(ql, qm);
    CoreQuotient out{ql.core, {}, r};
    for (Int i = 0; i < r; ++i) {
        const auto& cl = ql.quotient[static_cast<size_t>(i)];
        const auto& cm = qm.quotient[static_cast<size_t>(i)];
        const auto& cn = qn.quotient[static_cast<size_t>(i)];
        const Int ai = a.comps[static_cast<size_t>(i)];
        out.quotient.push_back(base == FactoredBase::Rsk
                                   ? rsk_insert(cl, cm, cn, ai)
                                   : burge_insert(cl, cm, cn, ai));
    }
    return from_core_quotient(out);
}

std::pair<ColorVector, Partition> factored_extract(FactoredBase base,
                                                   const Partition& mu,
                                                   const Partition& nu,
                                                   const Partition& ka, Int r) {
    require(r >= 1, Error::Kind::InvalidInput, "ribbon size must be positive");
    const CoreQuotient qm = r_quotient(mu, r);
    const CoreQuotient qn = r_quotient(nu, r);
    const CoreQuotient qk = r_quotient(ka, r);
    require_common_core(qm, qn);
    require_common_core(qk, qm);
    ColorVector a = ColorVector::zeros(r);
    CoreQuotient out{qk.core, {}, r};
    for (Int i = 0; i < r; ++i) {
        const auto& cm = qm.quotient[static_cast<size_t>(i)];
        const auto& cn = qn.quotient[static_cast<size_t>(i)];
        const auto& ck = qk.quotient[static_cast<size_t>(i)];
        auto [ai, ci] = base == FactoredBase::Rsk ? rsk_extract(cm, cn, ck)
                                                  : burge_extract(cm, cn, ck);
        a.comps[static_cast<size_t>(i)] = ai;
        out.quotient.push_back(ci);
    }
    return {a, from_core_quotient(out)};
}

Partition factored_merged_insert(const Partition& la, const Partition& mu,
                                 const Partition& nu, const ColorVector& a,
                                 Int r) {
    require(r >= 1, Error::Kind::InvalidInput, "ribbon size must be positive");
    require_color_vector(a, r);
    require_common_core(r_quotient(mu, r), r_quotient(nu, r));
    require_common_core(r_quotient(la, r), r_quotient(mu, r));
    const EdgeSeq el = edge_of_partition(la);
    const auto occ_mu = strip_heads(
        el, edge_of_partition(mu), r, Error::Kind::PreconditionViolated,
        "first middle shape does not contain the base by a horizontal ribbon strip");
    const auto occ_nu = strip_heads(
        el, edge_of_partition(nu), r, Error::Kind::PreconditionViolated,
        "second middle shape does not contain the base by a horizontal ribbon strip");
    return partition_of_edge(
        merged_insert_pass(el, occ_mu, occ_nu, a.comps, r, nullptr));
}

std::pair<ColorVector, Partition> factored_merged_extract(const Partition& mu,
                                                          const Partition& nu,
                                                          const Partition& ka,
                                                          Int r) {
    require(r >= 1, Error::Kind::InvalidInput, "ribbon size must be positive");
    require_common_core(r_quotient(mu, r), r_quotient(nu, r));
    require_common_core(r_quotient(ka, r), r_quotient(mu, r));
    const EdgeSeq ek = edge_of_partition(ka);
    const auto occ_mu = strip_heads(
        edge_of_partition(mu), ek, r, Error::Kind::PreconditionViolated,
        "top shape does not contain the first middle shape by a horizontal ribbon strip");
    const auto occ_nu = strip_heads(
        edge_of_partition(nu), ek, r, Error::Kind::PreconditionViolated,
        "top shape does not contain the second middle shape by a horizontal ribbon strip");
    auto res = merged_extract_pass(ek, occ_mu, occ_nu, r, nullptr);
    ColorVector a;
    a.comps = std::move(res.surplus);
    return {a, partition_of_edge(res.seq)};
}

}  // namespace ribbon
