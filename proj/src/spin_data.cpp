#include "ribbon/spin_data.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace ribbon {

namespace {

void require(bool ok, Error::Kind kind, const std::string& msg) {
    if (!ok) throw Error(kind, msg);
}

void require_color_vector(const ColorVector& a, Int r) {
    require(a.r() == r, Error::Kind::InvalidInput,
            "colour vector must have exactly r components");
    for (Int x : a.comps)
        require(x >= 0, Error::Kind::InvalidInput,
                "colour multiplicities must be natural numbers");
}

std::set<Int> as_set(const std::vector<Int>& v) { return {v.begin(), v.end()}; }

}  // namespace

// ---------------------------------------------------------------------------
// BasicSquareConfig
// ---------------------------------------------------------------------------

ColorVector BasicSquareConfig::a_at(Int i) const {
    auto it = checkpoints.upper_bound(i);
    if (it == checkpoints.begin()) return a_ll;
    return std::prev(it)->second;
}

void BasicSquareConfig::validate() const {
    require(r >= 1, Error::Kind::InvalidInput, "ribbon size must be positive");
    require_color_vector(a_ll, r);
    require_color_vector(a_gg, r);
    for (const auto& kv : checkpoints) require_color_vector(kv.second, r);

    auto skl = strip_scan(l, k, r);
    require(skl.has_value(), Error::Kind::PreconditionViolated,
            "top corner does not contain the bottom corner by a horizontal ribbon strip");
    require(witness == skl->witness, Error::Kind::InvalidInput,
            "stored witness does not certify the corner strip");
    auto sm = strip_scan(l, m, r);
    require(sm.has_value(), Error::Kind::PreconditionViolated,
            "first middle corner does not contain the bottom corner by a horizontal ribbon strip");
    auto sn = strip_scan(l, n, r);
    require(sn.has_value(), Error::Kind::PreconditionViolated,
            "second middle corner does not contain the bottom corner by a horizontal ribbon strip");
    auto skm = strip_scan(m, k, r);
    require(skm.has_value(), Error::Kind::PreconditionViolated,
            "top corner does not contain the first middle corner by a horizontal ribbon strip");
    auto skn = strip_scan(n, k, r);
    require(skn.has_value(), Error::Kind::PreconditionViolated,
            "top corner does not contain the second middle corner by a horizontal ribbon strip");

    const auto heads_kl = as_set(skl->positions);
    const auto heads_m = as_set(sm->positions);
    const auto heads_n = as_set(sn->positions);
    const auto heads_km = as_set(skm->positions);
    const auto heads_kn = as_set(skn->positions);

    Int lo = std::min({l.lo(), m.lo(), n.lo(), k.lo(), witness.lo()});
    Int hi = std::max({l.hi(), m.hi(), n.hi(), k.hi(), witness.hi()});
    if (!checkpoints.empty()) {
        lo = std::min(lo, checkpoints.begin()->first);
        hi = std::max(hi, checkpoints.rbegin()->first);
    }
    lo -= r + 1;
    hi += r + 1;

    require(a_at(lo) == a_ll, Error::Kind::InvalidInput,
            "running vector does not start from its left limit");
    require(a_at(hi + 1) == a_gg, Error::Kind::InvalidInput,
            "running vector does not reach its right limit");

    for (Int i = lo; i <= hi; ++i) {
        Int h = 0;
        for (Int j = 1; j < r; ++j) h += witness.at(i - j);
        const ColorVector ai = a_at(i);
        const ColorVector ai1 = a_at(i + 1);
        if (witness.at(i - r) != witness.at(i)) {
            require(ai.comps[static_cast<size_t>(h)] == 0,
                    Error::Kind::InvalidInput,
                    "running vector must vanish in the witness colour where the"
                    " boundary bits disagree");
        }
        if (heads_kl.count(i)) {
            const bool below = heads_m.count(i) && heads_n.count(i);
            const bool above = heads_km.count(i) && heads_kn.count(i);
            require(!(below && above), Error::Kind::InvalidInput,
                    "head claimed by both the lower and the upper strip pair");
            const Int d = below ? 1 : (above ? -1 : 0);
            ColorVector expect = ai;
            expect.comps[static_cast<size_t>(h)] += d;
            require(expect.comps[static_cast<size_t>(h)] >= 0,
                    Error::Kind::InvalidInput, "running vector went negative");
            require(ai1 == expect, Error::Kind::InvalidInput,
                    "running vector step disagrees with the strip memberships");
        } else {
            require(ai1 == ai, Error::Kind::InvalidInput,
                    "running vector changed away from a corner strip head");
        }
    }
}

// ---------------------------------------------------------------------------
// Upward completion of the square.
// ---------------------------------------------------------------------------

namespace {

// Reconstruct the full square record from its four corners and the left
// carried vector, by integrating the local rules along the corner strip.
BasicSquareConfig make_square_config(const EdgeSeq& l, const EdgeSeq& m,
                                     const EdgeSeq& n, const EdgeSeq& k,
                                     const ColorVector& a_ll, Int r) {
    BasicSquareConfig cfg;
    cfg.l = l;
    cfg.m = m;
    cfg.n = n;
    cfg.k = k;
    cfg.a_ll = a_ll;
    cfg.r = r;

    auto skl = strip_scan(l, k, r);
    require(skl.has_value(), Error::Kind::Internal,
            "completed square lost its corner strip");
    cfg.witness = skl->witness;
    auto sm = strip_scan(l, m, r);
    auto sn = strip_scan(l, n, r);
    auto skm = strip_scan(m, k, r);
    auto skn = strip_scan(n, k, r);
    require(sm && sn && skm && skn, Error::Kind::Internal,
            "completed square lost a side strip");

    const auto heads_m = as_set(sm->positions);
    const auto heads_n = as_set(sn->positions);
    const auto heads_km = as_set(skm->positions);
    const auto heads_kn = as_set(skn->positions);

    ColorVector run = a_ll;
    for (size_t idx = 0; idx < skl->positions.size(); ++idx) {
        const Int i = skl->positions[idx];
        const Int h = skl->heights[idx];
        const bool below = heads_m.count(i) && heads_n.count(i);
        const bool above = heads_km.count(i) && heads_kn.count(i);
        require(!(below && above), Error::Kind::Internal,
                "head claimed by both the lower and the upper strip pair");
        if (below || above) {
            run.comps[static_cast<size_t>(h)] += below ? 1 : -1;
            require(run.comps[static_cast<size_t>(h)] >= 0,
                    Error::Kind::Internal, "running vector went negative");
            cfg.checkpoints[i + 1] = run;
        }
    }
    cfg.a_gg = run;
    cfg.validate();
    return cfg;
}

}  // namespace

SpinSymResult spin_sym_insert(const EdgeSeq& l, const EdgeSeq& m,
                              const EdgeSeq& n, const ColorVector& a_ll,
                              Int r) {
    require(r >= 1, Error::Kind::InvalidInput, "ribbon size must be positive");
    require_color_vector(a_ll, r);
    auto sm = strip_scan(l, m, r);
    require(sm.has_value(), Error::Kind::PreconditionViolated,
            "first middle corner does not contain the bottom corner by a horizontal ribbon strip");
    auto sn = strip_scan(l, n, r);
    require(sn.has_value(), Error::Kind::PreconditionViolated,
            "second middle corner does not contain the bottom corner by a horizontal ribbon strip");
    for (Int h = r * l.left_fill(); h < r; ++h) {
        require(a_ll.comps[static_cast<size_t>(h)] == 0,
                Error::Kind::PreconditionViolated,
                "carried vector must vanish at and above the left tail level");
    }

    const auto heads_m = as_set(sm->positions);
    const auto heads_n = as_set(sn->positions);

    EdgeSeq s = l;
    std::vector<Int> a = a_ll.comps;
    Int total = a_ll.rank();

    Int start = std::min({l.lo(), m.lo(), n.lo()});
    Int stop_after = std::max({l.hi(), m.hi(), n.hi()});
    for (const auto* hs : {&heads_m, &heads_n}) {
        if (!hs->empty()) {
            start = std::min(start, *hs->begin());
            stop_after = std::max(stop_after, *hs->rbegin() + r);
        }
    }
    start -= r;
    const Int head_count = static_cast<Int>(heads_m.size() + heads_n.size());
    const Int hard_stop = stop_after + r * (3 * head_count + total + 4) + 2 * r;

    for (Int i = start;
         i <= stop_after || (l.right_fill() == 0 && total > 0); ++i) {
        require(i <= hard_stop, Error::Kind::Internal,
                "square completion scan failed to terminate");
        Int window = 0;
        for (Int j = 1; j <= r; ++j) window += s.at(i - j);
        for (Int h = window; h < r; ++h) {
            require(a[static_cast<size_t>(h)] == 0, Error::Kind::Internal,
                    "carried colour survived above the local level");
        }
        const bool in_m = heads_m.count(i) > 0;
        const bool in_n = heads_n.count(i) > 0;
        if (s.at(i - r) == 1 && s.at(i) == 0) {
            const Int h = window - 1;
            bool place = true;
            if (in_m && in_n) {
                ++a[static_cast<size_t>(h)];
                ++total;
            } else if (!in_m && !in_n) {
                if (a[static_cast<size_t>(h)] > 0) {
                    --a[static_cast<size_t>(h)];
                    --total;
                } else {
                    place = false;
                }
            }
            if (place) {
                s = s.with_bit(i - r, 0).with_bit(i, 1);
                stop_after = std::max(stop_after, i + r);
            }
        } else {
            require(!in_m && !in_n, Error::Kind::Internal,
                    "strip head at a pair that cannot take a ribbon");
        }
    }

    ColorVector a_gg;
    a_gg.comps = a;
    BasicSquareConfig cfg = make_square_config(l, m, n, s, a_ll, r);
    require(cfg.a_gg == a_gg, Error::Kind::Internal,
            "profile limit disagrees with the completion scan");
    return {s, a_gg, std::move(cfg)};
}

SpinSymResult spin_sym_extract(const EdgeSeq& m, const EdgeSeq& n,
                               const EdgeSeq& k, const ColorVector& a_gg,
                               Int r) {
    require(r >= 1, Error::Kind::InvalidInput, "ribbon size must be positive");
    require_color_vector(a_gg, r);
    require(strip_scan(m, k, r).has_value(), Error::Kind::PreconditionViolated,
            "top corner does not contain the first middle corner by a horizontal ribbon strip");
    require(strip_scan(n, k, r).has_value(), Error::Kind::PreconditionViolated,
            "top corner does not contain the second middle corner by a horizontal ribbon strip");
    for (Int h = r * k.right_fill(); h < r; ++h) {
        require(a_gg.comps[static_cast<size_t>(h)] == 0,
                Error::Kind::PreconditionViolated,
                "carried vector must vanish at and above the right tail level");
    }

    // Reversing all sequences turns the downward completion into an upward
    // one with the two middle corners exchanged.
    SpinSymResult rev =
        spin_sym_insert(k.reversed(), n.reversed(), m.reversed(), a_gg, r);
    const EdgeSeq l = rev.corner.reversed();
    BasicSquareConfig cfg = make_square_config(l, m, n, k, rev.carried, r);
    require(cfg.a_gg == a_gg, Error::Kind::Internal,
            "unwound square does not reproduce the carried vector");
    return {l, rev.carried, std::move(cfg)};
}

std::pair<ColorVector, Partition> spin_sym_datum(const Partition& mu,
                                                 const Partition& nu,
                                                 const Partition& ka, Int r) {
    require(r >= 1, Error::Kind::InvalidInput, "ribbon size must be positive");
    require(r_quotient(mu, r).core == r_quotient(nu, r).core,
            Error::Kind::CoreMismatch, "shapes do not share their r-core");
    auto res = spin_sym_extract(edge_of_partition(mu), edge_of_partition(nu),
                                edge_of_partition(ka), ColorVector::zeros(r), r);
    return {res.carried, partition_of_edge(res.corner)};
}

Partition spin_sym_datum_inverse(const Partition& mu, const Partition& nu,
                                 const ColorVector& a, const Partition& la,
                                 Int r) {
    require(r >= 1, Error::Kind::InvalidInput, "ribbon size must be positive");
    require(r_quotient(mu, r).core == r_quotient(nu, r).core,
            Error::Kind::CoreMismatch, "shapes do not share their r-core");
    auto res = spin_sym_insert(edge_of_partition(la), edge_of_partition(mu),
                               edge_of_partition(nu), a, r);
    require(res.carried.is_zero(), Error::Kind::Internal,
            "partition square carried a nonzero vector out at the top");
    return partition_of_edge(res.corner);
}

// ---------------------------------------------------------------------------
// Staircase profile and the mixed-orientation completion.
// ---------------------------------------------------------------------------

Int DeltaProfile::at(Int k) const {
    if (values.empty()) return k < 0 ? r : 0;
    if (k < values.begin()->first) return r;
    if (k > values.rbegin()->first) return 0;
    return values.at(k);
}

DeltaProfile delta_profile(const Partition& mu, const Partition& nu, Int r) {
    require(r >= 1, Error::Kind::InvalidInput, "ribbon size must be positive");
    const EdgeSeq em = edge_of_partition(mu);
    const EdgeSeq en = edge_of_partition(nu);
    DeltaProfile dp;
    dp.r = r;
    const Int lo = std::min(em.lo() + r, en.lo()) - 1;
    const Int hi = std::max(em.hi() + r, en.hi()) + 1;
    for (Int k = lo; k <= hi; ++k)
        dp.values[k] = big_edge(em, k - r) - big_edge(en, k);
    for (Int k = lo - 1; k <= hi; ++k) {
        const Int d = dp.at(k + 1) - dp.at(k);
        if (d == 1) dp.rises.push_back(k);
        else if (d == -1) dp.falls.push_back(k);
    }
    return dp;
}

namespace {

void require_profile_in_range(const DeltaProfile& dp, Int r) {
    for (const auto& [k, v] : dp.values) {
        require(0 <= v && v <= r, Error::Kind::Inadmissible,
                "staircase profile leaves the admissible band");
    }
}

void require_flag_vector(const ColorVector& a, Int r) {
    require(a.r() == r, Error::Kind::InvalidInput,
            "flag vector must have exactly r components");
    for (Int x : a.comps)
        require(x == 0 || x == 1, Error::Kind::InvalidInput,
                "flag vector entries must be 0 or 1");
}

// Remove, from the shape with edge sequence e, the horizontal ribbon strip
// whose standardisation heads are the given positions. Works by adding the
// mirrored strip to the reversed sequence.
EdgeSeq remove_horizontal_strip(const EdgeSeq& e,
                                const std::set<Int>& positions, Int r) {
    std::vector<Int> rev;
    for (Int p : positions) rev.push_back(r - 1 - p);
    std::sort(rev.begin(), rev.end());
    return strip_from_positions(e.reversed(), rev, r).reversed();
}

}  // namespace

Partition spin_asym_insert(const Partition& la, const Partition& mu,
                           const Partition& nu, const ColorVector& a, Int r) {
    require(r >= 1, Error::Kind::InvalidInput, "ribbon size must be positive");
    require_flag_vector(a, r);
    auto hs_mu = strip_check(la, mu, r, Orientation::Horizontal);
    require(hs_mu.has_value(), Error::Kind::Inadmissible,
            "first middle shape does not contain the base by a horizontal ribbon strip");
    auto vs_nu = strip_check(la, nu, r, Orientation::Vertical);
    require(vs_nu.has_value(), Error::Kind::Inadmissible,
            "second middle shape does not contain the base by a vertical ribbon strip");
    require_profile_in_range(delta_profile(mu, nu, r), r);

    const EdgeSeq em = edge_of_partition(mu);
    const EdgeSeq en = edge_of_partition(nu);
    const auto heads_m = as_set(hs_mu->positions);
    const auto heads_v = as_set(vs_nu->positions);

    std::vector<Int> flags = a.comps;
    std::set<Int> out_km;  // heads of the vertical strip ka/mu
    std::set<Int> out_kn;  // heads of the horizontal strip ka/nu

    Int k_lo = std::min(em.lo() + r, en.lo()) - 1;
    Int k_hi = std::max(em.hi() + r, en.hi()) + 1;
    for (const auto* hs : {&heads_m, &heads_v}) {
        if (!hs->empty()) {
            k_lo = std::min(k_lo, *hs->begin() - 1);
            k_hi = std::max(k_hi, *hs->rbegin() + 1);
        }
    }

    Int level = r;
    for (Int k = k_lo; k <= k_hi || level > 0; ++k) {
        require(k <= k_hi + 1, Error::Kind::Internal,
                "staircase level failed to return to zero");
        const int bm = em.at(k - r), bn = en.at(k);
        const bool in_m = heads_m.count(k) > 0;
        const bool in_v = heads_v.count(k) > 0;
        if (bm == 1 && bn == 0) {
            require(level > 0, Error::Kind::Internal,
                    "staircase level fell below zero");
            require(!in_m && !in_v, Error::Kind::Internal,
                    "strip head on a falling diagonal");
            --level;
            if (flags[static_cast<size_t>(level)] == 1) {
                out_km.insert(k);
                out_kn.insert(k);
                flags[static_cast<size_t>(level)] = 0;
            }
        } else if (bm == 0 && bn == 1) {
            require(level < r, Error::Kind::Internal,
                    "staircase level climbed above its band");
            require(flags[static_cast<size_t>(level)] == 0,
                    Error::Kind::Internal, "flag reused before being cleared");
            require(in_m == in_v, Error::Kind::Internal,
                    "unmatched strip head on a rising diagonal");
            if (in_m && in_v) flags[static_cast<size_t>(level)] = 1;
            ++level;
        } else {
            require(!(in_m && in_v), Error::Kind::Internal,
                    "both lower strips head a level diagonal");
            if (in_v) out_km.insert(k);
            if (in_m) out_kn.insert(k);
        }
    }
    require(std::all_of(flags.begin(), flags.end(),
                        [](Int f) { return f == 0; }),
            Error::Kind::Internal, "flags survived the completion scan");

    EdgeSeq ek;
    try {
        ek = strip_from_positions(
            en, std::vector<Int>(out_kn.begin(), out_kn.end()), r);
    } catch (const Error&) {
        throw Error(Error::Kind::Internal,
                    "emitted heads do not assemble into a horizontal strip");
    }
    const Partition ka = partition_of_edge(ek);
    auto vs_km = strip_check(mu, ka, r, Orientation::Vertical);
    require(vs_km.has_value() && as_set(vs_km->positions) == out_km,
            Error::Kind::Internal,
            "emitted heads do not assemble into a vertical strip");
    return ka;
}

std::pair<ColorVector, Partition> spin_asym_extract(const Partition& mu,
                                                    const Partition& nu,
                                                    const Partition& ka,
                                                    Int r) {
    require(r >= 1, Error::Kind::InvalidInput, "ribbon size must be positive");
    auto vs_km = strip_check(mu, ka, r, Orientation::Vertical);
    require(vs_km.has_value(), Error::Kind::Inadmissible,
            "top shape does not contain the first middle shape by a vertical ribbon strip");
    auto hs_kn = strip_check(nu, ka, r, Orientation::Horizontal);
    require(hs_kn.has_value(), Error::Kind::Inadmissible,
            "top shape does not contain the second middle shape by a horizontal ribbon strip");
    require_profile_in_range(delta_profile(mu, nu, r), r);

    const EdgeSeq em = edge_of_partition(mu);
    const EdgeSeq en = edge_of_partition(nu);
    const auto heads_km = as_set(vs_km->positions);
    const auto heads_kn = as_set(hs_kn->positions);

    ColorVector a = ColorVector::zeros(r);
    std::set<Int> heads_m;  // heads of the horizontal strip mu/la
    std::set<Int> heads_v;  // heads of the vertical strip nu/la
    std::vector<std::optional<Int>> pending(static_cast<size_t>(r));
    std::vector<bool> first_fall(static_cast<size_t>(r), false);

    Int k_lo = std::min(em.lo() + r, en.lo()) - 1;
    Int k_hi = std::max(em.hi() + r, en.hi()) + 1;
    for (const auto* hs : {&heads_km, &heads_kn}) {
        if (!hs->empty()) {
            k_lo = std::min(k_lo, *hs->begin() - 1);
            k_hi = std::max(k_hi, *hs->rbegin() + 1);
        }
    }

    Int level = r;
    for (Int k = k_lo; k <= k_hi || level > 0; ++k) {
        require(k <= k_hi + 1, Error::Kind::Internal,
                "staircase level failed to return to zero");
        const int bm = em.at(k - r), bn = en.at(k);
        const bool in_km = heads_km.count(k) > 0;
        const bool in_kn = heads_kn.count(k) > 0;
        if (bm == 1 && bn == 0) {
            require(level > 0, Error::Kind::Internal,
                    "staircase level fell below zero");
            require(in_km == in_kn, Error::Kind::Internal,
                    "unmatched strip head on a falling diagonal");
            --level;
            const size_t h = static_cast<size_t>(level);
            if (pending[h].has_value()) {
                if (in_km) {
                    heads_m.insert(*pending[h]);
                    heads_v.insert(*pending[h]);
                }
                pending[h].reset();
            } else if (!first_fall[h]) {
                a.comps[h] = in_km ? 1 : 0;
                first_fall[h] = true;
            } else {
                require(!in_km, Error::Kind::Internal,
                        "head emitted on a repeated fall with no stored rise");
            }
        } else if (bm == 0 && bn == 1) {
            require(level < r, Error::Kind::Internal,
                    "staircase level climbed above its band");
            require(!in_km && !in_kn, Error::Kind::Internal,
                    "strip head on a rising diagonal");
            const size_t h = static_cast<size_t>(level);
            require(!pending[h].has_value(), Error::Kind::Internal,
                    "rise stored before the previous one was resolved");
            pending[h] = k;
            ++level;
        } else {
            require(!(in_km && in_kn), Error::Kind::Internal,
                    "both upper strips head a level diagonal");
            if (in_km) heads_v.insert(k);
            if (in_kn) heads_m.insert(k);
        }
    }
    require(std::all_of(pending.begin(), pending.end(),
                        [](const std::optional<Int>& p) { return !p; }),
            Error::Kind::Internal, "stored rises survived the scan");
    require(std::all_of(first_fall.begin(), first_fall.end(),
                        [](bool b) { return b; }),
            Error::Kind::Internal, "a level was never crossed downwards");

    EdgeSeq el;
    try {
        el = remove_horizontal_strip(em, heads_m, r);
    } catch (const Error&) {
        throw Error(Error::Kind::Internal,
                    "recovered heads do not peel off the first middle shape");
    }
    const Partition la = partition_of_edge(el);
    auto vs = strip_check(la, nu, r, Orientation::Vertical);
    require(vs.has_value() && as_set(vs->positions) == heads_v,
            Error::Kind::Internal,
            "recovered heads do not peel off the second middle shape");
    return {a, la};
}

}  // namespace ribbon
