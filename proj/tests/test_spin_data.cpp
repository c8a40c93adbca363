#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>
#include <limits>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ribbon/schensted.hpp"
#include "ribbon/shape_data.hpp"
#include "ribbon/spin_data.hpp"
#include "ribbon/strips.hpp"
#include "test_util.hpp"

using namespace ribbon;

namespace {

// All partitions of total size at most n.
std::vector<Partition> partitions_up_to(Int n) {
    std::vector<Partition> out;
    std::vector<Int> acc;
    std::function<void(Int, Int)> rec = [&](Int remaining, Int max_part) {
        out.push_back(Partition(acc));
        for (Int p = std::min(remaining, max_part); p >= 1; --p) {
            acc.push_back(p);
            rec(remaining - p, p);
            acc.pop_back();
        }
    };
    rec(n, n);
    return out;
}

// All partitions fitting in a rows x cols box.
std::vector<Partition> box_partitions(Int rows, Int cols) {
    std::vector<Partition> out;
    std::vector<Int> acc;
    std::function<void(Int, Int)> rec = [&](Int rows_left, Int cap) {
        out.push_back(Partition(acc));
        if (rows_left == 0) return;
        for (Int p = cap; p >= 1; --p) {
            acc.push_back(p);
            rec(rows_left - 1, p);
            acc.pop_back();
        }
    };
    rec(rows, cols);
    return out;
}

// All mu with ka/mu a horizontal strip (r = 1).
std::vector<Partition> horizontal_subs(const Partition& ka) {
    std::vector<Partition> out;
    std::vector<Int> acc;
    std::function<void(Int)> rec = [&](Int i) {
        if (i == ka.num_parts()) {
            out.push_back(Partition(acc));
            return;
        }
        for (Int v = ka.part(i + 1); v <= ka.part(i); ++v) {
            acc.push_back(v);
            rec(i + 1);
            acc.pop_back();
        }
    };
    rec(0);
    return out;
}

// Random target of a horizontal r-ribbon strip over la: grow an ascending
// chain of addable ribbons and keep it when the result scans as one strip.
Partition random_strip_sup(std::mt19937& rng, const Partition& la, Int r, int count) {
    for (int attempt = 0; attempt < 50; ++attempt) {
        Partition cur = la;
        Int last = std::numeric_limits<Int>::min();
        bool ok = true;
        for (int t = 0; t < count && ok; ++t) {
            std::vector<Ribbon> options;
            for (const Ribbon& rb : list_ribbons(cur, r, RibbonMode::Addable))
                if (rb.head_content > last) options.push_back(rb);
            if (options.empty()) {
                ok = false;
                break;
            }
            const Ribbon& pick = options[rng() % options.size()];
            cur = apply_ribbon(cur, pick.head_content, r, RibbonDir::Add);
            last = pick.head_content;
        }
        if (ok && strip_check(la, cur, r).has_value()) return cur;
    }
    return la;
}

Partition random_vstrip_sup(std::mt19937& rng, const Partition& la, Int r, int count) {
    return transpose(random_strip_sup(rng, transpose(la), r, count));
}

template <typename Fn>
Error::Kind error_kind(Fn&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind;
    }
    FAIL("expected a ribbon::Error to be thrown");
    return Error::Kind::Internal;
}

// The running vector must vanish at and above the local level of the
// boundary word, at every point of the scan range.
void check_levels(const BasicSquareConfig& cfg) {
    Int lo = cfg.witness.lo() - cfg.r - 1;
    Int hi = cfg.witness.hi() + cfg.r + 1;
    if (!cfg.checkpoints.empty()) {
        lo = std::min(lo, cfg.checkpoints.begin()->first - cfg.r - 1);
        hi = std::max(hi, cfg.checkpoints.rbegin()->first + cfg.r + 1);
    }
    for (Int i = lo; i <= hi; ++i) {
        Int level = 0;
        for (Int j = 1; j <= cfg.r; ++j) level += cfg.witness.at(i - j);
        ColorVector ai = cfg.a_at(i);
        for (Int h = level; h < cfg.r; ++h) {
            CAPTURE(i);
            CHECK(ai.comps[static_cast<size_t>(h)] == 0);
        }
    }
}

// Spin bookkeeping for the symmetric square: added spin above equals added
// spin below plus twice the weight of the datum vector, and the size excess
// is r times its rank.
void check_sym_balance(const Partition& la, const Partition& mu, const Partition& nu,
                       const Partition& ka, const ColorVector& a, Int r) {
    auto km = strip_check(mu, ka, r);
    auto kn = strip_check(nu, ka, r);
    auto ml = strip_check(la, mu, r);
    auto nl = strip_check(la, nu, r);
    REQUIRE(km.has_value());
    REQUIRE(kn.has_value());
    REQUIRE(ml.has_value());
    REQUIRE(nl.has_value());
    CHECK(km->dspin + kn->dspin == ml->dspin + nl->dspin + 2 * a.weight());
    CHECK(ka.size() - mu.size() - nu.size() + la.size() == r * a.rank());
}

// Independent reference for the symmetric completion: try every bit pattern
// for the corner over a window, integrate the local rules directly, and
// collect the consistent (corner, carried) pairs.
std::vector<std::string> brute_force_corners(const EdgeSeq& l, const EdgeSeq& m, const EdgeSeq& n,
                                             const ColorVector& a_ll, Int r, Int w_lo, Int w_hi) {
    std::vector<std::string> found;
    auto sm = strip_scan(l, m, r);
    auto sn = strip_scan(l, n, r);
    REQUIRE(sm.has_value());
    REQUIRE(sn.has_value());
    std::set<Int> heads_m(sm->positions.begin(), sm->positions.end());
    std::set<Int> heads_n(sn->positions.begin(), sn->positions.end());
    std::set<std::string> seen;
    Int width = w_hi - w_lo;
    REQUIRE(width <= 20);
    for (Int mask = 0; mask < (Int{1} << width); ++mask) {
        std::vector<uint8_t> bits;
        for (Int b = 0; b < width; ++b) bits.push_back(static_cast<uint8_t>((mask >> b) & 1));
        EdgeSeq k(w_lo, std::move(bits), l.left_fill(), l.right_fill());
        if (!seen.insert(k.to_string()).second) continue;
        auto skl = strip_scan(l, k, r);
        if (!skl.has_value()) continue;
        auto skm = strip_scan(m, k, r);
        auto skn = strip_scan(n, k, r);
        if (!skm.has_value() || !skn.has_value()) continue;
        std::set<Int> up_m(skm->positions.begin(), skm->positions.end());
        std::set<Int> up_n(skn->positions.begin(), skn->positions.end());
        std::set<Int> ribbons(skl->positions.begin(), skl->positions.end());
        const EdgeSeq& w = skl->witness;
        Int lo = std::min({w.lo(), l.lo(), k.lo()}) - r - 1;
        Int hi = std::max({w.hi(), l.hi(), k.hi()}) + r + 1;
        ColorVector run = a_ll;
        bool valid = true;
        for (Int i = lo; i <= hi && valid; ++i) {
            Int h = 0;
            for (Int j = 1; j < r; ++j) h += w.at(i - j);
            if (ribbons.count(i)) {
                bool below = heads_m.count(i) && heads_n.count(i);
                bool above = up_m.count(i) && up_n.count(i);
                if (below && above) {
                    valid = false;
                    break;
                }
                Int d = below ? 1 : (above ? -1 : 0);
                Int& comp = run.comps[static_cast<size_t>(h)];
                comp += d;
                if (comp < 0) valid = false;
            } else if (w.at(i - r) != w.at(i)) {
                if (run.comps[static_cast<size_t>(h)] != 0) valid = false;
            }
        }
        if (valid) found.push_back(k.to_string() + "#" + run.to_string());
    }
    return found;
}

std::vector<Int> intersect_sorted(const std::vector<Int>& a, const std::vector<Int>& b) {
    std::vector<Int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace

TEST_CASE("square records: lookup, equality of produced configs, corruption") {
    // Lookup semantics of the piecewise-constant running vector.
    BasicSquareConfig probe;
    probe.r = 2;
    probe.l = edge_of_partition(Partition{});
    probe.m = probe.l;
    probe.n = probe.l;
    probe.k = probe.l;
    probe.a_ll = ColorVector{{0, 0}};
    probe.a_gg = ColorVector{{0, 0}};
    probe.checkpoints[3] = ColorVector{{0, 0}};
    CHECK(probe.a_at(2) == probe.a_ll);
    CHECK((probe.a_at(3) == ColorVector{{0, 0}}));
    CHECK((probe.a_at(100) == ColorVector{{0, 0}}));

    // A produced config validates; corrupted copies are refused.
    SpinSymResult res = spin_sym_insert(edge_of_partition(Partition{}), edge_of_partition(Partition{}),
                                        edge_of_partition(Partition{}), ColorVector{{0, 3}}, 2);
    res.config.validate();
    {
        BasicSquareConfig bad = res.config;
        bad.a_gg.comps[0] += 1;
        CHECK(error_kind([&] { bad.validate(); }) == Error::Kind::InvalidInput);
    }
    {
        BasicSquareConfig bad = res.config;
        bad.witness = bad.witness.with_bit(bad.witness.lo(), 1 - bad.witness.at(bad.witness.lo()));
        CHECK(error_kind([&] { bad.validate(); }) == Error::Kind::InvalidInput);
    }
    {
        BasicSquareConfig bad = res.config;
        REQUIRE(!bad.checkpoints.empty());
        bad.checkpoints.begin()->second.comps[0] = -1;
        CHECK(error_kind([&] { bad.validate(); }) == Error::Kind::InvalidInput);
    }
    {
        BasicSquareConfig bad;
        bad.r = 1;
        bad.l = edge_of_partition(Partition{2});
        bad.m = bad.l;
        bad.n = bad.l;
        bad.k = edge_of_partition(Partition{});
        bad.a_ll = ColorVector::zeros(1);
        bad.a_gg = ColorVector::zeros(1);
        bad.witness = bad.l;
        CHECK(error_kind([&] { bad.validate(); }) == Error::Kind::PreconditionViolated);
    }
}

TEST_CASE("upward completion: stationary and tail-driven corners") {
    // Identical sides and no surplus: the corner stays put.
    for (const Partition& p : {Partition{}, Partition{3, 1}, Partition{4, 2, 2, 1}}) {
        for (Int r : {Int{1}, Int{2}, Int{3}}) {
            SpinSymResult res = spin_sym_insert(edge_of_partition(p), edge_of_partition(p),
                                                edge_of_partition(p), ColorVector::zeros(r), r);
            CHECK(res.corner == edge_of_partition(p));
            CHECK(res.carried.is_zero());
            CHECK(res.config.checkpoints.empty());
        }
    }

    // A surplus on an empty corner drains into a fresh column of ribbons.
    {
        SpinSymResult res = spin_sym_insert(edge_of_partition(Partition{}),
                                            edge_of_partition(Partition{}),
                                            edge_of_partition(Partition{}), ColorVector{{0, 5}}, 2);
        CHECK(res.corner == edge_of_partition(Partition{5, 5}));
        CHECK(res.carried.is_zero());
        CHECK(res.config.checkpoints.size() == 5);
        check_levels(res.config);
        check_sym_balance(Partition{}, Partition{}, Partition{}, Partition{5, 5},
                          ColorVector{{0, 5}}, 2);
    }
    // A colour-0 surplus instead drains into a row of flat ribbons.
    {
        SpinSymResult res = spin_sym_insert(edge_of_partition(Partition{}),
                                            edge_of_partition(Partition{}),
                                            edge_of_partition(Partition{}), ColorVector{{2, 0}}, 2);
        CHECK(res.corner == edge_of_partition(Partition{4}));
        CHECK(res.carried.is_zero());
        check_levels(res.config);
    }
    // Round trips of the two tail cases through the downward direction.
    {
        SpinSymResult back = spin_sym_extract(edge_of_partition(Partition{}),
                                              edge_of_partition(Partition{}),
                                              edge_of_partition(Partition{5, 5}),
                                              ColorVector::zeros(2), 2);
        CHECK(back.corner == edge_of_partition(Partition{}));
        CHECK((back.carried == ColorVector{{0, 5}}));
        check_levels(back.config);
    }

    // On an all-one-fill corner the surplus may survive untouched when it
    // sits below the attainable level everywhere.
    {
        EdgeSeq alpine(0, {0}, 1, 1);
        SpinSymResult res = spin_sym_insert(alpine, alpine, alpine, ColorVector{{1, 0}}, 2);
        CHECK(res.corner == alpine);
        CHECK((res.carried == ColorVector{{1, 0}}));
        CHECK(res.config.checkpoints.empty());
    }
}

TEST_CASE("upward completion matches exhaustive corner search") {
    // Over a small window, enumerate every candidate corner and carried
    // vector; exactly one configuration satisfies the local rules, and the
    // scan finds it.
    struct Instance {
        EdgeSeq l, m, n;
        ColorVector a;
        Int r;
        Int w_lo, w_hi;
    };
    std::vector<Instance> instances;

    EdgeSeq alpine(0, {0}, 1, 1);
    instances.push_back({alpine, alpine, alpine, ColorVector{{1, 1}}, 2, -4, 4});

    EdgeSeq twodip(-1, {0, 0}, 1, 1);
    EdgeSeq twodip_m = apply_ribbon(twodip, -1, 2, RibbonDir::Add);
    EdgeSeq twodip_n = apply_ribbon(twodip, 0, 2, RibbonDir::Add);
    instances.push_back({twodip, twodip_m, twodip_n, ColorVector{{0, 1}}, 2, -6, 4});

    EdgeSeq one = edge_of_partition(Partition{1});
    instances.push_back({one, one, one, ColorVector{{1, 0}}, 2, -5, 5});

    EdgeSeq empty = edge_of_partition(Partition{});
    instances.push_back({empty, empty, empty, ColorVector{{0, 3}}, 2, -6, 6});
    instances.push_back({empty, empty, empty, ColorVector{{2, 0}}, 2, -6, 8});
    instances.push_back({empty, edge_of_partition(Partition{2}), edge_of_partition(Partition{1, 1}),
                         ColorVector{{0, 0}}, 2, -6, 6});
    instances.push_back({empty, edge_of_partition(Partition{2, 1}), edge_of_partition(Partition{3}),
                         ColorVector{{1, 0, 0}}, 3, -7, 7});

    for (size_t idx = 0; idx < instances.size(); ++idx) {
        const Instance& ins = instances[idx];
        CAPTURE(idx);
        SpinSymResult res = spin_sym_insert(ins.l, ins.m, ins.n, ins.a, ins.r);
        auto found = brute_force_corners(ins.l, ins.m, ins.n, ins.a, ins.r, ins.w_lo, ins.w_hi);
        REQUIRE(found.size() == 1);
        CHECK(found[0] == res.corner.to_string() + "#" + res.carried.to_string());
        check_levels(res.config);

        // Downward direction returns to the same corner and surplus.
        SpinSymResult back = spin_sym_extract(ins.m, ins.n, res.corner, res.carried, ins.r);
        CHECK(back.corner == ins.l);
        CHECK(back.carried == ins.a);
    }
}

TEST_CASE("spin datum: frozen wide instance") {
    const Int r = 4;
    Partition mu{16, 15, 15, 5, 4};
    Partition nu{14, 14, 14, 9, 4};
    Partition ka{17, 17, 16, 13, 9, 5, 1, 1};
    Partition la{14, 13, 11, 5};
    ColorVector a{{0, 2, 0, 1}};

    auto [da, dla] = spin_sym_datum(mu, nu, ka, r);
    CHECK(da == a);
    CHECK(dla == la);
    CHECK(spin_sym_datum_inverse(mu, nu, a, la, r) == ka);

    SpinSymResult res = spin_sym_insert(edge_of_partition(la), edge_of_partition(mu),
                                        edge_of_partition(nu), a, r);
    CHECK(res.corner == edge_of_partition(ka));
    CHECK(res.carried.is_zero());
    check_levels(res.config);

    CHECK(strip_check(mu, ka, r)->dspin == 7);
    CHECK(strip_check(nu, ka, r)->dspin == 7);
    CHECK(strip_check(la, mu, r)->dspin == 3);
    CHECK(strip_check(la, nu, r)->dspin == 1);
    CHECK(a.weight() == 5);
    CHECK(a.rank() == 3);
    check_sym_balance(la, mu, nu, ka, a, r);

    // Same top and right side, slightly smaller left side.
    Partition mu2{14, 14, 14, 5, 4};
    auto [da2, dla2] = spin_sym_datum(mu2, nu, ka, r);
    CHECK((da2 == ColorVector{{0, 0, 0, 1}}));
    CHECK(dla2 == Partition({14, 10, 6, 1}));
    CHECK(strip_check(mu2, ka, r)->dspin == 9);
    CHECK(strip_check(dla2, mu2, r)->dspin == 4);
    CHECK(strip_check(dla2, nu, r)->dspin == 6);
    check_sym_balance(dla2, mu2, nu, ka, da2, r);

    // The datum is symmetric in the two middle shapes.
    auto [sa, sla] = spin_sym_datum(nu, mu, ka, r);
    CHECK(sa == da);
    CHECK(sla == dla);
}

TEST_CASE("spin datum: small frozen instances") {
    // One flat 2-ribbon appended to a single square.
    auto [a, la] = spin_sym_datum(Partition{1}, Partition{1}, Partition{3}, 2);
    CHECK((a == ColorVector{{1, 0}}));
    CHECK(la == Partition{1});
    CHECK(spin_sym_datum_inverse(Partition{1}, Partition{1}, ColorVector{{1, 0}}, Partition{1},
                                 2) == Partition{3});

    // Degenerate data recover the shared shape.
    std::mt19937 rng(5);
    for (int it = 0; it < 20; ++it) {
        Partition p = random_partition(rng, 4, 6);
        for (Int r : {Int{1}, Int{2}, Int{3}}) {
            auto [za, zla] = spin_sym_datum(p, p, p, r);
            CHECK(za.is_zero());
            CHECK(zla == p);
            CHECK(spin_sym_datum_inverse(p, p, ColorVector::zeros(r), p, r) == p);
        }
    }
}

TEST_CASE("spin datum errors") {
    CHECK(error_kind([] { spin_sym_datum(Partition{1}, Partition{2}, Partition{2, 1}, 2); }) ==
          Error::Kind::CoreMismatch);
    CHECK(error_kind([] { spin_sym_datum(Partition{2}, Partition{2}, Partition{1}, 1); }) ==
          Error::Kind::PreconditionViolated);
    CHECK(error_kind([] {
              spin_sym_insert(edge_of_partition(Partition{}), edge_of_partition(Partition{}),
                              edge_of_partition(Partition{}), ColorVector{{-1}}, 1);
          }) == Error::Kind::InvalidInput);
    CHECK(error_kind([] {
              spin_sym_insert(edge_of_partition(Partition{}), edge_of_partition(Partition{}),
                              edge_of_partition(Partition{}), ColorVector{{1, 0}}, 1);
          }) == Error::Kind::InvalidInput);
    // A corner with zero fill on the left cannot carry surplus in from the
    // far left.
    EdgeSeq anti(0, {1}, 0, 1);
    CHECK(error_kind([&] { spin_sym_insert(anti, anti, anti, ColorVector{{1}}, 1); }) ==
          Error::Kind::PreconditionViolated);
}

TEST_CASE("spin datum round trips on random instances") {
    std::mt19937 rng(20260822);
    for (int it = 0; it < 600; ++it) {
        Int r = 1 + static_cast<Int>(rng() % 4);
        Partition la = random_partition(rng, 4, 6);
        Partition mu = random_strip_sup(rng, la, r, static_cast<int>(rng() % 4));
        Partition nu = random_strip_sup(rng, la, r, static_cast<int>(rng() % 4));
        std::vector<Int> comps;
        for (Int h = 0; h < r; ++h) comps.push_back(static_cast<Int>(rng() % 3));
        ColorVector a{comps};

        Partition ka = spin_sym_datum_inverse(mu, nu, a, la, r);
        auto [back_a, back_la] = spin_sym_datum(mu, nu, ka, r);
        CHECK(back_a == a);
        CHECK(back_la == la);
        check_sym_balance(la, mu, nu, ka, a, r);

        SpinSymResult res = spin_sym_insert(edge_of_partition(la), edge_of_partition(mu),
                                            edge_of_partition(nu), a, r);
        CHECK(res.corner == edge_of_partition(ka));
        check_levels(res.config);
        SpinSymResult back = spin_sym_extract(edge_of_partition(mu), edge_of_partition(nu),
                                              res.corner, res.carried, r);
        CHECK(back.corner == edge_of_partition(la));
        CHECK(back.carried == a);

        auto [swap_a, swap_la] = spin_sym_datum(nu, mu, ka, r);
        CHECK(swap_a == a);
        CHECK(swap_la == la);
    }
}

TEST_CASE("spin datum at r = 1 equals column insertion") {
    for (const Partition& ka : partitions_up_to(8)) {
        auto subs = horizontal_subs(ka);
        for (const Partition& mu : subs) {
            for (const Partition& nu : subs) {
                auto [ba, bla] = burge_extract(mu, nu, ka);
                auto [sa, sla] = spin_sym_datum(mu, nu, ka, 1);
                CHECK(sa.comps == std::vector<Int>{ba});
                CHECK(sla == bla);
            }
        }
    }
}

TEST_CASE("spin datum round trips across a small box") {
    auto box = box_partitions(6, 6);
    for (Int r : {Int{1}, Int{2}, Int{3}}) {
        for (const Partition& ka : box) {
            std::vector<Partition> lower;
            for (const Partition& p : box) {
                if (p.size() > ka.size() || (ka.size() - p.size()) % r != 0) continue;
                if (!contains(ka, p)) continue;
                if (strip_check(p, ka, r).has_value()) lower.push_back(p);
            }
            for (const Partition& mu : lower) {
                for (const Partition& nu : lower) {
                    auto [a, la] = spin_sym_datum(mu, nu, ka, r);
                    CHECK(ka.size() - mu.size() - nu.size() + la.size() == r * a.rank());
                    CHECK(spin_sym_datum_inverse(mu, nu, a, la, r) == ka);
                }
            }
        }
    }
}

TEST_CASE("spin datum separates tops over a fixed middle pair") {
    const Int r = 2;
    const std::vector<std::pair<Partition, Partition>> pairs = {
        {Partition{2}, Partition{1, 1}},
        {Partition{2}, Partition{2}},
        {Partition{1, 1}, Partition{1, 1}},
        {Partition{3, 1}, Partition{2, 2}},
    };
    Int count = 0;
    for (const auto& [mu, nu] : pairs) {
        std::set<std::string> images;
        for (const Partition& ka : box_partitions(8, 8)) {
            if ((ka.size() - mu.size()) % r != 0) continue;
            if (!contains(ka, mu) || !contains(ka, nu)) continue;
            if (!strip_check(mu, ka, r).has_value() || !strip_check(nu, ka, r).has_value())
                continue;
            auto [a, la] = spin_sym_datum(mu, nu, ka, r);
            CHECK(images.insert(a.to_string() + "#" + la.to_string()).second);
            CHECK(spin_sym_datum_inverse(mu, nu, a, la, r) == ka);
            ++count;
        }
    }
    CHECK(count > 60);
}

TEST_CASE("cover reduction of the spin datum") {
    // When the top covers the equal middles by one ribbon, the datum reads
    // off the single-step bumping rule that moves ribbons towards the top
    // right: a shape answer means no surplus, a colour answer means a unit
    // of that colour and an unchanged bottom.
    for (const Partition& mu : partitions_up_to(12)) {
        for (Int r : {Int{1}, Int{2}, Int{3}, Int{4}}) {
            for (const Ribbon& rb : list_ribbons(mu, r, RibbonMode::Addable)) {
                Partition ka = apply_ribbon(mu, rb.head_content, r, RibbonDir::Add);
                auto [a, la] = spin_sym_datum(mu, mu, ka, r);
                CorrValue v = r_corr(CorrTag::WS, mu, ka, r);
                if (std::holds_alternative<Partition>(v)) {
                    CHECK(a.is_zero());
                    CHECK(la == std::get<Partition>(v));
                } else {
                    Int h = std::get<Int>(v);
                    CHECK(la == mu);
                    CHECK(a.rank() == 1);
                    CHECK(a.comps[static_cast<size_t>(h)] == 1);
                }
            }
        }
    }
}

TEST_CASE("staircase profile: frozen small instance") {
    DeltaProfile dp = delta_profile(Partition{3, 1}, Partition{3, 1}, 2);
    const std::vector<Int> expected = {2, 2, 1, 1, 1, 0, 1, 1, 0, 0};
    for (Int k = -3; k <= 6; ++k) CHECK(dp.at(k) == expected[static_cast<size_t>(k + 3)]);
    CHECK(dp.at(-100) == 2);
    CHECK(dp.at(100) == 0);
    CHECK(dp.rises == std::vector<Int>{2});
    CHECK((dp.falls == std::vector<Int>{-2, 1, 4}));

    // Against equal shapes the profile is the sliding window sum of the
    // boundary word.
    std::mt19937 rng(11);
    for (int it = 0; it < 30; ++it) {
        Partition p = random_partition(rng, 4, 6);
        Int r = 1 + static_cast<Int>(rng() % 4);
        EdgeSeq e = edge_of_partition(p);
        DeltaProfile w = delta_profile(p, p, r);
        for (Int k = e.lo() - 2; k <= e.hi() + r + 2; ++k) {
            Int s = 0;
            for (Int j = 1; j <= r; ++j) s += e.at(k - j);
            CHECK(w.at(k) == s);
        }
    }
}

TEST_CASE("staircase profile: frozen wide instance") {
    const Int r = 5;
    Partition mu{12, 11, 11, 11, 10, 10, 9, 6, 5, 2, 2, 1, 1};
    Partition nu{15, 10, 10, 10, 7, 5, 5, 4, 4, 1};
    DeltaProfile dp = delta_profile(mu, nu, r);
    const std::vector<Int> expected = {5, 4, 4, 4, 3, 2, 3, 3, 2, 3, 4, 4, 3, 4,
                                       3, 3, 3, 4, 4, 5, 4, 3, 3, 2, 1, 1, 1, 0};
    for (Int k = -10; k <= 17; ++k) CHECK(dp.at(k) == expected[static_cast<size_t>(k + 10)]);
    CHECK((dp.rises == std::vector<Int>{-5, -2, -1, 2, 6, 8}));
    CHECK((dp.falls == std::vector<Int>{-10, -7, -6, -3, 1, 3, 9, 10, 12, 13, 16}));
}

TEST_CASE("staircase profile of admissible pairs stays in band") {
    std::mt19937 rng(31);
    for (int it = 0; it < 200; ++it) {
        Int r = 1 + static_cast<Int>(rng() % 4);
        Partition la = random_partition(rng, 4, 6);
        Partition mu = random_strip_sup(rng, la, r, static_cast<int>(rng() % 4));
        Partition nu = random_vstrip_sup(rng, la, r, static_cast<int>(rng() % 4));
        DeltaProfile dp = delta_profile(mu, nu, r);
        for (const auto& kv : dp.values) {
            CHECK(kv.second >= 0);
            CHECK(kv.second <= r);
        }
        CHECK(dp.falls.size() == dp.rises.size() + static_cast<size_t>(r));
    }
}

TEST_CASE("mixed completion: frozen wide instance") {
    const Int r = 5;
    Partition la{10, 10, 10, 10, 4, 3, 3, 1};
    ColorVector a{{1, 0, 0, 1, 1}};
    Partition mu{12, 11, 11, 11, 10, 10, 9, 6, 5, 2, 2, 1, 1};
    Partition nu{15, 10, 10, 10, 7, 5, 5, 4, 4, 1};
    Partition ka{17, 16, 15, 12, 10, 10, 10, 10, 6, 6, 4, 3, 3, 3, 1};

    auto ml = strip_check(la, mu, r, Orientation::Horizontal);
    REQUIRE(ml.has_value());
    CHECK((ml->positions == std::vector<Int>{-8, -5, -2, 0, 2, 4, 5, 11}));
    CHECK(ml->dspin == 24);
    auto nl = strip_check(la, nu, r, Orientation::Vertical);
    REQUIRE(nl.has_value());
    CHECK((nl->positions == std::vector<Int>{-5, -2, 2, 14}));
    CHECK(nl->dspin == 3);

    CHECK(spin_asym_insert(la, mu, nu, a, r) == ka);

    auto km = strip_check(mu, ka, r, Orientation::Vertical);
    REQUIRE(km.has_value());
    CHECK((km->positions == std::vector<Int>{-10, -7, -3, 3, 12, 14, 16}));
    CHECK(km->dspin == 7);
    auto kn = strip_check(nu, ka, r, Orientation::Horizontal);
    REQUIRE(kn.has_value());
    CHECK((kn->positions == std::vector<Int>{-10, -8, -7, -3, 0, 3, 4, 5, 11, 12, 16}));
    CHECK(kn->dspin == 34);

    auto [xa, xla] = spin_asym_extract(mu, nu, ka, r);
    CHECK(xa == a);
    CHECK(xla == la);

    CHECK(a.weight() == 7);
    CHECK(km->dspin + kn->dspin == ml->dspin + nl->dspin + 2 * a.weight());
    CHECK(ka.size() - mu.size() - nu.size() + la.size() == r * a.rank());
    CHECK(a.rank() == 3);
}

TEST_CASE("mixed completion errors") {
    CHECK(error_kind([] {
              spin_asym_insert(Partition{1}, Partition{3}, Partition{3}, ColorVector{{0}}, 1);
          }) == Error::Kind::Inadmissible);
    CHECK(error_kind([] {
              spin_asym_insert(Partition{1}, Partition{2}, Partition{1, 1}, ColorVector{{2}}, 1);
          }) == Error::Kind::InvalidInput);
    CHECK(error_kind([] { spin_asym_extract(Partition{1}, Partition{2}, Partition{3}, 1); }) ==
          Error::Kind::Inadmissible);
}

TEST_CASE("mixed completion round trips on random instances") {
    std::mt19937 rng(47);
    for (int it = 0; it < 500; ++it) {
        Int r = 1 + static_cast<Int>(rng() % 4);
        Partition la = random_partition(rng, 4, 6);
        Partition mu = random_strip_sup(rng, la, r, static_cast<int>(rng() % 4));
        Partition nu = random_vstrip_sup(rng, la, r, static_cast<int>(rng() % 4));
        std::vector<Int> flags;
        for (Int h = 0; h < r; ++h) flags.push_back(static_cast<Int>(rng() % 2));
        ColorVector a{flags};

        Partition ka = spin_asym_insert(la, mu, nu, a, r);
        auto [back_a, back_la] = spin_asym_extract(mu, nu, ka, r);
        CHECK(back_a == a);
        CHECK(back_la == la);

        auto ml = strip_check(la, mu, r, Orientation::Horizontal);
        auto nl = strip_check(la, nu, r, Orientation::Vertical);
        auto km = strip_check(mu, ka, r, Orientation::Vertical);
        auto kn = strip_check(nu, ka, r, Orientation::Horizontal);
        REQUIRE(km.has_value());
        REQUIRE(kn.has_value());
        CHECK(km->dspin + kn->dspin == ml->dspin + nl->dspin + 2 * a.weight());
        CHECK(ka.size() - mu.size() - nu.size() + la.size() == r * a.rank());
    }
}

TEST_CASE("mixed completion round trips across a small box") {
    auto box = box_partitions(6, 6);
    for (Int r : {Int{1}, Int{2}, Int{3}}) {
        for (const Partition& ka : box) {
            std::vector<Partition> below_v, below_h;
            for (const Partition& p : box) {
                if (p.size() > ka.size() || (ka.size() - p.size()) % r != 0) continue;
                if (!contains(ka, p)) continue;
                if (strip_check(p, ka, r, Orientation::Vertical).has_value())
                    below_v.push_back(p);
                if (strip_check(p, ka, r, Orientation::Horizontal).has_value())
                    below_h.push_back(p);
            }
            for (const Partition& mu : below_v) {
                for (const Partition& nu : below_h) {
                    std::pair<ColorVector, Partition> out;
                    try {
                        out = spin_asym_extract(mu, nu, ka, r);
                    } catch (const Error& e) {
                        CHECK(e.kind == Error::Kind::Inadmissible);
                        DeltaProfile dp = delta_profile(mu, nu, r);
                        bool outside = false;
                        for (const auto& kv : dp.values)
                            if (kv.second < 0 || kv.second > r) outside = true;
                        CHECK(outside);
                        continue;
                    }
                    const auto& [a, la] = out;
                    CHECK(ka.size() - mu.size() - nu.size() + la.size() == r * a.rank());
                    CHECK(spin_asym_insert(la, mu, nu, a, r) == ka);
                }
            }
        }
    }
}

TEST_CASE("spin excess of any compatible quadruple reads off the profile") {
    // For any bottom shape joined to the middles by the two kinds of strips
    // (not necessarily the one the extraction produces), the spin excess of
    // the square equals twice the profile sum over doubled positions: upper
    // doubles count the value one step right, lower doubles subtract the
    // value at the position.
    std::mt19937 rng(59);
    auto candidates = box_partitions(5, 5);
    Int quadruples = 0;
    for (int it = 0; it < 250; ++it) {
        Int r = 1 + static_cast<Int>(rng() % 3);
        Partition seed = random_partition(rng, 3, 4);
        Partition mu = random_strip_sup(rng, seed, r, static_cast<int>(rng() % 3));
        Partition nu = random_vstrip_sup(rng, seed, r, static_cast<int>(rng() % 3));
        std::vector<Int> flags;
        for (Int h = 0; h < r; ++h) flags.push_back(static_cast<Int>(rng() % 2));
        Partition ka = spin_asym_insert(seed, mu, nu, ColorVector{flags}, r);
        DeltaProfile dp = delta_profile(mu, nu, r);

        auto km = strip_check(mu, ka, r, Orientation::Vertical);
        auto kn = strip_check(nu, ka, r, Orientation::Horizontal);
        REQUIRE(km.has_value());
        REQUIRE(kn.has_value());
        std::vector<Int> top = intersect_sorted(km->positions, kn->positions);
        Int top_sum = 0;
        for (Int k : top) top_sum += dp.at(k + 1);

        for (const Partition& la : candidates) {
            auto ml = strip_check(la, mu, r, Orientation::Horizontal);
            if (!ml.has_value()) continue;
            auto nl = strip_check(la, nu, r, Orientation::Vertical);
            if (!nl.has_value()) continue;
            std::vector<Int> bottom = intersect_sorted(ml->positions, nl->positions);
            Int bottom_sum = 0;
            for (Int k : bottom) bottom_sum += dp.at(k);
            CHECK(km->dspin + kn->dspin - ml->dspin - nl->dspin == 2 * (top_sum - bottom_sum));
            ++quadruples;
        }
    }
    CHECK(quadruples > 300);
}
