#include "ribbon/verify_suites.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <tuple>
#include <utility>
#include <variant>
#include <vector>

#include "ribbon/knuth_growth.hpp"
#include "ribbon/ribbons.hpp"
#include "ribbon/schensted.hpp"
#include "ribbon/spin_data.hpp"
#include "ribbon/strips.hpp"

namespace ribbon {

namespace {

void append(CheckReport& into, const CheckReport& part) {
    into.ok = into.ok && part.ok;
    into.details.insert(into.details.end(), part.details.begin(), part.details.end());
}

// All partitions fitting in a rows x cols box, in a fixed total order.
std::vector<Partition> box_partitions(Int rows, Int cols) {
    std::vector<Partition> out;
    std::vector<Int> parts;
    std::function<void(Int)> rec = [&](Int max_part) {
        out.emplace_back(parts);
        if (static_cast<Int>(parts.size()) == rows) return;
        for (Int p = std::min(max_part, cols); p >= 1; --p) {
            parts.push_back(p);
            rec(p);
            parts.pop_back();
        }
    };
    rec(cols);
    std::sort(out.begin(), out.end());
    return out;
}

bool contains_shape(const Partition& outer, const Partition& inner) {
    for (Int i = 0; i < inner.num_parts(); ++i)
        if (inner.part(i) > outer.part(i)) return false;
    return true;
}

struct SweepOutcome {
    Int instances = 0;
    Int rejected = 0;
    std::optional<std::string> failure;
};

void fold(SweepOutcome& total, const SweepOutcome& one) {
    total.instances += one.instances;
    total.rejected += one.rejected;
    if (!total.failure && one.failure) total.failure = one.failure;
}

// Runs fn over [0, count) with the requested parallelism. Instance counts
// are summed; the failure kept is the one at the smallest index, so the
// merged outcome does not depend on the thread count.
SweepOutcome run_sweep(Int count, Int jobs, const std::function<SweepOutcome(Int)>& fn) {
    auto guarded = [&fn](Int i) -> SweepOutcome {
        try {
            return fn(i);
        } catch (const std::exception& e) {
            return SweepOutcome{
                0, 0, "unexpected exception at index " + std::to_string(i) + ": " + e.what()};
        }
    };
    if (jobs <= 0) {
        unsigned hw = std::thread::hardware_concurrency();
        jobs = hw == 0 ? 1 : static_cast<Int>(hw);
    }
    jobs = std::min(jobs, std::max<Int>(count, 1));
    SweepOutcome total;
    if (jobs <= 1) {
        for (Int i = 0; i < count; ++i) fold(total, guarded(i));
        return total;
    }
    std::vector<SweepOutcome> slots(static_cast<std::size_t>(count));
    std::atomic<Int> next{0};
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(jobs));
    for (Int t = 0; t < jobs; ++t)
        threads.emplace_back([&]() {
            for (;;) {
                Int i = next.fetch_add(1);
                if (i >= count) return;
                slots[static_cast<std::size_t>(i)] = guarded(i);
            }
        });
    for (auto& t : threads) t.join();
    for (const SweepOutcome& one : slots) fold(total, one);
    return total;
}

// Round trip, rank equation, and (for the spin rules) the double-spin
// equation, for every strip pair below one top shape.
SweepOutcome sweep_datum_top(GrowthDatum datum, Int r, const Partition& ka,
                             const std::vector<Partition>& box) {
    SweepOutcome out;
    const bool asym = datum == GrowthDatum::SpinAsym;
    const bool spin = asym || datum == GrowthDatum::SpinSym;
    const Orientation up_mu = asym ? Orientation::Vertical : Orientation::Horizontal;
    const Orientation down_nu = asym ? Orientation::Vertical : Orientation::Horizontal;

    std::vector<std::pair<const Partition*, Int>> mus, nus;
    for (const Partition& p : box) {
        if (p.size() > ka.size() || (ka.size() - p.size()) % r != 0) continue;
        if (!contains_shape(ka, p)) continue;
        if (auto s = strip_check(p, ka, r, up_mu)) mus.emplace_back(&p, s->dspin);
        if (asym) {
            if (auto s = strip_check(p, ka, r, Orientation::Horizontal)) nus.emplace_back(&p, s->dspin);
        }
    }
    const auto& nu_list = asym ? nus : mus;

    auto fail = [&](const Partition& mu, const Partition& nu, const std::string& what) {
        std::ostringstream os;
        os << growth_datum_name(datum) << " r=" << r << " top=" << ka.to_string()
           << " mu=" << mu.to_string() << " nu=" << nu.to_string() << ": " << what;
        out.failure = os.str();
    };

    for (const auto& [mu, dkm] : mus) {
        for (const auto& [nu, dkn] : nu_list) {
            ColorVector a;
            Partition la{};
            try {
                std::tie(a, la) = growth_extract(datum, *mu, *nu, ka, r);
            } catch (const Error& e) {
                if (asym && e.kind == Error::Kind::Inadmissible) {
                    // A rejection is only legitimate when the level profile
                    // of the pair actually leaves the band [0, r].
                    DeltaProfile dp = delta_profile(*mu, *nu, r);
                    bool outside = false;
                    for (const auto& [k, v] : dp.values)
                        if (v < 0 || v > r) outside = true;
                    if (!outside) {
                        fail(*mu, *nu, "rejected although the level profile stays in range");
                        return out;
                    }
                    ++out.instances;
                    ++out.rejected;
                    continue;
                }
                fail(*mu, *nu, std::string("extract failed: ") + e.what());
                return out;
            }
            Partition back = growth_insert(datum, la, *mu, *nu, a, r);
            if (back != ka) {
                fail(*mu, *nu, "round trip returned " + back.to_string());
                return out;
            }
            if (ka.size() - mu->size() - nu->size() + la.size() != r * a.rank()) {
                fail(*mu, *nu, "rank equation violated for a=" + a.to_string());
                return out;
            }
            auto ml = strip_check(la, *mu, r, Orientation::Horizontal);
            auto nl = strip_check(la, *nu, r, down_nu);
            if (!ml || !nl) {
                fail(*mu, *nu, "result " + la.to_string() + " is not reachable by strips");
                return out;
            }
            if (spin && dkm + dkn != ml->dspin + nl->dspin + 2 * a.weight()) {
                fail(*mu, *nu, "double-spin equation violated for a=" + a.to_string());
                return out;
            }
            if (datum == GrowthDatum::SpinSym && r == 1) {
                auto [ba, bla] = growth_extract(GrowthDatum::Burge, *mu, *nu, ka, 1);
                if (ba.comps != a.comps || bla != la) {
                    fail(*mu, *nu, "r=1 spin rule disagrees with the plain column rule");
                    return out;
                }
            }
            ++out.instances;
        }
    }
    return out;
}

// Agreement between the symmetric spin rule on a single-ribbon cover and
// the single-ribbon bumping correspondence, for every addable ribbon of mu.
SweepOutcome sweep_cover(const Partition& mu, Int r) {
    SweepOutcome out;
    for (const Ribbon& rb : list_ribbons(mu, r, RibbonMode::Addable)) {
        Partition ka = apply_ribbon(mu, rb.head_content, r, RibbonDir::Add);
        auto [a, la] = spin_sym_datum(mu, mu, ka, r);
        CorrValue v = r_corr(CorrTag::WS, mu, ka, r);
        bool pass;
        if (std::holds_alternative<Partition>(v)) {
            pass = a.is_zero() && la == std::get<Partition>(v);
        } else {
            Int h = std::get<Int>(v);
            pass = la == mu && a.rank() == 1 && h >= 0 && h < a.r() && a.comps[h] == 1;
        }
        if (!pass) {
            std::ostringstream os;
            os << "cover disagreement at mu=" << mu.to_string() << " r=" << r
               << " top=" << ka.to_string() << ": datum gives a=" << a.to_string()
               << " lambda=" << la.to_string();
            out.failure = os.str();
            return out;
        }
        ++out.instances;
    }
    return out;
}

// The placement recursion against direct search for one word, across
// ribbon sizes 1..4 and all four boundary fills.
SweepOutcome sweep_word(const BitWord& w, Int x_bound) {
    SweepOutcome out;
    for (Int r = 1; r <= 4; ++r) {
        for (int left = 0; left <= 1; ++left) {
            for (int right = 0; right <= 1; ++right) {
                WordFills fills{left, right};
                GenPoly rec = placement_poly(w, r, fills, x_bound);
                GenPoly brute = placement_poly_brute(w, r, fills, x_bound);
                if (!(rec == brute)) {
                    std::ostringstream os;
                    os << "recursion and direct search differ on w=";
                    for (int b : w) os << b;
                    os << " r=" << r << " fills=(" << left << "," << right << ")";
                    out.failure = os.str();
                    return out;
                }
                ++out.instances;
            }
        }
    }
    return out;
}

}  // namespace

CheckReport suite_claims(const BitWord& w, Int r, Int x_bound) {
    return check_claims(w, r, x_bound);
}

CheckReport suite_cauchy(GrowthDatum datum, Int r, const Partition& core, Int n_vars, Int m_vars,
                         Int degree_bound) {
    return check_cauchy(datum, r, core, n_vars, m_vars, degree_bound);
}

CheckReport suite_qcauchy(Int r, const Partition& core, Int n_vars, Int m_vars, Int degree_bound) {
    CheckReport rep = check_commutation(GrowthDatum::SpinSym, r, core, degree_bound);
    append(rep, check_cauchy(GrowthDatum::SpinSym, r, core, n_vars, m_vars, degree_bound));
    return rep;
}

CheckReport suite_asym_cauchy(Int r, const Partition& core, Int n_vars, Int m_vars,
                              Int degree_bound) {
    CheckReport rep = check_commutation(GrowthDatum::SpinAsym, r, core, degree_bound);
    append(rep, check_cauchy(GrowthDatum::SpinAsym, r, core, n_vars, m_vars, degree_bound));
    return rep;
}

CheckReport suite_schensted(Int r, const Partition& core, Int n) {
    return schensted_count(r, core, n);
}

CheckReport suite_properties(Int box, Int r_max, Int w_max, Int jobs) {
    if (box < 0 || r_max < 1 || w_max < 0)
        throw Error(Error::Kind::InvalidInput, "properties sweep needs box >= 0, r >= 1, wmax >= 0");
    CheckReport rep;
    const std::vector<Partition> shapes = box_partitions(box, box);
    const Int n_shapes = static_cast<Int>(shapes.size());

    // A. Square-completion rules over the box, one report line per rule
    // and ribbon size.
    std::vector<std::pair<GrowthDatum, Int>> cases;
    for (GrowthDatum d : {GrowthDatum::Rsk, GrowthDatum::Burge, GrowthDatum::BurgeEdge,
                          GrowthDatum::FactoredRsk, GrowthDatum::FactoredBurge,
                          GrowthDatum::SpinSym, GrowthDatum::SpinAsym})
        cases.emplace_back(d, 1);
    for (Int r = 2; r <= r_max; ++r)
        for (GrowthDatum d : {GrowthDatum::FactoredRsk, GrowthDatum::FactoredBurge,
                              GrowthDatum::SpinSym, GrowthDatum::SpinAsym})
            cases.emplace_back(d, r);
    for (const auto& [datum, r] : cases) {
        SweepOutcome res = run_sweep(n_shapes, jobs, [&, datum = datum, r = r](Int i) {
            return sweep_datum_top(datum, r, shapes[i], shapes);
        });
        std::ostringstream os;
        os << "round trips and equations: " << growth_datum_name(datum) << " r=" << r << " on "
           << res.instances << " instances";
        if (res.rejected > 0)
            os << " (" << res.rejected << " rejections match the level profile)";
        rep.record(!res.failure, res.failure ? *res.failure : os.str());
    }

    // B. Single-ribbon covers against the bumping correspondence.
    for (Int r = 1; r <= r_max; ++r) {
        SweepOutcome res = run_sweep(n_shapes, jobs, [&, r = r](Int i) {
            return sweep_cover(shapes[i], r);
        });
        std::ostringstream os;
        os << "cover reduction to single-ribbon bumping: r=" << r << " on " << res.instances
           << " covers";
        rep.record(!res.failure, res.failure ? *res.failure : os.str());
    }

    // C. Placement recursion against direct search on every word of length
    // at most w_max. Word index i encodes length and bits.
    Int n_words = 0;
    for (Int len = 0; len <= w_max; ++len) n_words += Int{1} << len;
    SweepOutcome res = run_sweep(n_words, jobs, [&](Int i) {
        Int len = 0;
        Int base = 0;
        while (i - base >= (Int{1} << len)) {
            base += Int{1} << len;
            ++len;
        }
        Int mask = i - base;
        BitWord w(static_cast<std::size_t>(len));
        for (Int j = 0; j < len; ++j) w[static_cast<std::size_t>(j)] = (mask >> j) & 1;
        return sweep_word(w, 5);
    });
    std::ostringstream os;
    os << "placement recursion against direct search on " << res.instances
       << " word/size/fill combinations";
    rep.record(!res.failure, res.failure ? *res.failure : os.str());
    return rep;
}

}  // namespace ribbon
