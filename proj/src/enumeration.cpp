#include "ribbon/enumeration.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <mutex>
#include <set>
#include <sstream>
#include <tuple>

#include "ribbon/ribbons.hpp"
#include "ribbon/schensted.hpp"
#include "ribbon/strips.hpp"

namespace ribbon {

namespace {

void require(bool ok, Error::Kind kind, const std::string& msg) {
    if (!ok) throw Error(kind, msg);
}

void validate_word(const BitWord& w, Int r, WordFills fills, const std::optional<Int>& x_bound) {
    require(r >= 1, Error::Kind::InvalidInput, "the ribbon size must be at least 1");
    for (int b : w)
        require(b == 0 || b == 1, Error::Kind::InvalidInput, "words may contain only bits 0 and 1");
    require((fills.left == 0 || fills.left == 1) && (fills.right == 0 || fills.right == 1),
            Error::Kind::InvalidInput, "fills must be bits");
    require(!x_bound || *x_bound >= 0, Error::Kind::InvalidInput,
            "the truncation bound must be non-negative");
}

bool needs_bound(const BitWord& w, WordFills fills) {
    if (fills.right != 0) return false;
    if (fills.left == 1) return true;
    return std::find(w.begin(), w.end(), 1) != w.end();
}

// The word with its finite extensions materialised: r fill bits on the
// left, and on the right r fill bits plus room for budget more ribbons.
BitWord extended_word(const BitWord& w, Int r, WordFills fills, Int budget) {
    BitWord out(static_cast<size_t>(r), fills.left);
    out.insert(out.end(), w.begin(), w.end());
    Int tail = r + (fills.right == 0 ? std::max<Int>(budget, 0) * r : 0);
    out.insert(out.end(), static_cast<size_t>(tail), fills.right);
    return out;
}

GenPoly placement_rec(const BitWord& w, Int r, std::optional<Int> budget) {
    GenPoly result = GenPoly::one();
    if (budget && *budget == 0) return result;
    std::optional<Int> sub_budget = budget ? std::optional<Int>(*budget - 1) : std::nullopt;
    Int l = static_cast<Int>(w.size());
    for (Int i = 0; i + r < l; ++i) {
        if (w[static_cast<size_t>(i)] != 1 || w[static_cast<size_t>(i + r)] != 0) continue;
        BitWord ww(w.begin() + i + 1, w.end());
        ww[static_cast<size_t>(r - 1)] = 1;
        Int h = 0;
        for (Int j = i + 1; j < i + r; ++j) h += w[static_cast<size_t>(j)];
        GenPoly sub = placement_rec(ww, r, sub_budget);
        for (const auto& [deg, c] : sub.terms) result.add(deg.first + 1, deg.second + h, c);
    }
    return result;
}

const std::vector<Partition>& partitions_of(Int n) {
    static std::mutex mutex;
    static std::map<Int, std::vector<Partition>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<Partition> out;
    std::vector<Int> acc;
    std::function<void(Int, Int)> rec = [&](Int left, Int cap) {
        if (left == 0) {
            out.push_back(Partition(acc));
            return;
        }
        for (Int p = std::min(cap, left); p >= 1; --p) {
            acc.push_back(p);
            rec(left - p, p);
            acc.pop_back();
        }
    };
    rec(n, std::max<Int>(n, 1));
    return cache.emplace(n, std::move(out)).first->second;
}

bool contains_shape(const Partition& outer, const Partition& inner) {
    for (Int i = 0; i < inner.num_parts(); ++i)
        if (outer.part(i) < inner.part(i)) return false;
    return true;
}

using StripList = std::vector<std::pair<Partition, Int>>;  // (other endpoint, dspin)

// Shapes reached from lo by adding a strip of exactly c ribbons, cached.
const StripList& strips_up(const Partition& lo, Int c, Int r, Orientation orient) {
    static std::mutex mutex;
    static std::map<std::tuple<Partition, Int, Int, int>, StripList> cache;
    std::tuple<Partition, Int, Int, int> key{lo, c, r, orient == Orientation::Vertical ? 1 : 0};
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    StripList out;
    for (const Partition& hi : partitions_of(lo.size() + c * r)) {
        if (!contains_shape(hi, lo)) continue;
        if (auto strip = strip_check(lo, hi, r, orient)) out.emplace_back(hi, strip->dspin);
    }
    return cache.emplace(std::move(key), std::move(out)).first->second;
}

// Shapes reaching hi by adding a strip of exactly c ribbons, cached.
const StripList& strips_down(const Partition& hi, Int c, Int r, Orientation orient) {
    static std::mutex mutex;
    static std::map<std::tuple<Partition, Int, Int, int>, StripList> cache;
    std::tuple<Partition, Int, Int, int> key{hi, c, r, orient == Orientation::Vertical ? 1 : 0};
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    StripList out;
    if (hi.size() - c * r >= 0) {
        for (const Partition& lo : partitions_of(hi.size() - c * r)) {
            if (!contains_shape(hi, lo)) continue;
            if (auto strip = strip_check(lo, hi, r, orient)) out.emplace_back(lo, strip->dspin);
        }
    }
    return cache.emplace(std::move(key), std::move(out)).first->second;
}

struct ChainTerm {
    std::vector<Int> counts;
    Int dspin = 0;
};

// All strip chains with exactly `vars` steps from the core, at most
// max_ribbons ribbons in total, grouped by final shape.
std::map<Partition, std::vector<ChainTerm>> chain_terms(const Partition& core, Int r, Int vars,
                                                        Int max_ribbons, Orientation orient) {
    std::map<Partition, std::vector<ChainTerm>> out;
    std::vector<Int> counts(static_cast<size_t>(vars), 0);
    Int dspin = 0;
    std::function<void(const Partition&, Int, Int)> rec = [&](const Partition& cur, Int step,
                                                              Int left) {
        if (step == vars) {
            out[cur].push_back({counts, dspin});
            return;
        }
        for (Int c = 0; c <= left; ++c) {
            for (const auto& [hi, step_dspin] : strips_up(cur, c, r, orient)) {
                counts[static_cast<size_t>(step)] = c;
                dspin += step_dspin;
                rec(hi, step + 1, left - c);
                dspin -= step_dspin;
            }
        }
        counts[static_cast<size_t>(step)] = 0;
    };
    rec(core, 0, max_ribbons);
    return out;
}

bool datum_weights_spin(GrowthDatum datum) {
    return datum == GrowthDatum::SpinSym || datum == GrowthDatum::SpinAsym;
}

// Coefficients of T^k in the entry series: multichoose counts for the
// spinless data, complete homogeneous in 1, s^2, ..., s^(2r-2) for the
// symmetric spin datum, elementary symmetric for the asymmetric one.
// Returned as k -> (s_exp -> coefficient).
std::vector<std::map<Int, Int>> entry_series(GrowthDatum datum, Int r, Int max_k) {
    std::vector<std::map<Int, Int>> out(static_cast<size_t>(max_k + 1));
    if (!datum_weights_spin(datum)) {
        for (Int k = 0; k <= max_k; ++k) out[static_cast<size_t>(k)][0] = multichoose(r, k);
        return out;
    }
    out[0][0] = 1;
    for (Int i = 0; i < r; ++i) {
        std::vector<std::map<Int, Int>> next(static_cast<size_t>(max_k + 1));
        for (Int k = 0; k <= max_k; ++k) {
            for (const auto& [e, c] : out[static_cast<size_t>(k)]) {
                if (datum == GrowthDatum::SpinAsym) {
                    next[static_cast<size_t>(k)][e] += c;
                    if (k + 1 <= max_k) next[static_cast<size_t>(k + 1)][e + 2 * i] += c;
                } else {
                    for (Int p = 0; k + p <= max_k; ++p)
                        next[static_cast<size_t>(k + p)][e + 2 * i * p] += c;
                }
            }
        }
        out = std::move(next);
    }
    return out;
}

void prune_zeros(std::map<Int, Int>& poly) {
    for (auto it = poly.begin(); it != poly.end();)
        it = it->second == 0 ? poly.erase(it) : std::next(it);
}

std::string s_poly_string(const std::map<Int, Int>& poly) {
    if (poly.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : poly) {
        if (!first) os << " + ";
        first = false;
        os << c;
        if (e != 0) os << "*s^" << e;
    }
    return os.str();
}

}  // namespace

GenPoly GenPoly::one() {
    GenPoly p;
    p.terms[{0, 0}] = 1;
    return p;
}

void GenPoly::add(Int x_deg, Int y_deg, Int c) {
    if (c == 0) return;
    auto key = std::make_pair(x_deg, y_deg);
    auto [it, inserted] = terms.emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

Int GenPoly::coeff(Int x_deg, Int y_deg) const {
    auto it = terms.find({x_deg, y_deg});
    return it == terms.end() ? 0 : it->second;
}

std::map<Int, Int> GenPoly::x_slice(Int x_deg) const {
    std::map<Int, Int> out;
    for (auto it = terms.lower_bound({x_deg, std::numeric_limits<Int>::min()});
         it != terms.end() && it->first.first == x_deg; ++it)
        out[it->first.second] = it->second;
    return out;
}

Int GenPoly::max_x() const {
    Int best = 0;
    for (const auto& [deg, c] : terms) best = std::max(best, deg.first);
    return best;
}

GenPoly GenPoly::times(const GenPoly& other) const {
    GenPoly out;
    if (x_bound && other.x_bound)
        out.x_bound = std::min(*x_bound, *other.x_bound);
    else
        out.x_bound = x_bound ? x_bound : other.x_bound;
    for (const auto& [a, ca] : terms)
        for (const auto& [b, cb] : other.terms) {
            Int x = a.first + b.first;
            if (out.x_bound && x > *out.x_bound) continue;
            out.add(x, a.second + b.second, ca * cb);
        }
    return out;
}

GenPoly GenPoly::truncated(Int bound) const {
    GenPoly out;
    out.x_bound = x_bound ? std::min(*x_bound, bound) : bound;
    for (const auto& [deg, c] : terms)
        if (deg.first <= *out.x_bound) out.terms.emplace(deg, c);
    return out;
}

GenPoly GenPoly::y_one() const {
    GenPoly out;
    out.x_bound = x_bound;
    for (const auto& [deg, c] : terms) out.add(deg.first, 0, c);
    return out;
}

std::string GenPoly::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (Int x = 0; x <= max_x(); ++x) {
        auto slice = x_slice(x);
        if (slice.empty()) continue;
        if (!first) os << " + ";
        first = false;
        os << "X^" << x << "*(";
        bool inner_first = true;
        for (const auto& [y, c] : slice) {
            if (!inner_first) os << " + ";
            inner_first = false;
            os << c;
            if (y != 0) os << "*Y^" << y;
        }
        os << ")";
    }
    if (first) os << "0";
    if (x_bound) os << " [cut above X^" << *x_bound << "]";
    return os.str();
}

BitWord reversed_word(const BitWord& w) { return BitWord(w.rbegin(), w.rend()); }

BitWord residue_subword(const BitWord& w, Int r, Int residue) {
    require(r >= 1 && residue >= 0 && residue < r, Error::Kind::InvalidInput,
            "the residue must lie in [0, r)");
    BitWord out;
    for (size_t i = static_cast<size_t>(residue); i < w.size(); i += static_cast<size_t>(r))
        out.push_back(w[i]);
    return out;
}

Int multichoose(Int r, Int k) {
    require(r >= 0 && k >= 0, Error::Kind::InvalidInput, "multichoose takes naturals");
    Int num = 1, den = 1;
    for (Int i = 1; i <= k; ++i) {
        num *= r + i - 1;
        den *= i;
    }
    return num / den;
}

GenPoly placement_poly(const BitWord& w, Int r, WordFills fills, std::optional<Int> x_bound) {
    validate_word(w, r, fills, x_bound);
    require(!needs_bound(w, fills) || x_bound.has_value(), Error::Kind::MissingBound,
            "a truncation bound is required when the right fill is 0 and 1-bits are reachable");
    BitWord word = extended_word(w, r, fills, x_bound.value_or(0));
    GenPoly result = placement_rec(word, r, x_bound);
    if (x_bound) result.x_bound = *x_bound;
    return result;
}

void placement_enumerate(const BitWord& w, Int r, WordFills fills, std::optional<Int> x_bound,
                         const std::function<void(const std::vector<Int>&)>& visit) {
    validate_word(w, r, fills, x_bound);
    require(!needs_bound(w, fills) || x_bound.has_value(), Error::Kind::MissingBound,
            "a truncation bound is required when the right fill is 0 and 1-bits are reachable");
    const BitWord original = extended_word(w, r, fills, x_bound.value_or(0));
    BitWord cur = original;
    Int budget = x_bound ? *x_bound : -1;
    std::vector<Int> heights;
    Int len = static_cast<Int>(cur.size());
    std::function<void(Int)> rec = [&](Int last_final) {
        visit(heights);
        if (budget >= 0 && static_cast<Int>(heights.size()) == budget) return;
        for (Int i = 0; i + r < len; ++i) {
            Int f = i + r;
            if (cur[static_cast<size_t>(i)] != 1 || cur[static_cast<size_t>(f)] != 0) continue;
            if (original[static_cast<size_t>(f)] != 0) continue;
            if (f <= last_final) continue;
            Int h = 0;
            for (Int j = i + 1; j < f; ++j) h += cur[static_cast<size_t>(j)];
            cur[static_cast<size_t>(i)] = 0;
            cur[static_cast<size_t>(f)] = 1;
            heights.push_back(h);
            rec(f);
            heights.pop_back();
            cur[static_cast<size_t>(i)] = 1;
            cur[static_cast<size_t>(f)] = 0;
        }
    };
    rec(std::numeric_limits<Int>::min());
}

GenPoly placement_poly_brute(const BitWord& w, Int r, WordFills fills, std::optional<Int> x_bound) {
    GenPoly result;
    placement_enumerate(w, r, fills, x_bound, [&](const std::vector<Int>& heights) {
        Int total = 0;
        for (Int h : heights) total += h;
        result.add(static_cast<Int>(heights.size()), total, 1);
    });
    if (x_bound) result.x_bound = *x_bound;
    return result;
}

GenPoly height_multiset_series(Int r, Int x_bound) {
    require(r >= 1, Error::Kind::InvalidInput, "the ribbon size must be at least 1");
    require(x_bound >= 0, Error::Kind::InvalidInput, "the truncation bound must be non-negative");
    GenPoly out = GenPoly::one();
    out.x_bound = x_bound;
    for (Int h = 0; h < r; ++h) {
        GenPoly factor;
        factor.x_bound = x_bound;
        for (Int p = 0; p <= x_bound; ++p) factor.add(p, h * p, 1);
        out = out.times(factor);
    }
    return out;
}

void CheckReport::record(bool pass, const std::string& what) {
    ok = ok && pass;
    details.push_back((pass ? "pass: " : "FAIL: ") + what);
}

CheckReport check_claims(const BitWord& w, Int r, Int x_bound) {
    CheckReport rep;
    const BitWord wr = reversed_word(w);

    GenPoly both_one = placement_poly(w, r, {1, 1});
    rep.record(both_one == placement_poly(wr, r, {1, 1}),
               "fills (1,1): placement polynomial unchanged under word reversal");

    GenPoly both_zero = placement_poly(w, r, {0, 0}, x_bound);
    rep.record(both_zero == placement_poly(wr, r, {0, 0}, x_bound),
               "fills (0,0): truncated placement series unchanged under word reversal");

    GenPoly mixed = placement_poly(w, r, {1, 0}, x_bound);
    GenPoly mixed_rhs =
        placement_poly(wr, r, {0, 1}).times(height_multiset_series(r, x_bound)).truncated(x_bound);
    rep.record(mixed.truncated(x_bound) == mixed_rhs,
               "fills (1,0) equals the reversed (0,1) polynomial times the height multiset series");

    GenPoly factored = GenPoly::one();
    for (Int i = 0; i < r; ++i)
        factored = factored.times(placement_poly(residue_subword(w, r, i), 1, {1, 1}));
    rep.record(both_one.y_one() == factored.y_one(),
               "fills (1,1) at Y=1 factors over the r residue subwords at ribbon size 1");
    return rep;
}

TruncatedSeries TruncatedSeries::one(Int n_vars, Int m_vars, Int degree_bound) {
    TruncatedSeries s;
    s.n_vars = n_vars;
    s.m_vars = m_vars;
    s.degree_bound = degree_bound;
    s.terms[std::vector<Int>(static_cast<size_t>(1 + n_vars + m_vars), 0)] = 1;
    return s;
}

void TruncatedSeries::add(const std::vector<Int>& key, Int c) {
    if (c == 0) return;
    Int total = 0;
    for (size_t i = 1; i < key.size(); ++i) total += key[i];
    if (total > degree_bound) return;
    auto [it, inserted] = terms.emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

TruncatedSeries TruncatedSeries::times(const TruncatedSeries& other) const {
    require(n_vars == other.n_vars && m_vars == other.m_vars &&
                degree_bound == other.degree_bound,
            Error::Kind::Internal, "series dimensions must agree");
    TruncatedSeries out;
    out.n_vars = n_vars;
    out.m_vars = m_vars;
    out.degree_bound = degree_bound;
    std::vector<Int> key(static_cast<size_t>(1 + n_vars + m_vars), 0);
    for (const auto& [a, ca] : terms)
        for (const auto& [b, cb] : other.terms) {
            for (size_t i = 0; i < key.size(); ++i) key[i] = a[i] + b[i];
            out.add(key, ca * cb);
        }
    return out;
}

std::string TruncatedSeries::term_string(const std::vector<Int>& key) const {
    std::ostringstream os;
    bool any = false;
    if (key[0] != 0) {
        os << "s^" << key[0];
        any = true;
    }
    for (Int i = 0; i < n_vars; ++i)
        if (key[static_cast<size_t>(1 + i)] != 0) {
            if (any) os << "*";
            os << "X" << i << "^" << key[static_cast<size_t>(1 + i)];
            any = true;
        }
    for (Int j = 0; j < m_vars; ++j)
        if (key[static_cast<size_t>(1 + n_vars + j)] != 0) {
            if (any) os << "*";
            os << "Y" << j << "^" << key[static_cast<size_t>(1 + n_vars + j)];
            any = true;
        }
    if (!any) os << "1";
    return os.str();
}

std::string TruncatedSeries::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : terms) {
        if (!first) os << " + ";
        first = false;
        os << c << "*" << term_string(key);
    }
    if (first) os << "0";
    return os.str();
}

CheckReport check_cauchy(GrowthDatum datum, Int r, const Partition& core, Int n_vars, Int m_vars,
                         Int degree_bound) {
    require(r >= 1 && n_vars >= 0 && m_vars >= 0 && degree_bound >= 0,
            Error::Kind::InvalidInput, "check parameters must be non-negative and r positive");
    require(is_r_core(core, r), Error::Kind::NotACore,
            "the starting shape " + core.to_string() + " is not an r-core for r = " +
                std::to_string(r));
    const bool with_spin = datum_weights_spin(datum);
    const Int per_side = degree_bound / 2;

    auto x_terms = chain_terms(core, r, n_vars, per_side, Orientation::Horizontal);
    auto y_terms = chain_terms(core, r, m_vars, per_side, growth_q_orientation(datum));

    TruncatedSeries lhs;
    lhs.n_vars = n_vars;
    lhs.m_vars = m_vars;
    lhs.degree_bound = degree_bound;
    std::vector<Int> key(static_cast<size_t>(1 + n_vars + m_vars), 0);
    for (const auto& [shape, xs] : x_terms) {
        auto it = y_terms.find(shape);
        if (it == y_terms.end()) continue;
        for (const ChainTerm& tx : xs)
            for (const ChainTerm& ty : it->second) {
                key[0] = with_spin ? tx.dspin + ty.dspin : 0;
                for (Int i = 0; i < n_vars; ++i)
                    key[static_cast<size_t>(1 + i)] = tx.counts[static_cast<size_t>(i)];
                for (Int j = 0; j < m_vars; ++j)
                    key[static_cast<size_t>(1 + n_vars + j)] = ty.counts[static_cast<size_t>(j)];
                lhs.add(key, 1);
            }
    }

    TruncatedSeries rhs = TruncatedSeries::one(n_vars, m_vars, degree_bound);
    for (Int i = 0; i < n_vars; ++i)
        for (Int j = 0; j < m_vars; ++j)
            for (Int k = 0; k < r; ++k) {
                TruncatedSeries factor = TruncatedSeries::one(n_vars, m_vars, degree_bound);
                if (datum == GrowthDatum::SpinAsym) {
                    std::fill(key.begin(), key.end(), 0);
                    key[0] = 2 * k;
                    key[static_cast<size_t>(1 + i)] = 1;
                    key[static_cast<size_t>(1 + n_vars + j)] = 1;
                    factor.add(key, 1);
                } else {
                    for (Int p = 1; 2 * p <= degree_bound; ++p) {
                        std::fill(key.begin(), key.end(), 0);
                        key[0] = with_spin ? 2 * k * p : 0;
                        key[static_cast<size_t>(1 + i)] = p;
                        key[static_cast<size_t>(1 + n_vars + j)] = p;
                        factor.add(key, 1);
                    }
                }
                rhs = rhs.times(factor);
            }

    CheckReport rep;
    if (lhs == rhs) {
        rep.record(true, "pair sum matches the product on " + std::to_string(rhs.terms.size()) +
                             " terms (" + growth_datum_name(datum) + ", r = " + std::to_string(r) +
                             ", degree bound " + std::to_string(degree_bound) + ")");
        return rep;
    }
    for (const auto& [k2, c] : rhs.terms) {
        auto it = lhs.terms.find(k2);
        Int have = it == lhs.terms.end() ? 0 : it->second;
        if (have != c) {
            rep.record(false, "coefficient of " + rhs.term_string(k2) + ": chain pairs give " +
                                  std::to_string(have) + ", the product gives " +
                                  std::to_string(c));
            return rep;
        }
    }
    for (const auto& [k1, c] : lhs.terms) {
        if (!rhs.terms.count(k1)) {
            rep.record(false, "coefficient of " + lhs.term_string(k1) + ": chain pairs give " +
                                  std::to_string(c) + ", the product gives 0");
            return rep;
        }
    }
    rep.record(false, "series differ");
    return rep;
}

CheckReport check_commutation(GrowthDatum datum, Int r, const Partition& core, Int degree_bound) {
    require(r >= 1 && degree_bound >= 0, Error::Kind::InvalidInput,
            "check parameters must be non-negative and r positive");
    require(is_r_core(core, r), Error::Kind::NotACore,
            "the starting shape " + core.to_string() + " is not an r-core for r = " +
                std::to_string(r));
    const bool with_spin = datum_weights_spin(datum);
    const Orientation down = growth_q_orientation(datum);
    const auto coeffs = entry_series(datum, r, degree_bound);

    std::vector<Partition> shapes;
    for (Int c = 0; c <= 2; ++c)
        for (const Partition& la : partitions_of(core.size() + c * r))
            if (r_quotient(la, r).core == core) shapes.push_back(la);

    CheckReport rep;
    Int checks = 0;
    for (const Partition& la : shapes)
        for (Int a = 0; a <= degree_bound; ++a)
            for (Int b = 0; a + b <= degree_bound; ++b) {
                std::map<Partition, std::map<Int, Int>> lhs, rhs;
                for (const auto& [ka, up_dspin] : strips_up(la, a, r, Orientation::Horizontal))
                    for (const auto& [mu, down_dspin] : strips_down(ka, b, r, down))
                        lhs[mu][with_spin ? up_dspin + down_dspin : 0] += 1;
                for (Int k = 0; k <= std::min(a, b); ++k)
                    for (const auto& [s_exp, c] : coeffs[static_cast<size_t>(k)])
                        for (const auto& [nu, down_dspin] : strips_down(la, b - k, r, down))
                            for (const auto& [mu, up_dspin] :
                                 strips_up(nu, a - k, r, Orientation::Horizontal))
                                rhs[mu][with_spin ? s_exp + down_dspin + up_dspin : 0] += c;
                for (auto& [mu, poly] : lhs) prune_zeros(poly);
                for (auto& [mu, poly] : rhs) prune_zeros(poly);
                std::vector<Partition> keys;
                for (const auto& [mu, poly] : lhs)
                    if (!poly.empty()) keys.push_back(mu);
                for (const auto& [mu, poly] : rhs)
                    if (!poly.empty() && !lhs.count(mu)) keys.push_back(mu);
                for (const Partition& mu : keys) {
                    ++checks;
                    auto& l = lhs[mu];
                    auto& h = rhs[mu];
                    if (l != h) {
                        rep.record(false, "remove-after-add differs from add-after-remove at " +
                                              la.to_string() + " -> " + mu.to_string() + " with " +
                                              std::to_string(a) + " strips up, " +
                                              std::to_string(b) + " down: " + s_poly_string(l) +
                                              " vs " + s_poly_string(h));
                        return rep;
                    }
                }
            }
    rep.record(true, "remove-after-add equals add-after-remove with the entry series on " +
                         std::to_string(checks) + " transitions (" + growth_datum_name(datum) +
                         ", r = " + std::to_string(r) + ", degree bound " +
                         std::to_string(degree_bound) + ")");
    return rep;
}

CheckReport schensted_count(Int r, const Partition& core, Int n) {
    require(n >= 0 && n <= 4 && r >= 1 && r <= 3, Error::Kind::PreconditionViolated,
            "pair counting is desk-scale only: n <= 4 and r <= 3");
    std::vector<Int> perm(static_cast<size_t>(n));
    for (Int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;

    std::map<Int, Int> histogram;
    std::set<std::pair<std::vector<Partition>, std::vector<Partition>>> pairs;
    Int total = 0;
    do {
        std::vector<Int> colours(static_cast<size_t>(n), 0);
        while (true) {
            ColoredPermutation A;
            A.n = n;
            A.r = r;
            for (Int i = 0; i < n; ++i)
                A.points[{i, perm[static_cast<size_t>(i)]}] = colours[static_cast<size_t>(i)];
            SchenstedGrowth g = grow_schensted(A, CorrTag::SW, core);
            histogram[chain_dspin(g.P(), r) + chain_dspin(g.Q(), r)] += 1;
            pairs.insert({g.P(), g.Q()});
            ++total;

            size_t pos = 0;
            while (pos < colours.size() && ++colours[pos] == r) {
                colours[pos] = 0;
                ++pos;
            }
            if (pos == colours.size()) break;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    Int factorial = 1;
    for (Int i = 2; i <= n; ++i) factorial *= i;
    Int power = 1;
    for (Int i = 0; i < n; ++i) power *= r;

    std::map<Int, Int> expect{{0, 1}};
    for (Int step = 0; step < n; ++step) {
        std::map<Int, Int> next;
        for (const auto& [e, c] : expect)
            for (Int h = 0; h < r; ++h) next[e + 2 * h] += c;
        expect = std::move(next);
    }
    for (auto& [e, c] : expect) c *= factorial;

    CheckReport rep;
    rep.record(total == factorial * power,
               "grew " + std::to_string(total) + " coloured permutations, expected " +
                   std::to_string(factorial * power));
    rep.record(static_cast<Int>(pairs.size()) == total, "all chain pairs are distinct");
    rep.record(histogram == expect,
               "doubled-spin refinement matches " + std::to_string(factorial) +
                   " * (sum of s^(2i) for i < " + std::to_string(r) + ")^" + std::to_string(n));
    return rep;
}

}  // namespace ribbon
