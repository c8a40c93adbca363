#include "ribbon/knuth_growth.hpp"

#include <sstream>

#include "ribbon/ribbons.hpp"

namespace ribbon {

namespace {

void require(bool ok, Error::Kind kind, const std::string& msg) {
    if (!ok) throw Error(kind, msg);
}

Int unit_entry(const ColorVector& a) {
    require(a.r() == 1, Error::Kind::InvalidInput,
            "single-square datum expects a one-component entry, got " + a.to_string());
    return a.comps[0];
}

ColorVector wrap_unit(Int a) {
    ColorVector v;
    v.comps = {a};
    return v;
}

}  // namespace

std::string growth_datum_name(GrowthDatum datum) {
    switch (datum) {
        case GrowthDatum::Rsk: return "rsk";
        case GrowthDatum::Burge: return "burge";
        case GrowthDatum::BurgeEdge: return "burge-edge";
        case GrowthDatum::FactoredRsk: return "factored-rsk";
        case GrowthDatum::FactoredBurge: return "factored-burge";
        case GrowthDatum::SpinSym: return "spin-sym";
        case GrowthDatum::SpinAsym: return "spin-asym";
    }
    throw Error(Error::Kind::Internal, "unknown datum tag");
}

std::optional<GrowthDatum> growth_datum_from_name(std::string_view name) {
    for (GrowthDatum d : {GrowthDatum::Rsk, GrowthDatum::Burge, GrowthDatum::BurgeEdge,
                          GrowthDatum::FactoredRsk, GrowthDatum::FactoredBurge,
                          GrowthDatum::SpinSym, GrowthDatum::SpinAsym}) {
        if (growth_datum_name(d) == name) return d;
    }
    return std::nullopt;
}

bool growth_datum_is_unit(GrowthDatum datum) {
    return datum == GrowthDatum::Rsk || datum == GrowthDatum::Burge ||
           datum == GrowthDatum::BurgeEdge;
}

Orientation growth_q_orientation(GrowthDatum datum) {
    return datum == GrowthDatum::SpinAsym ? Orientation::Vertical : Orientation::Horizontal;
}

Partition growth_insert(GrowthDatum datum, const Partition& la, const Partition& mu,
                        const Partition& nu, const ColorVector& a, Int r) {
    require(r >= 1, Error::Kind::InvalidInput, "r must be positive");
    if (growth_datum_is_unit(datum)) {
        require(r == 1, Error::Kind::InvalidInput,
                growth_datum_name(datum) + " runs on single squares; r must be 1");
    }
    require(a.r() == r || (growth_datum_is_unit(datum) && a.r() == 1),
            Error::Kind::InvalidInput, "entry has " + std::to_string(a.r()) +
                " components where r = " + std::to_string(r));
    switch (datum) {
        case GrowthDatum::Rsk: return rsk_insert(la, mu, nu, unit_entry(a));
        case GrowthDatum::Burge: return burge_insert(la, mu, nu, unit_entry(a));
        case GrowthDatum::BurgeEdge: return burge_edge_insert(la, mu, nu, unit_entry(a));
        case GrowthDatum::FactoredRsk:
            return factored_insert(FactoredBase::Rsk, la, mu, nu, a, r);
        case GrowthDatum::FactoredBurge:
            return factored_insert(FactoredBase::Burge, la, mu, nu, a, r);
        case GrowthDatum::SpinSym: return spin_sym_datum_inverse(mu, nu, a, la, r);
        case GrowthDatum::SpinAsym: return spin_asym_insert(la, mu, nu, a, r);
    }
    throw Error(Error::Kind::Internal, "unknown datum tag");
}

std::pair<ColorVector, Partition> growth_extract(GrowthDatum datum, const Partition& mu,
                                                 const Partition& nu, const Partition& ka,
                                                 Int r) {
    require(r >= 1, Error::Kind::InvalidInput, "r must be positive");
    if (growth_datum_is_unit(datum)) {
        require(r == 1, Error::Kind::InvalidInput,
                growth_datum_name(datum) + " runs on single squares; r must be 1");
    }
    switch (datum) {
        case GrowthDatum::Rsk: {
            auto [a, la] = rsk_extract(mu, nu, ka);
            return {wrap_unit(a), la};
        }
        case GrowthDatum::Burge: {
            auto [a, la] = burge_extract(mu, nu, ka);
            return {wrap_unit(a), la};
        }
        case GrowthDatum::BurgeEdge: {
            auto [a, la] = burge_edge_extract(mu, nu, ka);
            return {wrap_unit(a), la};
        }
        case GrowthDatum::FactoredRsk:
            return factored_extract(FactoredBase::Rsk, mu, nu, ka, r);
        case GrowthDatum::FactoredBurge:
            return factored_extract(FactoredBase::Burge, mu, nu, ka, r);
        case GrowthDatum::SpinSym: return spin_sym_datum(mu, nu, ka, r);
        case GrowthDatum::SpinAsym: return spin_asym_extract(mu, nu, ka, r);
    }
    throw Error(Error::Kind::Internal, "unknown datum tag");
}

Int RibbonTableau::trimmed_size() const {
    Int len = static_cast<Int>(chain.size());
    while (len >= 2 && chain[len - 1] == chain[len - 2]) --len;
    return len;
}

void RibbonTableau::validate() const {
    require(r >= 1, Error::Kind::InvalidInput, "tableau r must be positive");
    require(!chain.empty(), Error::Kind::InvalidInput, "tableau chain must contain its base");
    require(chain.front() == core, Error::Kind::InvalidInput,
            "tableau chain must start at its base shape");
    for (size_t i = 0; i + 1 < chain.size(); ++i) {
        if (!strip_check(chain[i], chain[i + 1], r, orientation)) {
            std::ostringstream os;
            os << "step " << i << " of the tableau, " << chain[i].to_string() << " to "
               << chain[i + 1].to_string() << ", is not a"
               << (orientation == Orientation::Horizontal ? " horizontal " : " vertical ")
               << r << "-ribbon strip";
            throw Error(Error::Kind::PreconditionViolated, os.str());
        }
    }
}

std::string RibbonTableau::to_string() const {
    std::ostringstream os;
    os << (orientation == Orientation::Horizontal ? "h" : "v") << r << ":";
    for (size_t i = 0; i < chain.size(); ++i) {
        if (i) os << " <= ";
        os << chain[i].to_string();
    }
    return os.str();
}

bool RibbonTableau::operator==(const RibbonTableau& other) const {
    if (core != other.core || r != other.r || orientation != other.orientation) return false;
    Int len = trimmed_size();
    if (len != other.trimmed_size()) return false;
    for (Int i = 0; i < len; ++i) {
        if (chain[i] != other.chain[i]) return false;
    }
    return true;
}

TableauStats tableau_stats(const RibbonTableau& t) {
    t.validate();
    TableauStats stats;
    stats.weight.reserve(t.chain.size() - 1);
    for (size_t i = 0; i + 1 < t.chain.size(); ++i) {
        auto strip = strip_check(t.chain[i], t.chain[i + 1], t.r, t.orientation);
        stats.weight.push_back(strip->count());
        stats.dspin += strip->dspin;
    }
    return stats;
}

RibbonTableau KnuthGrowth::P() const {
    RibbonTableau t;
    t.core = core;
    t.chain = shapes.back();
    t.orientation = Orientation::Horizontal;
    t.r = r;
    return t;
}

RibbonTableau KnuthGrowth::Q() const {
    RibbonTableau t;
    t.core = core;
    t.chain.reserve(shapes.size());
    for (const auto& row : shapes) t.chain.push_back(row.back());
    t.orientation = growth_q_orientation(datum);
    t.r = r;
    return t;
}

void KnuthGrowth::validate() const {
    require(r >= 1, Error::Kind::InvalidInput, "growth r must be positive");
    require(m >= 0 && n >= 0, Error::Kind::InvalidInput, "growth sizes must be non-negative");
    require(is_r_core(core, r), Error::Kind::NotACore,
            "growth base " + core.to_string() + " is not an r-core");
    require(static_cast<Int>(shapes.size()) == m + 1, Error::Kind::InvalidInput,
            "growth must hold m+1 rows of shapes");
    for (const auto& row : shapes) {
        require(static_cast<Int>(row.size()) == n + 1, Error::Kind::InvalidInput,
                "every row of shapes must hold n+1 shapes");
    }
    require(static_cast<Int>(entries.size()) == m, Error::Kind::InvalidInput,
            "growth must hold m rows of entries");
    for (const auto& row : entries) {
        require(static_cast<Int>(row.size()) == n, Error::Kind::InvalidInput,
                "every row of entries must hold n entries");
    }
    for (Int l = 0; l <= n; ++l) {
        require(shapes[0][l] == core, Error::Kind::InvalidInput, "row 0 must hold the core");
    }
    for (Int k = 0; k <= m; ++k) {
        require(shapes[k][0] == core, Error::Kind::InvalidInput, "column 0 must hold the core");
    }
    for (Int k = 0; k < m; ++k) {
        for (Int l = 0; l < n; ++l) {
            Partition ka =
                growth_insert(datum, shapes[k][l], shapes[k][l + 1], shapes[k + 1][l],
                              entries[k][l], r);
            if (ka != shapes[k + 1][l + 1]) {
                std::ostringstream os;
                os << "cell (" << k << "," << l << ") completes to " << ka.to_string()
                   << " but the grid holds " << shapes[k + 1][l + 1].to_string();
                throw Error(Error::Kind::InvalidInput, os.str());
            }
        }
    }
}

GrowResult grow_knuth(const ColorMatrix& A, GrowthDatum datum, const Partition& core, Int r) {
    require(r >= 1, Error::Kind::InvalidInput, "r must be positive");
    if (growth_datum_is_unit(datum)) {
        require(r == 1, Error::Kind::InvalidInput,
                growth_datum_name(datum) + " runs on single squares; r must be 1");
    }
    require(is_r_core(core, r), Error::Kind::NotACore,
            "growth base " + core.to_string() + " is not an r-core");
    Int m = static_cast<Int>(A.size());
    Int n = m == 0 ? 0 : static_cast<Int>(A.front().size());
    for (const auto& row : A) {
        require(static_cast<Int>(row.size()) == n, Error::Kind::InvalidInput,
                "matrix rows must all have the same length");
        for (const auto& entry : row) {
            require(entry.r() == r, Error::Kind::InvalidInput,
                    "entry " + entry.to_string() + " does not have r components");
            for (Int c : entry.comps) {
                require(c >= 0, Error::Kind::InvalidInput, "entries must be non-negative");
            }
        }
    }

    KnuthGrowth g;
    g.m = m;
    g.n = n;
    g.datum = datum;
    g.r = r;
    g.core = core;
    g.entries = A;
    g.shapes.assign(m + 1, std::vector<Partition>(n + 1, core));
    for (Int k = 0; k < m; ++k) {
        for (Int l = 0; l < n; ++l) {
            g.shapes[k + 1][l + 1] = growth_insert(
                datum, g.shapes[k][l], g.shapes[k][l + 1], g.shapes[k + 1][l], A[k][l], r);
        }
    }
    return GrowResult{g.P(), g.Q(), std::move(g)};
}

ShrinkResult shrink_knuth(const RibbonTableau& P, const RibbonTableau& Q, GrowthDatum datum) {
    P.validate();
    Q.validate();
    require(P.r == Q.r, Error::Kind::PreconditionViolated,
            "the two tableaux disagree on r");
    Int r = P.r;
    if (growth_datum_is_unit(datum)) {
        require(r == 1, Error::Kind::InvalidInput,
                growth_datum_name(datum) + " runs on single squares; r must be 1");
    }
    require(P.orientation == Orientation::Horizontal, Error::Kind::PreconditionViolated,
            "P must be a horizontal tableau");
    require(Q.orientation == growth_q_orientation(datum), Error::Kind::PreconditionViolated,
            "Q has the wrong orientation for this datum");
    require(P.core == Q.core, Error::Kind::PreconditionViolated,
            "the two tableaux must share their base shape");
    require(is_r_core(P.core, r), Error::Kind::NotACore,
            "growth base " + P.core.to_string() + " is not an r-core");
    require(P.shape() == Q.shape(), Error::Kind::PreconditionViolated,
            "the two tableaux must end at the same shape");

    Int m = Q.steps();
    Int n = P.steps();
    KnuthGrowth g;
    g.m = m;
    g.n = n;
    g.datum = datum;
    g.r = r;
    g.core = P.core;
    g.shapes.assign(m + 1, std::vector<Partition>(n + 1));
    g.entries.assign(m, std::vector<ColorVector>(n, ColorVector::zeros(r)));
    g.shapes[m] = P.chain;
    for (Int k = 0; k <= m; ++k) g.shapes[k][n] = Q.chain[k];
    for (Int k = m - 1; k >= 0; --k) {
        for (Int l = n - 1; l >= 0; --l) {
            auto [a, la] = growth_extract(datum, g.shapes[k][l + 1], g.shapes[k + 1][l],
                                          g.shapes[k + 1][l + 1], r);
            g.entries[k][l] = std::move(a);
            g.shapes[k][l] = std::move(la);
        }
    }
    return ShrinkResult{g.entries, std::move(g)};
}

}  // namespace ribbon
