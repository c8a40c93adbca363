#include "ribbon/schensted.hpp"

#include <algorithm>
#include <utility>

namespace ribbon {

namespace {

void validate_tag_r(CorrTag tag, Int r) {
    if (r < 1) throw Error(Error::Kind::InvalidInput, "ribbon size must be positive");
    if ((tag == CorrTag::RowY || tag == CorrTag::ColY) && r != 1)
        throw Error(Error::Kind::InvalidInput, "single-square bumping rules require r == 1");
    if (tag == CorrTag::BVG && r != 2)
        throw Error(Error::Kind::InvalidInput, "form-directed bumping requires r == 2");
}

// The ribbon ka/mu, for ka exactly one r-ribbon above mu.
Ribbon covering_ribbon(const Partition& mu, const Partition& ka, Int r) {
    if (ka.size() == mu.size() + r)
        for (const Ribbon& rb : list_ribbons(mu, r, RibbonMode::Addable))
            if (apply_ribbon(mu, rb.head_content, r, RibbonDir::Add) == ka) return rb;
    throw Error(Error::Kind::NotCovering,
                ka.to_string() + " is not " + mu.to_string() + " plus one ribbon");
}

// The ribbon mu/la, for la exactly one r-ribbon below mu.
Ribbon covered_ribbon(const Partition& mu, const Partition& la, Int r) {
    if (mu.size() == la.size() + r)
        for (const Ribbon& rb : list_ribbons(mu, r, RibbonMode::Removable))
            if (apply_ribbon(mu, rb.head_content, r, RibbonDir::Remove) == la) return rb;
    throw Error(Error::Kind::NotCovering,
                la.to_string() + " is not " + mu.to_string() + " minus one ribbon");
}

// Bump an added ribbon to a removable ribbon of the same height: the nearest
// one with larger head content (toward_larger, the SW direction) or the
// nearest one with smaller head content (the WS direction). When no such
// ribbon exists the step ends with the height as its colour; removable and
// addable ribbons of one height alternate along the edge with addable ones
// at both ends, which is what makes this a bijection.
CorrValue bump(const Partition& mu, const Ribbon& added, Int r, bool toward_larger) {
    const Int h = added.height();
    std::optional<Int> pick;
    for (const Ribbon& rb : list_ribbons(mu, r, RibbonMode::Removable)) {
        if (rb.height() != h) continue;
        if (toward_larger) {
            if (rb.head_content > added.head_content) {
                pick = rb.head_content;
                break;
            }
        } else {
            if (rb.head_content >= added.head_content) break;
            pick = rb.head_content;
        }
    }
    if (!pick) return CorrValue(h);
    return CorrValue(apply_ribbon(mu, *pick, r, RibbonDir::Remove));
}

// Inverse of bump with the same direction flag. A colour h resolves to the
// extreme addable ribbon of height h (largest head for the SW direction,
// smallest for WS); a covered shape resolves to the nearest addable ribbon
// of the matching height on the near side of the removed one.
Partition unbump(const Partition& mu, const CorrValue& value, Int r, bool toward_larger) {
    const std::vector<Ribbon> addable = list_ribbons(mu, r, RibbonMode::Addable);
    std::optional<Int> pick;
    if (std::holds_alternative<Int>(value)) {
        const Int h = std::get<Int>(value);
        if (h < 0 || h >= r) throw Error(Error::Kind::InvalidInput, "colour out of range");
        for (const Ribbon& rb : addable) {
            if (rb.height() != h) continue;
            pick = rb.head_content;
            if (!toward_larger) break;
        }
    } else {
        const Ribbon removed = covered_ribbon(mu, std::get<Partition>(value), r);
        const Int h = removed.height();
        for (const Ribbon& rb : addable) {
            if (rb.height() != h) continue;
            if (toward_larger) {
                if (rb.head_content >= removed.head_content) break;
                pick = rb.head_content;
            } else {
                if (rb.head_content > removed.head_content) {
                    pick = rb.head_content;
                    break;
                }
            }
        }
    }
    if (!pick)
        throw Error(Error::Kind::Internal, "no addable ribbon matches the bumping step");
    return apply_ribbon(mu, *pick, r, RibbonDir::Add);
}

// Locate the unique quotient component where the two tuples differ.
Int changed_component(const CoreQuotient& a, const CoreQuotient& b) {
    Int comp = -1;
    for (Int i = 0; i < a.r; ++i) {
        if (a.quotient[i] == b.quotient[i]) continue;
        if (comp >= 0) throw Error(Error::Kind::Internal, "one ribbon moved two components");
        comp = i;
    }
    if (comp < 0) throw Error(Error::Kind::Internal, "cover with an unchanged quotient");
    return comp;
}

// One bumping step carried out inside the quotient component the added
// ribbon lives on, with the given single-square rule; a colour produced
// there is reported as the component index.
CorrValue factored_corr(const Partition& mu, const Partition& ka, Int r, CorrTag sub) {
    covering_ribbon(mu, ka, r);  // validates
    const CoreQuotient qm = r_quotient(mu, r);
    const CoreQuotient qk = r_quotient(ka, r);
    const Int comp = changed_component(qm, qk);
    const CorrValue inner = r_corr(sub, qm.quotient[comp], qk.quotient[comp], 1);
    if (std::holds_alternative<Int>(inner)) return CorrValue(comp);
    CoreQuotient out = qm;
    out.quotient[comp] = std::get<Partition>(inner);
    return CorrValue(from_core_quotient(out));
}

Partition factored_inverse(const Partition& mu, const CorrValue& value, Int r, CorrTag sub) {
    const CoreQuotient qm = r_quotient(mu, r);
    Int comp;
    CorrValue inner(Int{0});
    if (std::holds_alternative<Int>(value)) {
        comp = std::get<Int>(value);
        if (comp < 0 || comp >= r) throw Error(Error::Kind::InvalidInput, "colour out of range");
    } else {
        covered_ribbon(mu, std::get<Partition>(value), r);  // validates
        const CoreQuotient ql = r_quotient(std::get<Partition>(value), r);
        comp = changed_component(qm, ql);
        inner = CorrValue(ql.quotient[comp]);
    }
    CoreQuotient out = qm;
    out.quotient[comp] = r_corr_inverse(sub, qm.quotient[comp], inner, 1);
    return from_core_quotient(out);
}

}  // namespace

CorrValue r_corr(CorrTag tag, const Partition& mu, const Partition& ka, Int r) {
    validate_tag_r(tag, r);
    switch (tag) {
        case CorrTag::RowY:
        case CorrTag::SW:
            return bump(mu, covering_ribbon(mu, ka, r), r, true);
        case CorrTag::ColY:
        case CorrTag::WS:
            return bump(mu, covering_ribbon(mu, ka, r), r, false);
        case CorrTag::BVG: {
            const Ribbon added = covering_ribbon(mu, ka, r);
            return bump(mu, added, r, added.height() == 0);
        }
        case CorrTag::FactoredRow:
            return factored_corr(mu, ka, r, CorrTag::RowY);
        case CorrTag::FactoredCol:
            return factored_corr(mu, ka, r, CorrTag::ColY);
    }
    throw Error(Error::Kind::Internal, "unhandled bumping rule");
}

Partition r_corr_inverse(CorrTag tag, const Partition& mu, const CorrValue& value, Int r) {
    validate_tag_r(tag, r);
    switch (tag) {
        case CorrTag::RowY:
        case CorrTag::SW:
            return unbump(mu, value, r, true);
        case CorrTag::ColY:
        case CorrTag::WS:
            return unbump(mu, value, r, false);
        case CorrTag::BVG: {
            const Int h = std::holds_alternative<Int>(value)
                              ? std::get<Int>(value)
                              : covered_ribbon(mu, std::get<Partition>(value), r).height();
            if (h < 0 || h >= r) throw Error(Error::Kind::InvalidInput, "colour out of range");
            return unbump(mu, value, r, h == 0);
        }
        case CorrTag::FactoredRow:
            return factored_inverse(mu, value, r, CorrTag::RowY);
        case CorrTag::FactoredCol:
            return factored_inverse(mu, value, r, CorrTag::ColY);
    }
    throw Error(Error::Kind::Internal, "unhandled bumping rule");
}

std::optional<Int> ColoredPermutation::colour_at(Int row, Int col) const {
    const auto it = points.find({row, col});
    if (it == points.end()) return std::nullopt;
    return it->second;
}

void ColoredPermutation::validate() const {
    if (n < 0) throw Error(Error::Kind::InvalidInput, "negative grid size");
    if (r < 1) throw Error(Error::Kind::InvalidInput, "ribbon size must be positive");
    if (static_cast<Int>(points.size()) != n)
        throw Error(Error::Kind::InvalidInput, "need exactly one point per row");
    std::vector<char> row_seen(static_cast<size_t>(n), 0);
    std::vector<char> col_seen(static_cast<size_t>(n), 0);
    for (const auto& [pos, colour] : points) {
        const auto [i, j] = pos;
        if (i < 0 || i >= n || j < 0 || j >= n)
            throw Error(Error::Kind::InvalidInput, "point outside the grid");
        if (colour < 0 || colour >= r)
            throw Error(Error::Kind::InvalidInput, "colour out of range");
        if (row_seen[static_cast<size_t>(i)]++)
            throw Error(Error::Kind::InvalidInput, "two points in one row");
        if (col_seen[static_cast<size_t>(j)]++)
            throw Error(Error::Kind::InvalidInput, "two points in one column");
    }
}

std::vector<Partition> SchenstedGrowth::P() const { return shapes.back(); }

std::vector<Partition> SchenstedGrowth::Q() const {
    std::vector<Partition> chain;
    chain.reserve(shapes.size());
    for (const auto& row : shapes) chain.push_back(row.back());
    return chain;
}

SchenstedGrowth grow_schensted(const ColoredPermutation& A, CorrTag tag, const Partition& core) {
    A.validate();
    validate_tag_r(tag, A.r);
    if (!is_r_core(core, A.r))
        throw Error(Error::Kind::InvalidInput, "base shape of the grid must be a core");

    SchenstedGrowth g;
    g.n = A.n;
    g.r = A.r;
    g.tag = tag;
    g.core = core;
    g.matrix = A;
    g.shapes.assign(static_cast<size_t>(g.n) + 1,
                    std::vector<Partition>(static_cast<size_t>(g.n) + 1, core));

    for (Int k = 0; k < g.n; ++k) {
        for (Int l = 0; l < g.n; ++l) {
            const Partition& la = g.shapes[k][l];
            const Partition& mu = g.shapes[k][l + 1];
            const Partition& nu = g.shapes[k + 1][l];
            Partition next;
            if (const auto colour = A.colour_at(k, l)) {
                if (mu != la || nu != la)
                    throw Error(Error::Kind::Internal, "matrix point at a growing cell");
                next = r_corr_inverse(tag, la, CorrValue(*colour), g.r);
            } else if (mu == la) {
                next = nu;
            } else if (nu == la) {
                next = mu;
            } else if (mu != nu) {
                // two independent ribbons were added; the union commutes
                next = apply_ribbon(nu, covering_ribbon(la, mu, g.r).head_content, g.r,
                                    RibbonDir::Add);
            } else {
                next = r_corr_inverse(tag, mu, CorrValue(la), g.r);
            }
            g.shapes[k + 1][l + 1] = std::move(next);
        }
    }
    return g;
}

SchenstedGrowth shrink_schensted(const std::vector<Partition>& P, const std::vector<Partition>& Q,
                                 CorrTag tag, Int r) {
    validate_tag_r(tag, r);
    if (P.empty() || P.size() != Q.size())
        throw Error(Error::Kind::InvalidInput, "chains must be nonempty and of equal length");
    const Int n = static_cast<Int>(P.size()) - 1;
    if (P.front() != Q.front())
        throw Error(Error::Kind::InvalidInput, "chains must start at the same shape");
    if (P.back() != Q.back())
        throw Error(Error::Kind::InvalidInput, "chains must end at the same shape");
    if (!is_r_core(P.front(), r))
        throw Error(Error::Kind::InvalidInput, "chains must start at a core");
    for (Int l = 0; l < n; ++l) {
        covering_ribbon(P[l], P[l + 1], r);
        covering_ribbon(Q[l], Q[l + 1], r);
    }

    SchenstedGrowth g;
    g.n = n;
    g.r = r;
    g.tag = tag;
    g.core = P.front();
    g.matrix.n = n;
    g.matrix.r = r;
    g.shapes.assign(static_cast<size_t>(n) + 1,
                    std::vector<Partition>(static_cast<size_t>(n) + 1, Partition{}));
    for (Int l = 0; l <= n; ++l) g.shapes[n][l] = P[l];
    for (Int k = 0; k <= n; ++k) g.shapes[k][n] = Q[k];

    for (Int k = n - 1; k >= 0; --k) {
        for (Int l = n - 1; l >= 0; --l) {
            const Partition& mu = g.shapes[k][l + 1];
            const Partition& nu = g.shapes[k + 1][l];
            const Partition& ka = g.shapes[k + 1][l + 1];
            Partition prev;
            if (ka == mu) {
                prev = nu;
            } else if (ka == nu) {
                prev = mu;
            } else if (mu != nu) {
                // undo on mu the ribbon that ka gained over nu
                prev = apply_ribbon(mu, covering_ribbon(nu, ka, r).head_content, r,
                                    RibbonDir::Remove);
            } else {
                CorrValue value = r_corr(tag, mu, ka, r);
                if (std::holds_alternative<Int>(value)) {
                    g.matrix.points[{k, l}] = std::get<Int>(value);
                    prev = mu;
                } else {
                    prev = std::get<Partition>(std::move(value));
                }
            }
            g.shapes[k][l] = std::move(prev);
        }
    }

    for (Int l = 0; l <= n; ++l)
        if (g.shapes[0][l] != g.core || g.shapes[l][0] != g.core)
            throw Error(Error::Kind::InvalidInput, "chains do not shrink back to their core");
    g.matrix.validate();
    return g;
}

Int chain_dspin(const std::vector<Partition>& chain, Int r) {
    Int total = 0;
    for (size_t i = 0; i + 1 < chain.size(); ++i)
        total += covering_ribbon(chain[i], chain[i + 1], r).height();
    return total;
}

}  // namespace ribbon
