#include "ribbon/strips.hpp"

#include <algorithm>
#include <numeric>

namespace ribbon {

std::optional<StripScan> strip_scan(const EdgeSeq& s, const EdgeSeq& t, Int r) {
    if (r < 1) throw Error(Error::Kind::InvalidInput, "strip scan needs r >= 1");
    if (s.left_fill() != t.left_fill() || s.right_fill() != t.right_fill()) return std::nullopt;
    const int lf = s.left_fill(), rf = s.right_fill();
    const Int lo = std::min(s.lo(), t.lo());
    const Int hi = std::max(s.hi(), t.hi());

    // w is computed for [lo, hi + 2r); below lo it equals the left fill.
    std::vector<uint8_t> w(static_cast<size_t>(hi + 2 * r - lo), 0);
    auto wat = [&](Int i) -> int {
        return i < lo ? lf : w[static_cast<size_t>(i - lo)];
    };

    StripScan scan;
    for (Int i = lo; i < hi + 2 * r; ++i) {
        int wr = wat(i - r);
        int tr = t.at(i - r);
        if (wr == 1 && tr == 0) {
            // Only the ribbon pattern (1,0,0,1) can cover this pair.
            if (s.at(i) != 0) return std::nullopt;
            if (i >= hi + r) return std::nullopt;  // would cascade forever
            w[static_cast<size_t>(i - lo)] = 1;
            Int h = 0;
            for (Int j = 1; j < r; ++j) h += wat(i - j);
            scan.positions.push_back(i);
            scan.heights.push_back(h);
        } else if (wr == 0 && tr == 1) {
            return std::nullopt;
        } else {
            w[static_cast<size_t>(i - lo)] = static_cast<uint8_t>(s.at(i));
        }
    }
    // Beyond the scanned range every quadruple is constant (rf,rf,rf,rf):
    // the loop above rejects any configuration that fails to stabilize.
    scan.dspin = std::accumulate(scan.heights.begin(), scan.heights.end(), Int{0});
    scan.witness = EdgeSeq(lo, std::move(w), lf, rf);
    return scan;
}

EdgeSeq strip_from_positions(const EdgeSeq& s, const std::vector<Int>& positions, Int r) {
    if (r < 1) throw Error(Error::Kind::InvalidInput, "strip replay needs r >= 1");
    if (!std::is_sorted(positions.begin(), positions.end()))
        throw Error(Error::Kind::PreconditionViolated, "positions must be ascending");
    const int lf = s.left_fill(), rf = s.right_fill();
    Int lo = s.lo(), hi = s.hi();
    for (Int p : positions) {
        lo = std::min(lo, p - r);
        hi = std::max(hi, p + 1);
    }
    // Replay the witness scan, choosing the upper sequence as it goes: a
    // requested position contributes the ribbon quadruple (1,0,0,1), every
    // other index the copy quadruple.
    std::vector<uint8_t> w(static_cast<size_t>(hi + r - lo), 0);
    std::vector<uint8_t> t(static_cast<size_t>(hi + r - lo), 0);
    auto wat = [&](Int i) -> int { return i < lo ? lf : w[static_cast<size_t>(i - lo)]; };
    size_t next = 0;
    for (Int i = lo; i < hi + r; ++i) {
        bool place = next < positions.size() && positions[next] == i;
        if (place) {
            if (wat(i - r) != 1 || s.at(i) != 0)
                throw Error(Error::Kind::PreconditionViolated,
                            "no ribbon can sit at a requested position");
            ++next;
            w[static_cast<size_t>(i - lo)] = 1;
            if (i - r >= lo) t[static_cast<size_t>(i - r - lo)] = 0;
        } else {
            w[static_cast<size_t>(i - lo)] = static_cast<uint8_t>(s.at(i));
            if (i - r >= lo) t[static_cast<size_t>(i - r - lo)] = static_cast<uint8_t>(wat(i - r));
        }
    }
    for (Int i = hi; i < hi + r; ++i)  // top slots not reached by the i-r writes
        t[static_cast<size_t>(i - lo)] = w[static_cast<size_t>(i - lo)];
    EdgeSeq result(lo, std::move(t), lf, rf);
    // The replay accepts exactly the realizable position sets; scanning back
    // re-derives them, which guards the construction end to end.
    auto back = strip_scan(s, result, r);
    if (!back || back->positions != positions)
        throw Error(Error::Kind::PreconditionViolated, "positions do not form a strip");
    return result;
}

namespace {

// Map a transposed-scan hit back to original coordinates.
Int transpose_position(Int i, Int r) { return r - 1 - i; }
Int transpose_height(Int h, Int r) { return r - 1 - h; }

}  // namespace

std::optional<RibbonStrip> strip_check(const Partition& lo, const Partition& hi, Int r,
                                       Orientation orientation) {
    const bool vertical = orientation == Orientation::Vertical;
    const Partition& slo = lo;
    const Partition& shi = hi;
    EdgeSeq es = edge_of_partition(vertical ? transpose(slo) : slo);
    EdgeSeq et = edge_of_partition(vertical ? transpose(shi) : shi);
    auto scan = strip_scan(es, et, r);
    if (!scan) return std::nullopt;

    RibbonStrip strip;
    strip.lo = slo;
    strip.hi = shi;
    strip.orientation = orientation;
    strip.r = r;
    strip.witness = scan->witness;
    if (!vertical) {
        strip.positions = scan->positions;
        strip.heights = scan->heights;
    } else {
        for (size_t idx = scan->positions.size(); idx-- > 0;) {
            strip.positions.push_back(transpose_position(scan->positions[idx], r));
            strip.heights.push_back(transpose_height(scan->heights[idx], r));
        }
    }
    strip.dspin = std::accumulate(strip.heights.begin(), strip.heights.end(), Int{0});
    return strip;
}

std::vector<Partition> standardise(const RibbonStrip& strip) {
    std::vector<Partition> chain{strip.lo};
    // Horizontal strips add ribbons by increasing head content, vertical ones
    // by decreasing; `positions` is ascending, so walk it in the right order.
    std::vector<Int> order = strip.positions;
    if (strip.orientation == Orientation::Vertical) std::reverse(order.begin(), order.end());
    Partition cur = strip.lo;
    for (Int head : order) {
        cur = apply_ribbon(cur, head, strip.r, RibbonDir::Add);
        chain.push_back(cur);
    }
    if (cur != strip.hi)
        throw Error(Error::Kind::Internal, "standardisation did not reach the upper shape");
    return chain;
}

}  // namespace ribbon
