#include "ribbon/json_io.hpp"

#include <limits>

#include "json.hpp"

namespace ribbon {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& msg) { throw Error(Error::Kind::InvalidInput, msg); }

json parse(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) bad("input is not valid JSON");
    return j;
}

Int as_int(const json& j, const std::string& what) {
    if (!j.is_number_integer()) bad(what + " must be an integer");
    return j.get<Int>();
}

std::vector<Int> as_int_array(const json& j, const std::string& what) {
    if (!j.is_array()) bad(what + " must be an array of integers");
    std::vector<Int> out;
    for (const auto& v : j) out.push_back(as_int(v, "each entry of " + what));
    return out;
}

const json& field(const json& j, const char* key) {
    if (!j.is_object()) bad("expected a JSON object");
    auto it = j.find(key);
    if (it == j.end()) bad(std::string("missing field \"") + key + "\"");
    return *it;
}

json partition_json(const Partition& p) { return json(p.parts()); }

Partition partition_of(const json& j, const std::string& what) {
    std::vector<Int> parts = as_int_array(j, what);
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0) bad(what + " must list positive parts");
        if (i > 0 && parts[i] > parts[i - 1]) bad(what + " must be weakly decreasing");
    }
    return Partition(parts);
}

json edge_json(const EdgeSeq& e) {
    return json{{"offset", e.lo()},
                {"bits", e.window_string(e.lo(), e.hi())},
                {"left_fill", e.left_fill()},
                {"right_fill", e.right_fill()}};
}

EdgeSeq edge_of(const json& j) {
    Int offset = as_int(field(j, "offset"), "\"offset\"");
    const json& bits_j = field(j, "bits");
    if (!bits_j.is_string()) bad("\"bits\" must be a 0/1 string");
    std::vector<uint8_t> bits;
    for (char c : bits_j.get<std::string>()) {
        if (c != '0' && c != '1') bad("\"bits\" must contain only 0 and 1");
        bits.push_back(static_cast<uint8_t>(c - '0'));
    }
    Int lf = as_int(field(j, "left_fill"), "\"left_fill\"");
    Int rf = as_int(field(j, "right_fill"), "\"right_fill\"");
    if ((lf != 0 && lf != 1) || (rf != 0 && rf != 1)) bad("fills must be bits");
    return EdgeSeq(offset, std::move(bits), static_cast<int>(lf), static_cast<int>(rf));
}

json color_vector_json(const ColorVector& a) { return json(a.comps); }

ColorVector color_vector_of(const json& j, const std::string& what) {
    ColorVector a;
    a.comps = as_int_array(j, what);
    for (Int c : a.comps)
        if (c < 0) bad(what + " components must be non-negative");
    return a;
}

std::string orientation_name(Orientation o) { return o == Orientation::Vertical ? "v" : "h"; }

Orientation orientation_of(const json& j) {
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        if (s == "h") return Orientation::Horizontal;
        if (s == "v") return Orientation::Vertical;
    }
    bad("\"orientation\" must be \"h\" or \"v\"");
}

json matrix_json(const ColorMatrix& entries) {
    json rows = json::array();
    for (const auto& row : entries) {
        json cells = json::array();
        for (const ColorVector& a : row) cells.push_back(color_vector_json(a));
        rows.push_back(std::move(cells));
    }
    return rows;
}

std::string dump(const json& j) { return j.dump(); }

}  // namespace

std::string json_of_partition(const Partition& p) { return dump(partition_json(p)); }

std::string json_of_edge(const EdgeSeq& e) { return dump(edge_json(e)); }

std::string json_of_quotient(const CoreQuotient& cq) {
    json q = json::array();
    for (const Partition& p : cq.quotient) q.push_back(partition_json(p));
    return dump(json{{"core", partition_json(cq.core)}, {"quotient", q}, {"r", cq.r}});
}

std::string json_of_strip(const RibbonStrip& s) {
    return dump(json{{"positions", s.positions},
                     {"heights", s.heights},
                     {"dspin", s.dspin},
                     {"count", s.count()}});
}

std::string json_of_color_vector(const ColorVector& a) { return dump(color_vector_json(a)); }

std::string json_of_tableau(const RibbonTableau& t) {
    json chain = json::array();
    for (const Partition& p : t.chain) chain.push_back(partition_json(p));
    return dump(json{{"core", partition_json(t.core)},
                     {"r", t.r},
                     {"chain", chain},
                     {"orientation", orientation_name(t.orientation)}});
}

std::string json_of_matrix(const ColorMatrix& entries) { return dump(matrix_json(entries)); }

std::string json_of_growth(const KnuthGrowth& g) {
    json shapes = json::array();
    for (const auto& row : g.shapes) {
        json cells = json::array();
        for (const Partition& p : row) cells.push_back(partition_json(p));
        shapes.push_back(std::move(cells));
    }
    return dump(json{{"datum", growth_datum_name(g.datum)},
                     {"r", g.r},
                     {"core", partition_json(g.core)},
                     {"shapes", shapes},
                     {"entries", matrix_json(g.entries)}});
}

std::string json_of_genpoly(const GenPoly& p) {
    json terms = json::array();
    for (const auto& [deg, c] : p.terms)
        terms.push_back(json{{"x", deg.first}, {"y", deg.second}, {"c", c}});
    json out{{"terms", terms}};
    if (p.x_bound)
        out["x_bound"] = *p.x_bound;
    else
        out["x_bound"] = nullptr;
    return dump(out);
}

std::string json_of_report(const CheckReport& rep) {
    return dump(json{{"ok", rep.ok}, {"details", rep.details}});
}

std::string json_of_burge_trace(const std::vector<BurgeEdgeStep>& steps) {
    auto action_name = [](BurgeEdgeStep::Action a) -> const char* {
        switch (a) {
            case BurgeEdgeStep::Action::Skip: return "skip";
            case BurgeEdgeStep::Action::Swap: return "swap";
            case BurgeEdgeStep::Action::SwapUp: return "swap-up";
            case BurgeEdgeStep::Action::SwapDown: return "swap-down";
            case BurgeEdgeStep::Action::Hold: return "hold";
        }
        return "skip";
    };
    json out = json::array();
    for (const BurgeEdgeStep& s : steps)
        out.push_back(json{{"k", s.k},
                           {"c", s.c},
                           {"action", action_name(s.action)},
                           {"a_after", s.a_after},
                           {"after", edge_json(s.after)}});
    return dump(out);
}

Partition partition_from_json(const std::string& text) {
    return partition_of(parse(text), "a partition");
}

EdgeSeq edge_from_json(const std::string& text) { return edge_of(parse(text)); }

CoreQuotient quotient_from_json(const std::string& text) {
    json j = parse(text);
    CoreQuotient cq;
    cq.core = partition_of(field(j, "core"), "\"core\"");
    cq.r = as_int(field(j, "r"), "\"r\"");
    if (cq.r < 1) bad("\"r\" must be at least 1");
    const json& q = field(j, "quotient");
    if (!q.is_array()) bad("\"quotient\" must be an array of partitions");
    for (const auto& comp : q) cq.quotient.push_back(partition_of(comp, "a quotient component"));
    if (static_cast<Int>(cq.quotient.size()) != cq.r)
        bad("\"quotient\" must have exactly r components");
    return cq;
}

ColorVector color_vector_from_json(const std::string& text) {
    return color_vector_of(parse(text), "a colour vector");
}

RibbonTableau tableau_from_json(const std::string& text) {
    json j = parse(text);
    RibbonTableau t;
    t.core = partition_of(field(j, "core"), "\"core\"");
    t.r = as_int(field(j, "r"), "\"r\"");
    const json& chain = field(j, "chain");
    if (!chain.is_array() || chain.empty()) bad("\"chain\" must be a non-empty array");
    for (const auto& p : chain) t.chain.push_back(partition_of(p, "a chain shape"));
    t.orientation = orientation_of(field(j, "orientation"));
    if (t.r < 1) bad("\"r\" must be at least 1");
    if (t.chain.front() != t.core) bad("the chain must start at the core");
    return t;
}

ColorMatrix matrix_from_json(const std::string& text) {
    json j = parse(text);
    if (!j.is_array()) bad("a matrix must be an array of rows");
    ColorMatrix out;
    for (const auto& row : j) {
        if (!row.is_array()) bad("each matrix row must be an array of cells");
        std::vector<ColorVector> cells;
        for (const auto& cell : row) cells.push_back(color_vector_of(cell, "a matrix cell"));
        out.push_back(std::move(cells));
    }
    return out;
}

GenPoly genpoly_from_json(const std::string& text) {
    json j = parse(text);
    GenPoly p;
    const json& terms = field(j, "terms");
    if (!terms.is_array()) bad("\"terms\" must be an array");
    for (const auto& t : terms) {
        Int x = as_int(field(t, "x"), "\"x\"");
        Int y = as_int(field(t, "y"), "\"y\"");
        Int c = as_int(field(t, "c"), "\"c\"");
        if (x < 0 || y < 0) bad("term degrees must be non-negative");
        p.add(x, y, c);
    }
    if (j.contains("x_bound") && !j["x_bound"].is_null())
        p.x_bound = as_int(j["x_bound"], "\"x_bound\"");
    return p;
}

JsonKind classify_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) bad("input is not valid JSON");
    if (j.is_array()) return JsonKind::Partition;
    if (j.is_object() && j.contains("bits")) return JsonKind::Edge;
    if (j.is_object() && j.contains("quotient")) return JsonKind::Quotient;
    return JsonKind::Other;
}

}  // namespace ribbon
