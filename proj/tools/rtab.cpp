// Command-line front end: conversions between shape encodings, strip
// scans, square-completion rules, growth grids, and verification suites.
// Payloads are JSON on stdin/stdout; errors go to stderr. Exit codes:
// 0 success, 1 domain or verification failure, 2 malformed input.
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "ribbon/json_io.hpp"
#include "ribbon/knuth_growth.hpp"
#include "ribbon/ribbons.hpp"
#include "ribbon/shape_data.hpp"
#include "ribbon/spin_data.hpp"
#include "ribbon/strips.hpp"
#include "ribbon/verify_suites.hpp"

using namespace ribbon;

namespace {

[[noreturn]] void usage_error(const std::string& msg) {
    throw Error(Error::Kind::InvalidInput, msg);
}

std::string read_all(std::istream& in) {
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

nlohmann::json parse_or_throw(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded()) usage_error("input is not valid JSON");
    return j;
}

// Re-serialised field of a JSON object, for handing to the typed parsers.
std::string subfield(const nlohmann::json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        usage_error(std::string("missing field \"") + key + "\"");
    return j[key].dump();
}

std::string string_field(const nlohmann::json& j, const char* key) {
    if (!j.is_object() || !j.contains(key) || !j[key].is_string())
        usage_error(std::string("field \"") + key + "\" must be a string");
    return j[key].get<std::string>();
}

Int int_field(const nlohmann::json& j, const char* key) {
    if (!j.is_object() || !j.contains(key) || !j[key].is_number_integer())
        usage_error(std::string("field \"") + key + "\" must be an integer");
    return j[key].get<Int>();
}

Orientation orientation_flag(const std::string& s) {
    return s == "v" ? Orientation::Vertical : Orientation::Horizontal;
}

BitWord word_flag(const std::string& s) {
    BitWord w;
    for (char c : s) {
        if (c != '0' && c != '1') usage_error("--w must be a string over {0,1}");
        w.push_back(c - '0');
    }
    return w;
}

// Level profile and strip head sets around one asymmetric-rule instance.
std::string asym_trace(const Partition& la, const Partition& mu, const Partition& nu,
                       const Partition& ka, Int r) {
    DeltaProfile dp = delta_profile(mu, nu, r);
    nlohmann::json delta = nlohmann::json::array();
    for (const auto& [k, v] : dp.values) delta.push_back(nlohmann::json{{"k", k}, {"v", v}});
    nlohmann::json out{{"delta", delta}, {"rises", dp.rises}, {"falls", dp.falls}};
    if (auto s = strip_check(mu, ka, r, Orientation::Vertical)) out["heads_kappa_mu"] = s->positions;
    if (auto s = strip_check(nu, ka, r, Orientation::Horizontal))
        out["heads_kappa_nu"] = s->positions;
    if (auto s = strip_check(la, mu, r, Orientation::Horizontal)) out["heads_mu_lambda"] = s->positions;
    if (auto s = strip_check(la, nu, r, Orientation::Vertical)) out["heads_nu_lambda"] = s->positions;
    return out.dump();
}

int run_convert(const std::string& to, bool have_r, Int r) {
    std::string text = read_all(std::cin);
    Partition p;
    switch (classify_json(text)) {
        case JsonKind::Partition: p = partition_from_json(text); break;
        case JsonKind::Edge: {
            EdgeSeq e = edge_from_json(text);
            if (to == "edge") {
                std::cout << json_of_edge(e) << "\n";
                return 0;
            }
            p = partition_of_edge(e);
            break;
        }
        case JsonKind::Quotient: p = from_core_quotient(quotient_from_json(text)); break;
        default:
            usage_error("input must be a partition, an edge sequence, or a core/quotient pair");
    }
    if (to == "edge") {
        std::cout << json_of_edge(edge_of_partition(p)) << "\n";
    } else if (to == "partition") {
        std::cout << json_of_partition(p) << "\n";
    } else {
        if (!have_r) usage_error("--r is required for --to quotient");
        std::cout << json_of_quotient(r_quotient(p, r)) << "\n";
    }
    return 0;
}

int run_strip(const std::string& lo_json, const std::string& hi_json, Int r,
              const std::string& orient) {
    Partition lo = partition_from_json(lo_json);
    Partition hi = partition_from_json(hi_json);
    auto s = strip_check(lo, hi, r, orientation_flag(orient));
    if (!s) {
        std::cerr << "error: " << hi.to_string() << "/" << lo.to_string() << " is not a "
                  << (orient == "v" ? "vertical" : "horizontal") << " strip of " << r
                  << "-ribbons\n";
        return 1;
    }
    std::cout << json_of_strip(*s) << "\n";
    return 0;
}

int run_datum(bool trace) {
    nlohmann::json req = parse_or_throw(read_all(std::cin));
    std::string name = string_field(req, "datum");
    auto datum = growth_datum_from_name(name);
    if (!datum) usage_error("unknown rule \"" + name + "\"");
    std::string dir = string_field(req, "dir");
    Int r = int_field(req, "r");
    Partition mu = partition_from_json(subfield(req, "mu"));
    Partition nu = partition_from_json(subfield(req, "nu"));
    if (trace && *datum != GrowthDatum::BurgeEdge && *datum != GrowthDatum::SpinAsym)
        usage_error("--trace is available for the burge-edge and spin-asym rules");

    if (dir == "extract") {
        Partition ka = partition_from_json(subfield(req, "kappa"));
        std::ostringstream out;
        if (trace && *datum == GrowthDatum::BurgeEdge) {
            if (r != 1) usage_error("burge-edge runs on single squares; r must be 1");
            std::vector<BurgeEdgeStep> steps;
            auto [a, la] = burge_edge_extract(mu, nu, ka, &steps);
            out << "{\"a\":" << json_of_color_vector(ColorVector{{a}})
                << ",\"lambda\":" << json_of_partition(la)
                << ",\"trace\":" << json_of_burge_trace(steps) << "}";
        } else {
            auto [a, la] = growth_extract(*datum, mu, nu, ka, r);
            out << "{\"a\":" << json_of_color_vector(a)
                << ",\"lambda\":" << json_of_partition(la);
            if (trace) out << ",\"trace\":" << asym_trace(la, mu, nu, ka, r);
            out << "}";
        }
        std::cout << out.str() << "\n";
        return 0;
    }
    if (dir == "insert") {
        Partition la = partition_from_json(subfield(req, "lambda"));
        ColorVector a = color_vector_from_json(subfield(req, "a"));
        std::ostringstream out;
        if (trace && *datum == GrowthDatum::BurgeEdge) {
            if (r != 1) usage_error("burge-edge runs on single squares; r must be 1");
            if (a.r() != 1) usage_error("a single-square entry must have one component");
            std::vector<BurgeEdgeStep> steps;
            Partition ka = burge_edge_insert(la, mu, nu, a.comps[0], &steps);
            out << "{\"kappa\":" << json_of_partition(ka)
                << ",\"trace\":" << json_of_burge_trace(steps) << "}";
        } else {
            Partition ka = growth_insert(*datum, la, mu, nu, a, r);
            out << "{\"kappa\":" << json_of_partition(ka);
            if (trace) out << ",\"trace\":" << asym_trace(la, mu, nu, ka, r);
            out << "}";
        }
        std::cout << out.str() << "\n";
        return 0;
    }
    usage_error("\"dir\" must be \"insert\" or \"extract\"");
}

int run_grow(const std::string& name, Int r, const std::string& core_json) {
    auto datum = growth_datum_from_name(name);
    if (!datum) usage_error("unknown rule \"" + name + "\"");
    ColorMatrix a = matrix_from_json(read_all(std::cin));
    Partition core = partition_from_json(core_json);
    GrowResult g = grow_knuth(a, *datum, core, r);
    std::cout << "{\"P\":" << json_of_tableau(g.P) << ",\"Q\":" << json_of_tableau(g.Q)
              << ",\"growth\":" << json_of_growth(g.diagram) << "}\n";
    return 0;
}

int run_shrink(const std::string& name) {
    auto datum = growth_datum_from_name(name);
    if (!datum) usage_error("unknown rule \"" + name + "\"");
    nlohmann::json req = parse_or_throw(read_all(std::cin));
    RibbonTableau p = tableau_from_json(subfield(req, "P"));
    RibbonTableau q = tableau_from_json(subfield(req, "Q"));
    ShrinkResult s = shrink_knuth(p, q, *datum);
    std::cout << "{\"entries\":" << json_of_matrix(s.entries)
              << ",\"growth\":" << json_of_growth(s.diagram) << "}\n";
    return 0;
}

struct VerifyParams {
    std::string suite;
    std::string w;
    std::string datum = "rsk";
    std::string core = "[]";
    Int r = 1;
    Int bound = 4;
    Int deg = 3;
    Int n_vars = 2;
    Int m_vars = 2;
    Int n = 3;
    Int box = 6;
    Int r_max = 3;
    Int w_max = 12;
    Int jobs = 1;
};

int run_verify(const VerifyParams& vp) {
    Partition core = partition_from_json(vp.core);
    CheckReport rep;
    if (vp.suite == "claims") {
        if (vp.w.empty()) usage_error("--w is required for the claims suite");
        rep = suite_claims(word_flag(vp.w), vp.r, vp.bound);
    } else if (vp.suite == "cauchy") {
        auto datum = growth_datum_from_name(vp.datum);
        if (!datum) usage_error("unknown rule \"" + vp.datum + "\"");
        rep = suite_cauchy(*datum, vp.r, core, vp.n_vars, vp.m_vars, vp.deg);
    } else if (vp.suite == "qcauchy") {
        rep = suite_qcauchy(vp.r, core, vp.n_vars, vp.m_vars, vp.deg);
    } else if (vp.suite == "asym-cauchy") {
        rep = suite_asym_cauchy(vp.r, core, vp.n_vars, vp.m_vars, vp.deg);
    } else if (vp.suite == "schensted-count") {
        rep = suite_schensted(vp.r, core, vp.n);
    } else {
        rep = suite_properties(vp.box, vp.r_max, vp.w_max, vp.jobs);
    }
    std::cout << json_of_report(rep) << "\n";
    return rep.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact calculator and verifier for ribbon strip correspondences"};
    app.require_subcommand(1);

    auto* convert = app.add_subcommand(
        "convert", "read a shape (partition, edge sequence, or core/quotient JSON) from stdin "
                   "and convert it");
    std::string conv_to;
    Int conv_r = 0;
    convert->add_option("--to", conv_to, "target encoding")
        ->required()
        ->check(CLI::IsMember({"edge", "partition", "quotient"}));
    auto* conv_r_opt = convert->add_option("--r", conv_r, "ribbon size for --to quotient");

    auto* strip = app.add_subcommand("strip", "scan a skew pair of partitions as a ribbon strip");
    std::string strip_lo, strip_hi, strip_orient = "h";
    Int strip_r = 1;
    strip->add_option("--lo", strip_lo, "inner shape (JSON partition)")->required();
    strip->add_option("--hi", strip_hi, "outer shape (JSON partition)")->required();
    strip->add_option("--r", strip_r, "ribbon size")->required();
    strip->add_option("--orientation", strip_orient, "strip orientation")
        ->check(CLI::IsMember({"h", "v"}));

    auto* datum = app.add_subcommand(
        "datum", "apply one square-completion rule to a request read from stdin");
    bool datum_trace = false;
    datum->add_flag("--trace", datum_trace, "include the per-index action log");

    auto* grow = app.add_subcommand(
        "grow", "fill a growth grid from a colour matrix read from stdin");
    std::string grow_datum, grow_core = "[]";
    Int grow_r = 1;
    grow->add_option("--datum", grow_datum, "square-completion rule")->required();
    grow->add_option("--r", grow_r, "ribbon size");
    grow->add_option("--core", grow_core, "base shape (JSON partition)");

    auto* shrink = app.add_subcommand(
        "shrink", "recover the colour matrix from the two border chains read from stdin");
    std::string shrink_datum;
    shrink->add_option("--datum", shrink_datum, "square-completion rule")->required();

    auto* verify = app.add_subcommand("verify", "run a verification suite and print its report");
    VerifyParams vp;
    verify->add_option("--suite", vp.suite, "suite name")
        ->required()
        ->check(CLI::IsMember(
            {"claims", "cauchy", "qcauchy", "asym-cauchy", "schensted-count", "properties"}));
    verify->add_option("--w", vp.w, "word over {0,1} (claims)");
    verify->add_option("--r", vp.r, "ribbon size");
    verify->add_option("--bound", vp.bound, "ribbon-count bound (claims)");
    verify->add_option("--datum", vp.datum, "square-completion rule (cauchy)");
    verify->add_option("--core", vp.core, "base shape (JSON partition)");
    verify->add_option("--deg", vp.deg, "total degree bound (cauchy, qcauchy, asym-cauchy)");
    verify->add_option("--nvars", vp.n_vars, "row variables (cauchy, qcauchy, asym-cauchy)");
    verify->add_option("--mvars", vp.m_vars, "column variables (cauchy, qcauchy, asym-cauchy)");
    verify->add_option("--n", vp.n, "matrix size (schensted-count)");
    verify->add_option("--box", vp.box, "box side (properties)");
    verify->add_option("--rmax", vp.r_max, "largest ribbon size (properties)");
    verify->add_option("--wmax", vp.w_max, "largest word length (properties)");
    verify->add_option("--jobs", vp.jobs, "worker threads for suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (convert->parsed()) return run_convert(conv_to, conv_r_opt->count() > 0, conv_r);
        if (strip->parsed()) return run_strip(strip_lo, strip_hi, strip_r, strip_orient);
        if (datum->parsed()) return run_datum(datum_trace);
        if (grow->parsed()) return run_grow(grow_datum, grow_r, grow_core);
        if (shrink->parsed()) return run_shrink(shrink_datum);
        if (verify->parsed()) return run_verify(vp);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.kind == Error::Kind::InvalidInput ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
