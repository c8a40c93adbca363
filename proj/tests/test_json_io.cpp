#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <string>
#include <vector>

#include "doctest.h"
#include "ribbon/json_io.hpp"
#include "ribbon/knuth_growth.hpp"
#include "ribbon/partition.hpp"
#include "ribbon/ribbons.hpp"
#include "ribbon/shape_data.hpp"
#include "ribbon/strips.hpp"

using namespace ribbon;

namespace {

template <typename Fn>
Error::Kind error_kind(Fn&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind;
    }
    FAIL("expected an error");
    return Error::Kind::Internal;
}

}  // namespace

TEST_CASE("partition rendering and parsing") {
    Partition p{6, 4, 3, 3, 1};
    CHECK(json_of_partition(p) == "[6,4,3,3,1]");
    CHECK(partition_from_json("[6,4,3,3,1]") == p);
    CHECK(json_of_partition(Partition{}) == "[]");
    CHECK(partition_from_json(" [ ] ") == Partition{});
    CHECK(partition_from_json(json_of_partition(p)) == p);

    CHECK(error_kind([] { partition_from_json("[3,4]"); }) == Error::Kind::InvalidInput);
    CHECK(error_kind([] { partition_from_json("[0]"); }) == Error::Kind::InvalidInput);
    CHECK(error_kind([] { partition_from_json("[-2,1]"); }) == Error::Kind::InvalidInput);
    CHECK(error_kind([] { partition_from_json("[1.5]"); }) == Error::Kind::InvalidInput);
    CHECK(error_kind([] { partition_from_json("3,4"); }) == Error::Kind::InvalidInput);
    CHECK(error_kind([] { partition_from_json("{}"); }) == Error::Kind::InvalidInput);
    CHECK(error_kind([] { partition_from_json(""); }) == Error::Kind::InvalidInput);
}

TEST_CASE("edge sequence rendering and parsing") {
    EdgeSeq e = edge_of_partition(Partition{6, 4, 3, 3, 1});
    std::string text = json_of_edge(e);
    CHECK(edge_from_json(text) == e);
    // Keys are emitted in a fixed (alphabetical) order.
    CHECK(text.find("\"bits\"") < text.find("\"left_fill\""));
    CHECK(text.find("\"left_fill\"") < text.find("\"offset\""));
    CHECK(text.find("\"offset\"") < text.find("\"right_fill\""));

    EdgeSeq shifted = e.shifted(3);
    CHECK(edge_from_json(json_of_edge(shifted)) == shifted);

    CHECK(error_kind([] { edge_from_json("{\"offset\":0}"); }) == Error::Kind::InvalidInput);
    CHECK(error_kind([] {
              edge_from_json("{\"offset\":0,\"bits\":\"012\",\"left_fill\":1,\"right_fill\":0}");
          }) == Error::Kind::InvalidInput);
    CHECK(error_kind([] {
              edge_from_json("{\"offset\":0,\"bits\":\"01\",\"left_fill\":2,\"right_fill\":0}");
          }) == Error::Kind::InvalidInput);
}

TEST_CASE("core and quotient rendering and parsing") {
    Partition la{6, 4, 3, 3, 1};
    CoreQuotient cq = r_quotient(la, 3);
    std::string text = json_of_quotient(cq);
    CoreQuotient back = quotient_from_json(text);
    CHECK(back.core == cq.core);
    CHECK(back.quotient == cq.quotient);
    CHECK(back.r == cq.r);
    CHECK(from_core_quotient(back) == la);

    CHECK(error_kind([] { quotient_from_json("{\"core\":[],\"quotient\":[[]],\"r\":2}"); }) ==
          Error::Kind::InvalidInput);  // r and component count disagree
    CHECK(error_kind([] { quotient_from_json("{\"core\":[],\"r\":1}"); }) ==
          Error::Kind::InvalidInput);
    CHECK(error_kind([] { quotient_from_json("{\"core\":[],\"quotient\":[[]],\"r\":0}"); }) ==
          Error::Kind::InvalidInput);
}

TEST_CASE("strip report rendering") {
    auto s = strip_check(Partition{2}, Partition{4, 2}, 2, Orientation::Horizontal);
    REQUIRE(s.has_value());
    std::string text = json_of_strip(*s);
    CHECK(text.find("\"positions\"") != std::string::npos);
    CHECK(text.find("\"dspin\"") != std::string::npos);
    CHECK(text.find("\"count\":2") != std::string::npos);
}

TEST_CASE("colour vector rendering and parsing") {
    ColorVector a{{0, 2, 0, 1}};
    CHECK(json_of_color_vector(a) == "[0,2,0,1]");
    CHECK(color_vector_from_json("[0,2,0,1]") == a);
    CHECK(color_vector_from_json("[]") == ColorVector{});
    CHECK(error_kind([] { color_vector_from_json("[-1]"); }) == Error::Kind::InvalidInput);
    CHECK(error_kind([] { color_vector_from_json("{\"a\":1}"); }) == Error::Kind::InvalidInput);
}

TEST_CASE("tableau rendering and parsing") {
    RibbonTableau t;
    t.core = Partition{1};
    t.r = 2;
    t.orientation = Orientation::Horizontal;
    t.chain = {Partition{1}, Partition{1}, Partition{3}, Partition{3, 2}};
    REQUIRE_NOTHROW(t.validate());
    RibbonTableau back = tableau_from_json(json_of_tableau(t));
    CHECK(back == t);
    CHECK(back.orientation == Orientation::Horizontal);

    RibbonTableau v = t;
    v.orientation = Orientation::Vertical;
    v.chain = {Partition{1}, Partition{1, 1, 1}};
    CHECK(tableau_from_json(json_of_tableau(v)).orientation == Orientation::Vertical);

    CHECK(error_kind([] {
              tableau_from_json("{\"core\":[1],\"r\":2,\"chain\":[],\"orientation\":\"h\"}");
          }) == Error::Kind::InvalidInput);
    CHECK(error_kind([] {
              tableau_from_json("{\"core\":[1],\"r\":2,\"chain\":[[2]],\"orientation\":\"h\"}");
          }) == Error::Kind::InvalidInput);  // chain must start at the core
    CHECK(error_kind([] {
              tableau_from_json("{\"core\":[1],\"r\":2,\"chain\":[[1]],\"orientation\":\"x\"}");
          }) == Error::Kind::InvalidInput);
}

TEST_CASE("matrix rendering and parsing") {
    ColorMatrix m = {{ColorVector{{1, 0}}, ColorVector{{0, 0}}},
                     {ColorVector{{0, 1}}, ColorVector{{2, 0}}}};
    CHECK(json_of_matrix(m) == "[[[1,0],[0,0]],[[0,1],[2,0]]]");
    CHECK(matrix_from_json("[[[1,0],[0,0]],[[0,1],[2,0]]]") == m);
    CHECK(matrix_from_json("[]") == ColorMatrix{});
    CHECK(error_kind([] { matrix_from_json("[[1]]"); }) == Error::Kind::InvalidInput);
    CHECK(error_kind([] { matrix_from_json("[[[1],[-1]]]"); }) == Error::Kind::InvalidInput);
}

TEST_CASE("growth grid rendering carries its identifying data") {
    ColorMatrix a = {{ColorVector{{1}}, ColorVector{{0}}}, {ColorVector{{0}}, ColorVector{{1}}}};
    GrowResult grown = grow_knuth(a, GrowthDatum::Rsk, Partition{}, 1);
    std::string text = json_of_growth(grown.diagram);
    CHECK(text.find("\"datum\":\"rsk\"") != std::string::npos);
    CHECK(text.find("\"r\":1") != std::string::npos);
    CHECK(text.find("\"shapes\"") != std::string::npos);
    CHECK(text.find("\"entries\"") != std::string::npos);
    CHECK(matrix_from_json(json_of_matrix(grown.diagram.entries)) == grown.diagram.entries);
}

TEST_CASE("generating polynomial rendering and parsing") {
    GenPoly p;
    p.add(0, 0, 1);
    p.add(1, 0, 2);
    p.add(1, 1, 1);
    std::string text = json_of_genpoly(p);
    CHECK(text ==
          "{\"terms\":[{\"c\":1,\"x\":0,\"y\":0},{\"c\":2,\"x\":1,\"y\":0},"
          "{\"c\":1,\"x\":1,\"y\":1}],\"x_bound\":null}");
    CHECK(genpoly_from_json(text) == p);

    p.x_bound = 4;
    std::string bounded = json_of_genpoly(p);
    CHECK(bounded.find("\"x_bound\":4") != std::string::npos);
    CHECK(genpoly_from_json(bounded) == p);

    CHECK(error_kind([] { genpoly_from_json("{\"terms\":[{\"x\":-1,\"y\":0,\"c\":1}]}"); }) ==
          Error::Kind::InvalidInput);
    CHECK(error_kind([] { genpoly_from_json("{}"); }) == Error::Kind::InvalidInput);
}

TEST_CASE("report rendering") {
    CheckReport rep;
    rep.record(true, "first");
    rep.record(false, "second");
    CHECK(json_of_report(rep) == "{\"details\":[\"pass: first\",\"FAIL: second\"],\"ok\":false}");
}

TEST_CASE("burge edge trace rendering") {
    std::vector<BurgeEdgeStep> trace;
    Partition la{2}, mu{3}, nu{3};
    burge_edge_insert(la, mu, nu, 1, &trace);
    REQUIRE(!trace.empty());
    std::string text = json_of_burge_trace(trace);
    CHECK(text.front() == '[');
    CHECK(text.find("\"action\"") != std::string::npos);
    CHECK(text.find("\"a_after\"") != std::string::npos);
    CHECK(text.find("\"after\"") != std::string::npos);
    CHECK(text.find("\"k\":") != std::string::npos);
}

TEST_CASE("input kind detection") {
    CHECK(classify_json("[3,1]") == JsonKind::Partition);
    CHECK(classify_json("[]") == JsonKind::Partition);
    CHECK(classify_json("{\"offset\":0,\"bits\":\"10\",\"left_fill\":1,\"right_fill\":0}") ==
          JsonKind::Edge);
    CHECK(classify_json("{\"core\":[],\"quotient\":[[]],\"r\":1}") == JsonKind::Quotient);
    CHECK(classify_json("{\"x\":1}") == JsonKind::Other);
    CHECK(error_kind([] { classify_json("nonsense["); }) == Error::Kind::InvalidInput);
}

TEST_CASE("rendering is deterministic") {
    Partition la{4, 2, 1};
    CoreQuotient cq = r_quotient(la, 2);
    CHECK(json_of_quotient(cq) == json_of_quotient(r_quotient(la, 2)));
    EdgeSeq e = edge_of_partition(la);
    CHECK(json_of_edge(e) == json_of_edge(edge_of_partition(la)));
}
