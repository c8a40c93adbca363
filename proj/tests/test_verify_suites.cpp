#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <string>

#include "doctest.h"
#include "ribbon/verify_suites.hpp"

using namespace ribbon;

namespace {

BitWord bits(const std::string& s) {
    BitWord out;
    for (char c : s) out.push_back(c - '0');
    return out;
}

bool all_pass(const CheckReport& rep) {
    if (!rep.ok) return false;
    for (const auto& d : rep.details)
        if (d.rfind("pass: ", 0) != 0) return false;
    return true;
}

}  // namespace

TEST_CASE("claims suite wraps the per-word checks") {
    CheckReport rep = suite_claims(bits("0100"), 1, 4);
    CHECK(all_pass(rep));
    CHECK(rep.details.size() == 4);
}

TEST_CASE("product suite runs for a chosen rule") {
    CHECK(all_pass(suite_cauchy(GrowthDatum::Rsk, 1, Partition{}, 2, 2, 3)));
    CHECK(all_pass(suite_cauchy(GrowthDatum::FactoredBurge, 2, Partition{1}, 2, 2, 2)));
}

TEST_CASE("spin-refined suites pair commutation with the product") {
    CheckReport q = suite_qcauchy(2, Partition{}, 2, 2, 2);
    CHECK(all_pass(q));
    CHECK(q.details.size() == 2);
    CHECK(all_pass(suite_asym_cauchy(2, Partition{}, 2, 2, 2)));
}

TEST_CASE("counting suite") { CHECK(all_pass(suite_schensted(2, Partition{}, 2))); }

TEST_CASE("property sweep at a small scale") {
    CheckReport rep = suite_properties(4, 2, 6, 1);
    REQUIRE(rep.details.size() == 14);  // 7 + 4 rule cases, two cover lines, one word line
    CHECK(all_pass(rep));
    CHECK(rep.details[0].find("rsk r=1") != std::string::npos);
    CHECK(rep.details[6].find("spin-asym r=1") != std::string::npos);
    CHECK(rep.details[10].find("spin-asym r=2") != std::string::npos);
    CHECK(rep.details[11].find("cover reduction") != std::string::npos);
    CHECK(rep.details[13].find("placement recursion") != std::string::npos);
}

TEST_CASE("property sweep does not depend on the thread count") {
    CheckReport a = suite_properties(3, 2, 4, 1);
    CheckReport b = suite_properties(3, 2, 4, 3);
    CHECK(a.ok == b.ok);
    CHECK(a.details == b.details);
}

TEST_CASE("property sweep validates its bounds") {
    CHECK_THROWS_AS(suite_properties(-1, 2, 4, 1), Error);
    CHECK_THROWS_AS(suite_properties(3, 0, 4, 1), Error);
    CHECK_THROWS_AS(suite_properties(3, 2, -1, 1), Error);
}
