#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ribbon/ribbons.hpp"
#include "test_util.hpp"

using namespace ribbon;

namespace {

std::vector<Int> heads(const std::vector<Ribbon>& rs) {
    std::vector<Int> out;
    for (const auto& r : rs) out.push_back(r.head_content);
    return out;
}

// Strip ribbons off in a random order until none is left.
Partition peel_to_core(std::mt19937& rng, Partition p, Int r) {
    for (;;) {
        auto rem = list_ribbons(p, r, RibbonMode::Removable);
        if (rem.empty()) return p;
        std::uniform_int_distribution<size_t> pick(0, rem.size() - 1);
        p = apply_ribbon(p, rem[pick(rng)].head_content, r, RibbonDir::Remove);
    }
}

}  // namespace

TEST_CASE("listing addable and removable ribbons") {
    Partition mu{16, 15, 15, 5, 4};
    auto add = list_ribbons(mu, 4, RibbonMode::Addable);
    auto rem = list_ribbons(mu, 4, RibbonMode::Removable);
    CHECK((heads(add) == std::vector<Int>{-5, -4, -3, -2, 3, 5, 16, 17, 19}));
    CHECK((heads(rem) == std::vector<Int>{-1, 1, 12, 13, 15}));

    // Bits strictly between the swapped pair give the height.
    CHECK((add[6].head_content == 16));
    CHECK((add[6].form == std::vector<uint8_t>{1, 0, 1}));
    CHECK(add[6].height() == 2);
    CHECK((rem[4].form == std::vector<uint8_t>{1, 1, 0}));
    CHECK((rem[2].form == std::vector<uint8_t>{0, 0, 0}));
    CHECK(rem[2].height() == 0);
    CHECK((rem[3].form == std::vector<uint8_t>{0, 0, 1}));
    CHECK(rem[3].height() == 1);
}

TEST_CASE("single squares are 1-ribbons") {
    auto add = list_ribbons(Partition{2, 1}, 1, RibbonMode::Addable);
    auto rem = list_ribbons(Partition{2, 1}, 1, RibbonMode::Removable);
    CHECK((heads(add) == std::vector<Int>{-2, 0, 2}));
    CHECK((heads(rem) == std::vector<Int>{-1, 1}));
    for (const auto& r : add) CHECK(r.height() == 0);
}

TEST_CASE("applying a ribbon") {
    Partition mu{16, 15, 15, 5, 4};
    Partition grown = apply_ribbon(mu, 16, 4, RibbonDir::Add);
    CHECK((grown == Partition{17, 17, 16, 5, 4}));
    CHECK(grown.size() == mu.size() + 4);
    CHECK((apply_ribbon(grown, 16, 4, RibbonDir::Remove) == mu));

    CHECK_THROWS_AS(apply_ribbon(Partition{14, 13, 11, 5}, 16, 4, RibbonDir::Add), Error);
    CHECK_THROWS_AS(apply_ribbon(mu, 0, 4, RibbonDir::Add), Error);
    CHECK_THROWS_AS(apply_ribbon(mu, 16, 4, RibbonDir::Remove), Error);
}

TEST_CASE("ribbon listings match ribbon moves") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        Partition p = random_partition(rng, 6, 9);
        for (Int r = 1; r <= 4; ++r) {
            for (const auto& rb : list_ribbons(p, r, RibbonMode::Addable)) {
                Partition q = apply_ribbon(p, rb.head_content, r, RibbonDir::Add);
                CHECK(q.size() == p.size() + r);
                CHECK((apply_ribbon(q, rb.head_content, r, RibbonDir::Remove) == p));
            }
            for (const auto& rb : list_ribbons(p, r, RibbonMode::Removable)) {
                Partition q = apply_ribbon(p, rb.head_content, r, RibbonDir::Remove);
                CHECK(q.size() == p.size() - r);
            }
            // There are always exactly r more addable heads than removable.
            CHECK(list_ribbons(p, r, RibbonMode::Addable).size() ==
                  list_ribbons(p, r, RibbonMode::Removable).size() + static_cast<size_t>(r));
        }
    }
}

TEST_CASE("core and quotient of a shape") {
    CoreQuotient cq = r_quotient(Partition{6, 4, 3, 3, 1}, 3);
    CHECK((cq.core == Partition{6, 4, 2, 1, 1}));
    REQUIRE(cq.quotient.size() == 3);
    CHECK((cq.quotient[0] == Partition{1}));
    CHECK(cq.quotient[1].empty());
    CHECK(cq.quotient[2].empty());
    CHECK(is_r_core(cq.core, 3));
    CHECK(!is_r_core(Partition{6, 4, 3, 3, 1}, 3));
    CHECK((from_core_quotient(cq) == Partition{6, 4, 3, 3, 1}));

    CHECK_THROWS_AS(from_core_quotient(CoreQuotient{Partition{6, 4, 3, 3, 1},
                                                    {Partition{}, Partition{}, Partition{}}, 3}),
                    Error);
}

TEST_CASE("core equals the result of peeling ribbons in any order") {
    std::mt19937 rng(21);
    for (int trial = 0; trial < 60; ++trial) {
        Partition p = random_partition(rng, 7, 10);
        for (Int r = 2; r <= 5; ++r) {
            CoreQuotient cq = r_quotient(p, r);
            CHECK((peel_to_core(rng, p, r) == cq.core));
        }
    }
}

TEST_CASE("core and quotient determine the shape") {
    std::mt19937 rng(22);
    for (int trial = 0; trial < 60; ++trial) {
        Partition p = random_partition(rng, 7, 10);
        for (Int r = 2; r <= 5; ++r) {
            CoreQuotient cq = r_quotient(p, r);
            Int quotient_total = 0;
            for (const auto& q : cq.quotient) quotient_total += q.size();
            CHECK(p.size() == cq.core.size() + r * quotient_total);
            CHECK((from_core_quotient(cq) == p));
        }
    }
}

TEST_CASE("quotient components follow single ribbon moves") {
    // Adding one r-ribbon adds one square to exactly one quotient component
    // and never touches the core.
    std::mt19937 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        Partition p = random_partition(rng, 6, 8);
        Int r = 2 + static_cast<Int>(trial % 3);
        CoreQuotient before = r_quotient(p, r);
        for (const auto& rb : list_ribbons(p, r, RibbonMode::Addable)) {
            CoreQuotient after = r_quotient(apply_ribbon(p, rb.head_content, r, RibbonDir::Add), r);
            CHECK((after.core == before.core));
            int changed = 0;
            for (Int cls = 0; cls < r; ++cls) {
                const auto& qb = before.quotient[static_cast<size_t>(cls)];
                const auto& qa = after.quotient[static_cast<size_t>(cls)];
                if (qa != qb) {
                    ++changed;
                    CHECK(qa.size() == qb.size() + 1);
                }
            }
            CHECK(changed == 1);
        }
    }
}
