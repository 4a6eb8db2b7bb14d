#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "permdes/matching.hpp"
#include "permdes/pattern.hpp"
#include "permdes/perm.hpp"

using namespace permdes;

namespace {

const DescentMatching& paper_matching() {
    static const DescentMatching m = make_matching({2, 5, 8, 9}, {1, 2, 3, 7});
    return m;
}

}  // namespace

TEST_CASE("matching validation") {
    CHECK(paper_matching().size() == 4);
    CHECK(make_matching({}, {}).size() == 0);
    CHECK_THROWS_AS(make_matching({2, 3}, {1, 4}), std::invalid_argument);
    CHECK_THROWS_AS(make_matching({2}, {1, 3}), std::invalid_argument);
    CHECK_THROWS_AS(make_matching({2, 2}, {1, 1}), std::invalid_argument);
    // error message names the violated pair
    try {
        make_matching({2, 3}, {1, 4});
        CHECK(false);
    } catch (const std::invalid_argument& e) {
        const std::string msg = e.what();
        CHECK(msg.find("3") != std::string::npos);
        CHECK(msg.find("4") != std::string::npos);
    }
}

TEST_CASE("matching_of") {
    CHECK(matching_of(parse_permutation("453687921")) == paper_matching());
    CHECK(matching_of(make_permutation({1, 2, 3, 4})) == make_matching({}, {}));
    CHECK(matching_of(make_permutation({3, 2, 1})) == make_matching({2, 3}, {1, 2}));
}

TEST_CASE("realize_canonical") {
    CHECK(realize_canonical(make_matching({}, {}), 4) == make_permutation({1, 2, 3, 4}));
    CHECK(realize_canonical(make_matching({3}, {1}), 3) == make_permutation({2, 3, 1}));
    CHECK(matching_of(realize_canonical(paper_matching(), 9)) == paper_matching());
    CHECK_THROWS_AS(realize_canonical(make_matching({3}, {1}), 2), std::invalid_argument);
    // both run orders realize the matching
    for (int n = 0; n <= 7; ++n) {
        for (const DescentMatching& m : all_matchings(n)) {
            CHECK(matching_of(realize_canonical(m, n, RunOrder::ByRunTop)) == m);
            CHECK(matching_of(realize_canonical(m, n, RunOrder::ByRunBottom)) == m);
        }
    }
}

TEST_CASE("realize_312 and realize_231 reproduce the worked pair") {
    CHECK(realize_312(paper_matching(), 9) == parse_permutation("453687921"));
    CHECK(realize_231(paper_matching(), 9) == parse_permutation("921534687"));
    CHECK(realize_312(make_matching({}, {}), 3) == make_permutation({1, 2, 3}));
    CHECK(realize_231(make_matching({}, {}), 3) == make_permutation({1, 2, 3}));
    CHECK(realize_312(make_matching({3}, {1}), 3) == make_permutation({2, 3, 1}));
    // ({3},{1}) in Av_3(231): scan for the unique witness
    std::vector<Permutation> hits;
    for (const Permutation& s : avoiders(3, make_permutation({2, 3, 1})))
        if (matching_of(s) == make_matching({3}, {1})) hits.push_back(s);
    REQUIRE(hits.size() == 1);
    CHECK(realize_231(make_matching({3}, {1}), 3) == hits[0]);
}

TEST_CASE("uniqueness of the greedy realizations") {
    const Permutation p312({3, 1, 2}), p231({2, 3, 1});
    for (int n = 0; n <= 7; ++n) {
        std::map<DescentMatching, std::vector<Permutation>> by312, by231;
        for (const Permutation& s : avoiders(n, p312)) by312[matching_of(s)].push_back(s);
        for (const Permutation& s : avoiders(n, p231)) by231[matching_of(s)].push_back(s);
        for (const DescentMatching& m : all_matchings(n)) {
            REQUIRE(by312.count(m) == 1);
            REQUIRE(by231.count(m) == 1);
            REQUIRE(by312[m].size() == 1);
            REQUIRE(by231[m].size() == 1);
            CHECK(by312[m][0] == realize_312(m, n));
            CHECK(by231[m][0] == realize_231(m, n));
        }
        CHECK(by312.size() == all_matchings(n).size());
        CHECK(by231.size() == all_matchings(n).size());
    }
}

TEST_CASE("realizability characterization") {
    for (int n = 0; n <= 7; ++n) {
        std::set<DescentMatching> realized;
        for_each_permutation(n, [&](const Permutation& s) { realized.insert(matching_of(s)); });
        const std::vector<DescentMatching> valid = all_matchings(n);
        CHECK(std::vector<DescentMatching>(realized.begin(), realized.end()) == valid);
    }
}

TEST_CASE("complement laws on the greedy outputs") {
    const Permutation p312({3, 1, 2}), p231({2, 3, 1});
    for (int n = 0; n <= 8; ++n) {
        for (const Permutation& s : avoiders(n, p312)) {
            const StatProfile p = stat_profile(s);
            std::vector<int> comp;
            for (int v = 1; v <= n; ++v)
                if (!std::binary_search(p.desbot.begin(), p.desbot.end(), v)) comp.push_back(v);
            CHECK(comp == p.lrmax);
        }
        for (const Permutation& s : avoiders(n, p231)) {
            const StatProfile p = stat_profile(s);
            std::vector<int> comp;
            for (int v = 1; v <= n; ++v)
                if (!std::binary_search(p.destop.begin(), p.destop.end(), v)) comp.push_back(v);
            CHECK(comp == p.rlmin);
        }
    }
}

TEST_CASE("bijection_231_312") {
    CHECK(bijection_231_312(parse_permutation("921534687"), BijectionDirection::To312) ==
          parse_permutation("453687921"));
    CHECK(bijection_231_312(make_permutation({1, 2, 3}), BijectionDirection::To312) ==
          make_permutation({1, 2, 3}));
    CHECK_THROWS_AS(bijection_231_312(make_permutation({3, 1, 2}), BijectionDirection::To231),
                    std::invalid_argument);
    CHECK_THROWS_AS(bijection_231_312(make_permutation({2, 3, 1}), BijectionDirection::To312),
                    std::invalid_argument);
    for (int n = 0; n <= 7; ++n) {
        std::set<Permutation> images;
        for (const Permutation& s : avoiders(n, make_permutation({2, 3, 1}))) {
            const Permutation y = bijection_231_312(s, BijectionDirection::To312);
            CHECK_FALSE(contains(y, make_permutation({3, 1, 2})));
            CHECK(matching_of(y) == matching_of(s));
            CHECK(bijection_231_312(y, BijectionDirection::To231) == s);
            images.insert(y);
        }
        CHECK(images.size() == avoiders(n, make_permutation({3, 1, 2})).size());
    }
}

TEST_CASE("matching text format") {
    CHECK(format_matching(paper_matching()) == "T=2,5,8,9;B=1,2,3,7");
    CHECK(format_matching(make_matching({}, {})) == "T=;B=");
    CHECK(parse_matching("T=2,5,8,9;B=1,2,3,7") == paper_matching());
    CHECK(parse_matching("T=;B=") == make_matching({}, {}));
    CHECK_THROWS_AS(parse_matching("T=2;B=3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_matching("nonsense"), std::invalid_argument);
}

TEST_CASE("all_matchings") {
    CHECK(all_matchings(0) == std::vector<DescentMatching>{make_matching({}, {})});
    // sorted, unique, and all valid with max top <= n
    for (int n = 0; n <= 7; ++n) {
        const std::vector<DescentMatching> v = all_matchings(n);
        CHECK(std::is_sorted(v.begin(), v.end()));
        CHECK(std::adjacent_find(v.begin(), v.end()) == v.end());
        for (const DescentMatching& m : v) {
            CHECK(m.max_top() <= n);
            CHECK_NOTHROW(make_matching(m.tops, m.bottoms));
        }
    }
}
