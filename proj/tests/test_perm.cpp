#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "permdes/pattern.hpp"
#include "permdes/perm.hpp"

using namespace permdes;

TEST_CASE("construction validates") {
    CHECK(make_permutation({}).size() == 0);
    CHECK(make_permutation({4, 5, 3, 6, 8, 7, 9, 2, 1}).size() == 9);
    CHECK_THROWS_AS(make_permutation({1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(make_permutation({0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(make_permutation({1, 3}), std::invalid_argument);
}

TEST_CASE("symmetries") {
    CHECK(symmetry(Permutation(), Symmetry::ReverseComplement) == Permutation());
    CHECK(symmetry(make_permutation({2, 3, 1}), Symmetry::Inverse) == make_permutation({3, 1, 2}));
    CHECK(symmetry(make_permutation({2, 3, 1}), Symmetry::ReverseComplement) ==
          make_permutation({3, 1, 2}));
    // involutions and commutation, exhaustively for small n
    for (int n = 0; n <= 6; ++n) {
        for_each_permutation(n, [&](const Permutation& s) {
            CHECK(symmetry(symmetry(s, Symmetry::Reverse), Symmetry::Reverse) == s);
            CHECK(symmetry(symmetry(s, Symmetry::Complement), Symmetry::Complement) == s);
            CHECK(symmetry(symmetry(s, Symmetry::Inverse), Symmetry::Inverse) == s);
            CHECK(symmetry(symmetry(s, Symmetry::Reverse), Symmetry::Complement) ==
                  symmetry(symmetry(s, Symmetry::Complement), Symmetry::Reverse));
            CHECK(symmetry(symmetry(s, Symmetry::Reverse), Symmetry::Complement) ==
                  symmetry(s, Symmetry::ReverseComplement));
        });
    }
}

TEST_CASE("sums and inflation") {
    const Permutation one({1});
    const Permutation twelve({1, 2});
    CHECK(direct_sum(one, one) == twelve);
    CHECK(skew_sum(direct_sum(one, one), one) == make_permutation({2, 3, 1}));
    CHECK(skew_sum(twelve, one) == make_permutation({2, 3, 1}));
    CHECK(direct_sum(make_permutation({3, 1, 2}), Permutation()) == make_permutation({3, 1, 2}));

    const Permutation twentyone({2, 1});
    CHECK(inflate(twentyone, {twelve, one}) == make_permutation({2, 3, 1}));
    CHECK(inflate(twentyone, {one, twelve}) == make_permutation({3, 1, 2}));
    CHECK(inflate(one, {make_permutation({2, 3, 1})}) == make_permutation({2, 3, 1}));
    CHECK_THROWS_AS(inflate(twentyone, {one}), std::invalid_argument);
    CHECK_THROWS_AS(inflate(twentyone, {one, Permutation()}), std::invalid_argument);
    // inflate generalizes the sums
    for (int a = 0; a <= 4; ++a) {
        for_each_permutation(a, [&](const Permutation& s) {
            for_each_permutation(4 - a, [&](const Permutation& t) {
                if (s.empty() || t.empty()) return;
                CHECK(inflate(twentyone, {s, t}) == skew_sum(s, t));
                CHECK(inflate(twelve, {s, t}) == direct_sum(s, t));
            });
        });
    }
}

TEST_CASE("statistic sets") {
    const StatProfile p321 = stat_profile(make_permutation({3, 2, 1}));
    CHECK(p321.destop == std::vector<int>{2, 3});
    CHECK(p321.desbot == std::vector<int>{1, 2});

    const StatProfile ps = stat_profile(make_permutation({4, 5, 3, 6, 8, 7, 9, 2, 1}));
    CHECK(ps.destop == std::vector<int>{2, 5, 8, 9});
    CHECK(ps.desbot == std::vector<int>{1, 2, 3, 7});
    CHECK(ps.lrmax == std::vector<int>{4, 5, 6, 8, 9});

    const StatProfile pp = stat_profile(make_permutation({9, 2, 1, 5, 3, 4, 6, 8, 7}));
    CHECK(pp.rlmin == std::vector<int>{1, 3, 4, 6, 7});

    CHECK(stat_profile(Permutation()).des.empty());
    CHECK(stat_profile(make_permutation({1})).destop.empty());
}

TEST_CASE("partition laws hold exhaustively") {
    for (int n = 0; n <= 7; ++n) {
        for_each_permutation(n, [&](const Permutation& s) {
            const StatProfile p = stat_profile(s);
            // des and asc partition [1, n-1]
            std::vector<int> pos(p.des);
            pos.insert(pos.end(), p.asc.begin(), p.asc.end());
            std::sort(pos.begin(), pos.end());
            std::vector<int> all_pos;
            for (int i = 1; i < n; ++i) all_pos.push_back(i);
            CHECK(pos == all_pos);
            // destop ∪ ascbot = [n] \ {last}; desbot ∪ asctop = [n] \ {first}
            std::vector<int> tops(p.destop);
            tops.insert(tops.end(), p.ascbot.begin(), p.ascbot.end());
            std::sort(tops.begin(), tops.end());
            std::vector<int> want;
            for (int v = 1; v <= n; ++v)
                if (n == 0 || v != s.at(n)) want.push_back(v);
            CHECK(tops == want);
            std::vector<int> bots(p.desbot);
            bots.insert(bots.end(), p.asctop.begin(), p.asctop.end());
            std::sort(bots.begin(), bots.end());
            want.clear();
            for (int v = 1; v <= n; ++v)
                if (n == 0 || v != s.at(1)) want.push_back(v);
            CHECK(bots == want);
            // rc-duality on destop/desbot
            const StatProfile prc = stat_profile(symmetry(s, Symmetry::ReverseComplement));
            std::vector<int> mirrored;
            for (int v : p.desbot) mirrored.push_back(n + 1 - v);
            std::sort(mirrored.begin(), mirrored.end());
            CHECK(prc.destop == mirrored);
        });
    }
}

TEST_CASE("flatten") {
    CHECK(flatten({5, 3, 9}) == make_permutation({2, 1, 3}));
    CHECK(flatten({}) == Permutation());
    CHECK(flatten({7}) == make_permutation({1}));
}

TEST_CASE("text round trip") {
    CHECK(parse_permutation("4,5,3,6,8,7,9,2,1") ==
          make_permutation({4, 5, 3, 6, 8, 7, 9, 2, 1}));
    CHECK(parse_permutation("453687921") == make_permutation({4, 5, 3, 6, 8, 7, 9, 2, 1}));
    CHECK(parse_permutation("") == Permutation());
    CHECK(format_permutation(Permutation()) == "");
    CHECK(format_permutation(make_permutation({2, 3, 1})) == "2,3,1");
    CHECK(parse_permutation(format_permutation(make_permutation({2, 3, 1}))) ==
          make_permutation({2, 3, 1}));
    CHECK_THROWS_AS(parse_permutation("1,,2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_permutation("122"), std::invalid_argument);
}
