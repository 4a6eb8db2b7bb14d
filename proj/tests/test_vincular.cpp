#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "permdes/matching.hpp"
#include "permdes/pattern.hpp"
#include "permdes/perm.hpp"
#include "permdes/vincular.hpp"

using namespace permdes;

namespace {

const DescentMatching& paper_matching() {
    static const DescentMatching m = make_matching({2, 5, 8, 9}, {1, 2, 3, 7});
    return m;
}

}  // namespace

TEST_CASE("signature") {
    CHECK(signature(9, paper_matching()) == std::vector<int>{1, 1, 2, 3, 2, 2, 2, 2, 1});
    CHECK(signature(4, make_matching({}, {})) == std::vector<int>{1, 1, 1, 1});
    CHECK(signature(3, make_matching({3}, {1})) == std::vector<int>{1, 2, 1});
    CHECK_THROWS_AS(signature(2, make_matching({3}, {1})), std::invalid_argument);
    // boundary law: sg(1)=1 and sg(i)=1 for i >= max(T); positivity
    for (int n = 0; n <= 7; ++n) {
        for (const DescentMatching& m : all_matchings(n)) {
            const std::vector<int> h = signature(n, m);
            for (int i = 1; i <= n; ++i) {
                CHECK(h[static_cast<size_t>(i) - 1] >= 1);
                if (i == 1 || i >= m.max_top())
                    CHECK(h[static_cast<size_t>(i) - 1] == 1);
            }
        }
    }
}

TEST_CASE("motzkin word and heights") {
    using MS = MotzkinStep;
    CHECK(motzkin_word(9, paper_matching()) ==
          std::vector<MS>{MS::Up, MS::LevelSub, MS::Up, MS::LevelStar, MS::Down, MS::LevelStar,
                          MS::Up, MS::Down, MS::Down});
    CHECK(motzkin_word(3, make_matching({}, {})) ==
          std::vector<MS>{MS::LevelStar, MS::LevelStar, MS::LevelStar});
    CHECK(motzkin_word(3, make_matching({3}, {1})) ==
          std::vector<MS>{MS::Up, MS::LevelStar, MS::Down});
    // height rule reproduces the signature for every matching
    for (int n = 0; n <= 8; ++n)
        for (const DescentMatching& m : all_matchings(n))
            CHECK(heights_from_word(motzkin_word(n, m)) == signature(n, m));
}

TEST_CASE("rhs_product and lhs_brute") {
    const DistPolynomial rhs = rhs_product(9, paper_matching());
    const int expect[] = {1, 6, 16, 25, 25, 16, 6, 1};
    for (int a = 7; a >= 0; --a) CHECK(rhs.coeff(a, 7 - a) == expect[7 - a]);
    CHECK(rhs.to_string() ==
          "p^7 + 6 p^6 q + 16 p^5 q^2 + 25 p^4 q^3 + 25 p^3 q^4 + 16 p^2 q^5 + 6 p q^6 + q^7");
    CHECK(rhs_product(5, make_matching({}, {})).to_string() == "1");
    CHECK(rhs_product(3, make_matching({3}, {1})).to_string() == "p + q");
    CHECK(lhs_brute(3, make_matching({}, {})).to_string() == "1");
    CHECK(lhs_brute(3, make_matching({3}, {1})).to_string() == "p + q");
    CHECK(lhs_brute(9, paper_matching()) == rhs);
    CHECK_THROWS_AS(lhs_brute(10, make_matching({}, {}), 9), std::invalid_argument);
    // symbolic identity for every realizable matching, small n
    for (int n = 0; n <= 7; ++n)
        for (const DescentMatching& m : all_matchings(n))
            CHECK(lhs_brute(n, m) == rhs_product(n, m));
}

TEST_CASE("multivariate identity") {
    CHECK(multivariate_identity_check(5, make_matching({3, 5}, {1, 2}), 0, 7));
    CHECK(multivariate_identity_check(9, paper_matching(), 5, 12345));
    for (int n = 0; n <= 6; ++n)
        for (const DescentMatching& m : all_matchings(n))
            CHECK(multivariate_identity_check(n, m, 3, 99));
    // mutated signature must be caught
    const DescentMatching m5 = make_matching({3, 5}, {1, 2});
    std::vector<int> bad = signature(5, m5);
    bad[2] += 1;
    CHECK_FALSE(multivariate_evaluation_agrees(5, m5, bad, 5, 7));
}

TEST_CASE("lemma_sum_check") {
    const Permutation sigma = parse_permutation("534978216");
    CHECK(lemma_sum_check(sigma, 4));
    for_each_permutation(5, [&](const Permutation& s) { CHECK(lemma_sum_check(s, 1)); });
    for (int n = 0; n <= 7; ++n)
        for_each_permutation(n, [&](const Permutation& s) {
            for (int i = 1; i <= n; ++i) CHECK(lemma_sum_check(s, i));
        });
    CHECK_THROWS_AS(lemma_sum_check(sigma, 0), std::invalid_argument);
}

TEST_CASE("fv_decode worked examples") {
    CHECK(fv_decode(9, paper_matching(), {1, 1, 1, 2, 1, 2, 1, 2, 1}) ==
          parse_permutation("534978216"));
    CHECK(fv_decode(9, paper_matching(), std::vector<int>(9, 1)) ==
          parse_permutation("453687921"));
    CHECK(fv_decode(9, paper_matching(), signature(9, paper_matching())) ==
          parse_permutation("921534687"));
    CHECK_THROWS_AS(fv_decode(9, paper_matching(), {1, 1, 1, 4, 1, 2, 1, 2, 1}),
                    std::invalid_argument);
}

TEST_CASE("fv codec round trips and weight law") {
    CHECK(fv_encode(make_permutation({1})) ==
          std::make_pair(make_matching({}, {}), std::vector<int>{1}));
    for (int n = 0; n <= 7; ++n) {
        for_each_permutation(n, [&](const Permutation& s) {
            const auto [m, c] = fv_encode(s);
            CHECK(m == matching_of(s));
            const std::vector<int> h = signature(n, m);
            for (int i = 1; i <= n; ++i) {
                CHECK(c[static_cast<size_t>(i) - 1] >= 1);
                CHECK(c[static_cast<size_t>(i) - 1] <= h[static_cast<size_t>(i) - 1]);
                CHECK(count_vincular(s, VincularKind::TwoThen31, i) ==
                      h[static_cast<size_t>(i) - 1] - c[static_cast<size_t>(i) - 1]);
                CHECK(count_vincular(s, VincularKind::ThirtyOneThen2, i) ==
                      c[static_cast<size_t>(i) - 1] - 1);
            }
            CHECK(fv_decode(n, m, c) == s);
        });
    }
}

TEST_CASE("fv_decode exhausts S_n over all label tuples") {
    for (int n = 0; n <= 6; ++n) {
        std::set<Permutation> images;
        long long tuples = 0;
        for (const DescentMatching& m : all_matchings(n)) {
            const std::vector<int> h = signature(n, m);
            std::vector<int> c(static_cast<size_t>(n), 1);
            for (;;) {
                ++tuples;
                images.insert(fv_decode(n, m, c));
                int i = n - 1;
                while (i >= 0 && c[static_cast<size_t>(i)] == h[static_cast<size_t>(i)]) {
                    c[static_cast<size_t>(i)] = 1;
                    --i;
                }
                if (i < 0) break;
                ++c[static_cast<size_t>(i)];
            }
        }
        long long fact = 1;
        for (int i = 2; i <= n; ++i) fact *= i;
        CHECK(tuples == fact);
        CHECK(static_cast<long long>(images.size()) == fact);
    }
}

TEST_CASE("history formatting") {
    const LaguerreHistory hist =
        make_history(9, paper_matching(), {1, 1, 1, 2, 1, 2, 1, 2, 1});
    CHECK(hist.h == signature(9, paper_matching()));
    const std::string text = format_history(hist);
    CHECK(text == "w=u,l_,u,l*,d,l*,u,d,d;h=1,1,2,3,2,2,2,2,1;c=1,1,1,2,1,2,1,2,1");
    CHECK(parse_history(text) == hist);
    const LaguerreHistory one = make_history(1, make_matching({}, {}), {1});
    CHECK(format_history(one) == "w=l*;h=1;c=1");
    CHECK_THROWS_AS(parse_history("w=q;h=1;c=1"), std::invalid_argument);
}
