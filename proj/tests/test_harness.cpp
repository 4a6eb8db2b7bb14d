#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <string>

#include "permdes/harness.hpp"
#include "permdes/pattern.hpp"
#include "permdes/perm.hpp"

using namespace permdes;

TEST_CASE("stat names round trip") {
    for (Stat s : {Stat::Des, Stat::Destop, Stat::Desbot, Stat::Asctop, Stat::Ascbot, Stat::Peak,
                   Stat::Valley, Stat::LRmax, Stat::LRmin, Stat::RLmax, Stat::RLmin})
        CHECK(stat_from_name(stat_name(s)) == s);
    CHECK_THROWS_AS(stat_from_name("bogus"), std::invalid_argument);
    CHECK_THROWS_AS(make_selector({}), std::invalid_argument);
    CHECK_THROWS_AS(make_selector({Stat::Des, Stat::Des}), std::invalid_argument);
}

TEST_CASE("distribution basics") {
    const StatSelector destop = make_selector({Stat::Destop});
    const Distribution d = distribution(make_permutation({1, 3, 2}), destop, 3);
    CHECK(d.total() == 5);
    CHECK(d.counts.at({{}}) == 1);
    CHECK(d.counts.at({{2}}) == 1);
    CHECK(d.counts.at({{3}}) == 2);
    CHECK(d.counts.at({{2, 3}}) == 1);

    const Distribution empty_case = distribution(make_permutation({1, 2, 3}), destop, 0);
    CHECK(empty_case.total() == 1);
    CHECK(empty_case.counts.begin()->first == Fingerprint{{}});

    const StatSelector pair = make_selector({Stat::Destop, Stat::Desbot});
    CHECK(distribution(make_permutation({2, 3, 1}), pair, 8) ==
          distribution(make_permutation({3, 1, 2}), pair, 8));
}

TEST_CASE("parallel distribution matches sequential") {
    const StatSelector sel = make_selector({Stat::Destop, Stat::LRmax});
    for (const std::string& pat : {"132", "2413"}) {
        for (int n = 0; n <= 8; ++n) {
            const Distribution seq = distribution(parse_permutation(pat), sel, n, 1);
            const Distribution par = distribution(parse_permutation(pat), sel, n, 4);
            CHECK(seq == par);
        }
    }
}

TEST_CASE("classify") {
    std::vector<Permutation> s3;
    for_each_permutation(3, [&](const Permutation& p) { s3.push_back(p); });
    const auto blocks = classify(s3, make_selector({Stat::Destop}), 7);
    // {132, 231, 312} together, everything else alone
    REQUIRE(blocks.size() == 4);
    std::vector<Permutation> expect = {parse_permutation("132"), parse_permutation("231"),
                                       parse_permutation("312")};
    bool found = false;
    for (const auto& b : blocks)
        if (b == expect) found = true;
    CHECK(found);
    for (const auto& b : blocks)
        if (b.size() == 1)
            CHECK((b[0] == parse_permutation("123") || b[0] == parse_permutation("213") ||
                   b[0] == parse_permutation("321")));
    // negative control: 123 and 321 separate already at n_max = 3
    const auto neg = classify({parse_permutation("123"), parse_permutation("321")},
                              make_selector({Stat::Destop}), 3);
    CHECK(neg.size() == 2);
}

TEST_CASE("rc-duality between destop and desbot distributions") {
    const StatSelector destop = make_selector({Stat::Destop});
    const StatSelector desbot = make_selector({Stat::Desbot});
    for_each_permutation(4, [&](const Permutation& pat) {
        for (int n = 0; n <= 6; ++n) {
            const Distribution a = distribution(pat, destop, n);
            Distribution mirrored;
            for (const auto& [fp, c] : a.counts) {
                std::vector<int> m;
                for (int v : fp[0]) m.push_back(n + 1 - v);
                std::sort(m.begin(), m.end());
                mirrored.counts[{m}] += c;
            }
            CHECK(mirrored ==
                  distribution(symmetry(pat, Symmetry::ReverseComplement), desbot, n));
        }
    });
}

TEST_CASE("verify plumbing") {
    CHECK(registered_claims().size() == 16);
    CHECK_THROWS_AS(verify("no-such-claim", {}), std::invalid_argument);

    VerifyParams small;
    small.max_n = 5;
    const VerificationReport rep = verify("thm-destop-s3", small);
    CHECK(rep.claim_id == "thm-destop-s3");
    CHECK(rep.verdict == Verdict::Verified);
    CHECK_FALSE(rep.witness.has_value());
    const auto j = rep.to_json();
    CHECK(j["verdict"] == "verified");
    CHECK(j["params"]["max_n"] == 5);
    CHECK(j.contains("elapsed_ms"));
    CHECK(j.contains("counts_summary"));
}

TEST_CASE("every registered claim runs at reduced bounds") {
    VerifyParams small;
    small.max_n = 5;
    small.max_k = 4;
    small.trials = 2;
    // Two of the shape conjectures already fail on boards of height 4; the
    // harness must report the first counterexample board for them.
    const std::map<std::string, std::string> refuted_board = {
        {"conj-shape-destop", "4,3,3,3"},
        {"conj-shape-destop-desbot-231-312", "4,3,3,3"},
    };
    for (const std::string& id : registered_claims()) {
        // the S_4 classify campaigns compare against the frozen class lists,
        // which only stabilize at larger n; they get their own test below
        if (id.rfind("conj-", 0) == 0 && id.find("-s4") != std::string::npos) continue;
        const VerificationReport rep = verify(id, small);
        INFO(id);
        const auto it = refuted_board.find(id);
        if (it == refuted_board.end()) {
            CHECK(rep.verdict == Verdict::Verified);
        } else {
            CHECK(rep.verdict == Verdict::Counterexample);
            REQUIRE(rep.witness.has_value());
            CHECK((*rep.witness)["board"] == it->second);
        }
    }
}

TEST_CASE("shape conjecture campaigns report their counterexamples at default bounds") {
    const VerifyParams defaults;
    const VerificationReport destop = verify("conj-shape-destop", defaults);
    CHECK(destop.verdict == Verdict::Counterexample);
    REQUIRE(destop.witness.has_value());
    CHECK((*destop.witness)["sigma"] == "");
    CHECK((*destop.witness)["board"] == "4,3,3,3");

    const VerificationReport ascbot = verify("conj-shape-ascbot", defaults);
    CHECK(ascbot.verdict == Verdict::Counterexample);
    REQUIRE(ascbot.witness.has_value());
    CHECK((*ascbot.witness)["sigma"] == "1");
    CHECK((*ascbot.witness)["board"] == "5,4,4,4,4");

    const VerificationReport joint = verify("conj-shape-destop-desbot-231-312", defaults);
    CHECK(joint.verdict == Verdict::Counterexample);
    REQUIRE(joint.witness.has_value());
    CHECK((*joint.witness)["board"] == "4,3,3,3");

    // below the first failing board height, all three verify
    VerifyParams low;
    low.max_k = 3;
    CHECK(verify("conj-shape-destop", low).verdict == Verdict::Verified);
    CHECK(verify("conj-shape-destop-desbot-231-312", low).verdict == Verdict::Verified);
    VerifyParams mid;
    mid.max_k = 4;
    CHECK(verify("conj-shape-ascbot", mid).verdict == Verdict::Verified);
}

TEST_CASE("S_4 classify campaigns at n_max = 8") {
    VerifyParams p;
    p.max_n = 8;
    p.jobs = 4;
    for (const std::string& id :
         {std::string("conj-destop-s4"), std::string("conj-desbot-s4"),
          std::string("conj-destop-desbot-s4")}) {
        const VerificationReport rep = verify(id, p);
        INFO(id);
        CHECK(rep.verdict == Verdict::Verified);
    }
}

TEST_CASE("lem-lrmax at n_max = 0 verifies vacuously") {
    VerifyParams p;
    p.max_n = 0;
    CHECK(verify("lem-lrmax", p).verdict == Verdict::Verified);
}
