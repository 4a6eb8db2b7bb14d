#include "permdes/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "permdes/bijections.hpp"
#include "permdes/ferrers.hpp"
#include "permdes/matching.hpp"
#include "permdes/pattern.hpp"
#include "permdes/polynomial.hpp"
#include "permdes/vincular.hpp"

namespace permdes {

namespace {

using nlohmann::ordered_json;

const Permutation& pat231() { static const Permutation p({2, 3, 1}); return p; }
const Permutation& pat312() { static const Permutation p({3, 1, 2}); return p; }

std::vector<int> complement_in(const std::vector<int>& s, int n) {
    std::vector<int> out;
    size_t j = 0;
    for (int v = 1; v <= n; ++v) {
        if (j < s.size() && s[j] == v) { ++j; continue; }
        out.push_back(v);
    }
    return out;
}

}  // namespace

std::string stat_name(Stat s) {
    switch (s) {
        case Stat::Des: return "des";
        case Stat::Destop: return "destop";
        case Stat::Desbot: return "desbot";
        case Stat::Asctop: return "asctop";
        case Stat::Ascbot: return "ascbot";
        case Stat::Peak: return "peak";
        case Stat::Valley: return "valley";
        case Stat::LRmax: return "lrmax";
        case Stat::LRmin: return "lrmin";
        case Stat::RLmax: return "rlmax";
        case Stat::RLmin: return "rlmin";
    }
    return "?";
}

Stat stat_from_name(const std::string& name) {
    static const std::vector<Stat> all = {Stat::Des,    Stat::Destop, Stat::Desbot, Stat::Asctop,
                                          Stat::Ascbot, Stat::Peak,   Stat::Valley, Stat::LRmax,
                                          Stat::LRmin,  Stat::RLmax,  Stat::RLmin};
    for (Stat s : all)
        if (stat_name(s) == name) return s;
    throw std::invalid_argument("unknown statistic: " + name);
}

StatSelector make_selector(std::vector<Stat> components) {
    if (components.empty()) throw std::invalid_argument("selector must be nonempty");
    std::set<Stat> seen;
    for (Stat s : components)
        if (!seen.insert(s).second)
            throw std::invalid_argument("selector has repeated component " + stat_name(s));
    return StatSelector{std::move(components)};
}

long long Distribution::total() const {
    long long t = 0;
    for (const auto& [fp, c] : counts) t += c;
    return t;
}

Fingerprint fingerprint(const Permutation& sigma, const StatSelector& sel) {
    const StatProfile prof = stat_profile(sigma);
    Fingerprint fp;
    fp.reserve(sel.components.size());
    for (Stat s : sel.components) {
        switch (s) {
            case Stat::Des: fp.push_back(prof.des); break;
            case Stat::Destop: fp.push_back(prof.destop); break;
            case Stat::Desbot: fp.push_back(prof.desbot); break;
            case Stat::Asctop: fp.push_back(prof.asctop); break;
            case Stat::Ascbot: fp.push_back(prof.ascbot); break;
            case Stat::Peak: fp.push_back(prof.peak); break;
            case Stat::Valley: fp.push_back(prof.valley); break;
            case Stat::LRmax: fp.push_back(prof.lrmax); break;
            case Stat::LRmin: fp.push_back(prof.lrmin); break;
            case Stat::RLmax: fp.push_back(prof.rlmax); break;
            case Stat::RLmin: fp.push_back(prof.rlmin); break;
        }
    }
    return fp;
}

Distribution distribution(const Permutation& pat, const StatSelector& sel, int n, int jobs) {
    Distribution d;
    if (n == 0) {
        ++d.counts[fingerprint(Permutation(), sel)];
        return d;
    }
    if (jobs <= 1) {
        for_each_avoider(n, pat, [&](const Permutation& p) { ++d.counts[fingerprint(p, sel)]; });
        return d;
    }
    std::vector<Distribution> shard(static_cast<size_t>(n));
    std::atomic<int> next{1};
    const auto worker = [&]() {
        for (;;) {
            const int first = next.fetch_add(1);
            if (first > n) return;
            Distribution local;
            for_each_avoider_with_first(n, first, pat, [&](const Permutation& p) {
                ++local.counts[fingerprint(p, sel)];
            });
            shard[static_cast<size_t>(first) - 1] = std::move(local);
        }
    };
    std::vector<std::thread> pool;
    const int nthreads = std::min(jobs, n);
    pool.reserve(static_cast<size_t>(nthreads));
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    for (const auto& s : shard)
        for (const auto& [fp, c] : s.counts) d.counts[fp] += c;
    return d;
}

std::vector<std::vector<Permutation>> classify(const std::vector<Permutation>& patterns,
                                               const StatSelector& sel, int n_max, int jobs) {
    std::vector<std::vector<Distribution>> dists(patterns.size());
    for (size_t i = 0; i < patterns.size(); ++i)
        for (int n = 0; n <= n_max; ++n)
            dists[i].push_back(distribution(patterns[i], sel, n, jobs));
    std::vector<std::vector<Permutation>> blocks;
    std::vector<int> block_of(patterns.size(), -1);
    for (size_t i = 0; i < patterns.size(); ++i) {
        for (size_t j = 0; j < i; ++j) {
            if (block_of[j] >= 0 && dists[i] == dists[j]) {
                block_of[i] = block_of[j];
                blocks[static_cast<size_t>(block_of[i])].push_back(patterns[i]);
                break;
            }
        }
        if (block_of[i] < 0) {
            block_of[i] = static_cast<int>(blocks.size());
            blocks.push_back({patterns[i]});
        }
    }
    return blocks;
}

ordered_json VerificationReport::to_json() const {
    ordered_json j;
    j["claim_id"] = claim_id;
    j["params"] = params;
    switch (verdict) {
        case Verdict::Verified: j["verdict"] = "verified"; break;
        case Verdict::Counterexample: j["verdict"] = "counterexample"; break;
        case Verdict::Skipped: j["verdict"] = "skipped"; break;
    }
    if (witness) j["witness"] = *witness;
    j["elapsed_ms"] = elapsed_ms;
    j["counts_summary"] = counts_summary;
    return j;
}

namespace {

std::vector<Permutation> s4_patterns() {
    std::vector<Permutation> out;
    for_each_permutation(4, [&](const Permutation& p) { out.push_back(p); });
    return out;
}

std::string compact(const Permutation& p) {
    std::string s;
    for (int v : p.word()) s += static_cast<char>('0' + v);
    return s;
}

ordered_json classes_json(const std::vector<std::vector<Permutation>>& blocks) {
    ordered_json out = ordered_json::array();
    for (const auto& b : blocks) {
        ordered_json blk = ordered_json::array();
        for (const auto& p : b) blk.push_back(compact(p));
        out.push_back(blk);
    }
    return out;
}

// Compares the partition's non-singleton blocks (as sets) to the expected
// class list.
bool classes_match(const std::vector<std::vector<Permutation>>& blocks,
                   const std::vector<std::vector<std::string>>& expected) {
    std::set<std::set<std::string>> got;
    for (const auto& b : blocks) {
        if (b.size() < 2) continue;
        std::set<std::string> blk;
        for (const auto& p : b) blk.insert(compact(p));
        got.insert(std::move(blk));
    }
    std::set<std::set<std::string>> want;
    for (const auto& b : expected) want.insert(std::set<std::string>(b.begin(), b.end()));
    return got == want;
}

struct ClaimContext {
    const VerifyParams& p;
    VerificationReport& rep;

    void fail(ordered_json witness) {
        if (rep.verdict == Verdict::Counterexample) return;  // first witness wins
        rep.verdict = Verdict::Counterexample;
        rep.witness = std::move(witness);
    }
    bool failed() const { return rep.verdict == Verdict::Counterexample; }
};

void claim_thm_destop_s3(ClaimContext& ctx) {
    const StatSelector destop = make_selector({Stat::Destop});
    const Permutation p132({1, 3, 2});
    long long checked = 0;
    for (int n = 0; n <= ctx.p.max_n && !ctx.failed(); ++n) {
        const Distribution d132 = distribution(p132, destop, n, ctx.p.jobs);
        const Distribution d231 = distribution(pat231(), destop, n, ctx.p.jobs);
        const Distribution d312 = distribution(pat312(), destop, n, ctx.p.jobs);
        checked += d132.total();
        if (!(d132 == d231)) ctx.fail({{"n", n}, {"pair", "132/231"}});
        else if (!(d132 == d312)) ctx.fail({{"n", n}, {"pair", "132/312"}});
    }
    // element-by-element route: Phi and Psi are Destop-preserving bijections
    const int bij_max = std::min(ctx.p.max_n, 8);
    for (int n = 0; n <= bij_max && !ctx.failed(); ++n) {
        std::set<Permutation> images_phi, images_psi;
        long long dom = 0;
        for_each_avoider(n, p132, [&](const Permutation& s) {
            ++dom;
            const Permutation y = phi_destop(s);
            const Permutation z = psi_destop(s);
            if (contains(y, pat231()) || matching_of(y).tops != matching_of(s).tops ||
                phi_destop_inverse(y) != s)
                ctx.fail({{"n", n}, {"map", "phi"}, {"sigma", format_permutation(s)}});
            if (contains(z, pat312()) || matching_of(z).tops != matching_of(s).tops ||
                psi_destop_inverse(z) != s ||
                (n > 0 && z.at(n) != s.at(n)))
                ctx.fail({{"n", n}, {"map", "psi"}, {"sigma", format_permutation(s)}});
            images_phi.insert(y);
            images_psi.insert(z);
        });
        if (static_cast<long long>(images_phi.size()) != dom ||
            static_cast<long long>(images_psi.size()) != dom)
            ctx.fail({{"n", n}, {"issue", "bijection not injective"}});
    }
    ctx.rep.counts_summary = {{"avoiders_checked", checked}, {"bijection_max_n", bij_max}};
}

void claim_thm_destop_desbot_231_312(ClaimContext& ctx) {
    long long matchings_checked = 0;
    for (int n = 0; n <= ctx.p.max_n && !ctx.failed(); ++n) {
        std::map<DescentMatching, std::vector<Permutation>> av312, av231;
        for_each_avoider(n, pat312(), [&](const Permutation& s) { av312[matching_of(s)].push_back(s); });
        for_each_avoider(n, pat231(), [&](const Permutation& s) { av231[matching_of(s)].push_back(s); });
        for (const DescentMatching& m : all_matchings(n)) {
            ++matchings_checked;
            const auto i3 = av312.find(m);
            const auto i2 = av231.find(m);
            if (i3 == av312.end() || i3->second.size() != 1 ||
                i3->second[0] != realize_312(m, n)) {
                ctx.fail({{"n", n}, {"matching", format_matching(m)}, {"side", "312"}});
                break;
            }
            if (i2 == av231.end() || i2->second.size() != 1 ||
                i2->second[0] != realize_231(m, n)) {
                ctx.fail({{"n", n}, {"matching", format_matching(m)}, {"side", "231"}});
                break;
            }
        }
        if (ctx.failed()) break;
        // round trip to_312 then to_231 is the identity on Av_n(231)
        for (const auto& [m, perms] : av231) {
            for (const Permutation& s : perms) {
                const Permutation y = bijection_231_312(s, BijectionDirection::To312);
                if (bijection_231_312(y, BijectionDirection::To231) != s) {
                    ctx.fail({{"n", n}, {"round_trip", format_permutation(s)}});
                    break;
                }
            }
        }
    }
    ctx.rep.counts_summary = {{"matchings_checked", matchings_checked}};
}

void claim_lem_des_match(ClaimContext& ctx) {
    long long matchings_total = 0;
    for (int n = 0; n <= ctx.p.max_n && !ctx.failed(); ++n) {
        std::set<DescentMatching> seen;
        for_each_permutation(n, [&](const Permutation& s) { seen.insert(matching_of(s)); });
        const std::vector<DescentMatching> valid = all_matchings(n);
        matchings_total += static_cast<long long>(valid.size());
        if (seen.size() != valid.size() ||
            !std::equal(seen.begin(), seen.end(), valid.begin())) {
            ctx.fail({{"n", n}, {"issue", "realizable matchings != valid matchings"}});
            break;
        }
        for (const DescentMatching& m : valid) {
            if (matching_of(realize_canonical(m, n)) != m) {
                ctx.fail({{"n", n}, {"matching", format_matching(m)}, {"issue", "canonical realization"}});
                break;
            }
        }
    }
    ctx.rep.counts_summary = {{"matchings_checked", matchings_total}};
}

void claim_lem_lrmax(ClaimContext& ctx) {
    long long checked = 0;
    for (int n = 0; n <= ctx.p.max_n && !ctx.failed(); ++n) {
        for_each_avoider(n, pat312(), [&](const Permutation& s) {
            ++checked;
            const StatProfile prof = stat_profile(s);
            if (complement_in(prof.desbot, n) != prof.lrmax)
                ctx.fail({{"n", n}, {"sigma", format_permutation(s)}, {"law", "desbot-complement=lrmax"}});
        });
        for_each_avoider(n, pat231(), [&](const Permutation& s) {
            ++checked;
            const StatProfile prof = stat_profile(s);
            if (complement_in(prof.destop, n) != prof.rlmin)
                ctx.fail({{"n", n}, {"sigma", format_permutation(s)}, {"law", "destop-complement=rlmin"}});
        });
    }
    ctx.rep.counts_summary = {{"avoiders_checked", checked}};
}

void claim_lem_vincular_sum(ClaimContext& ctx) {
    long long checked = 0;
    for (int n = 0; n <= ctx.p.max_n && !ctx.failed(); ++n) {
        for_each_permutation(n, [&](const Permutation& s) {
            for (int i = 1; i <= n; ++i) {
                ++checked;
                if (!lemma_sum_check(s, i)) {
                    ctx.fail({{"n", n}, {"sigma", format_permutation(s)}, {"i", i}});
                    return;
                }
            }
        });
    }
    ctx.rep.counts_summary = {{"identities_checked", checked}};
}

void claim_thm_dist(ClaimContext& ctx) {
    long long matchings_checked = 0;
    for (int n = 0; n <= ctx.p.max_n && !ctx.failed(); ++n) {
        // one S_n pass: bucket per-value occurrence counts by matching
        std::map<DescentMatching, std::vector<std::vector<std::pair<int, int>>>> fibers;
        for_each_permutation(n, [&](const Permutation& s) {
            std::vector<std::pair<int, int>> counts(static_cast<size_t>(n));
            for (int i = 1; i <= n; ++i)
                counts[static_cast<size_t>(i) - 1] = {
                    static_cast<int>(count_vincular(s, VincularKind::TwoThen31, i)),
                    static_cast<int>(count_vincular(s, VincularKind::ThirtyOneThen2, i))};
            fibers[matching_of(s)].push_back(std::move(counts));
        });
        std::mt19937_64 rng(ctx.p.seed + static_cast<uint64_t>(n));
        std::uniform_int_distribution<int> draw(1, 30);
        const auto ipow = [](BigInt base, int e) {
            BigInt r = 1;
            for (int k = 0; k < e; ++k) r *= base;
            return r;
        };
        for (const auto& [m, fiber] : fibers) {
            ++matchings_checked;
            const std::vector<int> sig = signature(n, m);
            for (int t = 0; t < ctx.p.trials && !ctx.failed(); ++t) {
                std::vector<int> pv(static_cast<size_t>(n)), qv(static_cast<size_t>(n));
                for (int i = 0; i < n; ++i) pv[static_cast<size_t>(i)] = draw(rng);
                for (int i = 0; i < n; ++i) qv[static_cast<size_t>(i)] = draw(rng);
                BigInt lhs = 0;
                for (const auto& counts : fiber) {
                    BigInt term = 1;
                    for (int i = 0; i < n; ++i)
                        term *= ipow(pv[static_cast<size_t>(i)], counts[static_cast<size_t>(i)].first) *
                                ipow(qv[static_cast<size_t>(i)], counts[static_cast<size_t>(i)].second);
                    lhs += term;
                }
                BigInt rhs = 1;
                for (int i = 0; i < n; ++i) {
                    BigInt bracket = 0;
                    for (int a = 0; a < sig[static_cast<size_t>(i)]; ++a)
                        bracket += ipow(pv[static_cast<size_t>(i)], a) *
                                   ipow(qv[static_cast<size_t>(i)], sig[static_cast<size_t>(i)] - 1 - a);
                    rhs *= bracket;
                }
                if (lhs != rhs)
                    ctx.fail({{"n", n}, {"matching", format_matching(m)}, {"trial", t}});
            }
            if (ctx.failed()) break;
        }
    }
    ctx.rep.counts_summary = {{"matchings_checked", matchings_checked}, {"trials", ctx.p.trials}};
}

void claim_cor_dist(ClaimContext& ctx) {
    long long matchings_checked = 0;
    for (int n = 0; n <= ctx.p.max_n && !ctx.failed(); ++n) {
        std::map<DescentMatching, DistPolynomial> lhs;
        for_each_permutation(n, [&](const Permutation& s) {
            lhs[matching_of(s)].add_monomial(
                static_cast<int>(count_vincular(s, VincularKind::TwoThen31)),
                static_cast<int>(count_vincular(s, VincularKind::ThirtyOneThen2)), 1);
        });
        for (const DescentMatching& m : all_matchings(n)) {
            ++matchings_checked;
            const auto it = lhs.find(m);
            if (it == lhs.end() || !(it->second == rhs_product(n, m))) {
                ctx.fail({{"n", n}, {"matching", format_matching(m)}});
                break;
            }
        }
    }
    ctx.rep.counts_summary = {{"matchings_checked", matchings_checked}};
}

void claim_fv_bijection(ClaimContext& ctx) {
    long long roundtrips = 0;
    for (int n = 0; n <= ctx.p.max_n && !ctx.failed(); ++n) {
        // encode-then-decode over all of S_n
        for_each_permutation(n, [&](const Permutation& s) {
            ++roundtrips;
            const auto [m, c] = fv_encode(s);
            if (fv_decode(n, m, c) != s)
                ctx.fail({{"n", n}, {"sigma", format_permutation(s)}, {"dir", "encode-decode"}});
        });
        if (ctx.failed()) break;
        // decode over all (m, c); images must be distinct and exhaust S_n
        std::set<Permutation> images;
        long long tuples = 0;
        for (const DescentMatching& m : all_matchings(n)) {
            const std::vector<int> h = signature(n, m);
            std::vector<int> c(static_cast<size_t>(n), 1);
            for (;;) {
                ++tuples;
                const Permutation s = fv_decode(n, m, c);
                const auto [m2, c2] = fv_encode(s);
                if (m2 != m || c2 != c) {
                    ctx.fail({{"n", n}, {"matching", format_matching(m)}, {"dir", "decode-encode"}});
                    break;
                }
                images.insert(s);
                int i = n - 1;
                while (i >= 0 && c[static_cast<size_t>(i)] == h[static_cast<size_t>(i)]) {
                    c[static_cast<size_t>(i)] = 1;
                    --i;
                }
                if (i < 0) break;
                ++c[static_cast<size_t>(i)];
            }
            if (ctx.failed()) break;
        }
        long long factorial = 1;
        for (int i = 2; i <= n; ++i) factorial *= i;
        if (!ctx.failed() &&
            (tuples != factorial || static_cast<long long>(images.size()) != factorial))
            ctx.fail({{"n", n}, {"issue", "decode image does not exhaust S_n"}});
    }
    // arithmetic count identity, one size further (cheap, no enumeration of S_n)
    const int sum_max = ctx.p.max_n + 1;
    for (int n = 0; n <= sum_max && !ctx.failed(); ++n) {
        BigInt total = 0;
        for (const DescentMatching& m : all_matchings(n)) {
            BigInt prod = 1;
            for (int hi : signature(n, m)) prod *= hi;
            total += prod;
        }
        BigInt factorial = 1;
        for (int i = 2; i <= n; ++i) factorial *= i;
        if (total != factorial)
            ctx.fail({{"n", n}, {"issue", "sum of label-space sizes != n!"}});
    }
    ctx.rep.counts_summary = {{"roundtrips", roundtrips}, {"count_sum_max_n", sum_max}};
}

void run_classify_claim(ClaimContext& ctx, const StatSelector& sel,
                        const std::vector<std::vector<std::string>>& expected) {
    const auto blocks = classify(s4_patterns(), sel, ctx.p.max_n, ctx.p.jobs);
    if (!classes_match(blocks, expected))
        ctx.fail({{"classes", classes_json(blocks)}});
    ctx.rep.counts_summary = {{"patterns", 24}, {"blocks", blocks.size()}};
}

void run_tuple_claim(ClaimContext& ctx, const std::vector<std::tuple<std::string, std::string,
                                                                     StatSelector>>& pairs) {
    long long compared = 0;
    for (const auto& [a, b, sel] : pairs) {
        const Permutation pa = parse_permutation(a), pb = parse_permutation(b);
        for (int n = 0; n <= ctx.p.max_n && !ctx.failed(); ++n) {
            ++compared;
            if (!(distribution(pa, sel, n, ctx.p.jobs) == distribution(pb, sel, n, ctx.p.jobs)))
                ctx.fail({{"n", n}, {"pair", a + "/" + b}});
        }
    }
    ctx.rep.counts_summary = {{"distributions_compared", compared}};
}

void run_shape_claim(ClaimContext& ctx, FStat st, const std::vector<std::string>& sigmas) {
    long long pairs = 0;
    for (const std::string& s : sigmas) {
        const Permutation sigma = parse_permutation(s);
        const Permutation pa = direct_sum(pat231(), sigma);
        const Permutation pb = direct_sum(pat312(), sigma);
        const int kmax = ctx.p.max_k > 0 ? ctx.p.max_k : pa.size() + 2;
        ++pairs;
        if (const auto bad = st_shape_wilf_check(pa, pb, st, kmax)) {
            ctx.fail({{"sigma", s}, {"board", format_board(*bad)}});
            return;
        }
    }
    ctx.rep.counts_summary = {{"pattern_pairs", pairs}};
}

using ClaimFn = std::function<void(ClaimContext&)>;

const std::vector<std::pair<std::string, ClaimFn>>& claim_registry() {
    static const std::vector<std::pair<std::string, ClaimFn>> reg = {
        {"thm-destop-s3", claim_thm_destop_s3},
        {"thm-destop-desbot-231-312", claim_thm_destop_desbot_231_312},
        {"lem-des-match", claim_lem_des_match},
        {"lem-lrmax", claim_lem_lrmax},
        {"lem-vincular-sum", claim_lem_vincular_sum},
        {"thm-dist", claim_thm_dist},
        {"cor-dist", claim_cor_dist},
        {"fv-bijection", claim_fv_bijection},
        {"conj-destop-s4",
         [](ClaimContext& ctx) {
             run_classify_claim(ctx, make_selector({Stat::Destop}),
                                {{"1243", "3412"},
                                 {"1423", "2413"},
                                 {"2143", "3421"},
                                 {"2314", "3124"},
                                 {"2431", "3142", "3241", "4132"}});
         }},
        {"conj-desbot-s4",
         [](ClaimContext& ctx) {
             run_classify_claim(ctx, make_selector({Stat::Desbot}),
                                {{"2134", "3412"},
                                 {"2314", "2413"},
                                 {"2143", "4312"},
                                 {"1423", "1342"},
                                 {"3142", "3241", "4132", "4213"}});
         }},
        {"conj-destop-desbot-s4",
         [](ClaimContext& ctx) {
             run_classify_claim(ctx, make_selector({Stat::Destop, Stat::Desbot}),
                                {{"3142", "3241", "4132"}});
         }},
        {"conj-shape-destop",
         [](ClaimContext& ctx) { run_shape_claim(ctx, FStat::DestopF, {"", "1", "1,2", "2,1"}); }},
        {"conj-shape-ascbot",
         [](ClaimContext& ctx) { run_shape_claim(ctx, FStat::AscbotF, {"1", "1,2", "2,1"}); }},
        {"conj-shape-destop-desbot-231-312",
         [](ClaimContext& ctx) {
             const int kmax = ctx.p.max_k > 0 ? ctx.p.max_k : 5;
             if (const auto bad = joint_shape_wilf_check(pat231(), pat312(), kmax))
                 ctx.fail({{"board", format_board(*bad)}});
             ctx.rep.counts_summary = {{"kmax", kmax}};
         }},
        {"thm-zzy-tuples",
         [](ClaimContext& ctx) {
             run_tuple_claim(
                 ctx,
                 {{"3142", "3241",
                   make_selector({Stat::Destop, Stat::Desbot, Stat::Asctop, Stat::Peak, Stat::LRmax})},
                  {"3142", "4132",
                   make_selector({Stat::Destop, Stat::Desbot, Stat::Ascbot, Stat::Valley, Stat::RLmin})},
                  {"2413", "1423",
                   make_selector({Stat::Destop, Stat::Asctop, Stat::Ascbot, Stat::Peak, Stat::RLmax})}});
         }},
        {"cor-zzy",
         [](ClaimContext& ctx) {
             run_tuple_claim(ctx, {{"2413", "2314",
                                    make_selector({Stat::Desbot, Stat::Asctop, Stat::Ascbot,
                                                   Stat::Valley, Stat::LRmin})}});
         }},
    };
    return reg;
}

}  // namespace

std::vector<std::string> registered_claims() {
    std::vector<std::string> out;
    for (const auto& [id, fn] : claim_registry()) out.push_back(id);
    return out;
}

VerificationReport verify(const std::string& claim_id, const VerifyParams& params) {
    const ClaimFn* fn = nullptr;
    for (const auto& [id, f] : claim_registry())
        if (id == claim_id) { fn = &f; break; }
    if (!fn) throw std::invalid_argument("unknown claim id: " + claim_id);

    VerificationReport rep;
    rep.claim_id = claim_id;
    rep.params = {{"max_n", params.max_n},
                  {"max_k", params.max_k},
                  {"jobs", params.jobs},
                  {"trials", params.trials},
                  {"seed", params.seed}};
    rep.verdict = Verdict::Verified;
    ClaimContext ctx{params, rep};
    const auto start = std::chrono::steady_clock::now();
    (*fn)(ctx);
    rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    return rep;
}

}  // namespace permdes
