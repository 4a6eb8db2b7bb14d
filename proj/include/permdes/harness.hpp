#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "permdes/perm.hpp"

namespace permdes {

/// Statistic components a distribution fingerprint can be built from.
enum class Stat { Des, Destop, Desbot, Asctop, Ascbot, Peak, Valley, LRmax, LRmin, RLmax, RLmin };

std::string stat_name(Stat s);
Stat stat_from_name(const std::string& name);

/// Nonempty ordered selection of statistic components, no repeats.
struct StatSelector {
    std::vector<Stat> components;
};

StatSelector make_selector(std::vector<Stat> components);

/// A fingerprint is the tuple of the selected statistic sets, each a sorted
/// sequence; a Distribution is the exact multiset of fingerprints over an
/// avoider class.
using Fingerprint = std::vector<std::vector<int>>;

struct Distribution {
    std::map<Fingerprint, long long> counts;

    long long total() const;
    bool operator==(const Distribution&) const = default;
};

Fingerprint fingerprint(const Permutation& sigma, const StatSelector& sel);

/// Multiset of fingerprints over Av_n(pat). jobs > 1 shards the scan by
/// first entry; the merged result is schedule-independent.
Distribution distribution(const Permutation& pat, const StatSelector& sel, int n,
                          int jobs = 1);

/// Finest partition of the patterns such that two share a block iff their
/// distributions agree for every n <= n_max. Blocks and their members are
/// in input order.
std::vector<std::vector<Permutation>> classify(const std::vector<Permutation>& patterns,
                                               const StatSelector& sel, int n_max,
                                               int jobs = 1);

enum class Verdict { Verified, Counterexample, Skipped };

struct VerifyParams {
    int max_n = 9;
    int max_k = 0;  // 0 = claim-specific default
    int jobs = 1;
    int trials = 5;
    uint64_t seed = 0x9d65f60c1a5ef1feULL;
};

struct VerificationReport {
    std::string claim_id;
    nlohmann::ordered_json params;
    Verdict verdict = Verdict::Skipped;
    std::optional<nlohmann::ordered_json> witness;
    long long elapsed_ms = 0;
    nlohmann::ordered_json counts_summary;

    nlohmann::ordered_json to_json() const;
};

std::vector<std::string> registered_claims();

/// Runs the named claim's verification campaign. Throws
/// std::invalid_argument for unknown claim ids.
VerificationReport verify(const std::string& claim_id, const VerifyParams& params = {});

}  // namespace permdes
