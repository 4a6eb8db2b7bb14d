#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "permdes/perm.hpp"

namespace permdes {

/// A descent matching: equal-size sets T = {t_1<...<t_k}, B = {b_1<...<b_k}
/// with t_i > b_i for every i. Exactly the (Destop, Desbot) pairs realizable
/// by permutations.
struct DescentMatching {
    std::vector<int> tops;     // sorted ascending, no repeats
    std::vector<int> bottoms;  // sorted ascending, no repeats

    int size() const { return static_cast<int>(tops.size()); }
    int max_top() const { return tops.empty() ? 0 : tops.back(); }
    bool operator==(const DescentMatching&) const = default;
    bool operator<(const DescentMatching& o) const {
        return std::tie(tops, bottoms) < std::tie(o.tops, o.bottoms);
    }
};

/// Validates the matching invariant; throws std::invalid_argument naming the
/// violated pair (t_i, b_i) on failure. Inputs may be unsorted.
DescentMatching make_matching(std::vector<int> tops, std::vector<int> bottoms);

/// (Destop(sigma), Desbot(sigma)); always a valid matching.
DescentMatching matching_of(const Permutation& sigma);

/// Which run-concatenation order realize_canonical uses.
enum class RunOrder { ByRunTop, ByRunBottom };

/// Realizes the matching in S_n by chaining pairs t_i -> b_i into maximal
/// descent runs, adjoining leftover values as singleton runs, and
/// concatenating runs in increasing run-top (default) or run-bottom order.
Permutation realize_canonical(const DescentMatching& m, int n,
                              RunOrder order = RunOrder::ByRunTop);

/// The unique sigma in Av_n(312) with (Destop, Desbot) = (T, B), built
/// greedily left to right.
Permutation realize_312(const DescentMatching& m, int n);

/// The unique pi in Av_n(231) with (Destop, Desbot) = (T, B), built
/// greedily right to left.
Permutation realize_231(const DescentMatching& m, int n);

enum class BijectionDirection { To312, To231 };

/// The (Destop, Desbot)-preserving bijection between Av_n(231) and
/// Av_n(312). Throws if the input does not avoid the required pattern.
Permutation bijection_231_312(const Permutation& pi, BijectionDirection dir);

/// Text format: "T=2,5,8,9;B=1,2,3,7"; empty sets serialize as "T=;B=".
DescentMatching parse_matching(const std::string& text);
std::string format_matching(const DescentMatching& m);

/// Enumerates every valid descent matching with max(T) <= n (including the
/// empty one), in (tops, bottoms) lexicographic order.
std::vector<DescentMatching> all_matchings(int n);

}  // namespace permdes
