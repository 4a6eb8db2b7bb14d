#pragma once

#include <cstdint>
#include <optional>
#include <type_traits>
#include <vector>

#include "permdes/perm.hpp"

namespace permdes {

/// The two vincular patterns of interest: 2-31 (kind TwoThen31) and
/// 31-2 (kind ThirtyOneThen2). In both, the "31" descent must occupy
/// consecutive positions.
enum class VincularKind { TwoThen31, ThirtyOneThen2 };

/// Classical containment: true iff some (not necessarily consecutive)
/// subsequence of sigma is order-isomorphic to pat.
bool contains(const Permutation& sigma, const Permutation& pat);

/// True iff appending `next` to `prefix` (a sequence of distinct values)
/// creates an occurrence of `pat` whose last entry is `next`. Used for
/// prefix-pruned avoider generation: if the prefix already avoids pat,
/// any new occurrence must end at the appended entry.
bool extension_creates_occurrence(const std::vector<int>& prefix, int next,
                                  const Permutation& pat);

/// Number of occurrences of the given vincular pattern in sigma; with
/// `value` set, only occurrences whose "2" has that value are counted.
long long count_vincular(const Permutation& sigma, VincularKind kind,
                         std::optional<int> value = std::nullopt);

/// All permutations of S_n in lexicographic order. The callback may
/// return void, or bool (false stops the enumeration early).
template <typename F>
void for_each_permutation(int n, F&& f);

/// Permutations of S_n with sigma(1) = first, lexicographic. Splitting by
/// first entry gives contiguous sub-ranges for parallel consumption.
template <typename F>
void for_each_permutation_with_first(int n, int first, F&& f);

/// Pat-avoiding permutations of S_n in lexicographic order, generated by
/// prefix-pruning backtracking (a prefix containing pat is never extended).
template <typename F>
void for_each_avoider(int n, const Permutation& pat, F&& f);

template <typename F>
void for_each_avoider_with_first(int n, int first, const Permutation& pat, F&& f);

std::vector<Permutation> avoiders(int n, const Permutation& pat);
long long count_avoiders(int n, const Permutation& pat);

// --- implementation ---

namespace detail {

template <typename F>
bool invoke_step(F& f, const Permutation& p) {
    if constexpr (std::is_same_v<decltype(f(p)), bool>) {
        return f(p);
    } else {
        f(p);
        return true;
    }
}

template <typename F>
bool permute_rec(int n, std::vector<int>& prefix, uint32_t used, F& f) {
    if (static_cast<int>(prefix.size()) == n)
        return invoke_step(f, Permutation::unchecked(prefix));
    for (int v = 1; v <= n; ++v) {
        if (used & (1u << v)) continue;
        prefix.push_back(v);
        const bool go = permute_rec(n, prefix, used | (1u << v), f);
        prefix.pop_back();
        if (!go) return false;
    }
    return true;
}

template <typename F>
bool avoid_rec(int n, const Permutation& pat, std::vector<int>& prefix, uint32_t used, F& f) {
    if (static_cast<int>(prefix.size()) == n)
        return invoke_step(f, Permutation::unchecked(prefix));
    for (int v = 1; v <= n; ++v) {
        if (used & (1u << v)) continue;
        if (extension_creates_occurrence(prefix, v, pat)) continue;
        prefix.push_back(v);
        const bool go = avoid_rec(n, pat, prefix, used | (1u << v), f);
        prefix.pop_back();
        if (!go) return false;
    }
    return true;
}

}  // namespace detail

template <typename F>
void for_each_permutation(int n, F&& f) {
    std::vector<int> prefix;
    prefix.reserve(static_cast<size_t>(n));
    detail::permute_rec(n, prefix, 0, f);
}

template <typename F>
void for_each_permutation_with_first(int n, int first, F&& f) {
    std::vector<int> prefix{first};
    detail::permute_rec(n, prefix, 1u << first, f);
}

template <typename F>
void for_each_avoider(int n, const Permutation& pat, F&& f) {
    std::vector<int> prefix;
    prefix.reserve(static_cast<size_t>(n));
    detail::avoid_rec(n, pat, prefix, 0, f);
}

template <typename F>
void for_each_avoider_with_first(int n, int first, const Permutation& pat, F&& f) {
    std::vector<int> prefix;
    if (extension_creates_occurrence(prefix, first, pat)) return;
    prefix = {first};
    detail::avoid_rec(n, pat, prefix, 1u << first, f);
}

}  // namespace permdes
