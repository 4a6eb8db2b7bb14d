#include "permdes/pattern.hpp"

#include <limits>
#include <stdexcept>

namespace permdes {

namespace {

// Backtracking subsequence matcher with value-range pruning. chosen[j] is
// the word value matched to pattern position j+1; slots may be preassigned
// (fixed[j] = true) to force part of the occurrence.
bool match_from(const std::vector<int>& word, const std::vector<int>& pat,
                std::vector<int>& chosen, const std::vector<char>& fixed,
                int k, int from) {
    const int m = static_cast<int>(pat.size());
    if (k == m) return true;
    if (fixed[static_cast<size_t>(k)])
        return match_from(word, pat, chosen, fixed, k + 1, from);

    int lo = std::numeric_limits<int>::min();
    int hi = std::numeric_limits<int>::max();
    for (int j = 0; j < m; ++j) {
        if (j == k || (!fixed[static_cast<size_t>(j)] && j >= k)) continue;
        if (pat[static_cast<size_t>(j)] < pat[static_cast<size_t>(k)])
            lo = std::max(lo, chosen[static_cast<size_t>(j)]);
        else
            hi = std::min(hi, chosen[static_cast<size_t>(j)]);
    }
    const int nw = static_cast<int>(word.size());
    for (int p = from; p < nw; ++p) {
        const int v = word[static_cast<size_t>(p)];
        if (v <= lo || v >= hi) continue;
        chosen[static_cast<size_t>(k)] = v;
        if (match_from(word, pat, chosen, fixed, k + 1, p + 1)) return true;
    }
    return false;
}

}  // namespace

bool contains(const Permutation& sigma, const Permutation& pat) {
    const int m = pat.size();
    if (m == 0) return true;
    if (sigma.size() < m) return false;
    std::vector<int> chosen(static_cast<size_t>(m), 0);
    std::vector<char> fixed(static_cast<size_t>(m), 0);
    return match_from(sigma.word(), pat.word(), chosen, fixed, 0, 0);
}

bool extension_creates_occurrence(const std::vector<int>& prefix, int next,
                                  const Permutation& pat) {
    const int m = pat.size();
    if (m == 0) return true;
    if (static_cast<int>(prefix.size()) + 1 < m) return false;
    std::vector<int> chosen(static_cast<size_t>(m), 0);
    std::vector<char> fixed(static_cast<size_t>(m), 0);
    chosen[static_cast<size_t>(m) - 1] = next;
    fixed[static_cast<size_t>(m) - 1] = 1;
    return match_from(prefix, pat.word(), chosen, fixed, 0, 0);
}

long long count_vincular(const Permutation& sigma, VincularKind kind,
                         std::optional<int> value) {
    const int n = sigma.size();
    if (value && (*value < 1 || *value > n))
        throw std::invalid_argument("count_vincular: value out of range");
    long long total = 0;
    for (int j = 1; j < n; ++j) {
        const int b = sigma.at(j), a = sigma.at(j + 1);
        if (b <= a) continue;  // need the adjacent descent "31"
        if (kind == VincularKind::TwoThen31) {
            // occurrences i .. b a with a < i < b, i strictly before b
            for (int p = 1; p < j; ++p) {
                const int i = sigma.at(p);
                if (a < i && i < b && (!value || i == *value)) ++total;
            }
        } else {
            // occurrences b a .. i with a < i < b, i strictly after a
            for (int p = j + 2; p <= n; ++p) {
                const int i = sigma.at(p);
                if (a < i && i < b && (!value || i == *value)) ++total;
            }
        }
    }
    return total;
}

std::vector<Permutation> avoiders(int n, const Permutation& pat) {
    std::vector<Permutation> out;
    for_each_avoider(n, pat, [&](const Permutation& p) { out.push_back(p); });
    return out;
}

long long count_avoiders(int n, const Permutation& pat) {
    long long c = 0;
    for_each_avoider(n, pat, [&](const Permutation&) { ++c; });
    return c;
}

}  // namespace permdes
