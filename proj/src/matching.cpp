#include "permdes/matching.hpp"

#include <algorithm>
#include <stdexcept>

#include "permdes/pattern.hpp"

namespace permdes {

namespace {

std::vector<int> sorted_unique(std::vector<int> v, const char* what) {
    std::sort(v.begin(), v.end());
    if (std::adjacent_find(v.begin(), v.end()) != v.end())
        throw std::invalid_argument(std::string("matching: repeated value in ") + what);
    for (int x : v)
        if (x < 1) throw std::invalid_argument(std::string("matching: nonpositive value in ") + what);
    return v;
}

void check_n(const DescentMatching& m, int n) {
    if (n < 0) throw std::invalid_argument("realize: n must be >= 0");
    if (m.size() > 0 && n < m.max_top())
        throw std::invalid_argument("realize: n < max(T)");
}

}  // namespace

DescentMatching make_matching(std::vector<int> tops, std::vector<int> bottoms) {
    DescentMatching m;
    m.tops = sorted_unique(std::move(tops), "T");
    m.bottoms = sorted_unique(std::move(bottoms), "B");
    if (m.tops.size() != m.bottoms.size())
        throw std::invalid_argument("matching: |T| != |B|");
    for (size_t i = 0; i < m.tops.size(); ++i) {
        if (m.tops[i] <= m.bottoms[i])
            throw std::invalid_argument("matching: pairing violated, t_" + std::to_string(i + 1) +
                                        "=" + std::to_string(m.tops[i]) + " <= b_" +
                                        std::to_string(i + 1) + "=" + std::to_string(m.bottoms[i]));
    }
    return m;
}

DescentMatching matching_of(const Permutation& sigma) {
    const StatProfile s = stat_profile(sigma);
    DescentMatching m;
    m.tops = s.destop;
    m.bottoms = s.desbot;
    return m;
}

Permutation realize_canonical(const DescentMatching& m, int n, RunOrder order) {
    check_n(m, n);
    // paired_bottom[t_i] = b_i; chains t -> b strictly decrease, so following
    // them from the run tops (values outside B) yields disjoint maximal runs.
    std::vector<int> paired_bottom(static_cast<size_t>(n) + 1, 0);
    std::vector<char> in_bottom(static_cast<size_t>(n) + 1, 0);
    for (size_t i = 0; i < m.tops.size(); ++i) {
        paired_bottom[static_cast<size_t>(m.tops[i])] = m.bottoms[i];
        in_bottom[static_cast<size_t>(m.bottoms[i])] = 1;
    }
    std::vector<std::vector<int>> runs;
    for (int v = 1; v <= n; ++v) {
        if (in_bottom[static_cast<size_t>(v)]) continue;  // not a run top
        std::vector<int> run{v};
        int cur = v;
        while (paired_bottom[static_cast<size_t>(cur)] != 0) {
            cur = paired_bottom[static_cast<size_t>(cur)];
            run.push_back(cur);
        }
        runs.push_back(std::move(run));
    }
    if (order == RunOrder::ByRunBottom)
        std::sort(runs.begin(), runs.end(),
                  [](const auto& a, const auto& b) { return a.back() < b.back(); });
    // ByRunTop: runs are already in increasing run-top order.
    std::vector<int> out;
    out.reserve(static_cast<size_t>(n));
    for (const auto& run : runs) out.insert(out.end(), run.begin(), run.end());
    return Permutation::unchecked(std::move(out));
}

Permutation realize_312(const DescentMatching& m, int n) {
    check_n(m, n);
    if (n == 0) return Permutation();
    std::vector<char> is_top(static_cast<size_t>(n) + 1, 0), is_bottom(static_cast<size_t>(n) + 1, 0);
    for (int t : m.tops) is_top[static_cast<size_t>(t)] = 1;
    for (int b : m.bottoms) is_bottom[static_cast<size_t>(b)] = 1;
    std::vector<char> used(static_cast<size_t>(n) + 1, 0);

    const auto min_unused_nonbottom = [&]() {
        for (int v = 1; v <= n; ++v)
            if (!used[static_cast<size_t>(v)] && !is_bottom[static_cast<size_t>(v)]) return v;
        throw std::logic_error("realize_312: no unused non-bottom value");
    };
    const auto max_unused_bottom_below = [&](int bound) {
        for (int v = bound - 1; v >= 1; --v)
            if (!used[static_cast<size_t>(v)] && is_bottom[static_cast<size_t>(v)]) return v;
        throw std::logic_error("realize_312: no unused bottom below " + std::to_string(bound));
    };

    std::vector<int> out;
    out.reserve(static_cast<size_t>(n));
    int cur = min_unused_nonbottom();
    used[static_cast<size_t>(cur)] = 1;
    out.push_back(cur);
    for (int i = 1; i < n; ++i) {
        cur = is_top[static_cast<size_t>(cur)] ? max_unused_bottom_below(cur)
                                               : min_unused_nonbottom();
        used[static_cast<size_t>(cur)] = 1;
        out.push_back(cur);
    }
    return Permutation::unchecked(std::move(out));
}

Permutation realize_231(const DescentMatching& m, int n) {
    check_n(m, n);
    if (n == 0) return Permutation();
    std::vector<char> is_top(static_cast<size_t>(n) + 1, 0), is_bottom(static_cast<size_t>(n) + 1, 0);
    for (int t : m.tops) is_top[static_cast<size_t>(t)] = 1;
    for (int b : m.bottoms) is_bottom[static_cast<size_t>(b)] = 1;
    std::vector<char> used(static_cast<size_t>(n) + 1, 0);

    const auto max_unused_nontop = [&]() {
        for (int v = n; v >= 1; --v)
            if (!used[static_cast<size_t>(v)] && !is_top[static_cast<size_t>(v)]) return v;
        throw std::logic_error("realize_231: no unused non-top value");
    };
    const auto min_unused_top_above = [&](int bound) {
        for (int v = bound + 1; v <= n; ++v)
            if (!used[static_cast<size_t>(v)] && is_top[static_cast<size_t>(v)]) return v;
        throw std::logic_error("realize_231: no unused top above " + std::to_string(bound));
    };

    std::vector<int> out(static_cast<size_t>(n), 0);
    int cur = max_unused_nontop();
    used[static_cast<size_t>(cur)] = 1;
    out[static_cast<size_t>(n) - 1] = cur;
    for (int i = n - 1; i >= 1; --i) {
        cur = is_bottom[static_cast<size_t>(cur)] ? min_unused_top_above(cur)
                                                  : max_unused_nontop();
        used[static_cast<size_t>(cur)] = 1;
        out[static_cast<size_t>(i) - 1] = cur;
    }
    return Permutation::unchecked(std::move(out));
}

Permutation bijection_231_312(const Permutation& pi, BijectionDirection dir) {
    static const Permutation p231 = Permutation({2, 3, 1});
    static const Permutation p312 = Permutation({3, 1, 2});
    if (dir == BijectionDirection::To312) {
        if (contains(pi, p231))
            throw std::invalid_argument("bijection_231_312: input does not avoid 231");
        return realize_312(matching_of(pi), pi.size());
    }
    if (contains(pi, p312))
        throw std::invalid_argument("bijection_231_312: input does not avoid 312");
    return realize_231(matching_of(pi), pi.size());
}

DescentMatching parse_matching(const std::string& text) {
    const auto semi = text.find(';');
    if (semi == std::string::npos || text.rfind("T=", 0) != 0 ||
        text.compare(semi + 1, 2, "B=") != 0)
        throw std::invalid_argument("matching text must look like \"T=...;B=...\"");
    const auto parse_list = [](const std::string& s) {
        std::vector<int> out;
        size_t pos = 0;
        while (pos < s.size()) {
            size_t comma = s.find(',', pos);
            if (comma == std::string::npos) comma = s.size();
            const std::string tok = s.substr(pos, comma - pos);
            size_t used = 0;
            out.push_back(std::stoi(tok, &used));
            if (used != tok.size()) throw std::invalid_argument("bad matching entry: " + tok);
            pos = comma + 1;
        }
        return out;
    };
    return make_matching(parse_list(text.substr(2, semi - 2)),
                         parse_list(text.substr(semi + 3)));
}

std::string format_matching(const DescentMatching& m) {
    const auto join = [](const std::vector<int>& v) {
        std::string s;
        for (size_t i = 0; i < v.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(v[i]);
        }
        return s;
    };
    return "T=" + join(m.tops) + ";B=" + join(m.bottoms);
}

std::vector<DescentMatching> all_matchings(int n) {
    std::vector<std::vector<std::vector<int>>> by_size(static_cast<size_t>(n) + 1);
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> s;
        for (int v = 1; v <= n; ++v)
            if (mask & (1u << (v - 1))) s.push_back(v);
        by_size[s.size()].push_back(std::move(s));
    }
    std::vector<DescentMatching> out;
    for (int k = 0; k <= n; ++k) {
        for (const auto& tops : by_size[static_cast<size_t>(k)]) {
            for (const auto& bottoms : by_size[static_cast<size_t>(k)]) {
                bool ok = true;
                for (int i = 0; i < k; ++i)
                    if (tops[static_cast<size_t>(i)] <= bottoms[static_cast<size_t>(i)]) {
                        ok = false;
                        break;
                    }
                if (ok) out.push_back(DescentMatching{tops, bottoms});
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace permdes
