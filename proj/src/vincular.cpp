#include "permdes/vincular.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "permdes/pattern.hpp"

namespace permdes {

namespace {

bool in_set(const std::vector<int>& sorted, int v) {
    return std::binary_search(sorted.begin(), sorted.end(), v);
}

void check_realize_bounds(int n, const DescentMatching& m) {
    if (n < 0) throw std::invalid_argument("n must be >= 0");
    if (m.size() > 0 && n < m.max_top())
        throw std::invalid_argument("n < max(T)");
}

MotzkinStep step_for(const DescentMatching& m, int i) {
    const bool b = in_set(m.bottoms, i), t = in_set(m.tops, i);
    if (b && !t) return MotzkinStep::Up;
    if (!b && !t) return MotzkinStep::LevelStar;
    if (b && t) return MotzkinStep::LevelSub;
    return MotzkinStep::Down;
}

}  // namespace

std::vector<int> signature(int n, const DescentMatching& m) {
    check_realize_bounds(n, m);
    std::vector<int> h(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) {
        const auto below = static_cast<int>(
            std::lower_bound(m.bottoms.begin(), m.bottoms.end(), i) - m.bottoms.begin());
        const auto upto = static_cast<int>(
            std::upper_bound(m.tops.begin(), m.tops.end(), i) - m.tops.begin());
        h[static_cast<size_t>(i) - 1] = below - upto + 1;
    }
    return h;
}

std::vector<MotzkinStep> motzkin_word(int n, const DescentMatching& m) {
    check_realize_bounds(n, m);
    std::vector<MotzkinStep> w;
    w.reserve(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) w.push_back(step_for(m, i));
    return w;
}

std::vector<int> heights_from_word(const std::vector<MotzkinStep>& w) {
    std::vector<int> h;
    h.reserve(w.size());
    int height = 0;
    for (MotzkinStep s : w) {
        switch (s) {
            case MotzkinStep::Up:
                h.push_back(height + 1);
                ++height;
                break;
            case MotzkinStep::LevelStar:
                h.push_back(height + 1);
                break;
            case MotzkinStep::LevelSub:
                h.push_back(height);
                break;
            case MotzkinStep::Down:
                h.push_back(height);
                --height;
                break;
        }
    }
    return h;
}

DistPolynomial rhs_product(int n, const DescentMatching& m) {
    DistPolynomial out = DistPolynomial::constant(1);
    for (int hi : signature(n, m)) out = out * DistPolynomial::bracket(hi);
    return out;
}

DistPolynomial lhs_brute(int n, const DescentMatching& m, int bound) {
    if (n > bound) throw std::invalid_argument("lhs_brute: n exceeds brute-force bound");
    check_realize_bounds(n, m);
    DistPolynomial out;
    for_each_permutation(n, [&](const Permutation& sigma) {
        if (matching_of(sigma) != m) return;
        const auto p = static_cast<int>(count_vincular(sigma, VincularKind::TwoThen31));
        const auto q = static_cast<int>(count_vincular(sigma, VincularKind::ThirtyOneThen2));
        out.add_monomial(p, q, 1);
    });
    return out;
}

bool multivariate_evaluation_agrees(int n, const DescentMatching& m,
                                    const std::vector<int>& sig, int trials,
                                    uint64_t seed) {
    // Per-value occurrence counts of each fiber member, computed once.
    std::vector<std::vector<std::pair<int, int>>> fiber;
    for_each_permutation(n, [&](const Permutation& sigma) {
        if (matching_of(sigma) != m) return;
        std::vector<std::pair<int, int>> counts(static_cast<size_t>(n));
        for (int i = 1; i <= n; ++i)
            counts[static_cast<size_t>(i) - 1] = {
                static_cast<int>(count_vincular(sigma, VincularKind::TwoThen31, i)),
                static_cast<int>(count_vincular(sigma, VincularKind::ThirtyOneThen2, i))};
        fiber.push_back(std::move(counts));
    });

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> draw(1, 30);
    const auto ipow = [](BigInt base, int e) {
        BigInt r = 1;
        for (int k = 0; k < e; ++k) r *= base;
        return r;
    };
    for (int t = 0; t < trials; ++t) {
        std::vector<int> p(static_cast<size_t>(n)), q(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) p[static_cast<size_t>(i)] = draw(rng);
        for (int i = 0; i < n; ++i) q[static_cast<size_t>(i)] = draw(rng);
        BigInt lhs = 0;
        for (const auto& counts : fiber) {
            BigInt term = 1;
            for (int i = 0; i < n; ++i)
                term *= ipow(p[static_cast<size_t>(i)], counts[static_cast<size_t>(i)].first) *
                        ipow(q[static_cast<size_t>(i)], counts[static_cast<size_t>(i)].second);
            lhs += term;
        }
        BigInt rhs = 1;
        for (int i = 0; i < n; ++i) {
            BigInt bracket = 0;
            for (int a = 0; a < sig[static_cast<size_t>(i)]; ++a)
                bracket += ipow(p[static_cast<size_t>(i)], a) *
                           ipow(q[static_cast<size_t>(i)], sig[static_cast<size_t>(i)] - 1 - a);
            rhs *= bracket;
        }
        if (lhs != rhs) return false;
    }
    return true;
}

bool multivariate_identity_check(int n, const DescentMatching& m, int trials,
                                 uint64_t seed, int bound) {
    if (n > bound) throw std::invalid_argument("multivariate_identity_check: n exceeds bound");
    return multivariate_evaluation_agrees(n, m, signature(n, m), trials, seed);
}

bool lemma_sum_check(const Permutation& sigma, int i) {
    const int n = sigma.size();
    if (i < 1 || i > n) throw std::invalid_argument("lemma_sum_check: i out of range");
    const DescentMatching m = matching_of(sigma);
    const std::vector<int> h = signature(n, m);
    const long long lhs = count_vincular(sigma, VincularKind::TwoThen31, i) +
                          count_vincular(sigma, VincularKind::ThirtyOneThen2, i);
    return lhs == h[static_cast<size_t>(i) - 1] - 1;
}

Permutation fv_decode(int n, const DescentMatching& m, const std::vector<int>& labels) {
    check_realize_bounds(n, m);
    const std::vector<int> h = signature(n, m);
    if (static_cast<int>(labels.size()) != n)
        throw std::invalid_argument("fv_decode: label sequence must have length n");
    for (int i = 1; i <= n; ++i) {
        const int c = labels[static_cast<size_t>(i) - 1];
        if (c < 1 || c > h[static_cast<size_t>(i) - 1])
            throw std::invalid_argument("fv_decode: label out of range at index " + std::to_string(i));
    }

    std::vector<int> tokens{0};  // 0 = placeholder
    for (int i = 1; i <= n; ++i) {
        const MotzkinStep kind = step_for(m, i);
        const int hi = h[static_cast<size_t>(i) - 1];
        const int placeholders = static_cast<int>(std::count(tokens.begin(), tokens.end(), 0));
        // Restricted-history condition: cases l_ and d carry one extra
        // placeholder (the rightmost, which the label can never select).
        const bool extra = kind == MotzkinStep::LevelSub || kind == MotzkinStep::Down;
        if (placeholders != hi + (extra ? 1 : 0))
            throw std::logic_error("fv_decode: placeholder count mismatch at value " +
                                   std::to_string(i));
        if (tokens.back() != 0)
            throw std::logic_error("fv_decode: rightmost token is not a placeholder");

        const int c = labels[static_cast<size_t>(i) - 1];
        int seen = 0;
        size_t pos = 0;
        for (; pos < tokens.size(); ++pos) {
            if (tokens[pos] == 0 && ++seen == c) break;
        }
        if (extra && pos + 1 == tokens.size())
            throw std::logic_error("fv_decode: label selected the rightmost placeholder");
        switch (kind) {
            case MotzkinStep::Up:  // ◦ -> ◦ i ◦
                tokens[pos] = i;
                tokens.insert(tokens.begin() + static_cast<long>(pos), 0);
                tokens.insert(tokens.begin() + static_cast<long>(pos) + 2, 0);
                break;
            case MotzkinStep::LevelStar:  // ◦ -> i ◦
                tokens[pos] = i;
                tokens.insert(tokens.begin() + static_cast<long>(pos) + 1, 0);
                break;
            case MotzkinStep::LevelSub:  // ◦ -> ◦ i
                tokens[pos] = i;
                tokens.insert(tokens.begin() + static_cast<long>(pos), 0);
                break;
            case MotzkinStep::Down:  // ◦ -> i
                tokens[pos] = i;
                break;
        }
    }
    if (tokens.back() != 0) throw std::logic_error("fv_decode: missing trailing placeholder");
    tokens.pop_back();
    if (std::count(tokens.begin(), tokens.end(), 0) != 0)
        throw std::logic_error("fv_decode: interior placeholder left over");
    return Permutation::unchecked(std::move(tokens));
}

std::pair<DescentMatching, std::vector<int>> fv_encode(const Permutation& sigma) {
    const int n = sigma.size();
    std::vector<int> tokens = sigma.word();
    tokens.push_back(0);
    std::vector<int> labels(static_cast<size_t>(n), 0);
    for (int i = n; i >= 1; --i) {
        const auto it = std::find(tokens.begin(), tokens.end(), i);
        const auto pos = static_cast<size_t>(it - tokens.begin());
        const bool left = pos > 0 && tokens[pos - 1] == 0;
        const bool right = pos + 1 < tokens.size() && tokens[pos + 1] == 0;
        size_t first, last;  // the block s_i to collapse into one placeholder
        if (left && right) {
            first = pos - 1;
            last = pos + 1;
        } else if (right) {
            first = pos;
            last = pos + 1;
        } else if (left) {
            first = pos - 1;
            last = pos;
        } else {
            first = last = pos;
        }
        tokens[first] = 0;
        tokens.erase(tokens.begin() + static_cast<long>(first) + 1,
                     tokens.begin() + static_cast<long>(last) + 1);
        int rank = 0;
        for (size_t j = 0; j <= first; ++j)
            if (tokens[j] == 0) ++rank;
        labels[static_cast<size_t>(i) - 1] = rank;
    }
    return {matching_of(sigma), labels};
}

LaguerreHistory make_history(int n, const DescentMatching& m, const std::vector<int>& labels) {
    LaguerreHistory hist;
    hist.w = motzkin_word(n, m);
    hist.h = signature(n, m);
    if (static_cast<int>(labels.size()) != n)
        throw std::invalid_argument("history: label sequence must have length n");
    for (int i = 0; i < n; ++i) {
        if (labels[static_cast<size_t>(i)] < 1 ||
            labels[static_cast<size_t>(i)] > hist.h[static_cast<size_t>(i)])
            throw std::invalid_argument("history: label out of range at index " +
                                        std::to_string(i + 1));
    }
    hist.c = labels;
    return hist;
}

namespace {

std::string step_text(MotzkinStep s) {
    switch (s) {
        case MotzkinStep::Up: return "u";
        case MotzkinStep::LevelStar: return "l*";
        case MotzkinStep::LevelSub: return "l_";
        case MotzkinStep::Down: return "d";
    }
    return "?";
}

MotzkinStep step_from_text(const std::string& s) {
    if (s == "u") return MotzkinStep::Up;
    if (s == "l*") return MotzkinStep::LevelStar;
    if (s == "l_") return MotzkinStep::LevelSub;
    if (s == "d") return MotzkinStep::Down;
    throw std::invalid_argument("unknown 2-Motzkin step: " + s);
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    if (s.empty()) return out;
    size_t pos = 0;
    while (true) {
        size_t comma = s.find(',', pos);
        if (comma == std::string::npos) {
            out.push_back(s.substr(pos));
            break;
        }
        out.push_back(s.substr(pos, comma - pos));
        pos = comma + 1;
    }
    return out;
}

}  // namespace

std::string format_history(const LaguerreHistory& hist) {
    std::string out = "w=";
    for (size_t i = 0; i < hist.w.size(); ++i) {
        if (i) out += ',';
        out += step_text(hist.w[i]);
    }
    out += ";h=";
    for (size_t i = 0; i < hist.h.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(hist.h[i]);
    }
    out += ";c=";
    for (size_t i = 0; i < hist.c.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(hist.c[i]);
    }
    return out;
}

LaguerreHistory parse_history(const std::string& text) {
    const auto s1 = text.find(';');
    const auto s2 = text.find(';', s1 == std::string::npos ? s1 : s1 + 1);
    if (s1 == std::string::npos || s2 == std::string::npos || text.rfind("w=", 0) != 0 ||
        text.compare(s1 + 1, 2, "h=") != 0 || text.compare(s2 + 1, 2, "c=") != 0)
        throw std::invalid_argument("history text must look like \"w=...;h=...;c=...\"");
    LaguerreHistory hist;
    for (const auto& tok : split_list(text.substr(2, s1 - 2)))
        hist.w.push_back(step_from_text(tok));
    for (const auto& tok : split_list(text.substr(s1 + 3, s2 - s1 - 3)))
        hist.h.push_back(std::stoi(tok));
    for (const auto& tok : split_list(text.substr(s2 + 3)))
        hist.c.push_back(std::stoi(tok));
    if (hist.w.size() != hist.h.size() || hist.w.size() != hist.c.size())
        throw std::invalid_argument("history: w, h, c must have equal length");
    return hist;
}

}  // namespace permdes
