#include "permdes/bijections.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

#include "permdes/pattern.hpp"

namespace permdes {

namespace {

const Permutation& pat132() { static const Permutation p({1, 3, 2}); return p; }
const Permutation& pat231() { static const Permutation p({2, 3, 1}); return p; }
const Permutation& pat312() { static const Permutation p({3, 1, 2}); return p; }

void require_avoids(const Permutation& sigma, const Permutation& pat, const char* name) {
    if (contains(sigma, pat))
        throw std::invalid_argument(std::string("input does not avoid ") + name);
}

// Split around the maximum entry: (entries before max, entries after max),
// both flattened to patterns.
std::pair<Permutation, Permutation> split_at_max(const Permutation& sigma) {
    const int n = sigma.size();
    int p = 1;
    while (sigma.at(p) != n) ++p;
    std::vector<int> left(sigma.word().begin(), sigma.word().begin() + (p - 1));
    std::vector<int> right(sigma.word().begin() + p, sigma.word().end());
    return {flatten(left), flatten(right)};
}

// Split around the last entry e: (entries with value > e, entries with
// value < e), both flattened.
std::pair<Permutation, Permutation> split_at_last(const Permutation& sigma) {
    const int e = sigma.at(sigma.size());
    std::vector<int> above, below;
    for (int i = 1; i < sigma.size(); ++i) {
        if (sigma.at(i) > e) above.push_back(sigma.at(i));
        else below.push_back(sigma.at(i));
    }
    return {flatten(above), flatten(below)};
}

std::vector<int> shifted(const Permutation& p, int by) {
    std::vector<int> out = p.word();
    for (int& v : out) v += by;
    return out;
}

std::vector<int> concat(std::vector<int> a, const std::vector<int>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

// Explicit work-stack evaluator for the structural recursions. expand maps
// a nonempty permutation to (case tag, left sub-block, right sub-block);
// combine rebuilds the image from the children's images.
template <typename Expand, typename Combine>
Permutation run_recursion(const Permutation& input, Expand expand, Combine combine) {
    struct Frame {
        Permutation in;
        int stage = 0;  // 1 = waiting for left child, 2 = waiting for right
        int tag = 0;
        Permutation right_block;
        Permutation left_result, right_result;
    };
    std::vector<Frame> st;
    st.push_back(Frame{input});
    Permutation ret;
    bool have_result = false;
    while (!st.empty()) {
        Frame& f = st.back();
        if (have_result) {
            if (f.stage == 1) {
                f.left_result = std::move(ret);
                f.stage = 2;
                have_result = false;
                const Permutation child = f.right_block;
                st.push_back(Frame{child});
            } else {
                f.right_result = std::move(ret);
                ret = combine(f.tag, f.in.size(), f.left_result, f.right_result);
                st.pop_back();
            }
            continue;
        }
        if (f.in.empty()) {
            ret = Permutation();
            have_result = true;
            st.pop_back();
            continue;
        }
        auto [tag, left, right] = expand(f.in);
        f.tag = tag;
        f.right_block = std::move(right);
        f.stage = 1;
        const Permutation child = std::move(left);
        st.push_back(Frame{child});
    }
    return ret;
}

}  // namespace

BlockDecomposition decompose(const Permutation& sigma, BlockScheme scheme) {
    if (sigma.empty()) throw std::invalid_argument("decompose: empty permutation");
    BlockDecomposition d;
    d.scheme = scheme;
    const int n = sigma.size();
    std::vector<int> recomposed;
    switch (scheme) {
        case BlockScheme::Av132As231Blocks:
            require_avoids(sigma, pat132(), "132");
            std::tie(d.left, d.right) = split_at_max(sigma);
            recomposed = concat(concat(shifted(d.left, d.right.size()), {n}), d.right.word());
            break;
        case BlockScheme::Av231As132Blocks:
            require_avoids(sigma, pat231(), "231");
            std::tie(d.left, d.right) = split_at_max(sigma);
            recomposed = concat(concat(d.left.word(), {n}), shifted(d.right, d.left.size()));
            break;
        case BlockScheme::Av132As312Blocks:
            require_avoids(sigma, pat132(), "132");
            std::tie(d.left, d.right) = split_at_last(sigma);
            recomposed = concat(shifted(d.left, d.right.size() + 1), d.right.word());
            recomposed.push_back(d.right.size() + 1);
            break;
        case BlockScheme::Av312As132Blocks:
            require_avoids(sigma, pat312(), "312");
            // 132 template: left block is the bottom interval, right the top.
            std::tie(d.right, d.left) = split_at_last(sigma);
            recomposed = concat(d.left.word(), shifted(d.right, d.left.size() + 1));
            recomposed.push_back(d.left.size() + 1);
            break;
    }
    // Uniqueness of the template split: recomposition must reproduce sigma.
    if (recomposed != sigma.word())
        throw std::logic_error("decompose: template recomposition mismatch");
    return d;
}

Permutation phi_des(const Permutation& sigma) {
    require_avoids(sigma, pat132(), "132");
    return run_recursion(
        sigma,
        [](const Permutation& s) {
            auto [l, r] = split_at_max(s);
            return std::tuple<int, Permutation, Permutation>(0, std::move(l), std::move(r));
        },
        [](int, int n, const Permutation& l, const Permutation& r) {
            // 132[phi(l), 1, phi(r)]
            auto word = concat(l.word(), {n});
            return Permutation::unchecked(concat(std::move(word), shifted(r, l.size())));
        });
}

Permutation phi_des_inverse(const Permutation& sigma) {
    require_avoids(sigma, pat231(), "231");
    return run_recursion(
        sigma,
        [](const Permutation& s) {
            auto [l, r] = split_at_max(s);
            return std::tuple<int, Permutation, Permutation>(0, std::move(l), std::move(r));
        },
        [](int, int n, const Permutation& l, const Permutation& r) {
            // 231[inv(l), 1, inv(r)]
            auto word = concat(shifted(l, r.size()), {n});
            return Permutation::unchecked(concat(std::move(word), r.word()));
        });
}

Permutation phi_destop(const Permutation& sigma) {
    require_avoids(sigma, pat132(), "132");
    return run_recursion(
        sigma,
        [](const Permutation& s) {
            auto [l, r] = split_at_max(s);
            const int tag = r.empty() ? 1 : (l.empty() ? 2 : 0);
            return std::tuple<int, Permutation, Permutation>(tag, std::move(l), std::move(r));
        },
        [](int tag, int n, const Permutation& l, const Permutation& r) {
            if (tag == 1)  // sigma = l ⊕ 1
                return Permutation::unchecked(concat(l.word(), {n}));
            if (tag == 2)  // sigma = 1 ⊖ r
                return Permutation::unchecked(concat({n}, r.word()));
            // both nonempty: 132[Phi(r), 1, Phi(l)]
            auto word = concat(r.word(), {n});
            return Permutation::unchecked(concat(std::move(word), shifted(l, r.size())));
        });
}

Permutation phi_destop_inverse(const Permutation& sigma) {
    require_avoids(sigma, pat231(), "231");
    return run_recursion(
        sigma,
        [](const Permutation& s) {
            auto [l, r] = split_at_max(s);
            const int tag = r.empty() ? 1 : (l.empty() ? 2 : 0);
            return std::tuple<int, Permutation, Permutation>(tag, std::move(l), std::move(r));
        },
        [](int tag, int n, const Permutation& l, const Permutation& r) {
            if (tag == 1) return Permutation::unchecked(concat(l.word(), {n}));
            if (tag == 2) return Permutation::unchecked(concat({n}, r.word()));
            // forward was 132[Phi(sigma''), 1, Phi(sigma')], so l = image of
            // the right block and r = image of the left one: 231[inv(r), 1, inv(l)]
            auto word = concat(shifted(r, l.size()), {n});
            return Permutation::unchecked(concat(std::move(word), l.word()));
        });
}

Permutation psi_destop(const Permutation& sigma) {
    require_avoids(sigma, pat132(), "132");
    return run_recursion(
        sigma,
        [](const Permutation& s) {
            auto [l, r] = split_at_last(s);
            return std::tuple<int, Permutation, Permutation>(0, std::move(l), std::move(r));
        },
        [](int, int, const Permutation& l, const Permutation& r) {
            // 132[Psi(r), Psi(l), 1]
            auto word = concat(r.word(), shifted(l, r.size() + 1));
            word.push_back(r.size() + 1);
            return Permutation::unchecked(std::move(word));
        });
}

Permutation psi_destop_inverse(const Permutation& sigma) {
    require_avoids(sigma, pat312(), "312");
    return run_recursion(
        sigma,
        [](const Permutation& s) {
            auto [l, r] = split_at_last(s);
            return std::tuple<int, Permutation, Permutation>(0, std::move(l), std::move(r));
        },
        [](int, int, const Permutation& l, const Permutation& r) {
            // y = 132[a, b, 1] with a = Psi(sigma''), b = Psi(sigma'); here
            // l = a's preimage side: split_at_last on Av(312) gives
            // l = values above e (= b), r = values below e (= a).
            // Rebuild 312[inv(l), inv(r), 1].
            auto word = concat(shifted(l, r.size() + 1), r.word());
            word.push_back(r.size() + 1);
            return Permutation::unchecked(std::move(word));
        });
}

}  // namespace permdes
