#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "permdes/matching.hpp"
#include "permdes/perm.hpp"
#include "permdes/polynomial.hpp"

namespace permdes {

/// 2-Motzkin steps: u = (1,1), l* and l_ = (1,0), d = (1,-1).
enum class MotzkinStep { Up, LevelStar, LevelSub, Down };

/// Restricted Laguerre history: 2-Motzkin word w, signature/height sequence
/// h, and labels c with 1 <= c_i <= h_i.
struct LaguerreHistory {
    std::vector<MotzkinStep> w;
    std::vector<int> h;
    std::vector<int> c;

    bool operator==(const LaguerreHistory&) const = default;
};

/// The signature sequence sg(i) = |B_{<i}| - |T_{<=i}| + 1 for i = 1..n.
std::vector<int> signature(int n, const DescentMatching& m);

/// Per-value 2-Motzkin classification: u if i in B\T, l* if i outside B∪T,
/// l_ if i in B∩T, d if i in T\B.
std::vector<MotzkinStep> motzkin_word(int n, const DescentMatching& m);

/// Heights implied by the word w via the two-case rule
/// (height+1 for u/l*, height for l_/d); equals signature(n, m).
std::vector<int> heights_from_word(const std::vector<MotzkinStep>& w);

/// Product of brackets of the signature entries (the closed form of the
/// joint (2-31, 31-2) distribution over the matching's fiber).
DistPolynomial rhs_product(int n, const DescentMatching& m);

/// The same distribution by enumeration of S_n: sum of p^(2-31) q^(31-2)
/// over all permutations with the given matching. Throws when n exceeds
/// the brute-force bound.
DistPolynomial lhs_brute(int n, const DescentMatching& m, int bound = 9);

/// Verifies the 2n-variable identity (per-value refinement) by evaluating
/// both sides at `trials` pseudo-random integer points drawn
/// deterministically from `seed`, over exact integers.
bool multivariate_identity_check(int n, const DescentMatching& m, int trials,
                                 uint64_t seed, int bound = 9);

/// Evaluation core with an explicit signature vector, so tests can feed a
/// deliberately mutated one.
bool multivariate_evaluation_agrees(int n, const DescentMatching& m,
                                    const std::vector<int>& sig, int trials,
                                    uint64_t seed);

/// True iff (2_i-31)sigma + (31-2_i)sigma = sg(i) - 1 with
/// (T,B) = matching_of(sigma).
bool lemma_sum_check(const Permutation& sigma, int i);

/// The modified Françon-Viennot insertion algorithm: builds the unique
/// permutation for (n, T, B, c). Labels must satisfy c_i in [1, sg(i)].
Permutation fv_decode(int n, const DescentMatching& m, const std::vector<int>& labels);

/// Inverse procedure; round-trips with fv_decode.
std::pair<DescentMatching, std::vector<int>> fv_encode(const Permutation& sigma);

LaguerreHistory make_history(int n, const DescentMatching& m, const std::vector<int>& labels);

/// Text format: "w=u,l*,u,...;h=1,1,2,...;c=1,1,1,..." with l* / l_ for the
/// two level steps.
std::string format_history(const LaguerreHistory& hist);
LaguerreHistory parse_history(const std::string& text);

}  // namespace permdes
