#pragma once

#include <string>
#include <vector>

namespace permdes {

/// A permutation of 1..n in one-line notation. Values and positions are
/// 1-based throughout; the empty permutation (n = 0) is a valid value.
class Permutation {
public:
    Permutation() = default;

    /// Validating constructor: `values` must be a rearrangement of 1..n.
    /// Throws std::invalid_argument on duplicates or out-of-range entries.
    explicit Permutation(std::vector<int> values);

    /// Construction bypassing validation, for internal enumeration loops
    /// that generate known-valid words.
    static Permutation unchecked(std::vector<int> values);

    int size() const { return static_cast<int>(word_.size()); }
    bool empty() const { return word_.empty(); }

    /// 1-based access: at(i) = sigma(i), 1 <= i <= n.
    int at(int i) const { return word_[static_cast<size_t>(i) - 1]; }

    const std::vector<int>& word() const { return word_; }

    bool operator==(const Permutation& o) const = default;
    bool operator<(const Permutation& o) const { return word_ < o.word_; }

private:
    std::vector<int> word_;
};

enum class Symmetry { Reverse, Complement, Inverse, ReverseComplement };

/// All descent/ascent-derived statistic sets of a permutation, computed in
/// one pass. Position sets (des, asc) and value sets are sorted ascending.
struct StatProfile {
    std::vector<int> des, asc;                      // positions
    std::vector<int> destop, desbot, asctop, ascbot; // values
    std::vector<int> peak, valley;                   // destop∩asctop, desbot∩ascbot
    std::vector<int> lrmax, lrmin, rlmax, rlmin;     // values
};

Permutation make_permutation(const std::vector<int>& values);

Permutation symmetry(const Permutation& sigma, Symmetry kind);

Permutation direct_sum(const Permutation& sigma, const Permutation& tau);
Permutation skew_sum(const Permutation& sigma, const Permutation& tau);

/// Inflation sigma[blocks[0], ..., blocks[n-1]]. Every block must be
/// nonempty and |blocks| must equal |sigma|.
Permutation inflate(const Permutation& sigma, const std::vector<Permutation>& blocks);

StatProfile stat_profile(const Permutation& sigma);

/// The permutation order-isomorphic to an arbitrary sequence of distinct
/// integers (pattern of the sequence).
Permutation flatten(const std::vector<int>& values);

/// Text format: comma-separated 1-based values ("4,5,3,6,8,7,9,2,1").
/// A compact all-digits form ("453687921") is accepted when n <= 9.
/// The empty permutation serializes as the empty string.
Permutation parse_permutation(const std::string& text);
std::string format_permutation(const Permutation& sigma);

}  // namespace permdes
