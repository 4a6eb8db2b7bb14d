#pragma once

#include "permdes/perm.hpp"

namespace permdes {

/// The block-decomposition templates used by the recursive bijections on
/// S_3 avoidance classes.
enum class BlockScheme {
    Av132As231Blocks,  // sigma in Av(132): sigma = 231[left, 1, right]
    Av231As132Blocks,  // sigma in Av(231): sigma = 132[left, 1, right]
    Av132As312Blocks,  // sigma in Av(132): sigma = 312[left, right, 1]
    Av312As132Blocks,  // sigma in Av(312): sigma = 132[left, right, 1]
};

struct BlockDecomposition {
    BlockScheme scheme;
    Permutation left;
    Permutation right;
};

/// Splits a nonempty avoider into its unique (left, right) blocks under the
/// scheme's template. The distinguished singleton is the maximum entry
/// (231/132 templates) or the last entry (312-style templates). Throws if
/// sigma is empty or does not avoid the scheme's pattern.
BlockDecomposition decompose(const Permutation& sigma, BlockScheme scheme);

/// The Des-preserving bijection Av(132) -> Av(231) and its inverse.
Permutation phi_des(const Permutation& sigma);
Permutation phi_des_inverse(const Permutation& sigma);

/// The Destop-preserving bijection Av(132) -> Av(231) (three-case
/// recursion: blocks swap sides only when both are nonempty) and inverse.
Permutation phi_destop(const Permutation& sigma);
Permutation phi_destop_inverse(const Permutation& sigma);

/// The Destop-preserving bijection Av(132) -> Av(312); preserves the
/// rightmost entry. And its inverse.
Permutation psi_destop(const Permutation& sigma);
Permutation psi_destop_inverse(const Permutation& sigma);

}  // namespace permdes
