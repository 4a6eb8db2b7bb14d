#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include "permdes/perm.hpp"

namespace permdes {

/// Ferrers board: weakly decreasing positive row lengths, rows numbered
/// bottom-up. Cell (column i, row r) belongs to the board iff i <= rows[r-1].
struct FerrersBoard {
    std::vector<int> rows;

    int height() const { return static_cast<int>(rows.size()); }
    int row_len(int r) const { return rows[static_cast<size_t>(r) - 1]; }
    bool operator==(const FerrersBoard&) const = default;
    bool operator<(const FerrersBoard& o) const { return rows < o.rows; }
};

FerrersBoard make_board(std::vector<int> rows);

/// Board-respecting permutation filling: perm.at(i) is the row of the 1
/// in column i (rows bottom-up), so the cell constraint is
/// i <= row_len(perm.at(i)).
struct Traversal {
    FerrersBoard board;
    Permutation perm;
};

/// True iff the board admits a traversal: square corner (lambda_1 = k) and
/// contains the staircase (lambda_i >= k+1-i).
bool is_traversable(const FerrersBoard& board);

/// All traversals in lexicographic order of the filling permutation.
/// Callback may return bool (false stops early) or void.
template <typename F>
void for_each_traversal(const FerrersBoard& board, F&& f);

std::vector<Traversal> traversals(const FerrersBoard& board);

/// Submatrix pattern containment: some columns whose rows form pat, with
/// every selected (column, row) pair a cell of the board. For a bottom-left
/// justified board this reduces to the corner test
/// row_len(max selected row) >= max selected column.
bool traversal_contains(const Traversal& t, const Permutation& pat);

/// The F-separation: separators after the multiplicity boundaries of
/// distinct row lengths, with the four board-aware statistic sets.
struct FSeparation {
    std::vector<int> cut_positions;  // i_j = k_1 + ... + k_j; last equals k
    std::vector<int> destop, desbot, asctop, ascbot;
};

FSeparation f_separation(const Traversal& t);

/// All traversable boards of height k <= kmax, each once, in (k, then
/// lexicographic row sequence) order.
std::vector<FerrersBoard> boards_up_to(int kmax);

enum class FStat { DestopF, DesbotF, AsctopF, AscbotF };

/// Shape-Wilf count comparison; nullopt means the counts agree on every
/// traversable board up to kmax, otherwise the first failing board.
std::optional<FerrersBoard> shape_wilf_count_check(const Permutation& pat1,
                                                   const Permutation& pat2, int kmax);

/// st-shape-Wilf comparison via multiset equality of the statistic over
/// Av_F on each board.
std::optional<FerrersBoard> st_shape_wilf_check(const Permutation& pat1,
                                                const Permutation& pat2, FStat st,
                                                int kmax);

/// Joint (Destop_F, Desbot_F) multiset comparison.
std::optional<FerrersBoard> joint_shape_wilf_check(const Permutation& pat1,
                                                   const Permutation& pat2, int kmax);

/// Board text format: comma-separated row lengths bottom-up, "6,6,5,5,3,3".
FerrersBoard parse_board(const std::string& text);
std::string format_board(const FerrersBoard& board);

// --- implementation ---

namespace detail {

template <typename F>
bool traversal_rec(const FerrersBoard& board, std::vector<int>& word, uint32_t used, F& f) {
    const int k = board.height();
    const int c = static_cast<int>(word.size()) + 1;  // current column, left to right
    if (c > k) {
        Traversal t{board, Permutation::unchecked(word)};
        if constexpr (std::is_same_v<decltype(f(t)), bool>) {
            return f(t);
        } else {
            f(t);
            return true;
        }
    }
    for (int r = 1; r <= k; ++r) {
        if (used & (1u << r)) continue;
        if (board.row_len(r) < c) continue;  // the 1 must lie inside the board
        word.push_back(r);
        const bool go = traversal_rec(board, word, used | (1u << r), f);
        word.pop_back();
        if (!go) return false;
    }
    return true;
}

}  // namespace detail

template <typename F>
void for_each_traversal(const FerrersBoard& board, F&& f) {
    std::vector<int> rows;
    rows.reserve(static_cast<size_t>(board.height()));
    detail::traversal_rec(board, rows, 0, f);
}

}  // namespace permdes
