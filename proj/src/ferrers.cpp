#include "permdes/ferrers.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace permdes {

namespace {

// Columns are chosen in increasing order; their rows must be
// order-isomorphic to pat, and at the end the corner cell
// (max column, max row) must lie on the board.
bool contains_rec(const std::vector<int>& rows_by_col, const FerrersBoard& board,
                  const std::vector<int>& pat, std::vector<int>& chosen_rows, int k,
                  int from) {
    const int m = static_cast<int>(pat.size());
    if (k == m) {
        const int max_row = *std::max_element(chosen_rows.begin(), chosen_rows.end());
        const int max_col = from;  // last chosen column (columns are picked ascending)
        return board.row_len(max_row) >= max_col;
    }
    int lo = 0, hi = board.height() + 1;
    for (int j = 0; j < k; ++j) {
        if (pat[static_cast<size_t>(j)] < pat[static_cast<size_t>(k)])
            lo = std::max(lo, chosen_rows[static_cast<size_t>(j)]);
        else
            hi = std::min(hi, chosen_rows[static_cast<size_t>(j)]);
    }
    const int ncols = static_cast<int>(rows_by_col.size());
    for (int c = from + 1; c <= ncols; ++c) {
        const int r = rows_by_col[static_cast<size_t>(c) - 1];
        if (r <= lo || r >= hi) continue;
        chosen_rows.push_back(r);
        if (contains_rec(rows_by_col, board, pat, chosen_rows, k + 1, c)) return true;
        chosen_rows.pop_back();
    }
    return false;
}

const std::vector<int>& stat_of(const FSeparation& s, FStat st) {
    switch (st) {
        case FStat::DestopF: return s.destop;
        case FStat::DesbotF: return s.desbot;
        case FStat::AsctopF: return s.asctop;
        case FStat::AscbotF: return s.ascbot;
    }
    throw std::logic_error("unknown F-statistic");
}

}  // namespace

FerrersBoard make_board(std::vector<int> rows) {
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i] <= 0) throw std::invalid_argument("board rows must be positive");
        if (i > 0 && rows[i] > rows[i - 1])
            throw std::invalid_argument("board rows must be weakly decreasing");
    }
    return FerrersBoard{std::move(rows)};
}

bool is_traversable(const FerrersBoard& board) {
    const int k = board.height();
    if (k == 0) return false;
    if (board.row_len(1) != k) return false;
    for (int i = 1; i <= k; ++i)
        if (board.row_len(i) < k + 1 - i) return false;
    return true;
}

std::vector<Traversal> traversals(const FerrersBoard& board) {
    std::vector<Traversal> out;
    for_each_traversal(board, [&](const Traversal& t) { out.push_back(t); });
    return out;
}

bool traversal_contains(const Traversal& t, const Permutation& pat) {
    const int m = pat.size();
    if (m == 0) return true;
    if (t.perm.size() < m) return false;
    std::vector<int> chosen;
    chosen.reserve(static_cast<size_t>(m));
    return contains_rec(t.perm.word(), t.board, pat.word(), chosen, 0, 0);
}

FSeparation f_separation(const Traversal& t) {
    if (!is_traversable(t.board)) throw std::invalid_argument("board is not traversable");
    const int k = t.board.height();
    FSeparation s;
    int pos = 0;
    while (pos < k) {
        const int len = t.board.rows[static_cast<size_t>(pos)];
        int end = pos;
        while (end < k && t.board.rows[static_cast<size_t>(end)] == len) ++end;
        s.cut_positions.push_back(end);  // separator after position `end`
        pos = end;
    }
    const auto cut_after = [&](int i) {
        return std::binary_search(s.cut_positions.begin(), s.cut_positions.end(), i);
    };
    for (int i = 1; i <= k; ++i) {
        const int v = t.perm.at(i);
        if (i < k && !cut_after(i)) {
            if (v > t.perm.at(i + 1)) s.destop.push_back(v);
            else s.ascbot.push_back(v);
        }
        if (cut_after(i)) s.ascbot.push_back(v);  // immediately followed by a separator
        if (i > 1 && !cut_after(i - 1)) {
            if (t.perm.at(i - 1) > v) s.desbot.push_back(v);
            else s.asctop.push_back(v);
        }
        if (i > 1 && cut_after(i - 1)) s.desbot.push_back(v);  // preceded by a separator
    }
    for (auto* v : {&s.destop, &s.desbot, &s.asctop, &s.ascbot})
        std::sort(v->begin(), v->end());
    return s;
}

std::vector<FerrersBoard> boards_up_to(int kmax) {
    if (kmax < 1) throw std::invalid_argument("boards_up_to: kmax must be >= 1");
    std::vector<FerrersBoard> out;
    std::vector<int> rows;
    for (int k = 1; k <= kmax; ++k) {
        rows.assign(1, k);
        // choose rows 2..k with k+1-i <= rows[i-1] <= rows[i-2], ascending for
        // lexicographic output order
        const std::function<void(int)> rec = [&](int i) {
            if (i > k) {
                out.push_back(FerrersBoard{rows});
                return;
            }
            for (int len = k + 1 - i; len <= rows[static_cast<size_t>(i) - 2]; ++len) {
                rows.push_back(len);
                rec(i + 1);
                rows.pop_back();
            }
        };
        rec(2);
    }
    return out;
}

std::optional<FerrersBoard> shape_wilf_count_check(const Permutation& pat1,
                                                   const Permutation& pat2, int kmax) {
    for (const FerrersBoard& board : boards_up_to(kmax)) {
        long long c1 = 0, c2 = 0;
        for_each_traversal(board, [&](const Traversal& t) {
            if (!traversal_contains(t, pat1)) ++c1;
            if (!traversal_contains(t, pat2)) ++c2;
        });
        if (c1 != c2) return board;
    }
    return std::nullopt;
}

std::optional<FerrersBoard> st_shape_wilf_check(const Permutation& pat1,
                                                const Permutation& pat2, FStat st,
                                                int kmax) {
    for (const FerrersBoard& board : boards_up_to(kmax)) {
        std::map<std::vector<int>, long long> d1, d2;
        for_each_traversal(board, [&](const Traversal& t) {
            const bool a1 = !traversal_contains(t, pat1);
            const bool a2 = !traversal_contains(t, pat2);
            if (!a1 && !a2) return;
            const FSeparation s = f_separation(t);
            if (a1) ++d1[stat_of(s, st)];
            if (a2) ++d2[stat_of(s, st)];
        });
        if (d1 != d2) return board;
    }
    return std::nullopt;
}

std::optional<FerrersBoard> joint_shape_wilf_check(const Permutation& pat1,
                                                   const Permutation& pat2, int kmax) {
    for (const FerrersBoard& board : boards_up_to(kmax)) {
        std::map<std::pair<std::vector<int>, std::vector<int>>, long long> d1, d2;
        for_each_traversal(board, [&](const Traversal& t) {
            const bool a1 = !traversal_contains(t, pat1);
            const bool a2 = !traversal_contains(t, pat2);
            if (!a1 && !a2) return;
            const FSeparation s = f_separation(t);
            auto key = std::make_pair(s.destop, s.desbot);
            if (a1) ++d1[key];
            if (a2) ++d2[key];
        });
        if (d1 != d2) return board;
    }
    return std::nullopt;
}

FerrersBoard parse_board(const std::string& text) {
    std::vector<int> rows;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        size_t used = 0;
        const std::string tok = text.substr(pos, comma - pos);
        rows.push_back(std::stoi(tok, &used));
        if (used != tok.size()) throw std::invalid_argument("bad board entry: " + tok);
        pos = comma + 1;
    }
    return make_board(std::move(rows));
}

std::string format_board(const FerrersBoard& board) {
    std::string out;
    for (size_t i = 0; i < board.rows.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(board.rows[i]);
    }
    return out;
}

}  // namespace permdes
