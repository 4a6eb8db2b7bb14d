#include "permdes/perm.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace permdes {

namespace {

void validate_word(const std::vector<int>& w) {
    const int n = static_cast<int>(w.size());
    std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
    for (int v : w) {
        if (v < 1 || v > n)
            throw std::invalid_argument("permutation value out of range 1..n: " + std::to_string(v));
        if (seen[static_cast<size_t>(v)])
            throw std::invalid_argument("duplicate permutation value: " + std::to_string(v));
        seen[static_cast<size_t>(v)] = 1;
    }
}

}  // namespace

Permutation::Permutation(std::vector<int> values) {
    validate_word(values);
    word_ = std::move(values);
}

Permutation Permutation::unchecked(std::vector<int> values) {
    Permutation p;
    p.word_ = std::move(values);
    return p;
}

Permutation make_permutation(const std::vector<int>& values) {
    return Permutation(values);
}

Permutation symmetry(const Permutation& sigma, Symmetry kind) {
    const int n = sigma.size();
    std::vector<int> out(static_cast<size_t>(n));
    switch (kind) {
        case Symmetry::Reverse:
            for (int i = 1; i <= n; ++i) out[static_cast<size_t>(i) - 1] = sigma.at(n + 1 - i);
            break;
        case Symmetry::Complement:
            for (int i = 1; i <= n; ++i) out[static_cast<size_t>(i) - 1] = n + 1 - sigma.at(i);
            break;
        case Symmetry::Inverse:
            for (int i = 1; i <= n; ++i) out[static_cast<size_t>(sigma.at(i)) - 1] = i;
            break;
        case Symmetry::ReverseComplement:
            for (int i = 1; i <= n; ++i) out[static_cast<size_t>(i) - 1] = n + 1 - sigma.at(n + 1 - i);
            break;
    }
    return Permutation::unchecked(std::move(out));
}

Permutation direct_sum(const Permutation& sigma, const Permutation& tau) {
    std::vector<int> out = sigma.word();
    const int shift = sigma.size();
    for (int v : tau.word()) out.push_back(v + shift);
    return Permutation::unchecked(std::move(out));
}

Permutation skew_sum(const Permutation& sigma, const Permutation& tau) {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(sigma.size() + tau.size()));
    const int shift = tau.size();
    for (int v : sigma.word()) out.push_back(v + shift);
    for (int v : tau.word()) out.push_back(v);
    return Permutation::unchecked(std::move(out));
}

Permutation inflate(const Permutation& sigma, const std::vector<Permutation>& blocks) {
    const int n = sigma.size();
    if (static_cast<int>(blocks.size()) != n)
        throw std::invalid_argument("inflate: block count must equal |sigma|");
    for (const auto& b : blocks)
        if (b.empty()) throw std::invalid_argument("inflate: blocks must be nonempty");

    // offset[i] = total size of blocks at positions j with sigma(j) < sigma(i)
    std::vector<int> offset(static_cast<size_t>(n), 0);
    for (int i = 1; i <= n; ++i) {
        int off = 0;
        for (int j = 1; j <= n; ++j)
            if (sigma.at(j) < sigma.at(i)) off += blocks[static_cast<size_t>(j) - 1].size();
        offset[static_cast<size_t>(i) - 1] = off;
    }
    std::vector<int> out;
    for (int i = 1; i <= n; ++i)
        for (int v : blocks[static_cast<size_t>(i) - 1].word())
            out.push_back(v + offset[static_cast<size_t>(i) - 1]);
    return Permutation::unchecked(std::move(out));
}

StatProfile stat_profile(const Permutation& sigma) {
    const int n = sigma.size();
    StatProfile s;
    for (int i = 1; i < n; ++i) {
        const int a = sigma.at(i), b = sigma.at(i + 1);
        if (a > b) {
            s.des.push_back(i);
            s.destop.push_back(a);
            s.desbot.push_back(b);
        } else {
            s.asc.push_back(i);
            s.ascbot.push_back(a);
            s.asctop.push_back(b);
        }
    }
    int mx = 0;
    for (int i = 1; i <= n; ++i)
        if (sigma.at(i) > mx) { mx = sigma.at(i); s.lrmax.push_back(mx); }
    int mn = n + 1;
    for (int i = 1; i <= n; ++i)
        if (sigma.at(i) < mn) { mn = sigma.at(i); s.lrmin.push_back(mn); }
    mx = 0;
    for (int i = n; i >= 1; --i)
        if (sigma.at(i) > mx) { mx = sigma.at(i); s.rlmax.push_back(mx); }
    mn = n + 1;
    for (int i = n; i >= 1; --i)
        if (sigma.at(i) < mn) { mn = sigma.at(i); s.rlmin.push_back(mn); }

    for (auto* v : {&s.destop, &s.desbot, &s.asctop, &s.ascbot, &s.rlmax, &s.rlmin})
        std::sort(v->begin(), v->end());
    std::set_intersection(s.destop.begin(), s.destop.end(), s.asctop.begin(), s.asctop.end(),
                          std::back_inserter(s.peak));
    std::set_intersection(s.desbot.begin(), s.desbot.end(), s.ascbot.begin(), s.ascbot.end(),
                          std::back_inserter(s.valley));
    return s;
}

Permutation flatten(const std::vector<int>& values) {
    std::vector<int> sorted = values;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> out;
    out.reserve(values.size());
    for (int v : values) {
        const auto it = std::lower_bound(sorted.begin(), sorted.end(), v);
        out.push_back(static_cast<int>(it - sorted.begin()) + 1);
    }
    return Permutation(std::move(out));
}

Permutation parse_permutation(const std::string& text) {
    if (text.empty()) return Permutation();
    std::vector<int> vals;
    if (text.find(',') == std::string::npos) {
        // compact all-digits form, n <= 9
        for (char ch : text) {
            if (ch < '1' || ch > '9')
                throw std::invalid_argument("invalid character in compact permutation: " + text);
            vals.push_back(ch - '0');
        }
        if (vals.size() > 9)
            throw std::invalid_argument("compact permutation form limited to n <= 9");
    } else {
        size_t pos = 0;
        while (pos <= text.size()) {
            size_t comma = text.find(',', pos);
            if (comma == std::string::npos) comma = text.size();
            const std::string tok = text.substr(pos, comma - pos);
            try {
                size_t used = 0;
                const int v = std::stoi(tok, &used);
                if (used != tok.size()) throw std::invalid_argument(tok);
                vals.push_back(v);
            } catch (const std::exception&) {
                throw std::invalid_argument("invalid permutation entry: '" + tok + "'");
            }
            pos = comma + 1;
            if (comma == text.size()) break;
        }
    }
    return Permutation(std::move(vals));
}

std::string format_permutation(const Permutation& sigma) {
    std::string out;
    for (int i = 1; i <= sigma.size(); ++i) {
        if (i > 1) out += ',';
        out += std::to_string(sigma.at(i));
    }
    return out;
}

}  // namespace permdes
