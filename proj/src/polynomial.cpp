#include "permdes/polynomial.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace permdes {

DistPolynomial DistPolynomial::constant(long long c) {
    DistPolynomial p;
    p.add_monomial(0, 0, c);
    return p;
}

DistPolynomial DistPolynomial::bracket(int i) {
    if (i < 1) throw std::invalid_argument("bracket: index must be >= 1");
    DistPolynomial p;
    for (int a = 0; a < i; ++a) p.add_monomial(a, i - 1 - a, 1);
    return p;
}

void DistPolynomial::add_monomial(int pdeg, int qdeg, const BigInt& coeff) {
    if (coeff == 0) return;
    auto key = std::make_pair(pdeg, qdeg);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

DistPolynomial& DistPolynomial::operator+=(const DistPolynomial& o) {
    for (const auto& [key, c] : o.terms_) add_monomial(key.first, key.second, c);
    return *this;
}

DistPolynomial DistPolynomial::operator*(const DistPolynomial& o) const {
    DistPolynomial out;
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : o.terms_)
            out.add_monomial(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return out;
}

BigInt DistPolynomial::coeff(int pdeg, int qdeg) const {
    auto it = terms_.find(std::make_pair(pdeg, qdeg));
    return it == terms_.end() ? BigInt(0) : it->second;
}

std::string DistPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    // decreasing p-degree, then increasing q-degree
    std::vector<std::pair<std::pair<int, int>, BigInt>> mono(terms_.begin(), terms_.end());
    std::sort(mono.begin(), mono.end(), [](const auto& a, const auto& b) {
        if (a.first.first != b.first.first) return a.first.first > b.first.first;
        return a.first.second < b.first.second;
    });
    std::string out;
    bool first = true;
    for (const auto& [key, c] : mono) {
        const auto [pd, qd] = key;
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (first) {
            if (c < 0) out += "-";
            first = false;
        } else {
            out += c < 0 ? " - " : " + ";
        }
        std::string vars;
        if (pd > 0) vars += pd == 1 ? "p" : "p^" + std::to_string(pd);
        if (qd > 0) {
            if (!vars.empty()) vars += ' ';
            vars += qd == 1 ? "q" : "q^" + std::to_string(qd);
        }
        if (vars.empty()) {
            out += mag.str();
        } else if (mag == 1) {
            out += vars;
        } else {
            out += mag.str() + " " + vars;
        }
    }
    return out;
}

}  // namespace permdes
