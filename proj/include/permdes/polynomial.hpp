#pragma once

#include <map>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace permdes {

using BigInt = boost::multiprecision::cpp_int;

/// Bivariate integer polynomial in the formal variables p and q. Exact
/// coefficients of unbounded magnitude; zero coefficients are never stored.
class DistPolynomial {
public:
    DistPolynomial() = default;

    static DistPolynomial constant(long long c);

    /// The p,q-integer [i] = (p^i - q^i)/(p - q) = sum of p^a q^b over
    /// a + b = i - 1. Requires i >= 1.
    static DistPolynomial bracket(int i);

    void add_monomial(int pdeg, int qdeg, const BigInt& coeff);

    DistPolynomial& operator+=(const DistPolynomial& o);
    DistPolynomial operator*(const DistPolynomial& o) const;
    bool operator==(const DistPolynomial& o) const = default;

    bool is_zero() const { return terms_.empty(); }
    BigInt coeff(int pdeg, int qdeg) const;
    const std::map<std::pair<int, int>, BigInt>& terms() const { return terms_; }

    /// Monomials sorted by decreasing p-degree, e.g. "p^7 + 6 p^6 q + ... + q^7".
    std::string to_string() const;

private:
    std::map<std::pair<int, int>, BigInt> terms_;  // (p-degree, q-degree) -> coeff
};

}  // namespace permdes
