#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <vector>

namespace sylowbranch {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt factorial(int n) {
    BigInt out = 1;
    for (int i = 2; i <= n; ++i) out *= i;
    return out;
}

inline int valuation(BigInt m, int p) {
    if (m == 0) throw std::invalid_argument("valuation of zero");
    if (m < 0) m = -m;
    int v = 0;
    while (m % p == 0) {
        m /= p;
        ++v;
    }
    return v;
}

inline int valuation(long long m, int p) { return valuation(BigInt(m), p); }

/// Legendre's formula: nu_p(n!).
inline int factorialValuation(int n, int p) {
    int v = 0;
    for (long long q = p; q <= n; q *= p) v += n / static_cast<int>(q);
    return v;
}

inline BigInt power(BigInt base, int exponent) {
    BigInt out = 1;
    while (exponent-- > 0) out *= base;
    return out;
}

inline std::vector<int> primesUpTo(int n) {
    std::vector<bool> sieve(std::max(n + 1, 2), true);
    std::vector<int> out;
    for (int i = 2; i <= n; ++i) {
        if (!sieve[i]) continue;
        out.push_back(i);
        for (int j = 2 * i; j <= n; j += i) sieve[j] = false;
    }
    return out;
}

inline bool isPrime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace sylowbranch
