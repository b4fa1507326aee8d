#pragma once

#include <unordered_map>

#include "cycle_type.hpp"
#include "numeric.hpp"
#include "partition.hpp"

namespace sylowbranch {

/// chi^lambda(1) by the hook length formula, cancelling prime factorisations
/// of n! against the hook product.
inline BigInt degree(const Partition& lambda) {
    const int n = lambda.size();
    const std::vector<int> lengths = hookLengths(lambda);
    BigInt out = 1;
    for (int q : primesUpTo(n)) {
        int e = factorialValuation(n, q);
        for (int h : lengths) e -= valuation(static_cast<long long>(h), q);
        out *= power(q, e);
    }
    return out;
}

/// nu_p(chi^lambda(1)) without materialising the degree.
inline int pValuationOfDegree(const Partition& lambda, int p) {
    int v = factorialValuation(lambda.size(), p);
    for (int h : hookLengths(lambda)) v -= valuation(static_cast<long long>(h), p);
    return v;
}

/// Macdonald's recursive criterion for p' degree: peel the top p-adic term.
inline bool isPPrimeDegree(const Partition& lambda, int p) {
    const int n = lambda.size();
    if (n == 0) return true;
    const auto expansion = pAdicExpansion(n, p);
    long long top = 1;
    for (int i = 0; i < expansion.front().exponent; ++i) top *= p;
    const Partition core = eCore(lambda, static_cast<int>(top));
    if (core.size() != n - expansion.front().digit * top) return false;
    return isPPrimeDegree(core, p);
}

inline bool isDefectZero(const Partition& lambda, int p) { return isECore(lambda, p); }

/// Checks the hypothesis |C_p(lambda)| >= p and, when it holds, asserts
/// p | chi^lambda(1). Returns whether the hypothesis holds.
inline bool bigCoreForcesDivisibility(const Partition& lambda, int p) {
    if (eCore(lambda, p).size() < p) return false;
    if (pValuationOfDegree(lambda, p) == 0)
        throw std::logic_error("core of size >= p but degree coprime to p");
    return true;
}

namespace detail {
struct IntVecHash {
    std::size_t operator()(const std::vector<int>& v) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (int x : v) {
            h ^= static_cast<std::size_t>(x) + 0x9e3779b9;
            h *= 1099511628211ull;
        }
        return h;
    }
};
}  // namespace detail

/// Murnaghan-Nakayama evaluator with a bounded memo cache.
/// Confine one context to one thread, or use the thread-local default.
class MnContext {
public:
    explicit MnContext(std::size_t maxEntries = std::size_t{1} << 22)
        : maxEntries_(maxEntries) {}

    /// Exact value chi^lambda(sigma). Requires |lambda| = |sigma|.
    BigInt value(const Partition& lambda, const CycleType& sigma) {
        if (lambda.size() != sigma.degree())
            throw std::invalid_argument("character argument size mismatch");
        return eval(lambda, sigma.type.parts());
    }

    std::size_t cacheSize() const { return memo_.size(); }
    void clear() { memo_.clear(); }

private:
    // cycles: weakly decreasing remaining cycle lengths; consumed largest-first.
    BigInt eval(const Partition& lambda, std::vector<int> cycles) {
        if (lambda.empty()) return 1;

        std::vector<int> key = lambda.parts();
        key.push_back(-1);
        key.insert(key.end(), cycles.begin(), cycles.end());
        if (const auto it = memo_.find(key); it != memo_.end()) return it->second;

        BigInt sum = 0;
        if (cycles.front() == 1) {
            // All fixed points left: the value is the degree.
            sum = degree(lambda);
        } else {
            const int r = cycles.front();
            const std::vector<int> rest(cycles.begin() + 1, cycles.end());
            for (const auto& h : hooksOfLength(lambda, r)) {
                const auto [mu, leg] = removeHook(lambda, h);
                const BigInt term = eval(mu, rest);
                sum += (leg % 2 == 0) ? term : -term;
            }
        }

        if (memo_.size() >= maxEntries_) memo_.clear();
        memo_.emplace(std::move(key), sum);
        return sum;
    }

    std::unordered_map<std::vector<int>, BigInt, detail::IntVecHash> memo_;
    std::size_t maxEntries_;
};

inline MnContext& defaultMnContext() {
    thread_local MnContext context;
    return context;
}

inline BigInt mnValue(const Partition& lambda, const CycleType& sigma) {
    return defaultMnContext().value(lambda, sigma);
}

}  // namespace sylowbranch
