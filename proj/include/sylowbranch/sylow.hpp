#pragma once

#include <cstdint>
#include <map>
#include <unordered_set>

#include "cycle_type.hpp"
#include "numeric.hpp"
#include "partition.hpp"

namespace sylowbranch {

/// Cycle-type census of a Sylow p-subgroup of S_n: exact element count per
/// cycle type. Types are partitions of n with every part a power of p.
struct CycleTypeCensus {
    int n = 0;
    int p = 0;
    BigInt groupOrder = 1;
    std::map<Partition, BigInt> counts;

    BigInt count(const CycleType& sigma) const {
        const auto it = counts.find(sigma.type);
        return it == counts.end() ? BigInt(0) : it->second;
    }
};

/// |P_n| = p^{nu_p(n!)}.
inline BigInt sylowOrder(int n, int p) { return power(p, factorialValuation(n, p)); }

namespace detail {

// Census of the iterated wreath group W_k on p^k points, as a map from the
// cycle type (partition of p^k) to the element count.
inline const std::map<Partition, BigInt>& wreathCensus(int k, int p) {
    thread_local std::map<std::pair<int, int>, std::map<Partition, BigInt>> memo;
    const auto key = std::make_pair(k, p);
    if (const auto it = memo.find(key); it != memo.end()) return it->second;

    std::map<Partition, BigInt> census;
    if (k == 0) {
        census[Partition{1}] = 1;
    } else {
        const auto& base = wreathCensus(k - 1, p);
        BigInt baseOrder = 0;
        for (const auto& [type, count] : base) baseOrder += count;

        // Top component trivial: convolution of p independent base factors.
        std::map<Partition, BigInt> conv;
        conv[Partition{}] = 1;
        for (int copy = 0; copy < p; ++copy) {
            std::map<Partition, BigInt> next;
            for (const auto& [typeA, countA] : conv) {
                for (const auto& [typeB, countB] : base) {
                    std::vector<int> merged = typeA.parts();
                    merged.insert(merged.end(), typeB.parts().begin(), typeB.parts().end());
                    std::sort(merged.begin(), merged.end(), std::greater<>());
                    next[Partition(std::move(merged))] += countA * countB;
                }
            }
            conv = std::move(next);
        }
        census = std::move(conv);

        // Top component a nontrivial element of C_p (p-1 choices): the base
        // tuple contributes through its product only, |W_{k-1}|^{p-1}-to-one,
        // and every part of the product type is multiplied by p.
        const BigInt tupleFactor = (p - 1) * power(baseOrder, p - 1);
        for (const auto& [type, count] : base) {
            std::vector<int> scaled;
            for (int part : type.parts()) scaled.push_back(part * p);
            census[Partition(std::move(scaled))] += tupleFactor * count;
        }
    }
    return memo.emplace(key, std::move(census)).first->second;
}

}  // namespace detail

/// Census of P_n <= S_n via the wreath recursion: direct product of a_i
/// copies of W_{n_i} across the p-adic expansion of n.
inline CycleTypeCensus census(int n, int p) {
    CycleTypeCensus out;
    out.n = n;
    out.p = p;
    out.groupOrder = sylowOrder(n, p);

    std::map<Partition, BigInt> acc;
    acc[Partition{}] = 1;
    if (n > 0) {
        for (const auto& term : pAdicExpansion(n, p)) {
            for (int copy = 0; copy < term.digit; ++copy) {
                const auto& factor = detail::wreathCensus(term.exponent, p);
                std::map<Partition, BigInt> next;
                for (const auto& [typeA, countA] : acc) {
                    for (const auto& [typeB, countB] : factor) {
                        std::vector<int> merged = typeA.parts();
                        merged.insert(merged.end(), typeB.parts().begin(),
                                      typeB.parts().end());
                        std::sort(merged.begin(), merged.end(), std::greater<>());
                        next[Partition(std::move(merged))] += countA * countB;
                    }
                }
                acc = std::move(next);
            }
        }
    }
    out.counts = std::move(acc);
    return out;
}

/// Thread-local census cache keyed by (n, p).
inline const CycleTypeCensus& cachedCensus(int n, int p) {
    thread_local std::map<std::pair<int, int>, CycleTypeCensus> memo;
    const auto key = std::make_pair(n, p);
    if (const auto it = memo.find(key); it != memo.end()) return it->second;
    return memo.emplace(key, census(n, p)).first->second;
}

namespace detail {

using Perm = std::vector<std::uint8_t>;

struct PermHash {
    std::size_t operator()(const Perm& v) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (auto x : v) {
            h ^= x;
            h *= 1099511628211ull;
        }
        return h;
    }
};

// Standard generators of W_k acting on positions [offset, offset + p^k).
inline void wreathGenerators(int k, int p, int n, int offset, std::vector<Perm>& out) {
    if (k == 0) return;
    wreathGenerators(k - 1, p, n, offset, out);
    int blockSize = 1;
    for (int i = 0; i < k - 1; ++i) blockSize *= p;
    Perm cycle(n);
    for (int i = 0; i < n; ++i) cycle[i] = static_cast<std::uint8_t>(i);
    const int span = blockSize * p;
    for (int i = 0; i < span; ++i)
        cycle[offset + i] = static_cast<std::uint8_t>(offset + (i + blockSize) % span);
    out.push_back(std::move(cycle));
}

inline Partition permCycleType(const Perm& g) {
    std::vector<int> lengths;
    std::vector<bool> seen(g.size(), false);
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (std::size_t j = i; !seen[j]; j = g[j]) {
            seen[j] = true;
            ++len;
        }
        lengths.push_back(len);
    }
    std::sort(lengths.begin(), lengths.end(), std::greater<>());
    return Partition(std::move(lengths));
}

}  // namespace detail

/// Oracle: explicit closure of the standard wreath generators, tallied by
/// cycle type. Throws if the group order exceeds the cap.
inline CycleTypeCensus censusBruteForce(int n, int p,
                                        std::uint64_t orderCap = std::uint64_t{1} << 16) {
    const BigInt order = sylowOrder(n, p);
    if (order > orderCap) throw std::invalid_argument("Sylow order exceeds brute-force cap");
    if (n > 255) throw std::invalid_argument("n too large for the brute-force oracle");

    std::vector<detail::Perm> generators;
    int offset = 0;
    if (n > 0) {
        for (const auto& term : pAdicExpansion(n, p)) {
            int blockSize = 1;
            for (int i = 0; i < term.exponent; ++i) blockSize *= p;
            for (int copy = 0; copy < term.digit; ++copy) {
                detail::wreathGenerators(term.exponent, p, n, offset, generators);
                offset += blockSize;
            }
        }
    }

    detail::Perm identity(n);
    for (int i = 0; i < n; ++i) identity[i] = static_cast<std::uint8_t>(i);
    std::unordered_set<detail::Perm, detail::PermHash> elements{identity};
    std::vector<detail::Perm> frontier{identity};
    while (!frontier.empty()) {
        std::vector<detail::Perm> next;
        for (const auto& g : frontier) {
            for (const auto& s : generators) {
                detail::Perm gs(n);
                for (int i = 0; i < n; ++i) gs[i] = s[g[i]];
                if (elements.insert(gs).second) next.push_back(std::move(gs));
            }
        }
        frontier = std::move(next);
    }

    CycleTypeCensus out;
    out.n = n;
    out.p = p;
    out.groupOrder = order;
    for (const auto& g : elements) ++out.counts[detail::permCycleType(g)];
    if (BigInt(elements.size()) != order)
        throw std::logic_error("brute-force closure does not match the Sylow order");
    return out;
}

/// (1_P)^{S_n}(sigma) = |C_{S_n}(sigma)| * |P cap sigma^{S_n}| / |P|.
/// Integrality is asserted.
inline BigInt permCharValue(const CycleTypeCensus& census, const CycleType& sigma) {
    if (sigma.degree() != census.n) throw std::invalid_argument("cycle type degree mismatch");
    const BigInt numerator = centraliserOrder(sigma) * census.count(sigma);
    if (numerator % census.groupOrder != 0)
        throw std::logic_error("permutation character value is not integral (census bug)");
    return numerator / census.groupOrder;
}

inline BigInt permCharValue(int n, int p, const CycleType& sigma) {
    return permCharValue(census(n, p), sigma);
}

}  // namespace sylowbranch
