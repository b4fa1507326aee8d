#pragma once

#include <map>

#include "character.hpp"
#include "partition.hpp"

namespace sylowbranch {

/// A finite integer combination of irreducible-character labels of a fixed
/// S_n. Zero coefficients are never stored.
struct VirtualCharacter {
    int n = 0;
    std::map<Partition, long long> coeffs;

    void add(const Partition& label, long long c) {
        if (c == 0) return;
        const auto [it, inserted] = coeffs.try_emplace(label, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) coeffs.erase(it);
        }
    }

    long long coeff(const Partition& label) const {
        const auto it = coeffs.find(label);
        return it == coeffs.end() ? 0 : it->second;
    }

    auto operator<=>(const VirtualCharacter&) const = default;
};

/// V^lambda[e]: signed sum over all e-hook additions.
inline VirtualCharacter virtualHookAdd(const Partition& lambda, int e) {
    VirtualCharacter out;
    out.n = lambda.size() + e;
    for (const auto& [alpha, leg] : addHooks(lambda, e))
        out.add(alpha, leg % 2 == 0 ? 1 : -1);
    return out;
}

/// V^lambda[e_1,...,e_u]: iterated sign-weighted hook additions; the empty
/// list gives chi^lambda. Independent of the order of the sizes.
inline VirtualCharacter virtualIterate(const Partition& lambda, const std::vector<int>& sizes) {
    VirtualCharacter acc;
    acc.n = lambda.size();
    acc.add(lambda, 1);
    for (int e : sizes) {
        VirtualCharacter next;
        next.n = acc.n + e;
        for (const auto& [mu, c] : acc.coeffs)
            for (const auto& [alpha, leg] : addHooks(mu, e))
                next.add(alpha, leg % 2 == 0 ? c : -c);
        acc = std::move(next);
    }
    return acc;
}

/// Sum of coeff * chi^alpha(sigma) over the support.
inline BigInt evaluateVirtual(const VirtualCharacter& v, const CycleType& sigma,
                              MnContext& ctx = defaultMnContext()) {
    if (sigma.degree() != v.n) throw std::invalid_argument("cycle type degree mismatch");
    BigInt out = 0;
    for (const auto& [alpha, c] : v.coeffs) out += c * ctx.value(alpha, sigma);
    return out;
}

}  // namespace sylowbranch
