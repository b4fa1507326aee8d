#pragma once

#include <map>

#include "numeric.hpp"
#include "partition.hpp"

namespace sylowbranch {

/// A cycle type of S_n: a partition of n read as cycle lengths
/// (fixed points included as parts equal to 1).
struct CycleType {
    Partition type;

    CycleType() = default;
    explicit CycleType(Partition t) : type(std::move(t)) {}
    CycleType(std::initializer_list<int> parts) : type(parts) {}

    int degree() const { return type.size(); }
    int cycles() const { return type.rows(); }

    /// m_i = number of parts equal to i.
    std::map<int, int> multiplicities() const {
        std::map<int, int> m;
        for (int part : type.parts()) ++m[part];
        return m;
    }

    bool isEven() const { return (degree() - cycles()) % 2 == 0; }

    /// True iff the S_n class splits into two A_n classes: all parts odd and distinct.
    bool splitsInAlternating() const {
        const auto& parts = type.parts();
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (parts[i] % 2 == 0) return false;
            if (i + 1 < parts.size() && parts[i] == parts[i + 1]) return false;
        }
        return true;
    }

    /// Drops one cycle of length e; throws if there is none.
    CycleType dropCycle(int e) const {
        std::vector<int> parts = type.parts();
        const auto it = std::find(parts.begin(), parts.end(), e);
        if (it == parts.end()) throw std::invalid_argument("no cycle of the requested length");
        parts.erase(it);
        return CycleType(Partition(std::move(parts)));
    }

    /// True iff every part is a power of p.
    bool allPartsPPower(int p) const {
        for (int part : type.parts()) {
            while (part % p == 0) part /= p;
            if (part != 1) return false;
        }
        return true;
    }

    auto operator<=>(const CycleType&) const = default;
};

/// |C_{S_n}(sigma)| = prod_i i^{m_i} m_i!.
inline BigInt centraliserOrder(const CycleType& sigma) {
    BigInt out = 1;
    for (const auto& [i, m] : sigma.multiplicities()) out *= power(i, m) * factorial(m);
    return out;
}

inline BigInt classSize(const CycleType& sigma) {
    return factorial(sigma.degree()) / centraliserOrder(sigma);
}

}  // namespace sylowbranch
