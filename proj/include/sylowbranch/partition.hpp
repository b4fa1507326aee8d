#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace sylowbranch {

/// An integer partition: weakly decreasing positive parts. The empty
/// partition (of 0) is valid everywhere.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0 || (i + 1 < parts_.size() && parts_[i] < parts_[i + 1]))
                throw std::invalid_argument("partition parts must be weakly decreasing and positive");
        }
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    int rows() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int part(int i) const {  // 1-based, 0 beyond the last row
        return (i >= 1 && i <= rows()) ? parts_[i - 1] : 0;
    }

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

struct HookSpec {
    int row = 0;     // 1-based
    int col = 0;     // 1-based
    int length = 0;  // arm + leg + 1
    int leg = 0;

    auto operator<=>(const HookSpec&) const = default;
};

inline Partition conjugate(const Partition& lambda) {
    std::vector<int> cols;
    if (!lambda.empty()) {
        cols.assign(lambda.parts()[0], 0);
        for (int p : lambda.parts())
            for (int j = 0; j < p; ++j) ++cols[j];
    }
    return Partition(std::move(cols));
}

/// One HookSpec per cell of the Young diagram, row-major.
inline std::vector<HookSpec> hooks(const Partition& lambda) {
    const Partition conj = conjugate(lambda);
    std::vector<HookSpec> out;
    for (int i = 1; i <= lambda.rows(); ++i) {
        for (int j = 1; j <= lambda.part(i); ++j) {
            const int arm = lambda.part(i) - j;
            const int leg = conj.part(j) - i;
            out.push_back({i, j, arm + leg + 1, leg});
        }
    }
    return out;
}

inline std::vector<int> hookLengths(const Partition& lambda) {
    std::vector<int> out;
    for (const auto& h : hooks(lambda)) out.push_back(h.length);
    return out;
}

/// Beta-set of the given length: beta[i] = lambda_{i+1} + (length-1-i),
/// strictly decreasing. length must be >= rows().
inline std::vector<int> betaSet(const Partition& lambda, int length) {
    if (length < lambda.rows()) throw std::invalid_argument("beta-set length below row count");
    std::vector<int> beta(length);
    for (int i = 1; i <= length; ++i) beta[i - 1] = lambda.part(i) + length - i;
    return beta;
}

inline Partition partitionFromBetaSet(std::vector<int> beta) {
    std::sort(beta.begin(), beta.end(), std::greater<>());
    const int length = static_cast<int>(beta.size());
    std::vector<int> parts(length);
    for (int i = 1; i <= length; ++i) parts[i - 1] = beta[i - 1] - (length - i);
    return Partition(std::move(parts));
}

/// Removes the rim hook described by h. Returns the smaller partition and the
/// leg length of the removed hook. Throws if h is not a hook of lambda.
inline std::pair<Partition, int> removeHook(const Partition& lambda, const HookSpec& h) {
    const Partition conj = conjugate(lambda);
    if (h.row < 1 || h.row > lambda.rows() || h.col < 1 || h.col > lambda.part(h.row))
        throw std::invalid_argument("hook cell outside the diagram");
    const int arm = lambda.part(h.row) - h.col;
    const int leg = conj.part(h.col) - h.row;
    if (h.length != arm + leg + 1 || h.leg != leg)
        throw std::invalid_argument("hook spec does not match the diagram");

    const int length = lambda.rows();
    std::vector<int> beta = betaSet(lambda, length);
    const int bead = beta[h.row - 1];
    const int target = bead - h.length;
    if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end())
        throw std::invalid_argument("hook spec does not describe a removable rim hook");
    int between = 0;
    for (int b : beta)
        if (b > target && b < bead) ++between;
    beta[h.row - 1] = target;
    return {partitionFromBetaSet(std::move(beta)), between};
}

/// All partitions obtained from lambda by adding an e-hook, with the leg
/// length of the added hook. Ordered by leg ascending.
inline std::vector<std::pair<Partition, int>> addHooks(const Partition& lambda, int e) {
    if (e < 1) throw std::invalid_argument("hook size must be positive");
    const int length = lambda.rows() + e;
    const std::vector<int> beta = betaSet(lambda, length);
    std::vector<std::pair<Partition, int>> out;
    for (std::size_t i = 0; i < beta.size(); ++i) {
        const int target = beta[i] + e;
        if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
        int leg = 0;
        for (int b : beta)
            if (b > beta[i] && b < target) ++leg;
        std::vector<int> moved = beta;
        moved[i] = target;
        out.emplace_back(partitionFromBetaSet(std::move(moved)), leg);
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.second < b.second; });
    return out;
}

/// All hooks of lambda of the given length, as removable rim hooks.
inline std::vector<HookSpec> hooksOfLength(const Partition& lambda, int e) {
    std::vector<HookSpec> out;
    for (const auto& h : hooks(lambda))
        if (h.length == e) out.push_back(h);
    return out;
}

/// The e-core, via the abacus: beads on e runners pushed fully down.
inline Partition eCore(const Partition& lambda, int e) {
    if (e < 1) throw std::invalid_argument("e must be positive");
    const int length = std::max(lambda.rows(), 1);
    const std::vector<int> beta = betaSet(lambda, length);
    std::vector<int> perRunner(e, 0);
    for (int b : beta) ++perRunner[b % e];
    std::vector<int> core;
    for (int r = 0; r < e; ++r)
        for (int k = 0; k < perRunner[r]; ++k) core.push_back(r + k * e);
    return partitionFromBetaSet(std::move(core));
}

inline int eWeight(const Partition& lambda, int e) {
    return (lambda.size() - eCore(lambda, e).size()) / e;
}

inline bool isECore(const Partition& lambda, int e) { return eCore(lambda, e) == lambda; }

/// Principal (diagonal) hook lengths, strictly decreasing.
inline Partition diagonalHooks(const Partition& lambda) {
    const Partition conj = conjugate(lambda);
    std::vector<int> out;
    for (int i = 1; lambda.part(i) >= i; ++i)
        out.push_back(lambda.part(i) - i + conj.part(i) - i + 1);
    return Partition(std::move(out));
}

struct PAdicTerm {
    int exponent = 0;  // n_i
    int digit = 0;     // a_i in [1, p-1]

    auto operator<=>(const PAdicTerm&) const = default;
};

/// Base-p digits of m with zero digits omitted, exponents strictly decreasing.
inline std::vector<PAdicTerm> pAdicExpansion(long long m, int p) {
    if (m < 0) throw std::invalid_argument("p-adic expansion needs m >= 0");
    if (p < 2) throw std::invalid_argument("p must be at least 2");
    std::vector<PAdicTerm> terms;
    int exponent = 0;
    while (m > 0) {
        const int digit = static_cast<int>(m % p);
        if (digit != 0) terms.push_back({exponent, digit});
        m /= p;
        ++exponent;
    }
    std::reverse(terms.begin(), terms.end());
    return terms;
}

namespace detail {
inline void emitPartitions(std::vector<int>& stack, int remaining, int maxPart,
                           std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(stack));
        return;
    }
    for (int next = std::min(maxPart, remaining); next >= 1; --next) {
        stack.push_back(next);
        emitPartitions(stack, remaining - next, next, out);
        stack.pop_back();
    }
}
inline void emitPPowerPartitions(std::vector<int>& stack, int remaining, int maxPart, int p,
                                 std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(stack));
        return;
    }
    int power = 1;
    while (power * static_cast<long long>(p) <= std::min(maxPart, remaining)) power *= p;
    for (; power >= 1; power /= p) {
        stack.push_back(power);
        emitPPowerPartitions(stack, remaining - power, power, p, out);
        stack.pop_back();
    }
}
}  // namespace detail

/// All partitions of n, in descending lexicographic order.
inline std::vector<Partition> partitionsOf(int n) {
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> stack;
    detail::emitPartitions(stack, n, n, out);
    return out;
}

/// Partitions of n whose parts are all powers of p (including p^0 = 1).
inline std::vector<Partition> pPowerPartitions(int n, int p) {
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> stack;
    detail::emitPPowerPartitions(stack, n, n, p, out);
    return out;
}

/// Text format: comma-separated parts ("8,2,1"), "-" for the empty partition.
/// Exponent shorthand ("3,1^4") accepted on input only.
inline Partition parsePartition(const std::string& text) {
    if (text == "-" || text.empty()) return Partition{};
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) {
        const auto caret = token.find('^');
        int value = 0, repeat = 1;
        try {
            if (caret == std::string::npos) {
                value = std::stoi(token);
            } else {
                value = std::stoi(token.substr(0, caret));
                repeat = std::stoi(token.substr(caret + 1));
            }
        } catch (const std::exception&) {
            throw std::invalid_argument("bad partition token: '" + token + "'");
        }
        if (value < 1) throw std::invalid_argument("parts must be positive in '" + token + "'");
        if (repeat < 1) throw std::invalid_argument("bad repeat count in '" + token + "'");
        parts.insert(parts.end(), repeat, value);
    }
    return Partition(std::move(parts));
}

inline std::string formatPartition(const Partition& lambda) {
    if (lambda.empty()) return "-";
    std::string out;
    for (std::size_t i = 0; i < lambda.parts().size(); ++i) {
        if (i) out += ',';
        out += std::to_string(lambda.parts()[i]);
    }
    return out;
}

}  // namespace sylowbranch

template <>
struct std::hash<sylowbranch::Partition> {
    std::size_t operator()(const sylowbranch::Partition& lambda) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (int p : lambda.parts()) {
            h ^= static_cast<std::size_t>(p);
            h *= 1099511628211ull;
        }
        return h;
    }
};
