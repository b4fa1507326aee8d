#pragma once

#include <set>

#include "character.hpp"
#include "numeric.hpp"
#include "partition.hpp"

namespace sylowbranch {

/// The p-block B(gamma, w) of S_n: gamma a p-core, n = |gamma| + p*w.
struct BlockLabel {
    int p = 2;
    Partition core;
    int w = 0;

    int n() const { return core.size() + p * w; }

    auto operator<=>(const BlockLabel&) const = default;
};

inline BlockLabel blockOf(const Partition& lambda, int p) {
    return BlockLabel{p, eCore(lambda, p), eWeight(lambda, p)};
}

/// nu_p of the defect group order: defect groups of B(gamma, w) are Sylow
/// p-subgroups of S_{pw}.
inline int defectGroupValuation(const BlockLabel& block) {
    return factorialValuation(block.p * block.w, block.p);
}

struct HeightRecord {
    Partition lambda;
    int height = 0;
    int defectGroupValuation = 0;
};

/// ht(chi) = nu_p(chi(1)) + nu_p(|D|) - nu_p(|G|).
inline HeightRecord height(const Partition& lambda, int p) {
    const BlockLabel block = blockOf(lambda, p);
    const int dv = defectGroupValuation(block);
    const int h = pValuationOfDegree(lambda, p) + dv - factorialValuation(lambda.size(), p);
    return HeightRecord{lambda, h, dv};
}

namespace detail {

// Height-zero membership by the recursive peel: remove a_1 hooks of size
// p^{n_1} (the top term of the p-adic expansion of pw) reaching the
// p^{n_1}-core, then recurse on the smaller block.
inline bool isHeightZeroByPeel(const Partition& lambda, int p) {
    const BlockLabel block = blockOf(lambda, p);
    if (block.w == 0) return true;
    const auto expansion = pAdicExpansion(static_cast<long long>(p) * block.w, p);
    long long top = 1;
    for (int i = 0; i < expansion.front().exponent; ++i) top *= p;
    const int a1 = expansion.front().digit;
    const Partition mu = eCore(lambda, static_cast<int>(top));
    if (mu.size() != lambda.size() - a1 * top) return false;
    return isHeightZeroByPeel(mu, p);
}

}  // namespace detail

/// All lambda in B with height zero. Candidates are materialised by adding w
/// p-hooks to the core in all ways, then filtered by the height formula; the
/// result is cross-checked against the recursive peel.
inline std::set<Partition> irrHeightZero(const BlockLabel& block) {
    std::set<Partition> level{block.core};
    for (int step = 0; step < block.w; ++step) {
        std::set<Partition> next;
        for (const Partition& mu : level)
            for (const auto& [alpha, leg] : addHooks(mu, block.p)) next.insert(alpha);
        level = std::move(next);
    }
    std::set<Partition> out;
    for (const Partition& lambda : level) {
        const bool byFormula = height(lambda, block.p).height == 0;
        if (byFormula != detail::isHeightZeroByPeel(lambda, block.p))
            throw std::logic_error("height-zero routes disagree (formula vs peel)");
        if (byFormula) out.insert(lambda);
    }
    return out;
}

/// Lemma-style sweep at p = 2: every non-2-core lambda of height zero in its
/// block satisfies lambda != lambda'. Returns true when no counterexample
/// exists among the partitions of n.
inline bool heightZeroNotSelfConjugate(int n) {
    for (const Partition& lambda : partitionsOf(n)) {
        if (eCore(lambda, 2) == lambda) continue;
        if (height(lambda, 2).height == 0 && conjugate(lambda) == lambda) return false;
    }
    return true;
}

/// A p-block of A_n, tagged with the covering S_n block(s).
struct AnBlockLabel {
    int p = 2;
    // Covering S_n core(s); for p odd and core != core' both members of the
    // conjugate pair are recorded, smaller first.
    Partition core;
    Partition coreConjugate;
    int w = 0;
    int n = 0;
    int defectValuation = 0;
    // For w = 0 with self-conjugate core: which split constituent the block
    // contains ('+', '-'), otherwise 0.
    char splitTag = 0;

    auto operator<=>(const AnBlockLabel&) const = default;
};

/// The p-blocks of A_n, derived from the S_n blocks and the covering rules.
inline std::vector<AnBlockLabel> anBlocks(int n, int p) {
    std::set<Partition> cores;
    for (const Partition& lambda : partitionsOf(n))
        cores.insert(eCore(lambda, p));

    std::vector<AnBlockLabel> out;
    std::set<Partition> done;
    for (const Partition& gamma : cores) {
        if (done.count(gamma)) continue;
        const Partition gammaConj = conjugate(gamma);
        const int w = (n - gamma.size()) / p;
        const int snDefect = factorialValuation(p * w, p);
        if (p == 2) {
            // gamma = gamma' always; one covered block when w > 0 (defect
            // halved), two defect-zero blocks when w = 0.
            if (w > 0) {
                out.push_back({p, gamma, gammaConj, w, n, snDefect - 1, 0});
            } else {
                out.push_back({p, gamma, gammaConj, 0, n, 0, '+'});
                out.push_back({p, gamma, gammaConj, 0, n, 0, '-'});
            }
            done.insert(gamma);
            continue;
        }
        done.insert(gamma);
        done.insert(gammaConj);
        const Partition lo = std::min(gamma, gammaConj);
        const Partition hi = std::max(gamma, gammaConj);
        if (w == 0 && gamma == gammaConj) {
            out.push_back({p, lo, hi, 0, n, 0, '+'});
            out.push_back({p, lo, hi, 0, n, 0, '-'});
        } else {
            // One A_n block; covered by B(gamma,w) and B(gamma',w).
            out.push_back({p, lo, hi, w, n, snDefect, 0});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace sylowbranch
