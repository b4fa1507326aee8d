#pragma once

#include <optional>

#include "block.hpp"
#include "sylow.hpp"
#include "virtual_character.hpp"

namespace sylowbranch {

/// A Sylow branching coefficient Z^lambda = [chi^lambda_P, 1_P] with its
/// p-valuation (absent when Z = 0).
struct SBCRecord {
    Partition lambda;
    int p = 2;
    BigInt z = 0;
    std::optional<int> zValuation;  // nullopt when z = 0
};

namespace detail {
inline SBCRecord makeSbcRecord(Partition lambda, int p, BigInt z) {
    SBCRecord rec{std::move(lambda), p, std::move(z), std::nullopt};
    if (rec.z != 0) rec.zValuation = valuation(rec.z, p);
    return rec;
}
}  // namespace detail

/// [f_P, 1_P] for any virtual character f, expanded over the census of P_n:
/// (1/|P|) * sum_mu census(mu) * f(mu). Integrality is asserted.
inline BigInt sylowInnerProduct(const VirtualCharacter& v, const CycleTypeCensus& cen,
                                MnContext& ctx = defaultMnContext()) {
    if (cen.n != v.n) throw std::invalid_argument("census degree mismatch");
    BigInt sum = 0;
    for (const auto& [type, count] : cen.counts)
        sum += count * evaluateVirtual(v, CycleType(type), ctx);
    if (sum % cen.groupOrder != 0)
        throw std::logic_error("Sylow inner product is not integral (bug signal)");
    return sum / cen.groupOrder;
}

/// Z^lambda = [chi^lambda_P, 1_P], via the census inner product.
inline SBCRecord sbc(const Partition& lambda, int p, MnContext& ctx = defaultMnContext()) {
    const CycleTypeCensus& cen = cachedCensus(lambda.size(), p);
    VirtualCharacter v;
    v.n = lambda.size();
    v.add(lambda, 1);
    BigInt z = sylowInnerProduct(v, cen, ctx);
    if (z < 0) throw std::logic_error("negative Sylow branching coefficient (bug signal)");
    return detail::makeSbcRecord(lambda, p, std::move(z));
}

/// The block virtual character V^B = V^gamma[e_1,...,e_u], the e_j being the
/// p-powers of the p-adic expansion of pw counted with multiplicity.
/// For w = 0 the result degenerates to chi^gamma (flagged).
struct BlockVirtualCharacter {
    VirtualCharacter vc;
    std::vector<int> hookSizes;
    bool degenerate = false;  // w = 0
};

inline BlockVirtualCharacter vB(const BlockLabel& block) {
    BlockVirtualCharacter out;
    if (block.w == 0) {
        out.vc.n = block.core.size();
        out.vc.add(block.core, 1);
        out.degenerate = true;
        return out;
    }
    for (const auto& term : pAdicExpansion(static_cast<long long>(block.p) * block.w, block.p)) {
        long long size = 1;
        for (int i = 0; i < term.exponent; ++i) size *= block.p;
        for (int copy = 0; copy < term.digit; ++copy)
            out.hookSizes.push_back(static_cast<int>(size));
    }
    out.vc = virtualIterate(block.core, out.hookSizes);
    return out;
}

/// Verifies V^lambda[e](sigma) = k*e*chi^lambda(tau) for every sigma of
/// |lambda|+e (k = number of e-cycles, tau = sigma minus one e-cycle), and 0
/// when k = 0. Returns the first violating type, if any.
inline std::optional<CycleType> gdcCheck(const Partition& lambda, int e,
                                         MnContext& ctx = defaultMnContext()) {
    const VirtualCharacter v = virtualHookAdd(lambda, e);
    for (const Partition& type : partitionsOf(lambda.size() + e)) {
        const CycleType sigma(type);
        const BigInt got = evaluateVirtual(v, sigma, ctx);
        const int k = static_cast<int>(
            std::count(type.parts().begin(), type.parts().end(), e));
        const BigInt want =
            k == 0 ? BigInt(0) : BigInt(k) * e * ctx.value(lambda, sigma.dropCycle(e));
        if (got != want) return sigma;
    }
    return std::nullopt;
}

/// The five valuation terms whose sum must vanish for sigma of type
/// (e_1,...,e_u,1^{|gamma|}): nu_p(chi^gamma(1)) - nu_p(|gamma|!)
/// + nu_p(|C(sigma)|) - nu_p(n!) + nu_p(|P cap sigma^{S_n}|).
struct ValuationLedger {
    int degreeTerm = 0;
    int coreFactorialTerm = 0;
    int centraliserTerm = 0;
    int groupTerm = 0;
    int censusTerm = 0;

    int sum() const {
        return degreeTerm - coreFactorialTerm + centraliserTerm - groupTerm + censusTerm;
    }
};

struct PPrimeMultResult {
    VirtualCharacter vc;
    BigInt innerProduct = 0;
    int valuation = 0;  // nu_p of the inner product; must be 0
    ValuationLedger ledger;
};

/// Checks p-coprimality of [V^gamma[p^{t_1},...,p^{t_u}]_P, 1_P] with the
/// hook sizes taken from the p-adic expansion of n - |gamma|, plus the
/// five-term valuation ledger. Requires gamma a p-core and p | n - |gamma|.
inline PPrimeMultResult pPrimeMultCheck(const Partition& gamma, int n, int p,
                                        MnContext& ctx = defaultMnContext()) {
    if (!isECore(gamma, p)) throw std::invalid_argument("gamma must be a p-core");
    if (gamma.size() > n || (n - gamma.size()) % p != 0)
        throw std::invalid_argument("need p | n - |gamma| and |gamma| <= n");

    std::vector<int> hookSizes;
    if (n > gamma.size()) {
        for (const auto& term : pAdicExpansion(n - gamma.size(), p)) {
            long long size = 1;
            for (int i = 0; i < term.exponent; ++i) size *= p;
            for (int copy = 0; copy < term.digit; ++copy)
                hookSizes.push_back(static_cast<int>(size));
        }
    }

    PPrimeMultResult out;
    out.vc = virtualIterate(gamma, hookSizes);
    const CycleTypeCensus& cen = cachedCensus(n, p);
    out.innerProduct = sylowInnerProduct(out.vc, cen, ctx);
    out.valuation = out.innerProduct == 0 ? -1 : valuation(out.innerProduct, p);

    std::vector<int> sigmaParts = hookSizes;
    sigmaParts.insert(sigmaParts.end(), gamma.size(), 1);
    std::sort(sigmaParts.begin(), sigmaParts.end(), std::greater<>());
    const CycleType sigma{Partition(std::move(sigmaParts))};
    const BigInt count = cen.count(sigma);
    out.ledger.degreeTerm = pValuationOfDegree(gamma, p);
    out.ledger.coreFactorialTerm = factorialValuation(gamma.size(), p);
    out.ledger.centraliserTerm = valuation(centraliserOrder(sigma), p);
    out.ledger.groupTerm = factorialValuation(n, p);
    out.ledger.censusTerm = count == 0 ? -1 : valuation(count, p);
    if (count == 0) throw std::logic_error("census misses the hook-type class (bug signal)");
    return out;
}

/// A height-zero witness for Theorem B in the S_n block: some lambda in
/// Irr_0(B) with p coprime to Z^lambda. Searches the support of V^B first.
struct SnWitness {
    SBCRecord record;
    bool inVbSupport = false;
    std::size_t vbSupportSize = 0;
};

inline SnWitness theoremBSearchSn(const BlockLabel& block,
                                  MnContext& ctx = defaultMnContext()) {
    const BlockVirtualCharacter bvc = vB(block);
    SnWitness out;
    out.vbSupportSize = bvc.vc.coeffs.size();
    for (const auto& [lambda, c] : bvc.vc.coeffs) {  // map order = lex smallest first
        SBCRecord rec = sbc(lambda, block.p, ctx);
        if (rec.z % block.p != 0) {
            out.record = std::move(rec);
            out.inVbSupport = true;
            return out;
        }
    }
    for (const Partition& lambda : irrHeightZero(block)) {
        if (bvc.vc.coeff(lambda) != 0) continue;
        SBCRecord rec = sbc(lambda, block.p, ctx);
        if (rec.z % block.p != 0) {
            out.record = std::move(rec);
            return out;
        }
    }
    throw std::logic_error("no height-zero witness found (would falsify the theorem)");
}

}  // namespace sylowbranch
