#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>

#include "branching.hpp"

namespace sylowbranch {

using Rational = boost::multiprecision::cpp_rational;

/// An irreducible character of A_n: either the common restriction of a
/// conjugate pair {lambda, lambda'} with lambda != lambda', or one of the
/// two constituents of the restriction of a self-conjugate lambda.
struct AnCharacterLabel {
    Partition lambda;  // NonSplit: lexicographically smaller of the pair
    char sign = 0;     // 0 = NonSplit, '+' / '-' = Split

    bool split() const { return sign != 0; }

    static AnCharacterLabel nonSplit(const Partition& lambda) {
        const Partition conj = conjugate(lambda);
        if (lambda == conj) throw std::invalid_argument("self-conjugate label needs a sign");
        return {std::min(lambda, conj), 0};
    }
    static AnCharacterLabel splitLabel(const Partition& lambda, char sign) {
        if (conjugate(lambda) != lambda) throw std::invalid_argument("split label must be self-conjugate");
        if (sign != '+' && sign != '-') throw std::invalid_argument("sign must be '+' or '-'");
        return {lambda, sign};
    }

    auto operator<=>(const AnCharacterLabel&) const = default;
};

inline std::vector<AnCharacterLabel> irrAn(int n) {
    std::vector<AnCharacterLabel> out;
    for (const Partition& lambda : partitionsOf(n)) {
        const Partition conj = conjugate(lambda);
        if (lambda == conj) {
            out.push_back(AnCharacterLabel::splitLabel(lambda, '+'));
            out.push_back(AnCharacterLabel::splitLabel(lambda, '-'));
        } else if (lambda < conj) {
            out.push_back(AnCharacterLabel::nonSplit(lambda));
        }
    }
    return out;
}

inline BigInt anDegree(const AnCharacterLabel& c) {
    const BigInt d = degree(c.lambda);
    return c.split() ? d / 2 : d;
}

/// Exact value a + b*sqrt(radicand); radicand = 0 when the value is rational.
struct AlgebraicValue {
    Rational rational;
    Rational surdCoeff;
    BigInt radicand = 0;

    bool isZero() const { return rational == 0 && surdCoeff == 0; }
    bool isRational() const { return surdCoeff == 0; }

    static AlgebraicValue ofRational(Rational r) { return {std::move(r), 0, 0}; }
};

namespace detail {

inline std::optional<BigInt> exactSqrt(const BigInt& d) {
    if (d < 0) return std::nullopt;
    const BigInt r = boost::multiprecision::sqrt(d);
    return r * r == d ? std::optional<BigInt>(r) : std::nullopt;
}

}  // namespace detail

/// Values of the split pair phi^{+/-}_lambda on the two A_n classes of an
/// even cycle type sigma. Returns (value on class "+", value on class "-")
/// for phi^+; phi^- takes the swapped pair. Away from the diagonal-hook type
/// both values are chi^lambda(sigma)/2; on it they are the roots of the
/// quadratic pinned down by column orthogonality of the A_n table.
inline std::pair<AlgebraicValue, AlgebraicValue> splitValues(
    const Partition& lambda, const CycleType& sigma, MnContext& ctx = defaultMnContext()) {
    if (conjugate(lambda) != lambda)
        throw std::invalid_argument("splitValues needs a self-conjugate partition");
    if (!sigma.isEven()) throw std::invalid_argument("splitValues needs an even cycle type");

    const Partition delta = diagonalHooks(lambda);
    if (sigma.type != delta) {
        const AlgebraicValue v = AlgebraicValue::ofRational(
            Rational(ctx.value(lambda, sigma)) / 2);
        return {v, v};
    }

    // sigma is the diagonal-hook type: x + y = chi^lambda(delta) and
    // x^2 + y^2 = |C_{A_n}(g)| minus the contributions of every other
    // irreducible character in the column.
    const Rational trace = Rational(ctx.value(lambda, sigma));
    BigInt centraliser = 1;
    for (int part : delta.parts()) centraliser *= part;  // distinct parts
    Rational others = 0;
    for (const Partition& mu : partitionsOf(lambda.size())) {
        if (mu == lambda) continue;
        const Partition conj = conjugate(mu);
        if (mu == conj) {
            others += Rational(ctx.value(mu, sigma) * ctx.value(mu, sigma)) / 2;
        } else if (mu < conj) {
            others += Rational(ctx.value(mu, sigma) * ctx.value(mu, sigma));
        }
    }
    // Column orthogonality pins |x|^2 + |y|^2 and hence |x - y|^2; it cannot
    // see whether the pair is real or complex-conjugate, so the sign of the
    // discriminant comes from eps = chi^lambda(delta) (the roots are
    // (eps +/- sqrt(eps * z)) / 2). The magnitude must come out equal to the
    // centraliser order z, which we assert as a consistency check.
    if (trace != 1 && trace != -1)
        throw std::logic_error("diagonal-type character value is not +/-1");
    const Rational sumSquares = Rational(centraliser) - others;
    const Rational magnitude = 2 * sumSquares - trace * trace;
    if (magnitude != Rational(centraliser))
        throw std::logic_error("split-class discriminant magnitude mismatch");
    const BigInt d = trace > 0 ? centraliser : -centraliser;

    if (const auto root = detail::exactSqrt(d)) {
        return {AlgebraicValue::ofRational((trace + Rational(*root)) / 2),
                AlgebraicValue::ofRational((trace - Rational(*root)) / 2)};
    }
    // Fixed branch: "+" takes the nonnegative surd coefficient.
    return {AlgebraicValue{trace / 2, Rational(1) / 2, d},
            AlgebraicValue{trace / 2, Rational(-1) / 2, d}};
}

/// [phi_P, 1_P] for P a Sylow p-subgroup of A_n.
inline SBCRecord anSbc(const AnCharacterLabel& c, int p,
                       MnContext& ctx = defaultMnContext()) {
    const int n = c.lambda.size();
    const CycleTypeCensus& cen = cachedCensus(n, p);
    if (p != 2) {
        // Sylow subgroups of S_n and A_n coincide for odd p.
        for (const auto& [type, count] : cen.counts)
            if (!CycleType(type).isEven())
                throw std::logic_error("odd-p census contains an odd permutation type");
        SBCRecord rec = sbc(c.lambda, p, ctx);
        if (!c.split()) return rec;
        // phi^+ and phi^- are swapped by an odd element normalising P, so
        // each receives exactly half of Z^lambda.
        if (rec.z % 2 != 0) throw std::logic_error("odd Z^lambda for a split character");
        return detail::makeSbcRecord(c.lambda, p, rec.z / 2);
    }

    // p = 2: the Sylow subgroup of A_n is the even half of P_n.
    BigInt sum = 0;
    for (const auto& [type, count] : cen.counts) {
        const CycleType sigma(type);
        if (!sigma.isEven()) continue;
        if (!c.split()) {
            sum += count * ctx.value(c.lambda, sigma);
        } else {
            // Diagonal-hook types have odd distinct parts, hence never occur
            // among 2-power types beyond n = 1.
            if (n > 1 && sigma.type == diagonalHooks(c.lambda))
                throw std::logic_error("unexpected split 2-power type");
            const BigInt chi = ctx.value(c.lambda, sigma);
            if (chi % 2 != 0)
                throw std::logic_error("odd character value on a non-split class");
            sum += count * (chi / 2);
        }
    }
    const BigInt halfOrder = n >= 2 ? cen.groupOrder / 2 : cen.groupOrder;
    if (sum % halfOrder != 0)
        throw std::logic_error("A_n Sylow inner product is not integral (bug signal)");
    BigInt z = sum / halfOrder;
    if (z < 0) throw std::logic_error("negative A_n branching coefficient");
    SBCRecord rec = detail::makeSbcRecord(c.lambda, p, std::move(z));
    return rec;
}

/// Theorem B witness for an A_n block: a height-zero character with
/// branching coefficient coprime to p.
struct AnWitness {
    AnCharacterLabel character;
    BigInt multiplicity = 0;  // [phi_P, 1_P]
    // For p = 2 the paired S_n coefficients whose sum is the multiplicity.
    std::optional<std::pair<BigInt, BigInt>> pairParts;
};

inline AnWitness theoremBSearchAn(const AnBlockLabel& block,
                                  MnContext& ctx = defaultMnContext()) {
    const int p = block.p;
    if (p != 2) {
        const SnWitness sn = theoremBSearchSn(BlockLabel{p, block.core, block.w}, ctx);
        const Partition& lambda = sn.record.lambda;
        AnWitness out;
        if (conjugate(lambda) == lambda) {
            // Pick the constituent lying in this block; for a w = 0 split
            // pair of blocks the tag selects it, otherwise both lie in the
            // unique covered block and "+" is the canonical choice.
            const char sign = block.splitTag ? block.splitTag : '+';
            out.character = AnCharacterLabel::splitLabel(lambda, sign);
        } else {
            out.character = AnCharacterLabel::nonSplit(lambda);
        }
        out.multiplicity = anSbc(out.character, p, ctx).z;
        if (out.multiplicity % p == 0)
            throw std::logic_error("no A_n witness found (would falsify the theorem)");
        return out;
    }

    if (block.w == 0) {
        // Defect-zero split constituent of the self-conjugate 2-core.
        AnWitness out;
        out.character = AnCharacterLabel::splitLabel(block.core, block.splitTag ? block.splitTag : '+');
        out.multiplicity = anSbc(out.character, 2, ctx).z;
        if (out.multiplicity % 2 == 0)
            throw std::logic_error("even multiplicity for a defect-zero A_n block");
        return out;
    }

    // p = 2, w > 0: scan the support of V^B for a pair with odd Z + Z'.
    const BlockVirtualCharacter bvc = vB(BlockLabel{2, block.core, block.w});
    for (const auto& [lambda, coeff] : bvc.vc.coeffs) {
        const Partition conj = conjugate(lambda);
        if (conj < lambda) continue;  // one scan per pair
        if (conj == lambda)
            throw std::logic_error("self-conjugate support in a positive-weight 2-block");
        const BigInt za = sbc(lambda, 2, ctx).z;
        const BigInt zb = sbc(conj, 2, ctx).z;
        if ((za + zb) % 2 != 0) {
            AnWitness out;
            out.character = AnCharacterLabel::nonSplit(lambda);
            out.multiplicity = za + zb;
            out.pairParts = std::make_pair(za, zb);
            return out;
        }
    }
    throw std::logic_error("no A_n witness found (would falsify the theorem)");
}

namespace detail {

// First stage s (1-based) at which the iterated peel of the p-adic type
// fails: the running core has no 2^{n_s}-hook. Returns 0 when the full type
// peels off (odd degree).
inline int peelFailureStage(const Partition& lambda, const std::vector<PAdicTerm>& expansion) {
    Partition mu = lambda;
    for (std::size_t s = 0; s < expansion.size(); ++s) {
        long long size = 1;
        for (int i = 0; i < expansion[s].exponent; ++i) size *= 2;
        const Partition core = eCore(mu, static_cast<int>(size));
        if (mu.size() - core.size() != size) return static_cast<int>(s) + 1;
        mu = core;
    }
    return 0;
}

}  // namespace detail

/// The even annihilating 2-power type for a character of even degree,
/// following the three-case construction (keep the 2-adic type when it has
/// an even number of even-length cycles, otherwise halve either the top
/// cycle or the second one, guided by the first peel-failure stage r).
struct ConstructedType {
    CycleType type;
    bool tableDefined = false;  // the three-case table yielded a candidate
    bool tableCase = false;     // that candidate verified and was used
};

inline std::optional<ConstructedType> constructedAnnihilatingType(
    const Partition& lambda, MnContext& ctx = defaultMnContext()) {
    const int n = lambda.size();
    if (pValuationOfDegree(lambda, 2) == 0)
        throw std::invalid_argument("construction applies to even-degree characters");
    const auto expansion = pAdicExpansion(n, 2);
    std::vector<int> base;
    for (const auto& term : expansion) {
        long long size = 1;
        for (int i = 0; i < term.exponent; ++i) size *= 2;
        base.push_back(static_cast<int>(size));
    }
    const int evenCycles = static_cast<int>(
        std::count_if(base.begin(), base.end(), [](int c) { return c > 1; }));
    const int r = detail::peelFailureStage(lambda, expansion);

    bool tableDefined = false;
    const auto tryType = [&](std::vector<int> parts,
                             bool table) -> std::optional<ConstructedType> {
        std::sort(parts.begin(), parts.end(), std::greater<>());
        const CycleType sigma{Partition(std::move(parts))};
        if (!sigma.isEven()) return std::nullopt;
        if (ctx.value(lambda, sigma) != 0) return std::nullopt;
        return ConstructedType{sigma, tableDefined, table};
    };

    const auto halveAt = [&](std::size_t idx) {
        std::vector<int> parts = base;
        const int c = parts[idx];
        parts[idx] = c / 2;
        parts.push_back(c / 2);
        return parts;
    };

    std::optional<ConstructedType> result;
    if (evenCycles % 2 == 0) {
        tableDefined = true;
        result = tryType(base, true);
    } else if (r == 1) {
        if (base.size() >= 2 && base[1] > 1) {
            tableDefined = true;
            result = tryType(halveAt(1), true);
        }
    } else if (r > 1 && base[0] > 1) {
        tableDefined = true;
        result = tryType(halveAt(0), true);
    }
    if (result) return result;

    // The table gave nothing (or an out-of-range corner): fall back to the
    // smallest even 2-power type that annihilates.
    for (const Partition& type : pPowerPartitions(n, 2)) {
        if (auto got = tryType(type.parts(), false)) return got;
    }
    return std::nullopt;
}

/// Outcome of the degree-coprimality / non-vanishing equivalence sweep.
struct NonVanishingReport {
    int n = 0;
    int p = 2;
    bool alternating = false;
    int charactersChecked = 0;
    bool equivalenceHolds = true;
    // S_n only: p-adic element annihilation of every p-divisible degree.
    bool pAdicAnnihilates = true;
    // A_n at p = 2: constructed-type statistics.
    int constructedChecked = 0;
    int constructedTableDefined = 0;
    int constructedTableCases = 0;
    std::vector<std::string> failures;
};

inline CycleType pAdicElementType(int n, int p) {
    std::vector<int> parts;
    for (const auto& term : pAdicExpansion(n, p)) {
        long long size = 1;
        for (int i = 0; i < term.exponent; ++i) size *= p;
        parts.insert(parts.end(), term.digit, static_cast<int>(size));
    }
    return CycleType{Partition(std::move(parts))};
}

inline NonVanishingReport nonVanishingSweepSn(int n, int p,
                                              MnContext& ctx = defaultMnContext()) {
    NonVanishingReport report;
    report.n = n;
    report.p = p;
    const std::vector<Partition> types = pPowerPartitions(n, p);
    const CycleType pAdic = pAdicElementType(n, p);
    for (const Partition& lambda : partitionsOf(n)) {
        ++report.charactersChecked;
        const bool coprime = pValuationOfDegree(lambda, p) == 0;
        bool vanishes = false;
        for (const Partition& type : types)
            if (ctx.value(lambda, CycleType(type)) == 0) {
                vanishes = true;
                break;
            }
        if (coprime == vanishes) {
            report.equivalenceHolds = false;
            report.failures.push_back("equivalence fails at " + formatPartition(lambda));
        }
        if (!coprime && ctx.value(lambda, pAdic) != 0) {
            report.pAdicAnnihilates = false;
            report.failures.push_back("p-adic element does not annihilate " +
                                      formatPartition(lambda));
        }
    }
    return report;
}

inline NonVanishingReport nonVanishingSweepAn(int n, int p,
                                              MnContext& ctx = defaultMnContext()) {
    NonVanishingReport report;
    report.n = n;
    report.p = p;
    report.alternating = true;

    std::vector<CycleType> evenTypes;
    for (const Partition& type : pPowerPartitions(n, p)) {
        const CycleType sigma(type);
        if (p != 2 && !sigma.isEven())
            throw std::logic_error("odd permutation among odd-p power types");
        if (sigma.isEven()) evenTypes.push_back(sigma);
    }

    for (const AnCharacterLabel& c : irrAn(n)) {
        ++report.charactersChecked;
        const bool coprime = valuation(anDegree(c), p) == 0;
        bool vanishes = false;
        for (const CycleType& sigma : evenTypes) {
            if (!c.split()) {
                if (ctx.value(c.lambda, sigma) == 0) {
                    vanishes = true;
                    break;
                }
                continue;
            }
            if (sigma.splitsInAlternating()) {
                const auto [plus, minus] = splitValues(c.lambda, sigma, ctx);
                const bool zero = c.sign == '+' ? (plus.isZero() || minus.isZero())
                                                : (minus.isZero() || plus.isZero());
                if (zero) {
                    vanishes = true;
                    break;
                }
            } else if (ctx.value(c.lambda, sigma) == 0) {
                vanishes = true;
                break;
            }
        }
        if (coprime == vanishes) {
            report.equivalenceHolds = false;
            report.failures.push_back("equivalence fails at " + formatPartition(c.lambda) +
                                      (c.split() ? std::string(1, c.sign) : ""));
        }

        if (p == 2 && !coprime) {
            ++report.constructedChecked;
            const auto constructed = constructedAnnihilatingType(c.lambda, ctx);
            if (!constructed) {
                report.failures.push_back("no even annihilating type for " +
                                          formatPartition(c.lambda));
            } else {
                if (constructed->tableDefined) ++report.constructedTableDefined;
                if (constructed->tableCase) ++report.constructedTableCases;
                if (constructed->tableDefined && !constructed->tableCase)
                    report.failures.push_back("table type fails for " +
                                              formatPartition(c.lambda));
            }
        }
    }
    return report;
}

/// Witness for the A_n statement at p in {2, 3}: either a p-defect zero
/// character or a non-split theta with p | theta(1) and p coprime to
/// [theta_R, 1_R].
struct An23Witness {
    int n = 0;
    int p = 2;
    bool defectZero = false;
    AnCharacterLabel character;
    // The S_n labelling partition the witness was found through (the label
    // inside `character` is the canonical conjugate-pair representative).
    Partition witnessLambda;
    BigInt multiplicity = 0;
    Partition gammaUsed;
};

inline An23Witness an23Search(int n, int p, MnContext& ctx = defaultMnContext()) {
    if (n < 5) throw std::invalid_argument("an23Search needs n >= 5");
    if (p != 2 && p != 3) throw std::invalid_argument("an23Search is for p in {2, 3}");
    An23Witness out;
    out.n = n;
    out.p = p;

    if (p == 2 && n == 6) {
        out.defectZero = true;
        out.character = AnCharacterLabel::splitLabel(Partition{3, 2, 1}, '+');
        out.witnessLambda = Partition{3, 2, 1};
        return out;
    }
    if (p == 3 && (n == 5 || n == 8)) {
        for (const Partition& lambda : partitionsOf(n)) {
            if (!isECore(lambda, 3)) continue;
            out.defectZero = true;
            const Partition conj = conjugate(lambda);
            out.character = lambda == conj ? AnCharacterLabel::splitLabel(lambda, '+')
                                           : AnCharacterLabel::nonSplit(lambda);
            out.witnessLambda = lambda;
            return out;
        }
        throw std::logic_error("expected a 3-defect zero character");
    }
    if (p == 3 && n == 11) {
        const Partition lambda{8, 2, 1};
        out.character = AnCharacterLabel::nonSplit(lambda);
        out.witnessLambda = lambda;
        out.multiplicity = anSbc(out.character, 3, ctx).z;
        if (valuation(degree(lambda), 3) == 0 || out.multiplicity % 3 == 0)
            throw std::logic_error("the (8,2,1) witness fails its defining properties");
        return out;
    }

    Partition gamma;
    if (p == 2) {
        gamma = (n % 2 == 1) ? Partition{2, 1} : Partition{3, 2, 1};
    } else {
        switch (n % 3) {
            case 0: gamma = Partition{4, 2}; break;
            case 1: gamma = Partition{3, 1}; break;
            default: gamma = Partition{6, 4, 2, 1, 1}; break;
        }
    }
    out.gammaUsed = gamma;
    if (n < gamma.size() || (n - gamma.size()) % p != 0)
        throw std::logic_error("gamma table does not apply at this n");
    const int w = (n - gamma.size()) / p;
    const BlockLabel block{p, gamma, w};

    if (p == 3) {
        const SnWitness sn = theoremBSearchSn(block, ctx);
        const Partition& lambda = sn.record.lambda;
        if (conjugate(lambda) == lambda)
            throw std::logic_error("self-conjugate witness in a non-self-conjugate block");
        out.character = AnCharacterLabel::nonSplit(lambda);
        out.witnessLambda = lambda;
        out.multiplicity = sn.record.z;
    } else {
        const AnBlockLabel covered{2, gamma, gamma, w, n,
                                   factorialValuation(2 * w, 2) - 1, 0};
        const AnWitness an = theoremBSearchAn(covered, ctx);
        out.character = an.character;
        out.witnessLambda = an.character.lambda;
        out.multiplicity = an.multiplicity;
    }
    // |gamma| >= 3 (p = 2) resp. >= 4 (p = 3) forces p | theta(1).
    if (valuation(anDegree(out.character), p) == 0)
        throw std::logic_error("witness degree unexpectedly coprime to p");
    if (out.multiplicity % p == 0)
        throw std::logic_error("witness multiplicity unexpectedly divisible by p");
    return out;
}

}  // namespace sylowbranch
