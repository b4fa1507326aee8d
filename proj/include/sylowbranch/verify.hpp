#pragma once

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <mutex>
#include <string>
#include <thread>

#include <json.hpp>

#include "alternating.hpp"

namespace sylowbranch {

inline constexpr const char* kArtifactVersion = "1.0.0";

using Json = nlohmann::ordered_json;

/// Worker count: SYLOWBRANCH_THREADS, with 0 / unset meaning auto.
inline unsigned threadCount() {
    if (const char* env = std::getenv("SYLOWBRANCH_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

/// Applies fn to every index in [0, count) across workers; results land at
/// their input index, so output order never depends on scheduling.
template <typename Fn>
void parallelFor(std::size_t count, Fn&& fn) {
    const unsigned workers = std::min<std::size_t>(threadCount(), count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr error;
    std::mutex errorLock;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> guard(errorLock);
                    if (!error) error = std::current_exception();
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

struct CaseRecord {
    Json inputs;
    Json outputs;
    bool pass = true;
};

struct VerificationReport {
    std::string suite;
    Json ranges;
    std::vector<CaseRecord> cases;
    double wallSeconds = 0.0;

    int passed() const {
        return static_cast<int>(std::count_if(cases.begin(), cases.end(),
                                              [](const CaseRecord& c) { return c.pass; }));
    }
    int failed() const { return static_cast<int>(cases.size()) - passed(); }
    bool pass() const { return failed() == 0; }

    Json toJson() const {
        Json out;
        out["suite"] = suite;
        out["version"] = kArtifactVersion;
        out["ranges"] = ranges;
        Json summary;
        summary["cases"] = static_cast<int>(cases.size());
        summary["passed"] = passed();
        summary["failed"] = failed();
        summary["pass"] = pass();
        out["summary"] = summary;
        out["wallSeconds"] = wallSeconds;
        Json recs = Json::array();
        for (const CaseRecord& c : cases) {
            Json rec;
            rec["inputs"] = c.inputs.is_null() ? Json::object() : c.inputs;
            rec["outputs"] = c.outputs.is_null() ? Json::object() : c.outputs;
            rec["pass"] = c.pass;
            recs.push_back(std::move(rec));
        }
        out["cases"] = std::move(recs);
        return out;
    }
};

namespace detail {

inline Json typeJson(const Partition& type) { return formatPartition(type); }

class Stopwatch {
  public:
    double seconds() const {
        return std::chrono::duration<double>(Clock::now() - start_).count();
    }

  private:
    using Clock = std::chrono::steady_clock;
    Clock::time_point start_ = Clock::now();
};

// Runs one suite case per work item, capturing exceptions as failures.
template <typename Item, typename Fn>
std::vector<CaseRecord> runCases(const std::vector<Item>& items, Fn&& fn) {
    std::vector<CaseRecord> records(items.size());
    parallelFor(items.size(), [&](std::size_t i) {
        try {
            records[i] = fn(items[i]);
        } catch (const std::exception& e) {
            records[i].pass = false;
            records[i].outputs["error"] = e.what();
        }
    });
    return records;
}

}  // namespace detail

/// Signed hook-addition identity sweep: V^lambda[e](sigma) = k*e*chi(tau).
inline VerificationReport suiteGdc(int maxM = 7, int maxE = 5) {
    const detail::Stopwatch clock;
    VerificationReport report;
    report.suite = "gdc";
    report.ranges = {{"maxM", maxM}, {"maxE", maxE}};

    std::vector<std::pair<Partition, int>> items;
    for (int m = 0; m <= maxM; ++m)
        for (const Partition& lambda : partitionsOf(m))
            for (int e = 1; e <= maxE; ++e) items.emplace_back(lambda, e);

    report.cases = detail::runCases(items, [](const auto& item) {
        const auto& [lambda, e] = item;
        CaseRecord rec;
        rec.inputs = {{"lambda", formatPartition(lambda)}, {"e", e}};
        const auto bad = gdcCheck(lambda, e);
        rec.pass = !bad.has_value();
        if (bad) rec.outputs["violatingType"] = formatPartition(bad->type);
        return rec;
    });
    report.wallSeconds = clock.seconds();
    return report;
}

/// p-coprime multiplicity of the core-to-n virtual character, with the
/// five-term valuation ledger.
inline VerificationReport suitePPrimeMult(const std::vector<int>& primes = {2, 3},
                                          int maxN = 18) {
    const detail::Stopwatch clock;
    VerificationReport report;
    report.suite = "pprime-mult";
    report.ranges = {{"primes", primes}, {"maxN", maxN}};

    std::vector<std::tuple<Partition, int, int>> items;
    for (int p : primes)
        for (int n = 1; n <= maxN; ++n)
            for (int coreSize = 0; coreSize < n; ++coreSize) {
                if ((n - coreSize) % p != 0) continue;
                for (const Partition& gamma : partitionsOf(coreSize))
                    if (isECore(gamma, p)) items.emplace_back(gamma, n, p);
            }

    report.cases = detail::runCases(items, [](const auto& item) {
        const auto& [gamma, n, p] = item;
        CaseRecord rec;
        rec.inputs = {{"gamma", formatPartition(gamma)}, {"n", n}, {"p", p}};
        const PPrimeMultResult res = pPrimeMultCheck(gamma, n, p);
        rec.outputs["innerProduct"] = res.innerProduct.str();
        rec.outputs["ledgerSum"] = res.ledger.sum();
        rec.pass = res.valuation == 0 && res.ledger.sum() == 0;
        return rec;
    });
    report.wallSeconds = clock.seconds();
    return report;
}

/// Height-zero witness with p-coprime branching coefficient in every S_n
/// block; for positive weight the witness must lie in the support of V^B.
inline VerificationReport suiteTheoremBSn(const std::vector<int>& primes = {2, 3, 5},
                                          int maxN = 15) {
    const detail::Stopwatch clock;
    VerificationReport report;
    report.suite = "theorem-b-sn";
    report.ranges = {{"primes", primes}, {"maxN", maxN}};

    std::vector<BlockLabel> items;
    for (int p : primes)
        for (int n = 0; n <= maxN; ++n) {
            std::set<BlockLabel> blocks;
            for (const Partition& lambda : partitionsOf(n)) blocks.insert(blockOf(lambda, p));
            items.insert(items.end(), blocks.begin(), blocks.end());
        }

    report.cases = detail::runCases(items, [](const BlockLabel& block) {
        CaseRecord rec;
        rec.inputs = {{"p", block.p},
                      {"core", formatPartition(block.core)},
                      {"w", block.w},
                      {"n", block.n()}};
        const SnWitness witness = theoremBSearchSn(block);
        rec.outputs["witness"] = formatPartition(witness.record.lambda);
        rec.outputs["z"] = witness.record.z.str();
        rec.outputs["inVbSupport"] = witness.inVbSupport;
        rec.pass = witness.record.z % block.p != 0 && (block.w == 0 || witness.inVbSupport);
        return rec;
    });
    report.wallSeconds = clock.seconds();
    return report;
}

/// Witness in every A_n block; at p = 2 it must carry odd Z + Z'.
inline VerificationReport suiteTheoremBAn(const std::vector<int>& primes = {2, 3, 5},
                                          int maxN = 12) {
    const detail::Stopwatch clock;
    VerificationReport report;
    report.suite = "theorem-b-an";
    report.ranges = {{"primes", primes}, {"maxN", maxN}};

    std::vector<AnBlockLabel> items;
    for (int p : primes)
        for (int n = 2; n <= maxN; ++n)
            for (const AnBlockLabel& block : anBlocks(n, p)) items.push_back(block);

    report.cases = detail::runCases(items, [](const AnBlockLabel& block) {
        CaseRecord rec;
        rec.inputs = {{"p", block.p},
                      {"core", formatPartition(block.core)},
                      {"w", block.w},
                      {"n", block.n}};
        if (block.splitTag) rec.inputs["sign"] = std::string(1, block.splitTag);
        const AnWitness witness = theoremBSearchAn(block);
        Json label;
        if (witness.character.split()) {
            label["split"] = formatPartition(witness.character.lambda);
            label["sign"] = std::string(1, witness.character.sign);
        } else {
            label["pair"] = {formatPartition(witness.character.lambda),
                             formatPartition(conjugate(witness.character.lambda))};
        }
        rec.outputs["witness"] = std::move(label);
        rec.outputs["multiplicity"] = witness.multiplicity.str();
        if (witness.pairParts)
            rec.outputs["pairZ"] = {witness.pairParts->first.str(),
                                    witness.pairParts->second.str()};
        rec.pass = witness.multiplicity % block.p != 0;
        return rec;
    });
    report.wallSeconds = clock.seconds();
    return report;
}

/// Degree coprimality <=> non-vanishing on p-element classes, for S_n and
/// A_n, plus the p-adic annihilating element and the p = 2 constructed type.
inline VerificationReport suiteNonVanishing(const std::vector<int>& primes = {2, 3, 5},
                                            int maxNSn = 14, int maxNAn = 12) {
    const detail::Stopwatch clock;
    VerificationReport report;
    report.suite = "nonvanishing";
    report.ranges = {{"primes", primes}, {"maxNSn", maxNSn}, {"maxNAn", maxNAn}};

    struct Item {
        int n;
        int p;
        bool alternating;
    };
    std::vector<Item> items;
    for (int p : primes) {
        for (int n = 1; n <= maxNSn; ++n) items.push_back({n, p, false});
        for (int n = 3; n <= maxNAn; ++n) items.push_back({n, p, true});
    }

    report.cases = detail::runCases(items, [](const Item& item) {
        CaseRecord rec;
        rec.inputs = {{"group", item.alternating ? "An" : "Sn"},
                      {"n", item.n},
                      {"p", item.p}};
        const NonVanishingReport sweep = item.alternating
                                             ? nonVanishingSweepAn(item.n, item.p)
                                             : nonVanishingSweepSn(item.n, item.p);
        rec.outputs["charactersChecked"] = sweep.charactersChecked;
        if (!item.alternating) rec.outputs["pAdicAnnihilates"] = sweep.pAdicAnnihilates;
        if (item.alternating && item.p == 2) {
            rec.outputs["constructedChecked"] = sweep.constructedChecked;
            rec.outputs["constructedTableDefined"] = sweep.constructedTableDefined;
            rec.outputs["constructedTableCases"] = sweep.constructedTableCases;
        }
        if (!sweep.failures.empty()) rec.outputs["failures"] = sweep.failures;
        rec.pass = sweep.equivalenceHolds && sweep.pAdicAnnihilates && sweep.failures.empty();
        return rec;
    });
    report.wallSeconds = clock.seconds();
    return report;
}

/// The A_n statement at p in {2, 3}: defect-zero or coprime-multiplicity
/// witness for every n in range.
inline VerificationReport suiteAn23(int maxN = 30, const std::vector<int>& primes = {2, 3},
                                    int minN = 5) {
    const detail::Stopwatch clock;
    VerificationReport report;
    report.suite = "an23";
    report.ranges = {{"primes", primes}, {"minN", minN}, {"maxN", maxN}};

    std::vector<std::pair<int, int>> items;
    for (int p : primes)
        for (int n = std::max(minN, 5); n <= maxN; ++n) items.emplace_back(n, p);

    report.cases = detail::runCases(items, [](const auto& item) {
        const auto& [n, p] = item;
        CaseRecord rec;
        rec.inputs = {{"n", n}, {"p", p}};
        const An23Witness witness = an23Search(n, p);
        Json label;
        if (witness.character.split()) {
            label["split"] = formatPartition(witness.witnessLambda);
            label["sign"] = std::string(1, witness.character.sign);
        } else {
            label["pair"] = {formatPartition(witness.witnessLambda),
                             formatPartition(conjugate(witness.witnessLambda))};
        }
        rec.outputs["witness"] = std::move(label);
        rec.outputs["defectZero"] = witness.defectZero;
        if (!witness.defectZero) {
            rec.outputs["multiplicity"] = witness.multiplicity.str();
            rec.outputs["gamma"] = formatPartition(witness.gammaUsed);
        }
        rec.pass = witness.defectZero || witness.multiplicity % p != 0;
        return rec;
    });
    report.wallSeconds = clock.seconds();
    return report;
}

/// Census count valuations match class-size valuations, and the permutation
/// character (1_P)^{S_n} is integral and p-coprime on every type.
inline VerificationReport suiteLemmaIv(const std::vector<int>& primes = {2, 3, 5},
                                       int maxN = 20) {
    const detail::Stopwatch clock;
    VerificationReport report;
    report.suite = "lemma-iv";
    report.ranges = {{"primes", primes}, {"maxN", maxN}};

    std::vector<std::pair<int, int>> items;
    for (int p : primes)
        for (int n = 1; n <= maxN; ++n) items.emplace_back(n, p);

    report.cases = detail::runCases(items, [](const auto& item) {
        const auto& [n, p] = item;
        CaseRecord rec;
        rec.inputs = {{"n", n}, {"p", p}};
        const CycleTypeCensus& cen = cachedCensus(n, p);
        BigInt total = 0;
        int checked = 0;
        bool ok = true;
        for (const auto& [type, count] : cen.counts) {
            total += count;
            const CycleType sigma(type);
            if (valuation(count, p) != valuation(classSize(sigma), p)) ok = false;
            if (permCharValue(cen, sigma) % p == 0) ok = false;
            ++checked;
        }
        if (total != cen.groupOrder) ok = false;
        rec.outputs["typesChecked"] = checked;
        rec.pass = ok;
        return rec;
    });
    report.wallSeconds = clock.seconds();
    return report;
}

/// For every p-core lambda: chi^lambda vanishes on all nontrivial p-power
/// types, and degree / |P| is an integer coprime to p.
inline VerificationReport suiteDefectZeroRestriction(
    const std::vector<int>& primes = {2, 3, 5}, int maxN = 16) {
    const detail::Stopwatch clock;
    VerificationReport report;
    report.suite = "defect-zero-restriction";
    report.ranges = {{"primes", primes}, {"maxN", maxN}};

    std::vector<std::pair<int, int>> items;
    for (int p : primes)
        for (int n = 1; n <= maxN; ++n) items.emplace_back(n, p);

    report.cases = detail::runCases(items, [](const auto& item) {
        const auto& [n, p] = item;
        CaseRecord rec;
        rec.inputs = {{"n", n}, {"p", p}};
        MnContext& ctx = defaultMnContext();
        const BigInt pPart = sylowOrder(n, p);
        int cores = 0;
        bool ok = true;
        for (const Partition& lambda : partitionsOf(n)) {
            if (!isECore(lambda, p)) continue;
            ++cores;
            for (const Partition& type : pPowerPartitions(n, p)) {
                const CycleType sigma(type);
                if (sigma.cycles() == n) continue;  // identity
                if (ctx.value(lambda, sigma) != 0) ok = false;
            }
            const BigInt d = degree(lambda);
            if (d % pPart != 0 || (d / pPart) % p == 0) ok = false;
            if (sbc(lambda, p, ctx).z != d / pPart) ok = false;
        }
        rec.outputs["coresChecked"] = cores;
        rec.pass = ok;
        return rec;
    });
    report.wallSeconds = clock.seconds();
    return report;
}

/// Recursive census against the explicit generator-closure oracle.
inline VerificationReport suiteCensusOracle(const std::vector<int>& primes = {2, 3, 5},
                                            std::uint64_t orderCap = std::uint64_t{1} << 16) {
    const detail::Stopwatch clock;
    VerificationReport report;
    report.suite = "census-oracle";
    report.ranges = {{"primes", primes}, {"orderCap", orderCap}};

    std::vector<std::pair<int, int>> items;
    for (int p : primes)
        for (int n = 1; n <= 255 && sylowOrder(n, p) <= orderCap; ++n)
            items.emplace_back(n, p);

    report.cases = detail::runCases(items, [orderCap](const auto& item) {
        const auto& [n, p] = item;
        CaseRecord rec;
        rec.inputs = {{"n", n}, {"p", p}};
        const CycleTypeCensus fast = census(n, p);
        const CycleTypeCensus slow = censusBruteForce(n, p, orderCap);
        rec.outputs["groupOrder"] = fast.groupOrder.str();
        rec.outputs["types"] = static_cast<int>(fast.counts.size());
        rec.pass = fast.counts == slow.counts && fast.groupOrder == slow.groupOrder;
        return rec;
    });
    report.wallSeconds = clock.seconds();
    return report;
}

inline const std::vector<std::string>& suiteNames() {
    static const std::vector<std::string> names = {
        "gdc",           "pprime-mult", "theorem-b-sn",
        "theorem-b-an",  "nonvanishing", "an23",
        "lemma-iv",      "defect-zero-restriction", "census-oracle"};
    return names;
}

}  // namespace sylowbranch
