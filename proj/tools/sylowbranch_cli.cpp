#include <iostream>

#include <CLI11.hpp>

#include <sylowbranch/verify.hpp>

namespace sb = sylowbranch;
using sb::Json;

namespace {

struct Output {
    bool json = false;

    void emit(const Json& doc, const std::function<void(const Json&)>& table) const {
        if (json)
            std::cout << doc.dump(2) << "\n";
        else
            table(doc);
    }
};

std::vector<int> parseIntList(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (!tok.empty()) out.push_back(std::stoi(tok));
    }
    if (out.empty()) throw CLI::ValidationError("expected a comma-separated integer list");
    return out;
}

int emitReport(const sb::VerificationReport& report, const Output& out) {
    out.emit(report.toJson(), [&](const Json& doc) {
        std::cout << "suite " << doc["suite"].get<std::string>() << ": "
                  << doc["summary"]["passed"] << "/" << doc["summary"]["cases"]
                  << " passed, wall " << doc["wallSeconds"].get<double>() << "s\n";
        for (const auto& rec : doc["cases"]) {
            if (rec["pass"].get<bool>()) continue;
            std::cout << "  FAIL " << rec["inputs"].dump() << " " << rec["outputs"].dump()
                      << "\n";
        }
    });
    return report.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact symmetric/alternating group character invariants and "
                 "Sylow branching verification"};
    app.require_subcommand(1);

    Output out;
    std::string format = "table";
    app.add_option("--format", format, "Output format: table or json")
        ->check(CLI::IsMember({"table", "json"}));

    std::string lambdaText, sigmaText, coreText, hooksText, primesText;
    int p = 2, n = 0, w = 0, e = 2;

    auto* cmdCore = app.add_subcommand("core", "e-core and e-weight of a partition");
    cmdCore->add_option("--lambda", lambdaText)->required();
    cmdCore->add_option("--e", e)->required()->check(CLI::PositiveNumber);

    auto* cmdHooks = app.add_subcommand("hooks", "hook lengths of a partition");
    cmdHooks->add_option("--lambda", lambdaText)->required();

    auto* cmdDegree = app.add_subcommand("degree", "character degree (hook length formula)");
    cmdDegree->add_option("--lambda", lambdaText)->required();

    auto* cmdCharValue = app.add_subcommand("charvalue", "character value at a cycle type");
    cmdCharValue->add_option("--lambda", lambdaText)->required();
    cmdCharValue->add_option("--sigma", sigmaText)->required();

    auto* cmdBlock = app.add_subcommand("block", "p-block data of a partition");
    cmdBlock->add_option("--lambda", lambdaText)->required();
    cmdBlock->add_option("--p", p)->required()->check(CLI::PositiveNumber);

    auto* cmdHeight0 = app.add_subcommand("height0", "height-zero characters of a block");
    cmdHeight0->add_option("--core", coreText)->required();
    cmdHeight0->add_option("--w", w)->required()->check(CLI::NonNegativeNumber);
    cmdHeight0->add_option("--p", p)->required()->check(CLI::PositiveNumber);

    auto* cmdCensus = app.add_subcommand("census", "Sylow subgroup cycle-type census");
    cmdCensus->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
    cmdCensus->add_option("--p", p)->required()->check(CLI::PositiveNumber);

    auto* cmdSbc = app.add_subcommand("sbc", "Sylow branching coefficient Z^lambda");
    cmdSbc->add_option("--lambda", lambdaText)->required();
    cmdSbc->add_option("--p", p)->required()->check(CLI::PositiveNumber);

    auto* cmdVirtual = app.add_subcommand("virtual", "iterated signed hook additions");
    cmdVirtual->add_option("--lambda", lambdaText)->required();
    cmdVirtual->add_option("--hooks", hooksText)->required();

    auto* cmdVb = app.add_subcommand("vb", "block virtual character V^B");
    cmdVb->add_option("--core", coreText)->required();
    cmdVb->add_option("--w", w)->required()->check(CLI::NonNegativeNumber);
    cmdVb->add_option("--p", p)->required()->check(CLI::PositiveNumber);

    auto* cmdVerify = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    cmdVerify->add_option("suite", suite, "suite name or 'all'")->required();
    int maxM = 7, maxE = 5, maxN = -1, maxNSn = 14, maxNAn = 12, singleN = -1, singleP = -1;
    std::uint64_t orderCap = std::uint64_t{1} << 16;
    cmdVerify->add_option("--max-m", maxM);
    cmdVerify->add_option("--max-e", maxE);
    cmdVerify->add_option("--max-n", maxN);
    cmdVerify->add_option("--max-n-sn", maxNSn);
    cmdVerify->add_option("--max-n-an", maxNAn);
    cmdVerify->add_option("--n", singleN);
    cmdVerify->add_option("--p", singleP);
    cmdVerify->add_option("--primes", primesText);
    cmdVerify->add_option("--order-cap", orderCap);

    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& err) {
        return app.exit(err);
    } catch (const CLI::ParseError& err) {
        app.exit(err);
        return 2;
    }
    out.json = format == "json";

    try {
        if (*cmdCore) {
            const sb::Partition lambda = sb::parsePartition(lambdaText);
            const sb::Partition core = sb::eCore(lambda, e);
            Json doc = {{"lambda", sb::formatPartition(lambda)},
                        {"e", e},
                        {"core", sb::formatPartition(core)},
                        {"weight", sb::eWeight(lambda, e)}};
            out.emit(doc, [&](const Json& d) {
                std::cout << "core " << d["core"].get<std::string>() << " weight "
                          << d["weight"] << "\n";
            });
            return 0;
        }
        if (*cmdHooks) {
            const sb::Partition lambda = sb::parsePartition(lambdaText);
            Json rows = Json::array();
            for (const auto& h : sb::hooks(lambda))
                rows.push_back({{"row", h.row}, {"col", h.col}, {"length", h.length},
                                {"leg", h.leg}});
            Json doc = {{"lambda", sb::formatPartition(lambda)}, {"hooks", rows}};
            out.emit(doc, [&](const Json& d) {
                for (const auto& h : d["hooks"])
                    std::cout << "(" << h["row"] << "," << h["col"] << ") length "
                              << h["length"] << " leg " << h["leg"] << "\n";
            });
            return 0;
        }
        if (*cmdDegree) {
            const sb::Partition lambda = sb::parsePartition(lambdaText);
            Json doc = {{"lambda", sb::formatPartition(lambda)},
                        {"degree", sb::degree(lambda).str()}};
            out.emit(doc, [&](const Json& d) {
                std::cout << d["degree"].get<std::string>() << "\n";
            });
            return 0;
        }
        if (*cmdCharValue) {
            const sb::Partition lambda = sb::parsePartition(lambdaText);
            const sb::CycleType sigma{sb::parsePartition(sigmaText)};
            Json doc = {{"lambda", sb::formatPartition(lambda)},
                        {"sigma", sb::formatPartition(sigma.type)},
                        {"value", sb::mnValue(lambda, sigma).str()}};
            out.emit(doc, [&](const Json& d) {
                std::cout << d["value"].get<std::string>() << "\n";
            });
            return 0;
        }
        if (*cmdBlock) {
            const sb::Partition lambda = sb::parsePartition(lambdaText);
            const sb::BlockLabel block = sb::blockOf(lambda, p);
            const sb::HeightRecord h = sb::height(lambda, p);
            Json doc = {{"lambda", sb::formatPartition(lambda)},
                        {"p", p},
                        {"core", sb::formatPartition(block.core)},
                        {"w", block.w},
                        {"defectValuation", sb::defectGroupValuation(block)},
                        {"height", h.height}};
            out.emit(doc, [&](const Json& d) {
                std::cout << "core " << d["core"].get<std::string>() << " w " << d["w"]
                          << " defect " << d["defectValuation"] << " height "
                          << d["height"] << "\n";
            });
            return 0;
        }
        if (*cmdHeight0) {
            const sb::BlockLabel block{p, sb::parsePartition(coreText), w};
            Json list = Json::array();
            for (const sb::Partition& mu : sb::irrHeightZero(block))
                list.push_back(sb::formatPartition(mu));
            Json doc = {{"p", p}, {"core", sb::formatPartition(block.core)},
                        {"w", w}, {"heightZero", list}};
            out.emit(doc, [&](const Json& d) {
                for (const auto& s : d["heightZero"])
                    std::cout << s.get<std::string>() << "\n";
            });
            return 0;
        }
        if (*cmdCensus) {
            const sb::CycleTypeCensus cen = sb::census(n, p);
            Json counts = Json::object();
            for (const auto& [type, count] : cen.counts)
                counts[sb::formatPartition(type)] = count.str();
            Json doc = {{"n", n}, {"p", p}, {"groupOrder", cen.groupOrder.str()},
                        {"counts", counts}};
            out.emit(doc, [&](const Json& d) {
                std::cout << "order " << d["groupOrder"].get<std::string>() << "\n";
                for (const auto& [type, count] : d["counts"].items())
                    std::cout << type << ": " << count.get<std::string>() << "\n";
            });
            return 0;
        }
        if (*cmdSbc) {
            const sb::SBCRecord rec = sb::sbc(sb::parsePartition(lambdaText), p);
            Json doc = {{"lambda", sb::formatPartition(rec.lambda)}, {"p", p},
                        {"z", rec.z.str()}};
            if (rec.zValuation) doc["zValuation"] = *rec.zValuation;
            out.emit(doc, [&](const Json& d) {
                std::cout << d["z"].get<std::string>() << "\n";
            });
            return 0;
        }
        if (*cmdVirtual) {
            const sb::Partition lambda = sb::parsePartition(lambdaText);
            const std::vector<int> sizes = parseIntList(hooksText);
            const sb::VirtualCharacter v = sb::virtualIterate(lambda, sizes);
            Json terms = Json::array();
            for (const auto& [alpha, c] : v.coeffs)
                terms.push_back({{"label", sb::formatPartition(alpha)}, {"coeff", c}});
            Json doc = {{"lambda", sb::formatPartition(lambda)}, {"hooks", sizes},
                        {"n", v.n}, {"terms", terms}};
            out.emit(doc, [&](const Json& d) {
                for (const auto& t : d["terms"])
                    std::cout << std::showpos << t["coeff"].get<long long>()
                              << std::noshowpos << " " << t["label"].get<std::string>()
                              << "\n";
            });
            return 0;
        }
        if (*cmdVb) {
            const sb::BlockLabel block{p, sb::parsePartition(coreText), w};
            const sb::BlockVirtualCharacter bvc = sb::vB(block);
            Json terms = Json::array();
            for (const auto& [alpha, c] : bvc.vc.coeffs)
                terms.push_back({{"label", sb::formatPartition(alpha)}, {"coeff", c}});
            Json doc = {{"p", p}, {"core", sb::formatPartition(block.core)}, {"w", w},
                        {"hookSizes", bvc.hookSizes}, {"degenerate", bvc.degenerate},
                        {"terms", terms}};
            out.emit(doc, [&](const Json& d) {
                for (const auto& t : d["terms"])
                    std::cout << std::showpos << t["coeff"].get<long long>()
                              << std::noshowpos << " " << t["label"].get<std::string>()
                              << "\n";
            });
            return 0;
        }
        if (*cmdVerify) {
            std::vector<int> primes;
            if (!primesText.empty()) primes = parseIntList(primesText);
            if (singleP > 0) primes = {singleP};
            const auto primesOr = [&](std::vector<int> fallback) {
                return primes.empty() ? fallback : primes;
            };
            const auto maxNOr = [&](int fallback) {
                if (singleN > 0) return singleN;
                return maxN > 0 ? maxN : fallback;
            };

            const auto run = [&](const std::string& name) -> sb::VerificationReport {
                if (name == "gdc") return sb::suiteGdc(maxM, maxE);
                if (name == "pprime-mult")
                    return sb::suitePPrimeMult(primesOr({2, 3}), maxNOr(18));
                if (name == "theorem-b-sn")
                    return sb::suiteTheoremBSn(primesOr({2, 3, 5}), maxNOr(15));
                if (name == "theorem-b-an")
                    return sb::suiteTheoremBAn(primesOr({2, 3, 5}), maxNOr(12));
                if (name == "nonvanishing")
                    return sb::suiteNonVanishing(primesOr({2, 3, 5}),
                                                 maxN > 0 ? maxN : maxNSn,
                                                 maxN > 0 ? std::min(maxN, maxNAn) : maxNAn);
                if (name == "an23")
                    return sb::suiteAn23(maxNOr(30), primesOr({2, 3}), singleN > 0 ? singleN : 5);
                if (name == "lemma-iv")
                    return sb::suiteLemmaIv(primesOr({2, 3, 5}), maxNOr(20));
                if (name == "defect-zero-restriction")
                    return sb::suiteDefectZeroRestriction(primesOr({2, 3, 5}), maxNOr(16));
                if (name == "census-oracle")
                    return sb::suiteCensusOracle(primesOr({2, 3, 5}), orderCap);
                throw CLI::ValidationError("unknown suite: " + name);
            };

            if (suite == "all") {
                int worst = 0;
                for (const std::string& name : sb::suiteNames())
                    worst = std::max(worst, emitReport(run(name), out));
                return worst;
            }
            return emitReport(run(suite), out);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
