#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <fstream>

#include <sylowbranch/verify.hpp>

using namespace sylowbranch;

namespace {

// Minimal JSON-Schema checker covering the subset the shipped schemas use:
// type, const, required, properties, items.
bool validates(const Json& schema, const Json& doc, std::string& why) {
    if (schema.contains("const")) {
        if (doc != schema["const"]) {
            why = "const mismatch at " + doc.dump();
            return false;
        }
    }
    if (schema.contains("type")) {
        const std::string t = schema["type"];
        const bool ok = (t == "object" && doc.is_object()) ||
                        (t == "array" && doc.is_array()) ||
                        (t == "string" && doc.is_string()) ||
                        (t == "integer" && doc.is_number_integer()) ||
                        (t == "number" && doc.is_number()) ||
                        (t == "boolean" && doc.is_boolean());
        if (!ok) {
            why = "type " + t + " mismatch at " + doc.dump().substr(0, 80);
            return false;
        }
    }
    if (schema.contains("required"))
        for (const auto& key : schema["required"])
            if (!doc.contains(key.get<std::string>())) {
                why = "missing key " + key.get<std::string>();
                return false;
            }
    if (schema.contains("properties") && doc.is_object())
        for (const auto& [key, sub] : schema["properties"].items())
            if (doc.contains(key) && !validates(sub, doc[key], why)) return false;
    if (schema.contains("items") && doc.is_array())
        for (const auto& element : doc)
            if (!validates(schema["items"], element, why)) return false;
    return true;
}

Json loadSchema(const std::string& suite) {
    const std::string path = std::string(SB_SOURCE_DIR) + "/schemas/" + suite + ".json";
    std::ifstream in(path);
    REQUIRE(in.good());
    return Json::parse(in);
}

void checkReport(const VerificationReport& report) {
    CHECK(report.pass());
    const Json doc = report.toJson();
    std::string why;
    const bool ok = validates(loadSchema(report.suite), doc, why);
    INFO(report.suite << ": " << why);
    CHECK(ok);
}

Json stripTiming(Json doc) {
    doc.erase("wallSeconds");
    return doc;
}

}  // namespace

TEST_CASE("parallelFor covers every index once") {
    std::vector<int> hits(1000, 0);
    parallelFor(hits.size(), [&](std::size_t i) { hits[i] += 1; });
    CHECK(std::count(hits.begin(), hits.end(), 1) == 1000);
}

TEST_CASE("suites pass and validate against their schemas") {
    checkReport(suiteGdc(5, 3));
    checkReport(suitePPrimeMult({2, 3}, 10));
    checkReport(suiteTheoremBSn({2, 3}, 10));
    checkReport(suiteTheoremBAn({2, 3}, 9));
    checkReport(suiteNonVanishing({2, 3}, 9, 8));
    checkReport(suiteAn23(12));
    checkReport(suiteLemmaIv({2, 3, 5}, 12));
    checkReport(suiteDefectZeroRestriction({2, 3, 5}, 10));
    checkReport(suiteCensusOracle({2, 3, 5}, 1 << 12));
}

TEST_CASE("reports are deterministic across thread counts") {
    setenv("SYLOWBRANCH_THREADS", "1", 1);
    const Json serial = stripTiming(suiteTheoremBSn({2, 3}, 9).toJson());
    const Json serialAgain = stripTiming(suiteTheoremBSn({2, 3}, 9).toJson());
    setenv("SYLOWBRANCH_THREADS", "4", 1);
    const Json parallel = stripTiming(suiteTheoremBSn({2, 3}, 9).toJson());
    setenv("SYLOWBRANCH_THREADS", "0", 1);
    CHECK(serial.dump() == serialAgain.dump());
    CHECK(serial.dump() == parallel.dump());
}

TEST_CASE("thread count honours the environment variable") {
    setenv("SYLOWBRANCH_THREADS", "3", 1);
    CHECK(threadCount() == 3);
    setenv("SYLOWBRANCH_THREADS", "0", 1);
    CHECK(threadCount() >= 1);
    unsetenv("SYLOWBRANCH_THREADS");
    CHECK(threadCount() >= 1);
}

TEST_CASE("failing cases are reported, not hidden") {
    // A synthetic report with one failing record must fail as a whole.
    VerificationReport report;
    report.suite = "gdc";
    report.cases.push_back({Json::object(), Json::object(), true});
    report.cases.push_back({Json::object(), Json::object(), false});
    CHECK(!report.pass());
    CHECK(report.passed() == 1);
    CHECK(report.failed() == 1);
    CHECK(report.toJson()["summary"]["pass"] == false);
}
