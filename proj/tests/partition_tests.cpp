#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <unordered_set>

#include <sylowbranch/partition.hpp>

using namespace sylowbranch;

namespace {

// Hook length recomputed by scanning the Young diagram cell by cell.
int gridHookLength(const Partition& lambda, int row, int col) {
    int count = 1;
    for (int b = col + 1; b <= lambda.part(row); ++b) ++count;
    for (int a = row + 1; a <= static_cast<int>(lambda.rows()); ++a)
        if (lambda.part(a) >= col) ++count;
    return count;
}

// Every terminal partition reachable by removing e-hooks in any order.
void allCores(const Partition& lambda, int e, std::set<Partition>& terminals, int& steps) {
    const auto removable = hooksOfLength(lambda, e);
    if (removable.empty()) {
        terminals.insert(lambda);
        return;
    }
    for (const auto& h : removable) {
        int sub = 0;
        std::set<Partition> subTerm;
        allCores(removeHook(lambda, h).first, e, subTerm, sub);
        terminals.insert(subTerm.begin(), subTerm.end());
        steps = sub + 1;
    }
}

}  // namespace

TEST_CASE("conjugate") {
    CHECK(conjugate(Partition{3, 1}) == Partition{2, 1, 1});
    CHECK(conjugate(Partition{}) == Partition{});
    for (int n = 0; n <= 8; ++n)
        for (const Partition& lambda : partitionsOf(n))
            CHECK(conjugate(conjugate(lambda)) == lambda);
}

TEST_CASE("hook lengths match the diagram scan") {
    const auto sorted = [](std::vector<int> v) {
        std::sort(v.begin(), v.end(), std::greater<>());
        return v;
    };
    CHECK(sorted(hookLengths(Partition{3, 1})) == std::vector<int>{4, 2, 1, 1});
    CHECK(sorted(hookLengths(Partition{2, 2})) == std::vector<int>{3, 2, 2, 1});
    for (int n = 0; n <= 8; ++n)
        for (const Partition& lambda : partitionsOf(n))
            for (const HookSpec& h : hooks(lambda))
                CHECK(h.length == gridHookLength(lambda, h.row, h.col));
}

TEST_CASE("beta sets round-trip") {
    for (int n = 0; n <= 8; ++n)
        for (const Partition& lambda : partitionsOf(n))
            for (int extra = 0; extra <= 3; ++extra) {
                const int len = static_cast<int>(lambda.rows()) + extra;
                CHECK(partitionFromBetaSet(betaSet(lambda, len)) == lambda);
            }
}

TEST_CASE("hook removal and addition are inverse") {
    const auto [mu, leg] = removeHook(Partition{3, 1}, HookSpec{1, 2, 2, 0});
    CHECK(mu == Partition{1, 1});
    CHECK(leg == 0);

    for (int n = 1; n <= 8; ++n)
        for (const Partition& lambda : partitionsOf(n))
            for (const HookSpec& h : hooks(lambda)) {
                const auto [smaller, hLeg] = removeHook(lambda, h);
                CHECK(smaller.size() == lambda.size() - h.length);
                const auto additions = addHooks(smaller, h.length);
                CHECK(std::count(additions.begin(), additions.end(),
                                 std::make_pair(lambda, hLeg)) == 1);
            }
}

TEST_CASE("e-core agrees with exhaustive removal order") {
    for (int n = 0; n <= 9; ++n)
        for (const Partition& lambda : partitionsOf(n))
            for (int e = 2; e <= 5; ++e) {
                std::set<Partition> terminals;
                int steps = 0;
                allCores(lambda, e, terminals, steps);
                REQUIRE(terminals.size() == 1);
                CHECK(*terminals.begin() == eCore(lambda, e));
                CHECK(static_cast<int>(lambda.size() - terminals.begin()->size()) ==
                      e * eWeight(lambda, e));
            }
    CHECK(eCore(Partition{8, 2, 1}, 3) == Partition{2});
    CHECK(eWeight(Partition{8, 2, 1}, 3) == 3);
    CHECK(isECore(Partition{3, 1}, 3));
    CHECK(!isECore(Partition{2, 2}, 2));
}

TEST_CASE("diagonal hooks") {
    CHECK(diagonalHooks(Partition{3, 2, 1}) == Partition{5, 1});
    CHECK(diagonalHooks(Partition{2, 2}) == Partition{3, 1});
    CHECK(diagonalHooks(Partition{3, 1, 1}) == Partition{5});
    // Self-conjugate partitions have distinct odd diagonal hooks summing to n.
    for (int n = 0; n <= 10; ++n)
        for (const Partition& lambda : partitionsOf(n)) {
            if (conjugate(lambda) != lambda) continue;
            const Partition d = diagonalHooks(lambda);
            CHECK(d.size() == n);
            std::set<int> seen;
            for (int part : d.parts()) {
                CHECK(part % 2 == 1);
                CHECK(seen.insert(part).second);
            }
        }
}

TEST_CASE("p-adic expansion") {
    const auto e11 = pAdicExpansion(11, 2);
    REQUIRE(e11.size() == 3);
    CHECK((e11[0].exponent == 3 && e11[0].digit == 1));
    CHECK((e11[1].exponent == 1 && e11[1].digit == 1));
    CHECK((e11[2].exponent == 0 && e11[2].digit == 1));
    const auto e24 = pAdicExpansion(24, 3);
    REQUIRE(e24.size() == 2);
    CHECK((e24[0].exponent == 2 && e24[0].digit == 2));
    CHECK((e24[1].exponent == 1 && e24[1].digit == 2));
    CHECK(pAdicExpansion(0, 5).empty());
}

TEST_CASE("partition enumeration") {
    CHECK(partitionsOf(0).size() == 1);
    CHECK(partitionsOf(5).size() == 7);
    CHECK(partitionsOf(10).size() == 42);
    CHECK(partitionsOf(15).size() == 176);
    CHECK(partitionsOf(20).size() == 627);
    CHECK(pPowerPartitions(6, 2).size() == 6);
    for (const Partition& type : pPowerPartitions(12, 2)) {
        CHECK(type.size() == 12);
        for (int part : type.parts()) CHECK((part & (part - 1)) == 0);
    }
}

TEST_CASE("text format") {
    CHECK(parsePartition("8,2,1") == Partition{8, 2, 1});
    CHECK(parsePartition("-") == Partition{});
    CHECK(parsePartition("3,1^4") == Partition{3, 1, 1, 1, 1});
    CHECK(formatPartition(Partition{8, 2, 1}) == "8,2,1");
    CHECK(formatPartition(Partition{}) == "-");
    CHECK(formatPartition(Partition{3, 1, 1, 1, 1}) == "3,1,1,1,1");
    CHECK_THROWS(parsePartition("1,3"));
    CHECK_THROWS(parsePartition("0"));
    CHECK_THROWS(parsePartition("x"));
}

TEST_CASE("value semantics and hashing") {
    std::unordered_set<Partition> seen;
    for (const Partition& lambda : partitionsOf(9)) seen.insert(lambda);
    CHECK(seen.size() == partitionsOf(9).size());
    CHECK(Partition{3, 1, 0, 0} == Partition{3, 1});
}
