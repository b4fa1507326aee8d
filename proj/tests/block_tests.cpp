#include <catch2/catch_amalgamated.hpp>

#include <sylowbranch/block.hpp>

using namespace sylowbranch;

TEST_CASE("block of a partition") {
    const BlockLabel b = blockOf(Partition{8, 2, 1}, 3);
    CHECK(b.core == Partition{2});
    CHECK(b.w == 3);
    CHECK(b.n() == 11);

    for (int n = 0; n <= 10; ++n)
        for (const Partition& lambda : partitionsOf(n))
            for (int p : {2, 3, 5}) {
                const BlockLabel block = blockOf(lambda, p);
                CHECK(isECore(block.core, p));
                CHECK(block.n() == n);
            }
}

TEST_CASE("defect group valuation") {
    CHECK(defectGroupValuation(BlockLabel{3, Partition{2}, 3}) == 4);  // nu_3(9!)
    CHECK(defectGroupValuation(BlockLabel{2, Partition{}, 2}) == 3);   // nu_2(4!)
    CHECK(defectGroupValuation(BlockLabel{5, Partition{3, 1}, 0}) == 0);
}

TEST_CASE("heights") {
    CHECK(height(Partition{2, 2}, 2).height == 1);
    // Principal block of S_3 at p = 3: all three characters have height 0.
    for (const Partition& lambda : partitionsOf(3)) CHECK(height(lambda, 3).height == 0);
    for (int n = 0; n <= 10; ++n)
        for (const Partition& lambda : partitionsOf(n))
            for (int p : {2, 3, 5}) CHECK(height(lambda, p).height >= 0);
}

TEST_CASE("height-zero characters of a block") {
    CHECK(irrHeightZero(BlockLabel{3, Partition{}, 1}) ==
          std::set<Partition>{Partition{3}, Partition{2, 1}, Partition{1, 1, 1}});
    CHECK(irrHeightZero(BlockLabel{2, Partition{}, 1}) ==
          std::set<Partition>{Partition{2}, Partition{1, 1}});

    // Against the direct filter over all partitions of n.
    for (int n = 0; n <= 10; ++n)
        for (int p : {2, 3}) {
            std::set<BlockLabel> blocks;
            for (const Partition& lambda : partitionsOf(n)) blocks.insert(blockOf(lambda, p));
            for (const BlockLabel& block : blocks) {
                std::set<Partition> expected;
                for (const Partition& lambda : partitionsOf(n))
                    if (blockOf(lambda, p) == block && height(lambda, p).height == 0)
                        expected.insert(lambda);
                CHECK(irrHeightZero(block) == expected);
            }
        }
}

TEST_CASE("height zero forbids self-conjugate at p = 2") {
    for (int n = 0; n <= 14; ++n) CHECK(heightZeroNotSelfConjugate(n));
}

TEST_CASE("A_n blocks") {
    // A_5 at p = 3: the self-conjugate 3-core (3,1,1) gives two defect-zero
    // blocks; the weight-1 pair {(2), (1,1)} is covered by one block; (5) and
    // (1^5) share the core pair as well.
    const auto blocks53 = anBlocks(5, 3);
    int splitBlocks = 0, positiveWeight = 0;
    for (const AnBlockLabel& b : blocks53) {
        CHECK(b.n == 5);
        if (b.splitTag) {
            ++splitBlocks;
            CHECK(b.w == 0);
            CHECK(b.core == conjugate(b.core));
            CHECK(b.defectValuation == 0);
        } else {
            ++positiveWeight;
            CHECK(b.core <= b.coreConjugate);
        }
    }
    CHECK(splitBlocks == 2);
    CHECK(positiveWeight == 1);

    // p = 2: one covered block per 2-core for w > 0, split pairs at w = 0.
    for (int n = 2; n <= 10; ++n)
        for (const AnBlockLabel& b : anBlocks(n, 2)) {
            CHECK(b.core == conjugate(b.core));
            if (b.w == 0) {
                CHECK((b.splitTag == '+' || b.splitTag == '-'));
            } else {
                CHECK(b.splitTag == 0);
                CHECK(b.defectValuation == factorialValuation(2 * b.w, 2) - 1);
            }
        }

    // Block count sanity: every partition's core appears in exactly one
    // non-split label or one split pair.
    for (int n = 2; n <= 10; ++n)
        for (int p : {2, 3, 5}) {
            std::set<Partition> cores;
            for (const Partition& lambda : partitionsOf(n)) cores.insert(eCore(lambda, p));
            std::set<Partition> seen;
            for (const AnBlockLabel& b : anBlocks(n, p)) {
                seen.insert(b.core);
                seen.insert(b.coreConjugate);
            }
            if (p == 2) {
                CHECK(seen == cores);
            } else {
                for (const Partition& c : cores) CHECK(seen.count(c) == 1);
            }
        }
}
