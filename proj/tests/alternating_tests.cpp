#include <catch2/catch_amalgamated.hpp>

#include <sylowbranch/alternating.hpp>

using namespace sylowbranch;

namespace {

Rational square(const Rational& r) { return r * r; }

// (a + b*sqrt(d)) with |a|^2-style combinations used by the orthogonality
// checks below; d may be negative (complex values) or positive (real surds).
struct SplitParts {
    Rational a, b;
    BigInt d;
};

SplitParts parts(const AlgebraicValue& v) { return {v.rational, v.surdCoeff, v.radicand}; }

}  // namespace

TEST_CASE("A_n labels") {
    CHECK(AnCharacterLabel::nonSplit(Partition{3}).lambda == Partition{1, 1, 1});
    CHECK_THROWS(AnCharacterLabel::nonSplit(Partition{2, 2}));
    CHECK_THROWS(AnCharacterLabel::splitLabel(Partition{3, 1}, '+'));
    // |Irr(A_n)| = number of even classes of S_n plus number of split classes.
    for (int n = 3; n <= 10; ++n) {
        int expected = 0;
        for (const Partition& type : partitionsOf(n)) {
            const CycleType sigma(type);
            if (sigma.isEven()) expected += sigma.splitsInAlternating() ? 2 : 1;
        }
        CHECK(static_cast<int>(irrAn(n).size()) == expected);
    }
}

TEST_CASE("split values at the diagonal type") {
    // A_4: the pair from (2,2) takes (-1 +/- sqrt(-3))/2 on the 3-cycles.
    const auto [p4, m4] = splitValues(Partition{2, 2}, CycleType{3, 1});
    CHECK(p4.rational == Rational(-1, 2));
    CHECK(p4.surdCoeff == Rational(1, 2));
    CHECK(p4.radicand == -3);
    CHECK(m4.surdCoeff == Rational(-1, 2));

    // A_5: the pair from (3,1,1) takes (1 +/- sqrt(5))/2 on the 5-cycles.
    const auto [p5, m5] = splitValues(Partition{3, 1, 1}, CycleType{5});
    CHECK(p5.rational == Rational(1, 2));
    CHECK(p5.surdCoeff == Rational(1, 2));
    CHECK(p5.radicand == 5);
    CHECK(m5.surdCoeff == Rational(-1, 2));

    // Perfect-square discriminant: (5,2,1,1,1) at (9,1) gives 2 and -1.
    const auto [pq, mq] = splitValues(Partition{5, 2, 1, 1, 1}, CycleType{9, 1});
    CHECK(pq.isRational());
    CHECK(pq.rational == 2);
    CHECK(mq.rational == -1);
}

TEST_CASE("split values away from the diagonal type") {
    const auto [a, b] = splitValues(Partition{2, 2}, CycleType{1, 1, 1, 1});
    CHECK(a.rational == 1);
    CHECK(a.isRational());
    CHECK(b.rational == 1);
}

TEST_CASE("discriminant identity (x - y)^2 = eps * z") {
    for (int n = 3; n <= 9; ++n)
        for (const Partition& lambda : partitionsOf(n)) {
            if (conjugate(lambda) != lambda) continue;
            const Partition delta = diagonalHooks(lambda);
            const CycleType sigma(delta);
            const BigInt eps = mnValue(lambda, sigma);
            BigInt z = 1;
            for (int part : delta.parts()) z *= part;
            const auto [x, y] = splitValues(lambda, sigma);
            const auto px = parts(x);
            const auto py = parts(y);
            // Either both values are rational (b = 0) or they share the
            // rational part (a_x = a_y), so (x - y)^2 has no cross term.
            const Rational diffA = px.a - py.a;
            const Rational diffB = px.b - py.b;
            CHECK((diffA == 0 || diffB == 0));
            CHECK(square(diffA) + square(diffB) * Rational(px.d) == Rational(eps * z));
        }
}

TEST_CASE("A_n column orthogonality at split classes") {
    for (int n = 4; n <= 7; ++n) {
        for (const Partition& type : partitionsOf(n)) {
            const CycleType sigma(type);
            if (!sigma.isEven() || !sigma.splitsInAlternating()) continue;
            Rational same = 0, cross = 0;
            for (const Partition& mu : partitionsOf(n)) {
                const Partition conj = conjugate(mu);
                if (mu == conj) {
                    const auto [x, y] = splitValues(mu, sigma);
                    const auto px = parts(x);
                    const BigInt absd = px.d < 0 ? BigInt(-px.d) : px.d;
                    same += 2 * (square(px.a) + square(px.b) * Rational(absd));
                    cross += 2 * (square(px.a) - square(px.b) * Rational(absd));
                } else if (mu < conj) {
                    const Rational chi{mnValue(mu, sigma)};
                    same += chi * chi;
                    cross += chi * chi;
                }
            }
            BigInt centraliser = 1;  // distinct parts: |C_{A_n}(g)| = prod of parts
            for (int part : type.parts()) centraliser *= part;
            CHECK(same == Rational(centraliser));
            CHECK(cross == 0);
        }
    }
}

TEST_CASE("split characters have norm one") {
    for (int n = 4; n <= 7; ++n) {
        for (const Partition& lambda : partitionsOf(n)) {
            if (conjugate(lambda) != lambda) continue;
            Rational total = 0;
            for (const Partition& type : partitionsOf(n)) {
                const CycleType sigma(type);
                if (!sigma.isEven()) continue;
                const BigInt size = classSize(sigma);
                const auto [x, y] = splitValues(lambda, sigma);
                const auto px = parts(x);
                const auto py = parts(y);
                const BigInt absd = px.d < 0 ? BigInt(-px.d) : px.d;
                if (sigma.splitsInAlternating()) {
                    // Two classes of size |class|/2 carrying x and y.
                    total += Rational(size) / 2 *
                             (square(px.a) + square(px.b) * Rational(absd) +
                              square(py.a) + square(py.b) * Rational(absd));
                } else {
                    total += Rational(size) * square(px.a);
                }
            }
            total /= Rational(factorial(n) / 2);
            CHECK(total == 1);
        }
    }
}

TEST_CASE("A_n branching coefficients") {
    CHECK(anSbc(AnCharacterLabel::splitLabel(Partition{2, 1}, '+'), 2).z == 1);

    // p odd: non-split labels inherit Z^lambda, split labels take half.
    for (int n = 3; n <= 9; ++n)
        for (int p : {3, 5})
            for (const AnCharacterLabel& c : irrAn(n)) {
                const BigInt z = sbc(c.lambda, p).z;
                if (c.split()) {
                    CHECK(z % 2 == 0);
                    CHECK(anSbc(c, p).z == z / 2);
                } else {
                    CHECK(anSbc(c, p).z == z);
                }
            }

    // The coefficients resolve the A_n permutation character on P cap A_n.
    for (int n = 2; n <= 9; ++n)
        for (int p : {2, 3}) {
            BigInt sum = 0;
            for (const AnCharacterLabel& c : irrAn(n)) sum += anSbc(c, p).z * anDegree(c);
            const BigInt sylowInAn = p == 2 ? sylowOrder(n, p) / 2 : sylowOrder(n, p);
            CHECK(sum == (factorial(n) / 2) / sylowInAn);
        }

    // p = 2 pair sum: Z^lambda + Z^lambda' equals the even-half inner product
    // of the restricted character.
    for (int n = 2; n <= 9; ++n)
        for (const Partition& lambda : partitionsOf(n)) {
            const Partition conj = conjugate(lambda);
            if (conj <= lambda) continue;
            const AnCharacterLabel c = AnCharacterLabel::nonSplit(lambda);
            CHECK(anSbc(c, 2).z == sbc(lambda, 2).z + sbc(conj, 2).z);
        }
}

TEST_CASE("witness in every A_n block") {
    for (int p : {2, 3, 5})
        for (int n = 2; n <= 10; ++n)
            for (const AnBlockLabel& block : anBlocks(n, p)) {
                const AnWitness witness = theoremBSearchAn(block);
                CHECK(witness.multiplicity % p != 0);
                if (p == 2 && block.w > 0) {
                    REQUIRE(witness.pairParts.has_value());
                    CHECK((witness.pairParts->first + witness.pairParts->second) % 2 == 1);
                }
            }
}

TEST_CASE("constructed annihilating 2-power types") {
    // (4,1): fallback territory (base type (4,1) is odd); must still find one.
    const auto got = constructedAnnihilatingType(Partition{4, 1});
    REQUIRE(got.has_value());
    CHECK(got->type.isEven());
    CHECK(got->type.allPartsPPower(2));
    CHECK(mnValue(Partition{4, 1}, got->type) == 0);

    for (int n = 2; n <= 12; ++n)
        for (const Partition& lambda : partitionsOf(n)) {
            // The statement is about A_n degrees: half the S_n degree when
            // lambda is self-conjugate.
            const BigInt d = degree(lambda);
            const BigInt anDeg = conjugate(lambda) == lambda ? d / 2 : d;
            if (anDeg % 2 != 0) continue;
            const auto ct = constructedAnnihilatingType(lambda);
            REQUIRE(ct.has_value());
            CHECK(ct->type.isEven());
            CHECK(ct->type.allPartsPPower(2));
            CHECK(mnValue(lambda, ct->type) == 0);
            // Whenever the three-case table applies, its candidate must work.
            if (ct->tableDefined) CHECK(ct->tableCase);
        }
}

TEST_CASE("non-vanishing sweeps") {
    for (int p : {2, 3, 5}) {
        for (int n = 1; n <= 10; ++n) {
            const NonVanishingReport r = nonVanishingSweepSn(n, p);
            CHECK(r.equivalenceHolds);
            CHECK(r.pAdicAnnihilates);
            CHECK(r.failures.empty());
        }
        for (int n = 3; n <= 9; ++n) {
            const NonVanishingReport r = nonVanishingSweepAn(n, p);
            CHECK(r.equivalenceHolds);
            CHECK(r.failures.empty());
        }
    }
}

TEST_CASE("endpoints of the A_n two-three statement") {
    const An23Witness w53 = an23Search(5, 3);
    CHECK(w53.defectZero);
    CHECK(w53.character.lambda == Partition{3, 1, 1});

    CHECK(an23Search(8, 3).defectZero);

    const An23Witness w113 = an23Search(11, 3);
    CHECK(!w113.defectZero);
    CHECK(w113.witnessLambda == Partition{8, 2, 1});
    CHECK(valuation(degree(Partition{8, 2, 1}), 3) > 0);
    CHECK(w113.multiplicity % 3 != 0);

    const An23Witness w62 = an23Search(6, 2);
    CHECK(w62.defectZero);
    CHECK(w62.character.lambda == Partition{3, 2, 1});
    CHECK(w62.character.split());

    for (int p : {2, 3})
        for (int n = 5; n <= 16; ++n) {
            const An23Witness w = an23Search(n, p);
            if (!w.defectZero) CHECK(w.multiplicity % p != 0);
        }
}
