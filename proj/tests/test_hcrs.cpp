// Copyright 2026 the revoc project contributors. Licensed under the
// Apache License, Version 2.0. See the COPYING file at the root of this
// distribution or at http://www.apache.org/licenses/LICENSE-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "revoc/hcrs.hpp"

using namespace revoc;

namespace {

std::vector<std::uint32_t> leaves_from(std::initializer_list<const char*> names,
                                       std::uint8_t depth) {
    std::vector<std::uint32_t> out;
    for (const char* name : names) {
        auto node = TreeNodeId::parse(name, depth);
        REQUIRE(node.has_value());
        REQUIRE(node->depth == depth);
        out.push_back(node->path);
    }
    return out;
}

std::set<std::string> names_of(const std::vector<TreeNodeId>& nodes) {
    std::set<std::string> out;
    for (const auto& n : nodes) out.insert(n.to_string());
    return out;
}

// Interval-dynamic-programming oracle for the minimum number of clean
// subtrees covering every non-revoked leaf. Independent of the production
// cover construction: it scans leaf positions left to right and tries every
// clean ancestor of the first uncovered leaf.
std::size_t min_cover_dp(std::uint8_t depth, const std::vector<std::uint32_t>& revoked) {
    const std::uint32_t n = 1u << depth;
    std::vector<char> is_revoked(n, 0);
    for (auto r : revoked) is_revoked[r] = 1;
    // clean[d][p]: no revoked leaf below node (d, p)
    std::vector<std::vector<char>> clean(depth + 1);
    clean[depth].assign(n, 0);
    for (std::uint32_t p = 0; p < n; ++p) clean[depth][p] = !is_revoked[p];
    for (int d = depth - 1; d >= 0; --d) {
        clean[d].assign(1u << d, 0);
        for (std::uint32_t p = 0; p < (1u << d); ++p)
            clean[d][p] = clean[d + 1][2 * p] && clean[d + 1][2 * p + 1];
    }
    const std::size_t kInf = ~std::size_t{0} >> 1;
    std::vector<std::size_t> best(n + 1, kInf);
    best[n] = 0;
    for (std::uint32_t pos = n; pos-- > 0;) {
        if (is_revoked[pos]) {
            best[pos] = best[pos + 1];
            continue;
        }
        for (std::uint8_t d = 0; d <= depth; ++d) {
            std::uint32_t node = pos >> (depth - d);
            if (!clean[d][node]) continue;
            std::uint32_t end = (node + 1) << (depth - d);  // one past the subtree
            if (best[end] != kInf) best[pos] = std::min(best[pos], 1 + best[end]);
        }
    }
    return best[0];
}

bool conditions_hold(std::uint8_t depth, const std::vector<std::uint32_t>& revoked,
                     const std::vector<TreeNodeId>& cover) {
    std::set<std::uint32_t> bad(revoked.begin(), revoked.end());
    for (std::uint32_t leaf = 0; leaf < (1u << depth); ++leaf) {
        bool covered = false;
        for (const auto& n : cover)
            if (n.is_ancestor_of(TreeNodeId::leaf(leaf, depth))) covered = true;
        if (bad.count(leaf) ? covered : !covered) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("node ids parse, print and order") {
    CHECK(TreeNodeId::root().to_string() == "(root)");
    auto n = TreeNodeId::parse("0100", 4);
    REQUIRE(n.has_value());
    CHECK(n->depth == 4);
    CHECK(n->path == 4);
    CHECK(n->to_string() == "0100");
    CHECK(n->parent().to_string() == "010");
    CHECK(TreeNodeId::parse("0102", 4) == std::nullopt);
    CHECK(TreeNodeId::parse("00000", 4) == std::nullopt);

    auto a = *TreeNodeId::parse("00", 4);
    auto b = *TreeNodeId::parse("011", 4);
    auto c = *TreeNodeId::parse("10", 4);
    CHECK(a < b);
    CHECK(b < c);
    CHECK(TreeNodeId::root() < a);  // a prefix sorts first
    CHECK(a.is_ancestor_of(*TreeNodeId::parse("0011", 4)));
    CHECK_FALSE(a.is_ancestor_of(*TreeNodeId::parse("0100", 4)));
    CHECK(a.is_ancestor_of(a));
}

TEST_CASE("the 16-leaf worked example") {
    auto revoked = leaves_from({"0100", "0101", "1111"}, 4);
    auto cover = hcrs_cover(4, revoked);
    CHECK(names_of(cover) == std::set<std::string>{"00", "011", "10", "110", "1110"});
    CHECK(conditions_hold(4, revoked, cover));
    CHECK(min_cover_dp(4, revoked) == 5);
}

TEST_CASE("degenerate revocation sets") {
    CHECK(names_of(hcrs_cover(4, {})) == std::set<std::string>{"(root)"});
    std::vector<std::uint32_t> all;
    for (std::uint32_t i = 0; i < 16; ++i) all.push_back(i);
    CHECK(hcrs_cover(4, all).empty());
    CHECK(min_cover_dp(4, all) == 0);
}

TEST_CASE("random covers are valid antichains of minimum size") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 200; ++trial) {
        std::uint8_t depth = 2 + rng() % 5;  // up to 64 leaves
        std::uint32_t n = 1u << depth;
        std::set<std::uint32_t> revoked_set;
        std::uint32_t r = 1 + rng() % (n / 2);
        while (revoked_set.size() < r) revoked_set.insert(rng() % n);
        std::vector<std::uint32_t> revoked(revoked_set.begin(), revoked_set.end());

        auto cover = hcrs_cover(depth, revoked);
        CHECK(conditions_hold(depth, revoked, cover));
        CHECK(cover.size() == min_cover_dp(depth, revoked));
        for (const auto& a : cover)
            for (const auto& b : cover)
                if (!(a == b)) CHECK_FALSE(a.is_ancestor_of(b));
        double bound = double(r) * std::ceil(std::log2(double(n) / double(r)));
        if (r < n) CHECK(double(cover.size()) <= std::max(bound, 1.0));
    }
}

TEST_CASE("daily updates carry one openable value per cover node") {
    ChainParams params{30, 100};
    HcrsAuthority authority(4, params, Signer{5, 13}, 2024);

    SUBCASE("clean day: a single root value") {
        VerificationNodeSet set = authority.daily_update(1);
        REQUIRE(set.values.size() == 1);
        CHECK(set.values[0].first == TreeNodeId::root());
        CHECK(iterate(set.values[0].second, 1) == authority.anchor(TreeNodeId::root()));
    }
    SUBCASE("the worked example transmits exactly 5 values") {
        for (auto leaf : leaves_from({"0100", "0101", "1111"}, 4)) authority.revoke(leaf);
        VerificationNodeSet set = authority.daily_update(3);
        CHECK(set.values.size() == 5);
        for (const auto& [node, value] : set.values)
            CHECK(iterate(value, 3) == authority.anchor(node));
    }
    SUBCASE("day bounds are enforced") {
        CHECK_THROWS_AS((void)authority.daily_update(0), std::out_of_range);
        CHECK_THROWS_AS((void)authority.daily_update(31), std::out_of_range);
    }
}

TEST_CASE("directory answers with the deepest covering ancestor") {
    ChainParams params{30, 100};
    HcrsAuthority authority(4, params, Signer{5, 13}, 2024);
    for (auto leaf : leaves_from({"0100", "0101", "1111"}, 4)) authority.revoke(leaf);
    HcrsDirectory dir;
    dir.ingest(authority.daily_update(1), 5, 4);

    auto a = dir.answer(0b0000);
    CHECK_FALSE(a.refused);
    CHECK(a.node.to_string() == "00");
    CHECK(dir.answer(0b0100).refused);
    CHECK(dir.answer(0b0111).refused == false);
    CHECK(dir.answer(99).refused);  // outside the tree
}

TEST_CASE("verification accepts exactly the on-path fresh values") {
    ChainParams params{30, 100};
    HcrsAuthority authority(4, params, Signer{5, 13}, 99);
    for (auto leaf : leaves_from({"0100", "0101", "1111"}, 4)) authority.revoke(leaf);
    HcrsDirectory dir;
    dir.ingest(authority.daily_update(2), 5, 4);

    SUBCASE("round trip for every non-revoked leaf") {
        for (std::uint32_t leaf = 0; leaf < 16; ++leaf) {
            auto a = dir.answer(leaf);
            if (a.refused) continue;
            CHECK(hcrs_verify(authority.cert_path(leaf), a.node, a.value, 2) ==
                  HcrsStatus::Valid);
        }
    }
    SUBCASE("a value for a node off the leaf's path is rejected") {
        auto a = dir.answer(0b0000);  // node 00
        auto other_path = authority.cert_path(0b1000);
        CHECK(hcrs_verify(other_path, a.node, a.value, 2) == HcrsStatus::Invalid);
    }
    SUBCASE("yesterday's value does not pass for today") {
        HcrsDirectory stale;
        stale.ingest(authority.daily_update(1), 5, 4);
        auto old_answer = stale.answer(0b0000);
        CHECK(hcrs_verify(authority.cert_path(0b0000), old_answer.node, old_answer.value, 2) ==
              HcrsStatus::Invalid);
    }
    SUBCASE("no directory-held value validates a revoked leaf") {
        auto path = authority.cert_path(0b0100);
        for (const auto& [node, value] : dir.stored())
            CHECK(hcrs_verify(path, node, value, 2) == HcrsStatus::Invalid);
    }
}

TEST_CASE("update payload encoding round trip, lexicographic order") {
    ChainParams params{30, 100};
    HcrsAuthority authority(4, params, Signer{5, 13}, 7);
    for (auto leaf : leaves_from({"0100", "0101", "1111"}, 4)) authority.revoke(leaf);
    VerificationNodeSet set = authority.daily_update(4);
    CHECK(std::is_sorted(set.values.begin(), set.values.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; }));
    Bytes enc = set.encode();
    VerificationNodeSet back = VerificationNodeSet::decode(enc, 13);
    CHECK(back.encode() == enc);
    CHECK(back.signature.verify(5, back.signed_payload()));
}

TEST_CASE("alternating revocations hit the bound exactly") {
    // revoke every second leaf: the cover is the other leaves, R * 1 values
    std::vector<std::uint32_t> revoked;
    for (std::uint32_t i = 0; i < 64; i += 2) revoked.push_back(i);
    auto cover = hcrs_cover(6, revoked);
    CHECK(cover.size() == 32);
    CHECK(min_cover_dp(6, revoked) == 32);
}
