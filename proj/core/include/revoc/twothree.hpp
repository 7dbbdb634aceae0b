// Copyright 2026 the revoc project contributors. Licensed under the
// Apache License, Version 2.0. See the COPYING file at the root of this
// distribution or at http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "revoc/bytes.hpp"
#include "revoc/cert.hpp"
#include "revoc/digest.hpp"

namespace revoc {

// One sibling entry in an authenticated path: its digest plus the subtree
// key range, which is bound into the parent hash. The committed ranges are
// what make non-membership adjacency checkable without trusting the answerer.
struct TtSibling {
    Digest digest;
    Serial lo = 0;
    Serial hi = 0;
};

// One interior level of a path, bottom-up: the node's arity, the position of
// the child we came from, and the remaining children in order.
struct TtLevel {
    std::uint8_t arity = 2;
    std::uint8_t position = 0;
    std::vector<TtSibling> siblings;  // arity - 1 entries
};

struct TtLeafPath {
    Serial serial = 0;
    Day revocation_day = 0;
    std::vector<TtLevel> path;
};

// Membership proof (the leaf is present, i.e. revoked), non-membership proof
// (two adjacent leaves bracketing the query; an absent side means the query
// falls beyond that end of the tree), or the signed-empty-tree case.
struct TtProof {
    enum class Kind : std::uint8_t { Membership = 0, NonMembership = 1, EmptyTree = 2 };

    Kind kind = Kind::EmptyTree;
    std::optional<TtLeafPath> leaf;   // membership
    std::optional<TtLeafPath> left;   // non-membership: predecessor
    std::optional<TtLeafPath> right;  // non-membership: successor

    Bytes encode() const;
    static TtProof decode(std::span<const std::uint8_t> in, std::size_t width);
};

enum class TtStatus : std::uint8_t { Revoked, Valid, Invalid };

// Folds the proof against root_hash: Revoked on a sound membership proof for
// `serial`, Valid on a sound bracketing non-membership proof, else Invalid.
TtStatus tt_verify(const Digest& root_hash, const TtProof& proof, Serial serial);

// Balanced 2-3 search tree over revoked serials with hash values on interior
// nodes. Interior nodes have 2 or 3 children, all leaves sit at one depth,
// and updates recompute digests only along the touched paths.
class TwoThreeTree {
  public:
    struct Node;  // opaque; defined in the implementation

    struct UpdateStats {
        std::size_t recomputed_digests = 0;
    };

    explicit TwoThreeTree(std::size_t width);
    ~TwoThreeTree();
    TwoThreeTree(TwoThreeTree&&) noexcept;
    TwoThreeTree& operator=(TwoThreeTree&&) noexcept;

    UpdateStats insert(Serial serial, Day revocation_day);  // throws on duplicate
    UpdateStats erase(Serial serial);                       // throws on absent

    bool contains(Serial serial) const;
    std::size_t size() const { return size_; }
    bool empty() const { return size_ == 0; }
    // interior levels above the leaves; 0 for an empty or single-leaf tree
    std::size_t height() const;
    std::size_t width() const { return width_; }

    Digest root_hash() const;
    static Digest empty_root(std::size_t width);

    TtProof prove(Serial serial) const;
    std::vector<Serial> leaves() const;  // in order

    // test support: throws std::logic_error on any structural violation
    void check_structure() const;

  private:
    std::size_t width_;
    std::size_t size_ = 0;
    std::size_t recompute_count_ = 0;
    std::unique_ptr<Node> root_;
};

}  // namespace revoc
