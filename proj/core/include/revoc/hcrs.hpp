// Copyright 2026 the revoc project contributors. Licensed under the
// Apache License, Version 2.0. See the COPYING file at the root of this
// distribution or at http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "revoc/auth.hpp"
#include "revoc/cert.hpp"
#include "revoc/digest.hpp"

namespace revoc {

// Node of a complete binary tree over the serial space, addressed by its
// bit-vector path from the root. The root is the empty vector.
struct TreeNodeId {
    std::uint8_t depth = 0;
    std::uint32_t path = 0;  // low `depth` bits; the MSB of those is the first step

    static TreeNodeId root() { return {}; }
    static TreeNodeId leaf(std::uint32_t index, std::uint8_t tree_depth) {
        return {tree_depth, index};
    }

    TreeNodeId parent() const { return {static_cast<std::uint8_t>(depth - 1), path >> 1}; }
    TreeNodeId child(unsigned bit) const {
        return {static_cast<std::uint8_t>(depth + 1), (path << 1) | (bit & 1)};
    }
    // a node is its own ancestor
    bool is_ancestor_of(const TreeNodeId& other) const {
        return depth <= other.depth && (other.path >> (other.depth - depth)) == path;
    }

    std::string to_string() const;  // bit string; the root prints as the empty-path mark
    static std::optional<TreeNodeId> parse(std::string_view s, std::uint8_t max_depth);

    friend bool operator==(const TreeNodeId&, const TreeNodeId&) = default;
    // lexicographic bit-string order (a proper prefix sorts first)
    friend bool operator<(const TreeNodeId& a, const TreeNodeId& b);
};

// Smallest set of verification nodes for the given revoked leaves: every
// node whose subtree is clean but whose parent's subtree is not. Clean root
// gives {root}; a fully revoked tree gives the empty set. Result in
// lexicographic order.
std::vector<TreeNodeId> hcrs_cover(std::uint8_t depth, const std::vector<std::uint32_t>& revoked);

// Anchors along one leaf's path, root first; baked into the certificate.
struct HcrsCertPath {
    std::uint8_t tree_depth = 0;
    std::uint32_t leaf = 0;
    std::vector<Digest> anchors;  // anchors[d] = anchor of the depth-d prefix
};

// Day-i verification nodes with their chain values.
struct VerificationNodeSet {
    Day day = 0;
    std::vector<std::pair<TreeNodeId, Digest>> values;  // lexicographic node order
    AuthBytes signature;

    Bytes signed_payload() const;
    Bytes encode() const;
    static VerificationNodeSet decode(std::span<const std::uint8_t> in, std::size_t width);
};

// CA side. Every tree node (leaves and interior alike) gets its own chain;
// seeds are derived from a CA-secret master value, so the whole tree is a
// few dozen bytes of state plus a lazy anchor cache.
class HcrsAuthority {
  public:
    HcrsAuthority(std::uint8_t tree_depth, const ChainParams& params, const Signer& signer,
                  std::uint64_t master_seed);

    std::uint8_t tree_depth() const { return depth_; }
    std::uint32_t leaf_count() const { return 1u << depth_; }

    Digest anchor(const TreeNodeId& node) const;
    HcrsCertPath cert_path(std::uint32_t leaf_index) const;

    void revoke(std::uint32_t leaf_index);
    const std::set<std::uint32_t>& revoked() const { return revoked_; }

    VerificationNodeSet daily_update(Day i) const;  // throws on day out of range

  private:
    Digest node_seed(const TreeNodeId& node) const;

    std::uint8_t depth_;
    ChainParams params_;
    Signer signer_;
    Digest master_;
    std::set<std::uint32_t> revoked_;
    mutable std::map<std::pair<std::uint8_t, std::uint32_t>, Digest> anchor_cache_;
};

// Directory side: holds the current day's verification nodes.
class HcrsDirectory {
  public:
    struct Answer {
        bool refused = true;
        TreeNodeId node;
        Digest value;
        Day day = 0;
    };

    void ingest(VerificationNodeSet set, CaId expected_signer, std::uint8_t tree_depth);
    // deepest covering ancestor, or refused for revoked / out-of-tree leaves
    Answer answer(std::uint32_t leaf_index) const;
    Day day() const { return set_.day; }
    const std::vector<std::pair<TreeNodeId, Digest>>& stored() const { return set_.values; }

  private:
    bool ingested_ = false;
    std::uint8_t tree_depth_ = 0;
    VerificationNodeSet set_;
    std::map<TreeNodeId, Digest> by_node_;
};

enum class HcrsStatus : std::uint8_t { Valid, Invalid };

// Valid iff `node` lies on the certificate's path and i applications of F
// take `value` to the anchor the certificate carries for that node.
HcrsStatus hcrs_verify(const HcrsCertPath& cert, const TreeNodeId& node, const Digest& value,
                       Day i);

}  // namespace revoc
