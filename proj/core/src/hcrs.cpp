// Copyright 2026 the revoc project contributors. Licensed under the
// Apache License, Version 2.0. See the COPYING file at the root of this
// distribution or at http://www.apache.org/licenses/LICENSE-2.0
#include "revoc/hcrs.hpp"

#include <algorithm>

namespace revoc {

namespace {
constexpr const char* kRootMark = "(root)";
}

std::string TreeNodeId::to_string() const {
    if (depth == 0) return kRootMark;
    std::string s;
    s.reserve(depth);
    for (int b = depth - 1; b >= 0; --b) s.push_back(((path >> b) & 1) ? '1' : '0');
    return s;
}

std::optional<TreeNodeId> TreeNodeId::parse(std::string_view s, std::uint8_t max_depth) {
    if (s == kRootMark || s.empty()) return TreeNodeId::root();
    if (s.size() > max_depth) return std::nullopt;
    TreeNodeId n{static_cast<std::uint8_t>(s.size()), 0};
    for (char c : s) {
        if (c != '0' && c != '1') return std::nullopt;
        n.path = (n.path << 1) | (c == '1');
    }
    return n;
}

bool operator<(const TreeNodeId& a, const TreeNodeId& b) {
    std::uint8_t common = std::min(a.depth, b.depth);
    std::uint32_t pa = a.path >> (a.depth - common);
    std::uint32_t pb = b.path >> (b.depth - common);
    if (pa != pb) return pa < pb;
    return a.depth < b.depth;
}

std::vector<TreeNodeId> hcrs_cover(std::uint8_t depth, const std::vector<std::uint32_t>& revoked) {
    // Dirty nodes are the ancestors of revoked leaves; the cover is every
    // clean child of a dirty node (plus the root when nothing is revoked).
    std::set<TreeNodeId> dirty;
    for (std::uint32_t leaf : revoked) {
        TreeNodeId n = TreeNodeId::leaf(leaf, depth);
        while (true) {
            auto [it, inserted] = dirty.emplace(n);
            if (!inserted || n.depth == 0) break;
            n = n.parent();
        }
    }
    std::vector<TreeNodeId> cover;
    if (dirty.empty()) {
        cover.push_back(TreeNodeId::root());
        return cover;
    }
    for (const TreeNodeId& n : dirty) {
        if (n.depth == depth) continue;  // dirty leaves have no children
        for (unsigned bit : {0u, 1u}) {
            TreeNodeId c = n.child(bit);
            if (!dirty.count(c)) cover.push_back(c);
        }
    }
    std::sort(cover.begin(), cover.end());
    return cover;
}

Bytes VerificationNodeSet::signed_payload() const {
    ByteWriter w;
    w.u32(day);
    w.u32(static_cast<std::uint32_t>(values.size()));
    for (const auto& [node, value] : values) {
        w.u8(node.depth);
        w.u32(node.path);
        w.raw(value.bytes());
    }
    return w.take();
}

Bytes VerificationNodeSet::encode() const {
    ByteWriter w;
    w.raw(signed_payload());
    signature.encode(w);
    return w.take();
}

VerificationNodeSet VerificationNodeSet::decode(std::span<const std::uint8_t> in,
                                                std::size_t width) {
    ByteReader r(in);
    VerificationNodeSet s;
    s.day = r.u32();
    std::uint32_t n = r.u32();
    for (std::uint32_t i = 0; i < n; ++i) {
        TreeNodeId node;
        node.depth = r.u8();
        node.path = r.u32();
        s.values.emplace_back(node, Digest(r.raw(width)));
    }
    s.signature = AuthBytes::decode(r, width);
    r.expect_done();
    return s;
}

HcrsAuthority::HcrsAuthority(std::uint8_t tree_depth, const ChainParams& params,
                             const Signer& signer, std::uint64_t master_seed)
    : depth_(tree_depth), params_(params), signer_(signer) {
    params_.validate();
    if (depth_ < 1 || depth_ > 30) throw std::invalid_argument("tree depth must be 1..30");
    if (signer_.width != params_.octets())
        throw std::invalid_argument("signer width must match chain width");
    ByteWriter w;
    w.u64(master_seed);
    master_ = derive_digest(w.bytes(), params_.octets());
}

Digest HcrsAuthority::node_seed(const TreeNodeId& node) const {
    ByteWriter w;
    w.raw(master_.bytes());
    w.u8(node.depth);
    w.u32(node.path);
    return derive_digest(w.bytes(), params_.octets());
}

Digest HcrsAuthority::anchor(const TreeNodeId& node) const {
    auto key = std::make_pair(node.depth, node.path);
    auto it = anchor_cache_.find(key);
    if (it != anchor_cache_.end()) return it->second;
    Digest a = iterate(node_seed(node), params_.depth);
    anchor_cache_.emplace(key, a);
    return a;
}

HcrsCertPath HcrsAuthority::cert_path(std::uint32_t leaf_index) const {
    if (leaf_index >= leaf_count()) throw std::out_of_range("leaf outside tree");
    HcrsCertPath p;
    p.tree_depth = depth_;
    p.leaf = leaf_index;
    p.anchors.reserve(depth_ + 1);
    for (std::uint8_t d = 0; d <= depth_; ++d)
        p.anchors.push_back(anchor(TreeNodeId{d, leaf_index >> (depth_ - d)}));
    return p;
}

void HcrsAuthority::revoke(std::uint32_t leaf_index) {
    if (leaf_index >= leaf_count()) throw std::out_of_range("leaf outside tree");
    revoked_.insert(leaf_index);
}

VerificationNodeSet HcrsAuthority::daily_update(Day i) const {
    if (i < 1 || i > params_.depth) throw std::out_of_range("day outside the chain depth");
    VerificationNodeSet out;
    out.day = i;
    std::vector<std::uint32_t> revoked(revoked_.begin(), revoked_.end());
    for (const TreeNodeId& node : hcrs_cover(depth_, revoked))
        out.values.emplace_back(node, iterate(node_seed(node), params_.depth - i));
    out.signature = signer_.sign(out.signed_payload());
    return out;
}

void HcrsDirectory::ingest(VerificationNodeSet set, CaId expected_signer,
                           std::uint8_t tree_depth) {
    if (!set.signature.verify(expected_signer, set.signed_payload()))
        throw std::invalid_argument("verification-node signature check failed");
    by_node_.clear();
    for (const auto& [node, value] : set.values) by_node_.emplace(node, value);
    set_ = std::move(set);
    tree_depth_ = tree_depth;
    ingested_ = true;
}

HcrsDirectory::Answer HcrsDirectory::answer(std::uint32_t leaf_index) const {
    if (!ingested_) throw std::logic_error("directory has no ingested update");
    Answer a;
    a.day = set_.day;
    if (leaf_index >= (1u << tree_depth_)) return a;  // malformed query: refused
    // deepest covering ancestor; the cover is an antichain, so there is at
    // most one on the path
    for (int d = tree_depth_; d >= 0; --d) {
        TreeNodeId n{static_cast<std::uint8_t>(d), leaf_index >> (tree_depth_ - d)};
        auto it = by_node_.find(n);
        if (it != by_node_.end()) {
            a.refused = false;
            a.node = n;
            a.value = it->second;
            return a;
        }
    }
    return a;
}

HcrsStatus hcrs_verify(const HcrsCertPath& cert, const TreeNodeId& node, const Digest& value,
                       Day i) {
    if (node.depth > cert.tree_depth) return HcrsStatus::Invalid;
    TreeNodeId on_path{node.depth, cert.leaf >> (cert.tree_depth - node.depth)};
    if (!(on_path == node)) return HcrsStatus::Invalid;
    if (value.width() != cert.anchors[node.depth].width()) return HcrsStatus::Invalid;
    if (iterate(value, i) == cert.anchors[node.depth]) return HcrsStatus::Valid;
    return HcrsStatus::Invalid;
}

}  // namespace revoc
