// Copyright 2026 the revoc project contributors. Licensed under the
// Apache License, Version 2.0. See the COPYING file at the root of this
// distribution or at http://www.apache.org/licenses/LICENSE-2.0
#include "revoc/twothree.hpp"

#include <algorithm>
#include <functional>

namespace revoc {

struct TwoThreeTree::Node {
    bool leaf = true;
    Serial serial = 0;  // leaf payload
    Day day = 0;
    std::vector<std::unique_ptr<Node>> kids;

    Serial lo = 0, hi = 0;
    Digest digest;
};

namespace {

using Node = TwoThreeTree::Node;

Digest leaf_digest(Serial serial, Day day, std::size_t width) {
    ByteWriter w;
    w.u64(serial);
    w.u32(day);
    return hash_bytes(HashTag::kLeaf, w.bytes(), width);
}

Digest interior_digest(std::span<const TtSibling> kids, std::size_t width) {
    ByteWriter w;
    for (const auto& k : kids) {
        w.raw(k.digest.bytes());
        w.u64(k.lo);
        w.u64(k.hi);
    }
    HashTag tag = kids.size() == 2 ? HashTag::kInterior2 : HashTag::kInterior3;
    return hash_bytes(tag, w.bytes(), width);
}

}  // namespace

TwoThreeTree::TwoThreeTree(std::size_t width) : width_(width) {
    if (width == 0 || width > Digest::kMaxBytes)
        throw std::invalid_argument("digest width must be 1..32 octets");
}

TwoThreeTree::~TwoThreeTree() = default;
TwoThreeTree::TwoThreeTree(TwoThreeTree&&) noexcept = default;
TwoThreeTree& TwoThreeTree::operator=(TwoThreeTree&&) noexcept = default;

Digest TwoThreeTree::empty_root(std::size_t width) {
    return hash_bytes(HashTag::kEmpty, {}, width);
}

Digest TwoThreeTree::root_hash() const {
    return root_ ? root_->digest : empty_root(width_);
}

std::size_t TwoThreeTree::height() const {
    std::size_t h = 0;
    for (const Node* n = root_.get(); n && !n->leaf; n = n->kids.front().get()) ++h;
    return h;
}

namespace {

struct TreeOps {
    std::size_t width;
    std::size_t* counter;

    void refresh(Node& n) {
        if (n.leaf) {
            n.lo = n.hi = n.serial;
            n.digest = leaf_digest(n.serial, n.day, width);
        } else {
            std::vector<TtSibling> kids;
            kids.reserve(n.kids.size());
            for (const auto& k : n.kids) kids.push_back({k->digest, k->lo, k->hi});
            n.lo = n.kids.front()->lo;
            n.hi = n.kids.back()->hi;
            n.digest = interior_digest(kids, width);
        }
        ++*counter;
    }

    std::unique_ptr<Node> make_leaf(Serial s, Day day) {
        auto n = std::make_unique<Node>();
        n->leaf = true;
        n->serial = s;
        n->day = day;
        refresh(*n);
        return n;
    }

    // Inserts below interior node n; returns a refreshed new right sibling
    // when n split. n itself is left refreshed.
    std::unique_ptr<Node> insert_rec(Node& n, Serial s, Day day) {
        std::size_t i = 0;
        while (i + 1 < n.kids.size() && n.kids[i + 1]->lo <= s) ++i;
        if (n.kids[i]->leaf) {
            if (n.kids[i]->serial == s) throw std::invalid_argument("serial already present");
            std::size_t at = s < n.kids[i]->serial ? i : i + 1;
            n.kids.insert(n.kids.begin() + at, make_leaf(s, day));
        } else {
            auto split = insert_rec(*n.kids[i], s, day);
            if (split) n.kids.insert(n.kids.begin() + i + 1, std::move(split));
        }
        if (n.kids.size() <= 3) {
            refresh(n);
            return nullptr;
        }
        auto right = std::make_unique<Node>();
        right->leaf = false;
        right->kids.push_back(std::move(n.kids[2]));
        right->kids.push_back(std::move(n.kids[3]));
        n.kids.resize(2);
        refresh(n);
        refresh(*right);
        return right;
    }

    // Rebalances kids[i] of n, which has exactly one child. Borrow from the
    // left sibling first, then the right, else merge.
    void fix_underflow(Node& n, std::size_t i) {
        Node& c = *n.kids[i];
        if (i > 0 && n.kids[i - 1]->kids.size() == 3) {
            Node& l = *n.kids[i - 1];
            c.kids.insert(c.kids.begin(), std::move(l.kids.back()));
            l.kids.pop_back();
            refresh(l);
            refresh(c);
            return;
        }
        if (i + 1 < n.kids.size() && n.kids[i + 1]->kids.size() == 3) {
            Node& r = *n.kids[i + 1];
            c.kids.push_back(std::move(r.kids.front()));
            r.kids.erase(r.kids.begin());
            refresh(r);
            refresh(c);
            return;
        }
        if (i > 0) {
            Node& l = *n.kids[i - 1];
            l.kids.push_back(std::move(c.kids.front()));
            n.kids.erase(n.kids.begin() + i);
            refresh(l);
        } else {
            Node& r = *n.kids[i + 1];
            r.kids.insert(r.kids.begin(), std::move(c.kids.front()));
            n.kids.erase(n.kids.begin() + i);
            refresh(r);
        }
    }

    // Removes serial s below interior node n. n is left refreshed and may
    // hold a single child, which the caller rebalances.
    void erase_rec(Node& n, Serial s) {
        std::size_t i = 0;
        while (i < n.kids.size() && !(n.kids[i]->lo <= s && s <= n.kids[i]->hi)) ++i;
        if (i == n.kids.size()) throw std::invalid_argument("serial not present");
        if (n.kids[i]->leaf) {
            n.kids.erase(n.kids.begin() + i);
        } else {
            erase_rec(*n.kids[i], s);
            if (n.kids[i]->kids.size() == 1) fix_underflow(n, i);
        }
        refresh(n);
    }
};

const Node* find_leaf(const Node* n, Serial s) {
    while (n && !n->leaf) {
        const Node* next = nullptr;
        for (const auto& k : n->kids)
            if (k->lo <= s && s <= k->hi) {
                next = k.get();
                break;
            }
        n = next;
    }
    return n && n->serial == s ? n : nullptr;
}

const Node* max_below(const Node* n, Serial s) {
    if (!n) return nullptr;
    if (n->leaf) return n->serial < s ? n : nullptr;
    for (std::size_t i = n->kids.size(); i-- > 0;)
        if (n->kids[i]->lo < s) return max_below(n->kids[i].get(), s);
    return nullptr;
}

const Node* min_above(const Node* n, Serial s) {
    if (!n) return nullptr;
    if (n->leaf) return n->serial > s ? n : nullptr;
    for (const auto& k : n->kids)
        if (k->hi > s) return min_above(k.get(), s);
    return nullptr;
}

}  // namespace

TwoThreeTree::UpdateStats TwoThreeTree::insert(Serial serial, Day revocation_day) {
    TreeOps ops{width_, &recompute_count_};
    std::size_t before = recompute_count_;
    if (!root_) {
        root_ = ops.make_leaf(serial, revocation_day);
    } else if (root_->leaf) {
        if (root_->serial == serial) throw std::invalid_argument("serial already present");
        auto other = ops.make_leaf(serial, revocation_day);
        auto top = std::make_unique<Node>();
        top->leaf = false;
        if (other->serial < root_->serial) {
            top->kids.push_back(std::move(other));
            top->kids.push_back(std::move(root_));
        } else {
            top->kids.push_back(std::move(root_));
            top->kids.push_back(std::move(other));
        }
        ops.refresh(*top);
        root_ = std::move(top);
    } else {
        auto split = ops.insert_rec(*root_, serial, revocation_day);
        if (split) {
            auto top = std::make_unique<Node>();
            top->leaf = false;
            top->kids.push_back(std::move(root_));
            top->kids.push_back(std::move(split));
            ops.refresh(*top);
            root_ = std::move(top);
        }
    }
    ++size_;
    return {recompute_count_ - before};
}

TwoThreeTree::UpdateStats TwoThreeTree::erase(Serial serial) {
    TreeOps ops{width_, &recompute_count_};
    std::size_t before = recompute_count_;
    if (!root_) throw std::invalid_argument("serial not present");
    if (root_->leaf) {
        if (root_->serial != serial) throw std::invalid_argument("serial not present");
        root_.reset();
    } else {
        ops.erase_rec(*root_, serial);
        if (root_->kids.size() == 1) root_ = std::move(root_->kids.front());
    }
    --size_;
    return {recompute_count_ - before};
}

bool TwoThreeTree::contains(Serial serial) const {
    return find_leaf(root_.get(), serial) != nullptr;
}

std::vector<Serial> TwoThreeTree::leaves() const {
    std::vector<Serial> out;
    out.reserve(size_);
    std::function<void(const Node*)> walk = [&](const Node* n) {
        if (!n) return;
        if (n->leaf) {
            out.push_back(n->serial);
            return;
        }
        for (const auto& k : n->kids) walk(k.get());
    };
    walk(root_.get());
    return out;
}

namespace {

// Builds the bottom-up authenticated path to the leaf holding `s`, which
// must exist.
TtLeafPath build_path(const Node* root, Serial s) {
    std::vector<const Node*> chain;
    const Node* n = root;
    while (!n->leaf) {
        chain.push_back(n);
        const Node* next = nullptr;
        for (const auto& k : n->kids)
            if (k->lo <= s && s <= k->hi) {
                next = k.get();
                break;
            }
        n = next;
    }
    TtLeafPath p;
    p.serial = n->serial;
    p.revocation_day = n->day;
    const Node* cur = n;
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
        const Node* parent = *it;
        TtLevel level;
        level.arity = static_cast<std::uint8_t>(parent->kids.size());
        for (std::size_t i = 0; i < parent->kids.size(); ++i) {
            const Node* k = parent->kids[i].get();
            if (k == cur) {
                level.position = static_cast<std::uint8_t>(i);
            } else {
                level.siblings.push_back({k->digest, k->lo, k->hi});
            }
        }
        p.path.push_back(std::move(level));
        cur = parent;
    }
    return p;
}

}  // namespace

TtProof TwoThreeTree::prove(Serial serial) const {
    TtProof proof;
    if (!root_) {
        proof.kind = TtProof::Kind::EmptyTree;
        return proof;
    }
    if (contains(serial)) {
        proof.kind = TtProof::Kind::Membership;
        proof.leaf = build_path(root_.get(), serial);
        return proof;
    }
    proof.kind = TtProof::Kind::NonMembership;
    if (const Node* pred = max_below(root_.get(), serial))
        proof.left = build_path(root_.get(), pred->serial);
    if (const Node* succ = min_above(root_.get(), serial))
        proof.right = build_path(root_.get(), succ->serial);
    return proof;
}

void TwoThreeTree::check_structure() const {
    if (!root_) return;
    std::size_t leaf_depth = 0;
    {
        const Node* n = root_.get();
        while (!n->leaf) {
            ++leaf_depth;
            n = n->kids.front().get();
        }
    }
    std::size_t seen = 0;
    Serial prev = 0;
    bool first = true;
    std::function<void(const Node*, std::size_t, bool)> walk = [&](const Node* n,
                                                                   std::size_t depth, bool root) {
        if (n->leaf) {
            if (depth != leaf_depth) throw std::logic_error("leaves at unequal depths");
            if (!first && n->serial <= prev)
                throw std::logic_error("leaf serials not strictly increasing");
            prev = n->serial;
            first = false;
            ++seen;
            if (!(n->lo == n->serial && n->hi == n->serial))
                throw std::logic_error("leaf range mismatch");
            if (!(n->digest == leaf_digest(n->serial, n->day, width_)))
                throw std::logic_error("leaf digest mismatch");
            return;
        }
        if (n->kids.size() < 2 || n->kids.size() > 3)
            throw std::logic_error("interior node without 2 or 3 children");
        (void)root;
        for (const auto& k : n->kids) walk(k.get(), depth + 1, false);
        if (n->lo != n->kids.front()->lo || n->hi != n->kids.back()->hi)
            throw std::logic_error("interior range mismatch");
        for (std::size_t i = 0; i + 1 < n->kids.size(); ++i)
            if (!(n->kids[i]->hi < n->kids[i + 1]->lo))
                throw std::logic_error("child ranges overlap or touch");
        std::vector<TtSibling> kids;
        for (const auto& k : n->kids) kids.push_back({k->digest, k->lo, k->hi});
        if (!(n->digest == interior_digest(kids, width_)))
            throw std::logic_error("interior digest mismatch");
    };
    walk(root_.get(), 0, true);
    if (seen != size_) throw std::logic_error("leaf count disagrees with size()");
}

// ---- proof encoding and verification ----------------------------------

namespace {

void encode_path(ByteWriter& w, const TtLeafPath& p) {
    w.u64(p.serial);
    w.u32(p.revocation_day);
    w.u8(static_cast<std::uint8_t>(p.path.size()));
    for (const auto& level : p.path) {
        w.u8(level.arity);
        w.u8(level.position);
        for (const auto& s : level.siblings) {
            w.raw(s.digest.bytes());
            w.u64(s.lo);
            w.u64(s.hi);
        }
    }
}

TtLeafPath decode_path(ByteReader& r, std::size_t width) {
    TtLeafPath p;
    p.serial = r.u64();
    p.revocation_day = r.u32();
    std::uint8_t levels = r.u8();
    for (std::uint8_t i = 0; i < levels; ++i) {
        TtLevel level;
        level.arity = r.u8();
        level.position = r.u8();
        if (level.arity < 2 || level.arity > 3 || level.position >= level.arity)
            throw DecodeError("bad path level header");
        for (std::uint8_t k = 0; k + 1 < level.arity; ++k) {
            TtSibling s;
            s.digest = Digest(r.raw(width));
            s.lo = r.u64();
            s.hi = r.u64();
            level.siblings.push_back(s);
        }
        p.path.push_back(std::move(level));
    }
    return p;
}

struct FoldOutcome {
    bool ok = false;
    Digest root;
    std::optional<Serial> pred;  // max of the nearest left sibling subtree
    std::optional<Serial> succ;  // min of the nearest right sibling subtree
};

FoldOutcome fold_path(const TtLeafPath& p, std::size_t width) {
    FoldOutcome out;
    TtSibling cur{leaf_digest(p.serial, p.revocation_day, width), p.serial, p.serial};
    for (const auto& level : p.path) {
        if (level.siblings.size() + 1 != level.arity) return out;
        std::vector<TtSibling> kids;
        kids.reserve(level.arity);
        std::size_t si = 0;
        for (std::uint8_t i = 0; i < level.arity; ++i) {
            if (i == level.position)
                kids.push_back(cur);
            else
                kids.push_back(level.siblings[si++]);
        }
        for (const auto& k : kids)
            if (k.lo > k.hi) return out;
        for (std::size_t i = 0; i + 1 < kids.size(); ++i)
            if (!(kids[i].hi < kids[i + 1].lo)) return out;
        if (!out.pred && level.position > 0) out.pred = kids[level.position - 1].hi;
        if (!out.succ && level.position + 1 < level.arity) out.succ = kids[level.position + 1].lo;
        cur = {interior_digest(kids, width), kids.front().lo, kids.back().hi};
    }
    out.ok = true;
    out.root = cur.digest;
    return out;
}

}  // namespace

Bytes TtProof::encode() const {
    ByteWriter w;
    w.u8(static_cast<std::uint8_t>(kind));
    auto optional_path = [&w](const std::optional<TtLeafPath>& p) {
        w.u8(p ? 1 : 0);
        if (p) encode_path(w, *p);
    };
    optional_path(leaf);
    optional_path(left);
    optional_path(right);
    return w.take();
}

TtProof TtProof::decode(std::span<const std::uint8_t> in, std::size_t width) {
    ByteReader r(in);
    TtProof p;
    std::uint8_t kind = r.u8();
    if (kind > 2) throw DecodeError("bad proof kind octet");
    p.kind = static_cast<Kind>(kind);
    auto optional_path = [&r, width]() -> std::optional<TtLeafPath> {
        std::uint8_t present = r.u8();
        if (present > 1) throw DecodeError("bad optional-path octet");
        if (!present) return std::nullopt;
        return decode_path(r, width);
    };
    p.leaf = optional_path();
    p.left = optional_path();
    p.right = optional_path();
    r.expect_done();
    return p;
}

TtStatus tt_verify(const Digest& root_hash, const TtProof& proof, Serial serial) {
    const std::size_t width = root_hash.width();
    switch (proof.kind) {
        case TtProof::Kind::EmptyTree:
            if (proof.leaf || proof.left || proof.right) return TtStatus::Invalid;
            return root_hash == TwoThreeTree::empty_root(width) ? TtStatus::Valid
                                                                : TtStatus::Invalid;
        case TtProof::Kind::Membership: {
            if (!proof.leaf || proof.left || proof.right) return TtStatus::Invalid;
            if (proof.leaf->serial != serial) return TtStatus::Invalid;
            FoldOutcome f = fold_path(*proof.leaf, width);
            return f.ok && f.root == root_hash ? TtStatus::Revoked : TtStatus::Invalid;
        }
        case TtProof::Kind::NonMembership: {
            if (proof.leaf) return TtStatus::Invalid;
            if (!proof.left && !proof.right) return TtStatus::Invalid;
            std::optional<FoldOutcome> lf, rf;
            if (proof.left) {
                if (!(proof.left->serial < serial)) return TtStatus::Invalid;
                lf = fold_path(*proof.left, width);
                if (!lf->ok || !(lf->root == root_hash)) return TtStatus::Invalid;
            }
            if (proof.right) {
                if (!(proof.right->serial > serial)) return TtStatus::Invalid;
                rf = fold_path(*proof.right, width);
                if (!rf->ok || !(rf->root == root_hash)) return TtStatus::Invalid;
            }
            if (lf && rf) {
                // bracketing leaves must be adjacent
                if (!(lf->succ && *lf->succ == proof.right->serial)) return TtStatus::Invalid;
                if (!(rf->pred && *rf->pred == proof.left->serial)) return TtStatus::Invalid;
            } else if (lf) {
                if (lf->succ) return TtStatus::Invalid;  // not the rightmost leaf
            } else {
                if (rf->pred) return TtStatus::Invalid;  // not the leftmost leaf
            }
            return TtStatus::Valid;
        }
    }
    return TtStatus::Invalid;
}

}  // namespace revoc
