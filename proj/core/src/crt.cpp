// Copyright 2026 the revoc project contributors. Licensed under the
// Apache License, Version 2.0. See the COPYING file at the root of this
// distribution or at http://www.apache.org/licenses/LICENSE-2.0
#include "revoc/crt.hpp"

#include <algorithm>
#include <sstream>

namespace revoc {

bool CrtBound::lt(std::uint64_t v) const {
    switch (kind) {
        case Kind::NegInf: return true;
        case Kind::Finite: return value < v;
        case Kind::PosInf: return false;
    }
    return false;
}

bool CrtBound::le(std::uint64_t v) const {
    return kind == Kind::Finite ? value <= v : lt(v);
}

bool CrtBound::gt(std::uint64_t v) const {
    switch (kind) {
        case Kind::NegInf: return false;
        case Kind::Finite: return value > v;
        case Kind::PosInf: return true;
    }
    return false;
}

std::string CrtBound::to_string() const {
    switch (kind) {
        case Kind::NegInf: return "-inf";
        case Kind::Finite: return std::to_string(value);
        case Kind::PosInf: return "+inf";
    }
    return "?";
}

bool CrtStatement::matches(std::uint64_t ca_hash, Serial x) const {
    if (kind == Kind::UnknownCa) return ca_low.lt(ca_hash) && ca_high.gt(ca_hash);
    if (!(ca_low.kind == CrtBound::Kind::Finite && ca_low.value == ca_hash)) return false;
    return x_low.le(x) && x_high.gt(x);
}

namespace {

void encode_bound(ByteWriter& w, const CrtBound& b) {
    w.u8(static_cast<std::uint8_t>(b.kind));
    w.u64(b.is_finite() ? b.value : 0);
}

CrtBound decode_bound(ByteReader& r) {
    CrtBound b;
    std::uint8_t k = r.u8();
    if (k > 2) throw DecodeError("bad bound kind octet");
    b.kind = static_cast<CrtBound::Kind>(k);
    std::uint64_t v = r.u64();
    if (b.is_finite())
        b.value = v;
    else if (v != 0)
        throw DecodeError("infinite bound carries a value");
    return b;
}

}  // namespace

Bytes CrtStatement::encode() const {
    ByteWriter w;
    w.u8(static_cast<std::uint8_t>(kind));
    encode_bound(w, ca_low);
    encode_bound(w, ca_high);
    encode_bound(w, x_low);
    encode_bound(w, x_high);
    encode_bound(w, revoked_iff);
    return w.take();
}

CrtStatement CrtStatement::decode(ByteReader& r) {
    CrtStatement s;
    std::uint8_t k = r.u8();
    if (k > 1) throw DecodeError("bad statement kind octet");
    s.kind = static_cast<Kind>(k);
    s.ca_low = decode_bound(r);
    s.ca_high = decode_bound(r);
    s.x_low = decode_bound(r);
    s.x_high = decode_bound(r);
    s.revoked_iff = decode_bound(r);
    return s;
}

std::string CrtStatement::to_string() const {
    std::ostringstream os;
    if (kind == Kind::UnknownCa) {
        os << "if " << ca_low.to_string() << " < CA_X < " << ca_high.to_string()
           << ": unknown CA";
    } else {
        os << "if CA_X = " << ca_low.to_string() << " and " << x_low.to_string()
           << " <= X < " << x_high.to_string() << ": revoked iff X = "
           << revoked_iff.to_string();
    }
    return os.str();
}

std::vector<CrtStatement> crt_build_statements(
    const std::vector<std::pair<std::uint64_t, std::vector<Serial>>>& cas) {
    for (std::size_t i = 1; i < cas.size(); ++i)
        if (cas[i].first <= cas[i - 1].first)
            throw std::invalid_argument("CA hashes must be strictly increasing");
    for (const auto& [ca, serials] : cas)
        for (std::size_t i = 1; i < serials.size(); ++i)
            if (serials[i] <= serials[i - 1])
                throw std::invalid_argument("revoked serials must be strictly increasing");

    std::vector<CrtStatement> out;
    CrtBound prev_ca = CrtBound::neg_inf();
    auto gap = [&out](CrtBound lo, CrtBound hi) {
        CrtStatement s;
        s.kind = CrtStatement::Kind::UnknownCa;
        s.ca_low = lo;
        s.ca_high = hi;
        s.x_low = CrtBound::neg_inf();
        s.x_high = CrtBound::pos_inf();
        s.revoked_iff = CrtBound::neg_inf();
        out.push_back(s);
    };
    for (const auto& [ca, serials] : cas) {
        gap(prev_ca, CrtBound::finite(ca));
        CrtBound lo = CrtBound::neg_inf();
        CrtBound hit = CrtBound::neg_inf();
        for (Serial s : serials) {
            CrtStatement st;
            st.kind = CrtStatement::Kind::CaRange;
            st.ca_low = st.ca_high = CrtBound::finite(ca);
            st.x_low = lo;
            st.x_high = CrtBound::finite(s);
            st.revoked_iff = hit;
            out.push_back(st);
            lo = CrtBound::finite(s);
            hit = CrtBound::finite(s);
        }
        CrtStatement last;
        last.kind = CrtStatement::Kind::CaRange;
        last.ca_low = last.ca_high = CrtBound::finite(ca);
        last.x_low = lo;
        last.x_high = CrtBound::pos_inf();
        last.revoked_iff = hit;
        out.push_back(last);
        prev_ca = CrtBound::finite(ca);
    }
    gap(prev_ca, CrtBound::pos_inf());
    return out;
}

Digest crt_leaf_digest(const CrtStatement& s, std::size_t width) {
    return hash_bytes(HashTag::kLeaf, s.encode(), width);
}

CrtTree crt_build_tree(std::vector<CrtStatement> statements, std::size_t width) {
    if (statements.empty()) throw std::invalid_argument("a tree needs at least one statement");
    CrtTree t;
    t.statements = std::move(statements);
    std::vector<Digest> level;
    level.reserve(t.statements.size());
    for (const auto& s : t.statements) level.push_back(crt_leaf_digest(s, width));
    t.nodes_touched = level.size();
    t.levels.push_back(level);
    while (t.levels.back().size() > 1) {
        const auto& prev = t.levels.back();
        std::vector<Digest> next;
        next.reserve((prev.size() + 1) / 2);
        for (std::size_t j = 0; j + 1 < prev.size(); j += 2)
            next.push_back(merkle_pair(prev[j], prev[j + 1]));
        if (prev.size() % 2 == 1) next.push_back(merkle_single(prev.back()));
        t.nodes_touched += next.size();
        t.levels.push_back(std::move(next));
    }
    return t;
}

Bytes CrtProof::encode() const {
    ByteWriter w;
    w.raw(statement.encode());
    w.u32(leaf_index);
    w.u8(static_cast<std::uint8_t>(co_path.size()));
    for (const auto& [side, digest] : co_path) {
        w.u8(static_cast<std::uint8_t>(side));
        w.raw(digest.bytes());
    }
    return w.take();
}

CrtProof CrtProof::decode(std::span<const std::uint8_t> in, std::size_t width) {
    ByteReader r(in);
    CrtProof p;
    p.statement = CrtStatement::decode(r);
    p.leaf_index = r.u32();
    std::uint8_t n = r.u8();
    for (std::uint8_t i = 0; i < n; ++i) {
        std::uint8_t side = r.u8();
        if (side > 2) throw DecodeError("bad co-path side octet");
        p.co_path.emplace_back(static_cast<CrtProof::Side>(side), Digest(r.raw(width)));
    }
    r.expect_done();
    return p;
}

CrtProof crt_lookup(const CrtTree& tree, std::uint64_t ca_hash, Serial serial) {
    // The statements totally order the (CA, serial) space, so binary search
    // for the unique match.
    std::size_t lo = 0, hi = tree.statements.size();
    bool found = false;
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        const CrtStatement& s = tree.statements[mid];
        if (s.matches(ca_hash, serial)) {
            lo = mid;
            found = true;
            break;
        }
        bool before;  // query sorts before this statement's range
        if (s.kind == CrtStatement::Kind::UnknownCa)
            before = !s.ca_low.lt(ca_hash);
        else
            before = s.ca_low.gt(ca_hash) ||
                     (s.ca_low.value == ca_hash && !s.x_low.le(serial));
        if (before)
            hi = mid;
        else
            lo = mid + 1;
    }
    if (!found) throw std::logic_error("statement partition does not cover the query");
    const CrtStatement& s = tree.statements[lo];
    CrtProof p;
    p.statement = s;
    p.leaf_index = static_cast<std::uint32_t>(lo);
    std::size_t j = lo;
    for (std::size_t level = 0; level + 1 < tree.levels.size(); ++level) {
        const auto& nodes = tree.levels[level];
        if (j % 2 == 1)
            p.co_path.emplace_back(CrtProof::Side::Left, nodes[j - 1]);
        else if (j + 1 < nodes.size())
            p.co_path.emplace_back(CrtProof::Side::Right, nodes[j + 1]);
        else
            p.co_path.emplace_back(CrtProof::Side::Single, Digest::zero(tree.width()));
        j /= 2;
    }
    return p;
}

CrtStatus crt_verify(const Digest& root, const CrtProof& proof, std::uint64_t ca_hash,
                     Serial serial) {
    if (!proof.statement.matches(ca_hash, serial)) return CrtStatus::Invalid;
    // the side sequence encodes the leaf position bit by bit; the stated
    // index must agree with it
    std::uint32_t implied_index = 0;
    for (std::size_t level = 0; level < proof.co_path.size(); ++level)
        if (proof.co_path[level].first == CrtProof::Side::Left)
            implied_index |= 1u << level;
    if (implied_index != proof.leaf_index) return CrtStatus::Invalid;
    Digest cur = crt_leaf_digest(proof.statement, root.width());
    for (const auto& [side, sibling] : proof.co_path) {
        switch (side) {
            case CrtProof::Side::Left: cur = merkle_pair(sibling, cur); break;
            case CrtProof::Side::Right: cur = merkle_pair(cur, sibling); break;
            case CrtProof::Side::Single:
                if (!(sibling == Digest::zero(root.width()))) return CrtStatus::Invalid;
                cur = merkle_single(cur);
                break;
        }
    }
    if (!(cur == root)) return CrtStatus::Invalid;
    if (proof.statement.kind == CrtStatement::Kind::UnknownCa) return CrtStatus::UnknownCa;
    if (proof.statement.revoked_iff.is_finite() && proof.statement.revoked_iff.value == serial)
        return CrtStatus::Revoked;
    return CrtStatus::Valid;
}

}  // namespace revoc
