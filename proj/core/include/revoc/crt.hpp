// Copyright 2026 the revoc project contributors. Licensed under the
// Apache License, Version 2.0. See the COPYING file at the root of this
// distribution or at http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "revoc/auth.hpp"
#include "revoc/cert.hpp"
#include "revoc/digest.hpp"

namespace revoc {

// Range bound with explicit infinities, so statements can cover the gaps
// below the first CA and above the last serial.
struct CrtBound {
    enum class Kind : std::uint8_t { NegInf = 0, Finite = 1, PosInf = 2 };
    Kind kind = Kind::NegInf;
    std::uint64_t value = 0;

    static CrtBound neg_inf() { return {}; }
    static CrtBound pos_inf() { return {Kind::PosInf, 0}; }
    static CrtBound finite(std::uint64_t v) { return {Kind::Finite, v}; }

    bool is_finite() const { return kind == Kind::Finite; }
    // bound < v and bound <= v in the extended order
    bool lt(std::uint64_t v) const;
    bool le(std::uint64_t v) const;
    // v < bound
    bool gt(std::uint64_t v) const;

    std::string to_string() const;
    friend bool operator==(const CrtBound&, const CrtBound&) = default;
};

// One leaf statement of the exhaustive partition over (CA hash, serial)
// space: either "this CA-hash range is unknown" or "within this CA,
// x_low <= X < x_high and X is revoked iff X equals revoked_iff".
struct CrtStatement {
    enum class Kind : std::uint8_t { UnknownCa = 0, CaRange = 1 };
    Kind kind = Kind::UnknownCa;
    CrtBound ca_low, ca_high;   // UnknownCa: open interval; CaRange: the single CA
    CrtBound x_low, x_high;     // closed low, open high
    CrtBound revoked_iff;       // NegInf = no serial in range is revoked

    bool matches(std::uint64_t ca_hash, Serial x) const;
    Bytes encode() const;
    static CrtStatement decode(ByteReader& r);
    std::string to_string() const;
    friend bool operator==(const CrtStatement&, const CrtStatement&) = default;
};

// Exhaustive, totally ordered statement list: gap statements around and
// between CAs, and per CA one statement per revoked serial plus one.
// Throws std::invalid_argument on unsorted/duplicate input.
std::vector<CrtStatement> crt_build_statements(
    const std::vector<std::pair<std::uint64_t, std::vector<Serial>>>& cas);

// Hash tree over the statements. Odd trailing nodes at a level hash alone.
struct CrtTree {
    std::vector<CrtStatement> statements;
    std::vector<std::vector<Digest>> levels;  // levels[0] = leaf digests
    std::size_t nodes_touched = 0;            // build telemetry

    const Digest& root() const { return levels.back().front(); }
    std::size_t width() const { return root().width(); }
};

CrtTree crt_build_tree(std::vector<CrtStatement> statements, std::size_t width);

// Statement plus the sibling digests needed to refold the root.
struct CrtProof {
    enum class Side : std::uint8_t { Left = 0, Right = 1, Single = 2 };

    CrtStatement statement;
    std::uint32_t leaf_index = 0;
    std::vector<std::pair<Side, Digest>> co_path;  // bottom-up; Single carries a zero digest

    Bytes encode() const;
    static CrtProof decode(std::span<const std::uint8_t> in, std::size_t width);
};

// The unique statement covering (ca_hash, serial), with its co-path.
CrtProof crt_lookup(const CrtTree& tree, std::uint64_t ca_hash, Serial serial);

enum class CrtStatus : std::uint8_t { Valid, Revoked, UnknownCa, Invalid };

// Refolds the proof against the published root and classifies the query.
CrtStatus crt_verify(const Digest& root, const CrtProof& proof, std::uint64_t ca_hash,
                     Serial serial);

// Digest of one statement as a tree leaf.
Digest crt_leaf_digest(const CrtStatement& s, std::size_t width);

}  // namespace revoc
