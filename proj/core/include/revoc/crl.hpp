// Copyright 2026 the revoc project contributors. Licensed under the
// Apache License, Version 2.0. See the COPYING file at the root of this
// distribution or at http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "revoc/auth.hpp"
#include "revoc/bytes.hpp"
#include "revoc/cert.hpp"

namespace revoc {

struct BaseMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Signed list of revoked serials. Entries are sorted strictly ascending by
// serial and every revocation day is <= this_update. The canonical encoding
// (length-prefixed, fixed field order, big-endian, 13 octets per entry) is
// what the ledger counts and what gets signed.
struct Crl {
    CaId issuer = 0;
    Day this_update = 0;
    Day next_update = 0;
    std::vector<RevokedEntry> entries;
    AuthBytes signature;

    bool contains(Serial s) const;
    Bytes signed_payload() const;  // everything except the signature
    Bytes encode() const;
    static Crl decode(std::span<const std::uint8_t> in, std::size_t width);
    // "serial,revocation_day,reason" lines
    std::string to_csv() const;
};

// Difference list against a base CRL, identified by the base's this_update
// day. Over-issued-delta deployments also carry the certificate-hold history
// accumulated since the base.
struct DeltaCrl {
    CaId issuer = 0;
    Day base_ref = 0;
    Day this_update = 0;
    std::vector<RevokedEntry> added;
    std::vector<HoldInterval> on_hold_history;
    AuthBytes signature;

    Bytes signed_payload() const;
    Bytes encode() const;
    static DeltaCrl decode(std::span<const std::uint8_t> in, std::size_t width);
};

// Issuance timing: nominal period, how many times per period a fresh full
// CRL is issued (over-issuance), and fractional offsets within a period for
// staggered segments.
struct IssuanceSchedule {
    Day period = 14;
    std::uint32_t over_issue_factor = 1;
    std::vector<double> stagger_offsets;  // strictly increasing, in [0, 1)

    void validate() const;  // throws std::invalid_argument
};

// A full CRL split into segments by a stable serial->segment map
// (serial mod segment_count).
struct SegmentedCrlSet {
    std::uint32_t segment_count = 1;
    std::vector<Crl> segments;

    std::uint32_t segment_of(Serial s) const { return static_cast<std::uint32_t>(s % segment_count); }
};

// Full CRL for the authoritative state at `day`.
Crl issue_crl(const RevocationState& state, Day day, const IssuanceSchedule& schedule,
              const Signer& signer);

// Difference list between `base` and the state at `day`. Throws BaseMismatch
// if the base postdates `day` or belongs to another issuer.
DeltaCrl issue_delta(const RevocationState& state, const Crl& base, Day day,
                     const Signer& signer);

// Verifier-side composition: the entry set a full CRL issued at the delta's
// day would carry. Throws BaseMismatch when the delta references another base.
std::vector<RevokedEntry> reconstruct(const Crl& base, const DeltaCrl& delta);

// True when `serial` counts as revoked in a reconstructed view: listed, or
// currently on hold per the delta's history.
bool revoked_in_view(const std::vector<RevokedEntry>& entries,
                     const std::vector<HoldInterval>& holds, Serial serial, Day at_day);

SegmentedCrlSet issue_segments(const RevocationState& state, Day day,
                               const IssuanceSchedule& schedule, std::uint32_t segment_count,
                               const Signer& signer);

const Crl& segment_lookup(const SegmentedCrlSet& set, Serial s);

}  // namespace revoc
