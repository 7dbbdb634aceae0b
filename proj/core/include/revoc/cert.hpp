// Copyright 2026 the revoc project contributors. Licensed under the
// Apache License, Version 2.0. See the COPYING file at the root of this
// distribution or at http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include <cstdint>
#include <vector>

namespace revoc {

using Serial = std::uint64_t;
using CaId = std::uint64_t;
using Day = std::uint32_t;   // day index within a deployment
using Tick = std::uint32_t;  // simulator tick (hours)

inline constexpr Day kNeverDay = 0xffffffffu;
inline constexpr Tick kTicksPerDay = 24;

// A certificate's identity as the revocation machinery sees it. Scheme
// anchors (chain values, path commitments) live with the scheme that issued
// them; this is the common part.
struct CertRecord {
    Serial serial = 0;
    CaId issuer = 0;
    Day issue_day = 0;
    Day expiry_day = kNeverDay;
};

struct RevokedEntry {
    Serial serial = 0;
    Day revocation_day = 0;
    std::uint8_t reason = 0;

    friend bool operator==(const RevokedEntry&, const RevokedEntry&) = default;
};

// Certificate-hold interval; end == kNeverDay means still on hold.
struct HoldInterval {
    Serial serial = 0;
    Day start = 0;
    Day end = kNeverDay;

    bool active_at(Day d) const { return start <= d && d < end; }
    friend bool operator==(const HoldInterval&, const HoldInterval&) = default;
};

// Authoritative per-day CA state: what is revoked (and not yet expired) and
// what is issued and unexpired as of `day`. Revoked-but-unexpired serials
// appear in both sets.
struct RevocationState {
    Day day = 0;
    std::vector<RevokedEntry> revoked;     // sorted strictly ascending by serial
    std::vector<Serial> issued_unexpired;  // sorted strictly ascending
    std::vector<HoldInterval> holds;       // optional hold history
};

}  // namespace revoc
