// Copyright 2026 the revoc project contributors. Licensed under the
// Apache License, Version 2.0. See the COPYING file at the root of this
// distribution or at http://www.apache.org/licenses/LICENSE-2.0
#include "revoc/crl.hpp"

#include <algorithm>
#include <sstream>

namespace revoc {

namespace {

void encode_entries(ByteWriter& w, const std::vector<RevokedEntry>& entries) {
    w.u32(static_cast<std::uint32_t>(entries.size()));
    for (const auto& e : entries) {
        w.u64(e.serial);
        w.u32(e.revocation_day);
        w.u8(e.reason);
    }
}

std::vector<RevokedEntry> decode_entries(ByteReader& r) {
    std::uint32_t n = r.u32();
    std::vector<RevokedEntry> out;
    out.reserve(n);
    Serial prev = 0;
    for (std::uint32_t i = 0; i < n; ++i) {
        RevokedEntry e;
        e.serial = r.u64();
        e.revocation_day = r.u32();
        e.reason = r.u8();
        if (i > 0 && e.serial <= prev) throw DecodeError("entries not strictly ascending");
        prev = e.serial;
        out.push_back(e);
    }
    return out;
}

void encode_holds(ByteWriter& w, const std::vector<HoldInterval>& holds) {
    w.u32(static_cast<std::uint32_t>(holds.size()));
    for (const auto& h : holds) {
        w.u64(h.serial);
        w.u32(h.start);
        w.u32(h.end);
    }
}

std::vector<HoldInterval> decode_holds(ByteReader& r) {
    std::uint32_t n = r.u32();
    std::vector<HoldInterval> out;
    out.reserve(n);
    for (std::uint32_t i = 0; i < n; ++i) {
        HoldInterval h;
        h.serial = r.u64();
        h.start = r.u32();
        h.end = r.u32();
        out.push_back(h);
    }
    return out;
}

}  // namespace

bool Crl::contains(Serial s) const {
    auto it = std::lower_bound(entries.begin(), entries.end(), s,
                               [](const RevokedEntry& e, Serial v) { return e.serial < v; });
    return it != entries.end() && it->serial == s;
}

Bytes Crl::signed_payload() const {
    ByteWriter w;
    w.u64(issuer);
    w.u32(this_update);
    w.u32(next_update);
    encode_entries(w, entries);
    return w.take();
}

Bytes Crl::encode() const {
    ByteWriter w;
    w.raw(signed_payload());
    signature.encode(w);
    return w.take();
}

Crl Crl::decode(std::span<const std::uint8_t> in, std::size_t width) {
    ByteReader r(in);
    Crl c;
    c.issuer = r.u64();
    c.this_update = r.u32();
    c.next_update = r.u32();
    c.entries = decode_entries(r);
    c.signature = AuthBytes::decode(r, width);
    r.expect_done();
    if (c.this_update >= c.next_update) throw DecodeError("this_update must precede next_update");
    return c;
}

std::string Crl::to_csv() const {
    std::ostringstream os;
    os << "serial,revocation_day,reason\n";
    for (const auto& e : entries)
        os << e.serial << ',' << e.revocation_day << ',' << unsigned(e.reason) << '\n';
    return os.str();
}

Bytes DeltaCrl::signed_payload() const {
    ByteWriter w;
    w.u64(issuer);
    w.u32(base_ref);
    w.u32(this_update);
    encode_entries(w, added);
    encode_holds(w, on_hold_history);
    return w.take();
}

Bytes DeltaCrl::encode() const {
    ByteWriter w;
    w.raw(signed_payload());
    signature.encode(w);
    return w.take();
}

DeltaCrl DeltaCrl::decode(std::span<const std::uint8_t> in, std::size_t width) {
    ByteReader r(in);
    DeltaCrl d;
    d.issuer = r.u64();
    d.base_ref = r.u32();
    d.this_update = r.u32();
    d.added = decode_entries(r);
    d.on_hold_history = decode_holds(r);
    d.signature = AuthBytes::decode(r, width);
    r.expect_done();
    return d;
}

void IssuanceSchedule::validate() const {
    if (period < 1) throw std::invalid_argument("schedule period must be >= 1 day");
    if (over_issue_factor < 1) throw std::invalid_argument("over_issue_factor must be >= 1");
    double prev = -1.0;
    for (double off : stagger_offsets) {
        if (off < 0.0 || off >= 1.0)
            throw std::invalid_argument("stagger offsets must lie in [0, 1)");
        if (off <= prev) throw std::invalid_argument("stagger offsets must be strictly increasing");
        prev = off;
    }
}

Crl issue_crl(const RevocationState& state, Day day, const IssuanceSchedule& schedule,
              const Signer& signer) {
    schedule.validate();
    Crl c;
    c.issuer = signer.id;
    c.this_update = day;
    c.next_update = day + schedule.period;
    c.entries = state.revoked;  // already sorted, already pruned of expired certs
    c.signature = signer.sign(c.signed_payload());
    return c;
}

DeltaCrl issue_delta(const RevocationState& state, const Crl& base, Day day,
                     const Signer& signer) {
    if (base.this_update > day) throw BaseMismatch("base CRL postdates the delta day");
    if (base.issuer != signer.id) throw BaseMismatch("base CRL belongs to another issuer");
    DeltaCrl d;
    d.issuer = signer.id;
    d.base_ref = base.this_update;
    d.this_update = day;
    for (const auto& e : state.revoked) {
        if (!base.contains(e.serial)) {
            if (e.revocation_day <= base.this_update)
                throw BaseMismatch("state revocation predates the base it is missing from");
            d.added.push_back(e);
        }
    }
    for (const auto& h : state.holds) {
        // history between base and delta: anything active after the base cut
        if (h.end > base.this_update && h.start <= day) d.on_hold_history.push_back(h);
    }
    d.signature = signer.sign(d.signed_payload());
    return d;
}

std::vector<RevokedEntry> reconstruct(const Crl& base, const DeltaCrl& delta) {
    if (delta.base_ref != base.this_update || delta.issuer != base.issuer)
        throw BaseMismatch("delta references a different base CRL");
    std::vector<RevokedEntry> out;
    out.reserve(base.entries.size() + delta.added.size());
    std::merge(base.entries.begin(), base.entries.end(), delta.added.begin(), delta.added.end(),
               std::back_inserter(out),
               [](const RevokedEntry& a, const RevokedEntry& b) { return a.serial < b.serial; });
    return out;
}

bool revoked_in_view(const std::vector<RevokedEntry>& entries,
                     const std::vector<HoldInterval>& holds, Serial serial, Day at_day) {
    auto it = std::lower_bound(entries.begin(), entries.end(), serial,
                               [](const RevokedEntry& e, Serial v) { return e.serial < v; });
    if (it != entries.end() && it->serial == serial) return true;
    for (const auto& h : holds)
        if (h.serial == serial && h.active_at(at_day)) return true;
    return false;
}

SegmentedCrlSet issue_segments(const RevocationState& state, Day day,
                               const IssuanceSchedule& schedule, std::uint32_t segment_count,
                               const Signer& signer) {
    if (segment_count < 1) throw std::invalid_argument("segment_count must be >= 1");
    SegmentedCrlSet set;
    set.segment_count = segment_count;
    set.segments.resize(segment_count);
    std::vector<RevocationState> parts(segment_count);
    for (const auto& e : state.revoked)
        parts[static_cast<std::size_t>(e.serial % segment_count)].revoked.push_back(e);
    for (std::uint32_t i = 0; i < segment_count; ++i) {
        parts[i].day = state.day;
        set.segments[i] = issue_crl(parts[i], day, schedule, signer);
    }
    return set;
}

const Crl& segment_lookup(const SegmentedCrlSet& set, Serial s) {
    return set.segments.at(set.segment_of(s));
}

}  // namespace revoc
