// Copyright 2026 the revoc project contributors. Licensed under the
// Apache License, Version 2.0. See the COPYING file at the root of this
// distribution or at http://www.apache.org/licenses/LICENSE-2.0
#include "revoc/crs.hpp"

#include <algorithm>
#include <bit>

namespace revoc {

std::pair<CrsCertExtension, CrsSecrets> crs_issue(const ChainParams& params,
                                                  std::mt19937_64& rng) {
    params.validate();
    CrsSecrets secrets;
    secrets.y_seed = random_digest(rng, params.octets());
    secrets.n_seed = random_digest(rng, params.octets());
    CrsCertExtension ext;
    ext.y_anchor = iterate(secrets.y_seed, params.depth);
    ext.n_anchor = iterate(secrets.n_seed, 1);
    ext.validity_days = params.depth;
    return {ext, secrets};
}

StatusBitmap StatusBitmap::blank(std::uint32_t serial_bits, Day day) {
    if (serial_bits < 1 || serial_bits > 30)
        throw std::invalid_argument("serial_bits must be 1..30");
    StatusBitmap b;
    b.serial_bits = serial_bits;
    b.day = day;
    b.bits.assign((b.serial_space() + 7) / 8, 0);
    return b;
}

bool StatusBitmap::get(Serial s) const {
    if (s >= serial_space()) return false;
    return (bits[s >> 3] >> (s & 7)) & 1;
}

void StatusBitmap::set(Serial s, bool v) {
    if (s >= serial_space()) throw std::out_of_range("serial outside bitmap space");
    std::uint8_t mask = static_cast<std::uint8_t>(1u << (s & 7));
    if (v)
        bits[s >> 3] |= mask;
    else
        bits[s >> 3] &= static_cast<std::uint8_t>(~mask);
}

Bytes StatusBitmap::signed_payload() const {
    ByteWriter w;
    w.u32(day);
    w.u8(static_cast<std::uint8_t>(serial_bits));
    w.raw(bits);
    return w.take();
}

Bytes CrsDailyUpdate::encode() const {
    ByteWriter w;
    w.raw(bitmap.signed_payload());
    bitmap_signature.encode(w);
    w.u32(static_cast<std::uint32_t>(values.size()));
    for (const auto& [serial, value] : values) {
        w.u64(serial);
        w.raw(value.bytes());
    }
    w.u32(static_cast<std::uint32_t>(reasons.size()));
    for (const auto& [serial, reason] : reasons) {
        w.u64(serial);
        w.u8(reason);
    }
    return w.take();
}

CrsDailyUpdate CrsDailyUpdate::decode(std::span<const std::uint8_t> in, std::size_t width) {
    ByteReader r(in);
    CrsDailyUpdate u;
    u.bitmap.day = r.u32();
    u.bitmap.serial_bits = r.u8();
    if (u.bitmap.serial_bits < 1 || u.bitmap.serial_bits > 30)
        throw DecodeError("bad bitmap serial_bits");
    u.bitmap.bits = r.raw((u.bitmap.serial_space() + 7) / 8);
    u.bitmap_signature = AuthBytes::decode(r, width);
    std::uint32_t n = r.u32();
    for (std::uint32_t i = 0; i < n; ++i) {
        Serial s = r.u64();
        u.values.emplace_back(s, Digest(r.raw(width)));
    }
    std::uint32_t m = r.u32();
    for (std::uint32_t i = 0; i < m; ++i) {
        Serial s = r.u64();
        u.reasons.emplace_back(s, r.u8());
    }
    r.expect_done();
    return u;
}

CrsAuthority::CrsAuthority(const ChainParams& params, std::uint32_t serial_bits,
                           const Signer& signer, std::uint64_t rng_seed, bool cache_chains)
    : params_(params), serial_bits_(serial_bits), signer_(signer), rng_(rng_seed),
      cache_chains_(cache_chains) {
    params_.validate();
    if (signer_.width != params_.octets())
        throw std::invalid_argument("signer width must match chain width");
    (void)StatusBitmap::blank(serial_bits_, 0);  // validates serial_bits
}

CrsCertExtension CrsAuthority::issue(Serial serial, Day issue_day) {
    if (serial >= (Serial{1} << serial_bits_))
        throw std::out_of_range("serial outside the bitmap space");
    if (certs_.count(serial)) throw std::invalid_argument("serial already issued");
    CertChain c;
    std::tie(c.ext, c.secrets) = crs_issue(params_, rng_);
    c.issue_day = issue_day;
    if (cache_chains_) {
        c.chain.reserve(params_.depth + 1);
        Digest cur = c.secrets.y_seed;
        c.chain.push_back(cur);
        for (std::uint32_t j = 1; j <= params_.depth; ++j) {
            cur = iterate(cur, 1);
            c.chain.push_back(cur);
        }
    }
    auto ext = c.ext;
    certs_.emplace(serial, std::move(c));
    return ext;
}

void CrsAuthority::revoke(Serial serial, Day day, std::uint8_t reason) {
    auto it = certs_.find(serial);
    if (it == certs_.end()) throw std::invalid_argument("unknown serial");
    if (it->second.revocation_day == kNeverDay) {
        it->second.revocation_day = day;
        it->second.reason = reason;
    }
}

const CrsCertExtension& CrsAuthority::extension(Serial serial) const {
    return certs_.at(serial).ext;
}

Digest CrsAuthority::yes_value(const CertChain& c, std::uint32_t chain_index) const {
    if (!c.chain.empty()) return c.chain[chain_index];
    return iterate(c.secrets.y_seed, chain_index);
}

CrsDailyUpdate CrsAuthority::daily_update(Day day) const {
    CrsDailyUpdate u;
    u.bitmap = StatusBitmap::blank(serial_bits_, day);
    for (const auto& [serial, c] : certs_) {
        if (day < c.issue_day) continue;
        Day i = day - c.issue_day;
        if (i > c.ext.validity_days) continue;  // expired: bit stays 0
        u.bitmap.set(serial, true);
        if (c.revocation_day <= day) {
            u.values.emplace_back(serial, c.secrets.n_seed);
            u.reasons.emplace_back(serial, c.reason);
        } else {
            u.values.emplace_back(serial, yes_value(c, c.ext.validity_days - i));
        }
    }
    u.bitmap_signature = signer_.sign(u.bitmap.signed_payload());
    return u;
}

void CrsDirectory::ingest(CrsDailyUpdate update, CaId expected_signer) {
    if (!update.bitmap_signature.verify(expected_signer, update.bitmap.signed_payload()))
        throw std::invalid_argument("bitmap signature check failed");
    std::map<Serial, Digest> values(update.values.begin(), update.values.end());
    // bitmap agreement: exactly the 1-bit serials carry values
    if (values.size() != update.values.size())
        throw std::invalid_argument("duplicate serial in update values");
    std::size_t ones = 0;
    for (std::uint8_t octet : update.bitmap.bits) ones += std::popcount(octet);
    if (ones != values.size())
        throw std::invalid_argument("value count disagrees with bitmap population");
    for (const auto& [serial, value] : values)
        if (!update.bitmap.get(serial))
            throw std::invalid_argument("value present for a 0-bit serial");
    update_ = std::move(update);
    values_ = std::move(values);
    ingested_ = true;
}

CrsDirectory::Answer CrsDirectory::answer(Serial s) const {
    if (!ingested_) throw std::logic_error("directory has no ingested update");
    Answer a;
    a.day = update_.bitmap.day;
    auto it = values_.find(s);
    if (it != values_.end()) {
        a.value = it->second;
    } else {
        a.bitmap = &update_.bitmap;
        a.bitmap_signature = &update_.bitmap_signature;
    }
    return a;
}

CrsStatus crs_verify(const CrsCertExtension& ext, const Digest& value, Day i) {
    if (i < 1 || i > ext.validity_days) return CrsStatus::Invalid;
    if (value.width() != ext.y_anchor.width()) return CrsStatus::Invalid;
    if (iterate(value, i) == ext.y_anchor) return CrsStatus::Valid;
    if (iterate(value, 1) == ext.n_anchor) return CrsStatus::Revoked;
    return CrsStatus::Invalid;
}

}  // namespace revoc
