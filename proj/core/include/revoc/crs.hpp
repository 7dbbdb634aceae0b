// Copyright 2026 the revoc project contributors. Licensed under the
// Apache License, Version 2.0. See the COPYING file at the root of this
// distribution or at http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "revoc/auth.hpp"
#include "revoc/cert.hpp"
#include "revoc/digest.hpp"

namespace revoc {

// Per-certificate anchors: Y commits to a depth-D chain of daily YES values,
// N to a single NO preimage released on revocation.
struct CrsCertExtension {
    Digest y_anchor;  // iterate(y_seed, D)
    Digest n_anchor;  // iterate(n_seed, 1)
    Day validity_days = 0;
};

// CA-secret chain seeds backing one certificate.
struct CrsSecrets {
    Digest y_seed;
    Digest n_seed;
};

// Fresh chain material for one certificate.
std::pair<CrsCertExtension, CrsSecrets> crs_issue(const ChainParams& params,
                                                  std::mt19937_64& rng);

// Bit per serial in a 2^serial_bits space: 1 = issued and not yet expired
// (revoked certificates keep their bit until expiry), 0 = expired or unissued.
struct StatusBitmap {
    std::uint32_t serial_bits = 20;
    Day day = 0;
    Bytes bits;  // bit-packed, LSB of octet 0 is serial 0

    static StatusBitmap blank(std::uint32_t serial_bits, Day day);
    bool get(Serial s) const;
    void set(Serial s, bool v);
    std::size_t serial_space() const { return std::size_t{1} << serial_bits; }
    Bytes signed_payload() const;
};

// What the CA pushes to a Directory each day: the signed bitmap plus one
// chain value per 1-bit serial (YES value for valid, NO preimage for revoked).
struct CrsDailyUpdate {
    StatusBitmap bitmap;
    AuthBytes bitmap_signature;
    std::vector<std::pair<Serial, Digest>> values;  // sorted by serial
    std::vector<std::pair<Serial, std::uint8_t>> reasons;

    Bytes encode() const;
    static CrsDailyUpdate decode(std::span<const std::uint8_t> in, std::size_t width);
};

// CA side: issues certificates, tracks revocations, produces daily updates.
class CrsAuthority {
  public:
    CrsAuthority(const ChainParams& params, std::uint32_t serial_bits, const Signer& signer,
                 std::uint64_t rng_seed, bool cache_chains = true);

    CrsCertExtension issue(Serial serial, Day issue_day);
    void revoke(Serial serial, Day day, std::uint8_t reason = 0);
    const CrsCertExtension& extension(Serial serial) const;

    CrsDailyUpdate daily_update(Day day) const;

  private:
    struct CertChain {
        CrsCertExtension ext;
        CrsSecrets secrets;
        Day issue_day = 0;
        Day revocation_day = kNeverDay;
        std::uint8_t reason = 0;
        std::vector<Digest> chain;  // chain[j] = iterate(y_seed, j); empty if uncached
    };

    Digest yes_value(const CertChain& c, std::uint32_t chain_index) const;

    ChainParams params_;
    std::uint32_t serial_bits_;
    Signer signer_;
    mutable std::mt19937_64 rng_;
    bool cache_chains_;
    std::map<Serial, CertChain> certs_;
};

// Directory side: ingests daily updates and answers per-serial queries.
class CrsDirectory {
  public:
    struct Answer {
        std::optional<Digest> value;  // present when the bit is 1
        Day day = 0;
        // signed bitmap backing a not-found answer
        const StatusBitmap* bitmap = nullptr;
        const AuthBytes* bitmap_signature = nullptr;
    };

    // Verifies the signature and the bitmap/value agreement; throws on both.
    void ingest(CrsDailyUpdate update, CaId expected_signer);
    Answer answer(Serial s) const;
    bool ready() const { return ingested_; }
    Day day() const { return update_.bitmap.day; }
    const std::map<Serial, Digest>& stored_values() const { return values_; }

  private:
    bool ingested_ = false;
    CrsDailyUpdate update_;
    std::map<Serial, Digest> values_;
};

enum class CrsStatus : std::uint8_t { Valid, Revoked, Invalid };

// Chain-forwarding check: YES if i applications of F reach the Y anchor,
// NO if one application reaches the N anchor.
CrsStatus crs_verify(const CrsCertExtension& ext, const Digest& value, Day i);

}  // namespace revoc
