// Copyright 2026 the revoc project contributors. Licensed under the
// Apache License, Version 2.0. See the COPYING file at the root of this
// distribution or at http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include <cstdint>

#include "revoc/bytes.hpp"
#include "revoc/digest.hpp"

namespace revoc {

// Signing is modeled, not real: a tag, the signer id and a digest of the
// payload. Enough to detect tampering in tests and to count realistic bytes
// in the ledger; no actual signature algorithm behind it.
struct AuthBytes {
    std::uint64_t signer = 0;
    Digest payload_hash;

    static AuthBytes sign(std::uint64_t signer, std::span<const std::uint8_t> payload,
                          std::size_t width);
    bool verify(std::uint64_t expected_signer, std::span<const std::uint8_t> payload) const;

    // tag octet + signer + digest
    static std::size_t encoded_size(std::size_t width) { return 1 + 8 + width; }
    void encode(ByteWriter& w) const;
    static AuthBytes decode(ByteReader& r, std::size_t width);
};

// A signing identity bound to the deployment digest width.
struct Signer {
    std::uint64_t id = 0;
    std::size_t width = kModernWidthBytes;

    AuthBytes sign(std::span<const std::uint8_t> payload) const {
        return AuthBytes::sign(id, payload, width);
    }
};

}  // namespace revoc
