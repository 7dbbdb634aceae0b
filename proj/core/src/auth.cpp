// Copyright 2026 the revoc project contributors. Licensed under the
// Apache License, Version 2.0. See the COPYING file at the root of this
// distribution or at http://www.apache.org/licenses/LICENSE-2.0
#include "revoc/auth.hpp"

namespace revoc {

namespace {
constexpr std::uint8_t kAuthTag = 0xa5;
}

AuthBytes AuthBytes::sign(std::uint64_t signer, std::span<const std::uint8_t> payload,
                          std::size_t width) {
    return AuthBytes{signer, hash_bytes(HashTag::kAuth, payload, width)};
}

bool AuthBytes::verify(std::uint64_t expected_signer, std::span<const std::uint8_t> payload) const {
    if (signer != expected_signer) return false;
    return payload_hash == hash_bytes(HashTag::kAuth, payload, payload_hash.width());
}

void AuthBytes::encode(ByteWriter& w) const {
    w.u8(kAuthTag);
    w.u64(signer);
    w.raw(payload_hash.bytes());
}

AuthBytes AuthBytes::decode(ByteReader& r, std::size_t width) {
    if (r.u8() != kAuthTag) throw DecodeError("bad authenticated-bytes tag");
    AuthBytes a;
    a.signer = r.u64();
    Bytes d = r.raw(width);
    a.payload_hash = Digest(d);
    return a;
}

}  // namespace revoc
