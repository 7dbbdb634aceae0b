// Copyright 2026 the revoc project contributors. Licensed under the
// Apache License, Version 2.0. See the COPYING file at the root of this
// distribution or at http://www.apache.org/licenses/LICENSE-2.0
#include "revoc/digest.hpp"

#include <algorithm>
#include <cstring>

#include "revoc/sha256.hpp"

namespace revoc {

Digest::Digest(std::span<const std::uint8_t> bytes) {
    if (bytes.empty() || bytes.size() > kMaxBytes)
        throw std::invalid_argument("digest width must be 1..32 octets");
    std::copy(bytes.begin(), bytes.end(), data_.begin());
    width_ = static_cast<std::uint8_t>(bytes.size());
}

Digest Digest::zero(std::size_t width) {
    Digest d;
    if (width == 0 || width > kMaxBytes)
        throw std::invalid_argument("digest width must be 1..32 octets");
    d.width_ = static_cast<std::uint8_t>(width);
    return d;
}

void ChainParams::validate() const {
    if (depth < 1) throw std::invalid_argument("chain depth must be >= 1");
    if (width_bits < 80) throw std::invalid_argument("chain width must be >= 80 bits");
    if (octets() > Digest::kMaxBytes)
        throw std::invalid_argument("chain width exceeds 256 bits");
}

Digest hash_bytes(HashTag tag, std::span<const std::uint8_t> payload, std::size_t width) {
    Sha256 h;
    h.update(static_cast<std::uint8_t>(tag));
    h.update(payload);
    auto full = h.finish();
    return Digest(std::span<const std::uint8_t>(full.data(), width));
}

Digest iterate(const Digest& seed, std::uint64_t k) {
    Digest cur = seed;
    for (std::uint64_t i = 0; i < k; ++i)
        cur = hash_bytes(HashTag::kChain, cur.bytes(), cur.width());
    return cur;
}

Digest merkle_pair(const Digest& left, const Digest& right) {
    if (left.width() != right.width())
        throw WidthMismatch("merkle_pair: operand widths differ");
    ByteWriter w;
    w.raw(left.bytes());
    w.raw(right.bytes());
    return hash_bytes(HashTag::kPair, w.bytes(), left.width());
}

Digest merkle_single(const Digest& only) {
    return hash_bytes(HashTag::kSingle, only.bytes(), only.width());
}

Digest random_digest(std::mt19937_64& rng, std::size_t width) {
    std::array<std::uint8_t, Digest::kMaxBytes> buf;
    for (std::size_t i = 0; i < width; i += 8) {
        std::uint64_t word = rng();
        for (std::size_t j = 0; j < 8 && i + j < width; ++j)
            buf[i + j] = static_cast<std::uint8_t>(word >> (8 * j));
    }
    return Digest(std::span<const std::uint8_t>(buf.data(), width));
}

Digest derive_digest(std::span<const std::uint8_t> context, std::size_t width) {
    return hash_bytes(HashTag::kDerive, context, width);
}

}  // namespace revoc
