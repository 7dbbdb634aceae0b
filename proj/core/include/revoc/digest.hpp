// Copyright 2026 the revoc project contributors. Licensed under the
// Apache License, Version 2.0. See the COPYING file at the root of this
// distribution or at http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <random>
#include <span>
#include <string>

#include "revoc/bytes.hpp"

namespace revoc {

// 100-bit chain values rounded up to whole octets ("paper" deployments) vs a
// full 256-bit hash ("modern" deployments).
inline constexpr std::size_t kPaperWidthBytes = 13;
inline constexpr std::size_t kModernWidthBytes = 32;

struct WidthMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Fixed-width octet string: the working value of hash chains, Merkle nodes
// and signed payload digests. Width is constant within one deployment and
// equality is bytewise.
class Digest {
  public:
    static constexpr std::size_t kMaxBytes = 32;

    Digest() = default;
    explicit Digest(std::span<const std::uint8_t> bytes);

    static Digest zero(std::size_t width);

    std::span<const std::uint8_t> bytes() const { return {data_.data(), width_}; }
    std::size_t width() const { return width_; }
    bool empty() const { return width_ == 0; }
    std::string hex() const { return to_hex(bytes()); }

    friend auto operator<=>(const Digest&, const Digest&) = default;

  private:
    std::array<std::uint8_t, kMaxBytes> data_{};
    std::uint8_t width_ = 0;
};

// Chain parameters: depth D (days of validity) and chain width in bits.
struct ChainParams {
    std::uint32_t depth = 365;
    std::uint32_t width_bits = 100;

    std::size_t octets() const { return (width_bits + 7) / 8; }
    void validate() const;  // throws std::invalid_argument
};

// Domain-separation tags. Chain iteration, pair hashing, single-child
// hashing and the rest each prefix their own octet, so values from one
// context can never be replayed in another.
enum class HashTag : std::uint8_t {
    kLeaf = 0x00,       // arbitrary bytes -> leaf digest
    kChain = 0x01,      // one-way function F of the chains
    kPair = 0x02,       // two-child Merkle node
    kSingle = 0x03,     // odd trailing Merkle node
    kInterior2 = 0x04,  // 2-ary search-tree interior
    kInterior3 = 0x05,  // 3-ary search-tree interior
    kAuth = 0x06,       // signed-payload digest
    kDerive = 0x07,     // deterministic seed derivation
    kEmpty = 0x08,      // empty-structure sentinel
};

// Hash `payload` under `tag`, truncated to `width` octets.
Digest hash_bytes(HashTag tag, std::span<const std::uint8_t> payload, std::size_t width);

// F applied k times to seed. iterate(x, 0) == x.
Digest iterate(const Digest& seed, std::uint64_t k);

// H(left || right); order-sensitive. Throws WidthMismatch if the widths differ.
Digest merkle_pair(const Digest& left, const Digest& right);

// H(only); used when a tree level has an odd trailing node.
Digest merkle_single(const Digest& only);

Digest random_digest(std::mt19937_64& rng, std::size_t width);

// Deterministic digest from a context string (master seed material etc).
Digest derive_digest(std::span<const std::uint8_t> context, std::size_t width);

}  // namespace revoc
