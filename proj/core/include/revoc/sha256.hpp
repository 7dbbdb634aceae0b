// Copyright 2026 the revoc project contributors. Licensed under the
// Apache License, Version 2.0. See the COPYING file at the root of this
// distribution or at http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include <array>
#include <cstdint>
#include <span>

namespace revoc {

// Plain FIPS 180-4 SHA-256. Self-contained so the core library has no
// link-time dependencies; checked against the standard test vectors.
class Sha256 {
  public:
    static constexpr std::size_t kDigestSize = 32;

    Sha256() { reset(); }

    void reset();
    void update(std::span<const std::uint8_t> data);
    void update(std::uint8_t byte) { update({&byte, 1}); }
    std::array<std::uint8_t, kDigestSize> finish();

  private:
    void compress(const std::uint8_t* block);

    std::array<std::uint32_t, 8> state_;
    std::array<std::uint8_t, 64> buffer_;
    std::uint64_t total_ = 0;
    std::size_t fill_ = 0;
};

std::array<std::uint8_t, Sha256::kDigestSize> sha256(std::span<const std::uint8_t> data);

}  // namespace revoc
