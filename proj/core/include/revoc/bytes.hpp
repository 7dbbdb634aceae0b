// Copyright 2026 the revoc project contributors. Licensed under the
// Apache License, Version 2.0. See the COPYING file at the root of this
// distribution or at http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace revoc {

using Bytes = std::vector<std::uint8_t>;

struct DecodeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Big-endian, fixed-field-order encoder. Everything that gets hashed, signed
// or counted by the traffic ledger goes through one of these, so encodings
// stay canonical: same input, same bytes.
class ByteWriter {
  public:
    void u8(std::uint8_t v) { buf_.push_back(v); }
    void u32(std::uint32_t v);
    void u64(std::uint64_t v);
    void raw(std::span<const std::uint8_t> b) { buf_.insert(buf_.end(), b.begin(), b.end()); }
    // u32 length prefix followed by the bytes
    void blob(std::span<const std::uint8_t> b);

    const Bytes& bytes() const { return buf_; }
    Bytes take() { return std::move(buf_); }
    std::size_t size() const { return buf_.size(); }

  private:
    Bytes buf_;
};

class ByteReader {
  public:
    explicit ByteReader(std::span<const std::uint8_t> b) : data_(b) {}

    std::uint8_t u8();
    std::uint32_t u32();
    std::uint64_t u64();
    Bytes raw(std::size_t n);
    Bytes blob();

    std::size_t remaining() const { return data_.size() - pos_; }
    bool done() const { return pos_ == data_.size(); }
    // throws DecodeError on trailing garbage
    void expect_done() const;

  private:
    void need(std::size_t n) const;

    std::span<const std::uint8_t> data_;
    std::size_t pos_ = 0;
};

std::string to_hex(std::span<const std::uint8_t> b);
Bytes from_hex(std::string_view s);

}  // namespace revoc
