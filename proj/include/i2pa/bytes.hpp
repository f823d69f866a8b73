/*
 * Copyright 2026 The I2PA Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Fixed-width big-endian byte framing shared by the hash input encoding,
// the wire format and the token files.

#ifndef I2PA_BYTES_HPP_
#define I2PA_BYTES_HPP_

#include <gmpxx.h>

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace i2pa {

using BigInt = mpz_class;
using Bytes = std::vector<uint8_t>;
using Digest = std::array<uint8_t, 32>;

// Number of bytes needed to hold any value below `bound`.
size_t ByteWidthFor(const BigInt& bound);

// Big-endian encoding of `value` left-padded to exactly `width` bytes.
// Throws kInvalidArgument if the value does not fit.
void AppendFixed(Bytes& out, const BigInt& value, size_t width);
BigInt ReadFixed(std::span<const uint8_t> in);

std::string ToHex(std::span<const uint8_t> bytes);
Bytes FromHex(std::string_view hex);

Digest Sha256(std::span<const uint8_t> data);

class ByteWriter {
 public:
  void u8(uint8_t v) { out_.push_back(v); }
  void u16(uint16_t v);
  void u32(uint32_t v);
  void u64(uint64_t v);
  void raw(std::span<const uint8_t> data) {
    out_.insert(out_.end(), data.begin(), data.end());
  }
  void raw(std::string_view data) {
    out_.insert(out_.end(), data.begin(), data.end());
  }
  void fixed(const BigInt& value, size_t width) {
    AppendFixed(out_, value, width);
  }

  const Bytes& bytes() const& { return out_; }
  Bytes bytes() && { return std::move(out_); }

 private:
  Bytes out_;
};

// Reads from a borrowed buffer; every accessor throws kMalformed on
// truncation.
class ByteReader {
 public:
  explicit ByteReader(std::span<const uint8_t> in) : in_(in) {}

  uint8_t u8();
  uint16_t u16();
  uint32_t u32();
  uint64_t u64();
  std::span<const uint8_t> raw(size_t n);
  BigInt fixed(size_t width) { return ReadFixed(raw(width)); }

  size_t remaining() const { return in_.size() - pos_; }
  // Throws kMalformed if unread bytes remain.
  void ExpectEnd() const;

 private:
  std::span<const uint8_t> in_;
  size_t pos_ = 0;
};

}  // namespace i2pa

#endif  // I2PA_BYTES_HPP_
