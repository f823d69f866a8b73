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

#include "i2pa/bytes.hpp"

#include <openssl/sha.h>

#include "i2pa/error.hpp"

namespace i2pa {

size_t ByteWidthFor(const BigInt& bound) {
  BigInt max = bound - 1;
  if (max <= 0) return 1;
  return (mpz_sizeinbase(max.get_mpz_t(), 2) + 7) / 8;
}

void AppendFixed(Bytes& out, const BigInt& value, size_t width) {
  if (value < 0) {
    throw Error(ErrorCode::kInvalidArgument, "cannot encode negative value");
  }
  size_t count = 0;
  if (value != 0) {
    count = (mpz_sizeinbase(value.get_mpz_t(), 2) + 7) / 8;
  }
  if (count > width) {
    throw Error(ErrorCode::kInvalidArgument,
                "value needs " + std::to_string(count) + " bytes, field has " +
                    std::to_string(width));
  }
  size_t start = out.size();
  out.resize(start + width, 0);
  if (count > 0) {
    size_t written = 0;
    mpz_export(out.data() + start + (width - count), &written, 1, 1, 1, 0,
               value.get_mpz_t());
  }
}

BigInt ReadFixed(std::span<const uint8_t> in) {
  BigInt v;
  if (!in.empty()) mpz_import(v.get_mpz_t(), in.size(), 1, 1, 1, 0, in.data());
  return v;
}

std::string ToHex(std::span<const uint8_t> bytes) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string s;
  s.reserve(bytes.size() * 2);
  for (uint8_t b : bytes) {
    s.push_back(kDigits[b >> 4]);
    s.push_back(kDigits[b & 0xf]);
  }
  return s;
}

namespace {

int HexValue(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

Bytes FromHex(std::string_view hex) {
  if (hex.size() % 2 != 0) {
    throw Error(ErrorCode::kMalformed, "odd-length hex string");
  }
  Bytes out;
  out.reserve(hex.size() / 2);
  for (size_t i = 0; i < hex.size(); i += 2) {
    int hi = HexValue(hex[i]);
    int lo = HexValue(hex[i + 1]);
    if (hi < 0 || lo < 0) throw Error(ErrorCode::kMalformed, "bad hex digit");
    out.push_back(static_cast<uint8_t>(hi << 4 | lo));
  }
  return out;
}

Digest Sha256(std::span<const uint8_t> data) {
  Digest d;
  SHA256(data.data(), data.size(), d.data());
  return d;
}

void ByteWriter::u16(uint16_t v) {
  u8(static_cast<uint8_t>(v >> 8));
  u8(static_cast<uint8_t>(v));
}

void ByteWriter::u32(uint32_t v) {
  for (int shift = 24; shift >= 0; shift -= 8) {
    u8(static_cast<uint8_t>(v >> shift));
  }
}

void ByteWriter::u64(uint64_t v) {
  for (int shift = 56; shift >= 0; shift -= 8) {
    u8(static_cast<uint8_t>(v >> shift));
  }
}

std::span<const uint8_t> ByteReader::raw(size_t n) {
  if (remaining() < n) {
    throw Error(ErrorCode::kMalformed,
                "truncated input: need " + std::to_string(n) + " bytes, have " +
                    std::to_string(remaining()));
  }
  auto out = in_.subspan(pos_, n);
  pos_ += n;
  return out;
}

uint8_t ByteReader::u8() { return raw(1)[0]; }

uint16_t ByteReader::u16() {
  auto b = raw(2);
  return static_cast<uint16_t>(b[0] << 8 | b[1]);
}

uint32_t ByteReader::u32() {
  uint32_t v = 0;
  for (uint8_t b : raw(4)) v = v << 8 | b;
  return v;
}

uint64_t ByteReader::u64() {
  uint64_t v = 0;
  for (uint8_t b : raw(8)) v = v << 8 | b;
  return v;
}

void ByteReader::ExpectEnd() const {
  if (remaining() != 0) {
    throw Error(ErrorCode::kMalformed,
                std::to_string(remaining()) + " trailing bytes");
  }
}

}  // namespace i2pa
