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

#include "i2pa/random.hpp"

#include <openssl/rand.h>

#include <algorithm>
#include <climits>

#include "i2pa/error.hpp"

namespace i2pa {

BigInt RandomSource::Below(const BigInt& bound) {
  if (bound <= 0) {
    throw Error(ErrorCode::kInvalidArgument, "sampling bound must be positive");
  }
  size_t bits = mpz_sizeinbase(BigInt(bound - 1).get_mpz_t(), 2);
  size_t width = (bits + 7) / 8;
  uint8_t top_mask = static_cast<uint8_t>(0xff >> (width * 8 - bits));
  Bytes buf(width);
  for (;;) {
    Fill(buf);
    buf[0] &= top_mask;
    BigInt v = ReadFixed(buf);
    if (v < bound) return v;
  }
}

void SystemRandom::Fill(std::span<uint8_t> out) {
  if (out.empty()) return;
  if (out.size() > INT_MAX ||
      RAND_bytes(out.data(), static_cast<int>(out.size())) != 1) {
    throw Error(ErrorCode::kRandomness, "RAND_bytes failed");
  }
}

SeededRandom::SeededRandom(uint64_t seed, std::string_view label) {
  ByteWriter w;
  w.raw(std::string_view("i2pa-seeded-random"));
  w.u64(seed);
  w.raw(label);
  key_ = Sha256(w.bytes());
}

void SeededRandom::Fill(std::span<uint8_t> out) {
  size_t pos = 0;
  while (pos < out.size()) {
    if (used_ == block_.size()) {
      ByteWriter w;
      w.raw(key_);
      w.u64(counter_++);
      block_ = Sha256(w.bytes());
      used_ = 0;
    }
    size_t n = std::min(out.size() - pos, block_.size() - used_);
    std::copy_n(block_.begin() + used_, n, out.begin() + pos);
    used_ += n;
    pos += n;
  }
}

void RecordingRandom::Fill(std::span<uint8_t> out) {
  inner_.Fill(out);
  recorded_.insert(recorded_.end(), out.begin(), out.end());
}

void ReplayRandom::Fill(std::span<uint8_t> out) {
  if (remaining() < out.size()) {
    throw Error(ErrorCode::kRandomness, "replayed randomness exhausted");
  }
  std::copy_n(recorded_.begin() + pos_, out.size(), out.begin());
  pos_ += out.size();
}

}  // namespace i2pa
