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

#ifndef I2PA_RANDOM_HPP_
#define I2PA_RANDOM_HPP_

#include <cstdint>
#include <span>
#include <string_view>

#include "i2pa/bytes.hpp"

namespace i2pa {

// Injected source of randomness. Every protocol operation that samples
// takes one of these so runs can be seeded, recorded and replayed.
class RandomSource {
 public:
  virtual ~RandomSource() = default;
  virtual void Fill(std::span<uint8_t> out) = 0;

  // Uniform integer in [0, bound) by rejection sampling.
  BigInt Below(const BigInt& bound);
};

// OS randomness through OpenSSL's RAND_bytes.
class SystemRandom final : public RandomSource {
 public:
  void Fill(std::span<uint8_t> out) override;
};

// Deterministic stream: block i is SHA-256(key || i), key derived from the
// seed and a label. Two instances with the same (seed, label) produce the
// same bytes on every platform. Not for production keys.
class SeededRandom final : public RandomSource {
 public:
  explicit SeededRandom(uint64_t seed, std::string_view label = "");
  void Fill(std::span<uint8_t> out) override;

 private:
  Digest key_;
  uint64_t counter_ = 0;
  Digest block_{};
  size_t used_ = sizeof(Digest);
};

// Passes bytes through from `inner` and keeps a copy of everything drawn.
class RecordingRandom final : public RandomSource {
 public:
  explicit RecordingRandom(RandomSource& inner) : inner_(inner) {}
  void Fill(std::span<uint8_t> out) override;
  const Bytes& recorded() const { return recorded_; }

 private:
  RandomSource& inner_;
  Bytes recorded_;
};

// Serves a previously recorded byte stream; throws kRandomness once it
// runs dry.
class ReplayRandom final : public RandomSource {
 public:
  explicit ReplayRandom(Bytes recorded) : recorded_(std::move(recorded)) {}
  void Fill(std::span<uint8_t> out) override;
  size_t remaining() const { return recorded_.size() - pos_; }

 private:
  Bytes recorded_;
  size_t pos_ = 0;
};

}  // namespace i2pa

#endif  // I2PA_RANDOM_HPP_
