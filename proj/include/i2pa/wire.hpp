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

// Message framing:
//
//   offset  size  field
//   0       1     version (0x01)
//   1       1     type tag
//   2       16    session id
//   18      4     body length, big-endian
//   22      n     body
//
// Token files are a single framed message (PRESENT or DISCLOSE).

#ifndef I2PA_WIRE_HPP_
#define I2PA_WIRE_HPP_

#include <array>
#include <cstdint>
#include <span>
#include <string_view>

#include "i2pa/bytes.hpp"

namespace i2pa {

inline constexpr uint8_t kWireVersion = 0x01;
inline constexpr size_t kWireHeaderSize = 22;
// Bodies are at most a few kilobytes; anything larger is rejected before
// allocation.
inline constexpr uint32_t kMaxBodyLength = 1u << 20;

enum class MessageType : uint8_t {
  kIss1 = 0x01,      // issuer -> user: R_bar
  kIss2 = 0x02,      // user -> issuer: h_bar, commitments, proof
  kIss3 = 0x03,      // issuer -> user: s_bar
  kChal = 0x04,      // interactive proof: challenge (issuer) / response (user)
  kPresent = 0x10,   // presentation token
  kDisclose = 0x11,  // selective-disclosure token
};

std::string_view MessageTypeName(MessageType type);
bool IsKnownMessageType(uint8_t tag);

using SessionId = std::array<uint8_t, 16>;

struct WireMessage {
  uint8_t version = kWireVersion;
  MessageType type = MessageType::kIss1;
  SessionId session{};
  Bytes body;

  friend bool operator==(const WireMessage&, const WireMessage&) = default;
};

Bytes EncodeWire(const WireMessage& msg);
// Rejects bad versions, unknown tags, truncation, length mismatch and
// trailing bytes (kMalformed).
WireMessage DecodeWire(std::span<const uint8_t> bytes);

struct WireHeader {
  MessageType type;
  SessionId session;
  uint32_t body_length;
};
// Validates just the 22-byte header; used by stream transports.
WireHeader DecodeWireHeader(std::span<const uint8_t> header);

}  // namespace i2pa

#endif  // I2PA_WIRE_HPP_
