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

#include "i2pa/wire.hpp"

#include <algorithm>

#include "i2pa/error.hpp"

namespace i2pa {

std::string_view MessageTypeName(MessageType type) {
  switch (type) {
    case MessageType::kIss1:
      return "ISS1";
    case MessageType::kIss2:
      return "ISS2";
    case MessageType::kIss3:
      return "ISS3";
    case MessageType::kChal:
      return "CHAL";
    case MessageType::kPresent:
      return "PRESENT";
    case MessageType::kDisclose:
      return "DISCLOSE";
  }
  return "?";
}

bool IsKnownMessageType(uint8_t tag) {
  switch (static_cast<MessageType>(tag)) {
    case MessageType::kIss1:
    case MessageType::kIss2:
    case MessageType::kIss3:
    case MessageType::kChal:
    case MessageType::kPresent:
    case MessageType::kDisclose:
      return true;
  }
  return false;
}

Bytes EncodeWire(const WireMessage& msg) {
  if (msg.body.size() > kMaxBodyLength) {
    throw Error(ErrorCode::kInvalidArgument, "message body too large");
  }
  ByteWriter w;
  w.u8(msg.version);
  w.u8(static_cast<uint8_t>(msg.type));
  w.raw(msg.session);
  w.u32(static_cast<uint32_t>(msg.body.size()));
  w.raw(msg.body);
  return std::move(w).bytes();
}

WireHeader DecodeWireHeader(std::span<const uint8_t> header) {
  ByteReader r(header);
  uint8_t version = r.u8();
  if (version != kWireVersion) {
    throw Error(ErrorCode::kMalformed,
                "unsupported wire version " + std::to_string(version));
  }
  uint8_t tag = r.u8();
  if (!IsKnownMessageType(tag)) {
    throw Error(ErrorCode::kMalformed,
                "unknown message type " + std::to_string(tag));
  }
  WireHeader h;
  h.type = static_cast<MessageType>(tag);
  auto session = r.raw(h.session.size());
  std::copy(session.begin(), session.end(), h.session.begin());
  h.body_length = r.u32();
  if (h.body_length > kMaxBodyLength) {
    throw Error(ErrorCode::kMalformed, "declared body length too large");
  }
  r.ExpectEnd();
  return h;
}

WireMessage DecodeWire(std::span<const uint8_t> bytes) {
  if (bytes.size() < kWireHeaderSize) {
    throw Error(ErrorCode::kMalformed, "truncated message header");
  }
  WireHeader h = DecodeWireHeader(bytes.first(kWireHeaderSize));
  auto rest = bytes.subspan(kWireHeaderSize);
  if (rest.size() != h.body_length) {
    throw Error(ErrorCode::kMalformed,
                "body length " + std::to_string(h.body_length) +
                    " does not match " + std::to_string(rest.size()) +
                    " bytes present");
  }
  return WireMessage{kWireVersion, h.type, h.session,
                     Bytes(rest.begin(), rest.end())};
}

}  // namespace i2pa
