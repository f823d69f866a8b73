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

#include "i2pa/error.hpp"

namespace i2pa {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
      return "invalid argument";
    case ErrorCode::kMalformed:
      return "malformed input";
    case ErrorCode::kOffCurve:
      return "point not on curve";
    case ErrorCode::kNotFound:
      return "not found";
    case ErrorCode::kRandomness:
      return "randomness failure";
    case ErrorCode::kProtocol:
      return "protocol violation";
    case ErrorCode::kIssuerMisbehavior:
      return "issuer misbehavior";
    case ErrorCode::kIo:
      return "i/o error";
  }
  return "unknown error";
}

}  // namespace i2pa
