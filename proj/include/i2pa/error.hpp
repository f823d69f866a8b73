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

#ifndef I2PA_ERROR_HPP_
#define I2PA_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace i2pa {

enum class ErrorCode {
  kInvalidArgument,
  // Bytes or text that do not parse: truncation, bad tags, bad versions.
  kMalformed,
  // A point that does not satisfy the curve equation.
  kOffCurve,
  kNotFound,
  kRandomness,
  // A peer deviated from the protocol (bad proof, reused session, ...).
  kProtocol,
  // The issuer's blinded signature failed the user's check.
  kIssuerMisbehavior,
  kIo,
};

const char* ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Raised by the issuance driver; carries the name of the step that aborted.
class ProtocolAbort : public Error {
 public:
  ProtocolAbort(ErrorCode code, std::string step, const std::string& message)
      : Error(code, step + ": " + message), step_(std::move(step)) {}

  const std::string& step() const { return step_; }

 private:
  std::string step_;
};

}  // namespace i2pa

#endif  // I2PA_ERROR_HPP_
