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

// Curve-operation instrumentation.
//
// Curve operations report to whichever OpCounter is installed on the
// calling thread by a CountingScope; with no scope installed nothing is
// counted. Counts are attributed to the innermost StepScope label, which
// lets a benchmark break a protocol run down per step. Steps whose label
// starts with "pk." belong to proof-of-knowledge sub-protocols.
//
// scalar_mults counts one per Curve::Multiply call, point_adds and
// point_doubles count explicit Curve::Add / Curve::Double calls. The
// double-and-add steps inside a scalar multiplication land in the
// internal_* fields and never in the protocol-level counts.

#ifndef I2PA_OPCOUNT_HPP_
#define I2PA_OPCOUNT_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

namespace i2pa {

enum class CurveOp {
  kScalarMult,
  kPointAdd,
  kPointDouble,
  kInternalAdd,
  kInternalDouble,
};

struct OpTally {
  uint64_t scalar_mults = 0;
  uint64_t point_adds = 0;
  uint64_t point_doubles = 0;
  uint64_t internal_adds = 0;
  uint64_t internal_doubles = 0;

  OpTally& operator+=(const OpTally& other);
  friend bool operator==(const OpTally&, const OpTally&) = default;
};

inline constexpr std::string_view kProofStepPrefix = "pk.";

class OpCounter {
 public:
  void Record(CurveOp op);
  void Reset();

  const OpTally& total() const { return total_; }
  const std::map<std::string, OpTally>& by_step() const { return by_step_; }

  // Sum over the steps whose label starts (or does not start) with
  // kProofStepPrefix.
  OpTally ProofTally() const;
  OpTally CoreTally() const;

 private:
  OpTally total_;
  std::map<std::string, OpTally> by_step_;
};

// Installs `counter` for the current thread until destruction.
class CountingScope {
 public:
  explicit CountingScope(OpCounter& counter);
  ~CountingScope();
  CountingScope(const CountingScope&) = delete;
  CountingScope& operator=(const CountingScope&) = delete;

 private:
  OpCounter* previous_;
};

// Labels the counts recorded on this thread until destruction.
class StepScope {
 public:
  explicit StepScope(std::string_view label);
  ~StepScope();
  StepScope(const StepScope&) = delete;
  StepScope& operator=(const StepScope&) = delete;

 private:
  std::string previous_;
};

// Called by the curve implementation.
void RecordCurveOp(CurveOp op);

}  // namespace i2pa

#endif  // I2PA_OPCOUNT_HPP_
