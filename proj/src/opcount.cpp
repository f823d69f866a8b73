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

#include "i2pa/opcount.hpp"

namespace i2pa {
namespace {

thread_local OpCounter* active_counter = nullptr;
thread_local std::string active_step = "unlabelled";

void Bump(OpTally& t, CurveOp op) {
  switch (op) {
    case CurveOp::kScalarMult:
      ++t.scalar_mults;
      break;
    case CurveOp::kPointAdd:
      ++t.point_adds;
      break;
    case CurveOp::kPointDouble:
      ++t.point_doubles;
      break;
    case CurveOp::kInternalAdd:
      ++t.internal_adds;
      break;
    case CurveOp::kInternalDouble:
      ++t.internal_doubles;
      break;
  }
}

}  // namespace

OpTally& OpTally::operator+=(const OpTally& other) {
  scalar_mults += other.scalar_mults;
  point_adds += other.point_adds;
  point_doubles += other.point_doubles;
  internal_adds += other.internal_adds;
  internal_doubles += other.internal_doubles;
  return *this;
}

void OpCounter::Record(CurveOp op) {
  Bump(total_, op);
  Bump(by_step_[active_step], op);
}

void OpCounter::Reset() {
  total_ = {};
  by_step_.clear();
}

OpTally OpCounter::ProofTally() const {
  OpTally t;
  for (const auto& [label, tally] : by_step_) {
    if (label.starts_with(kProofStepPrefix)) t += tally;
  }
  return t;
}

OpTally OpCounter::CoreTally() const {
  OpTally t;
  for (const auto& [label, tally] : by_step_) {
    if (!label.starts_with(kProofStepPrefix)) t += tally;
  }
  return t;
}

CountingScope::CountingScope(OpCounter& counter) : previous_(active_counter) {
  active_counter = &counter;
}

CountingScope::~CountingScope() { active_counter = previous_; }

StepScope::StepScope(std::string_view label) : previous_(active_step) {
  active_step = label;
}

StepScope::~StepScope() { active_step = std::move(previous_); }

void RecordCurveOp(CurveOp op) {
  if (active_counter != nullptr) active_counter->Record(op);
}

}  // namespace i2pa
