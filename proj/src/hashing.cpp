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

#include "i2pa/hashing.hpp"

namespace i2pa {

std::string_view HashTagBytes(HashTag tag) {
  switch (tag) {
    case HashTag::kAttr:
      return "ATTR";
    case HashTag::kHashPoint:
      return "HPOINT";
    case HashTag::kFsChallenge:
      return "FSCHAL";
  }
  return "";
}

Scalar HashToScalar(const ScalarField& fq, HashTag tag,
                    std::span<const uint8_t> payload) {
  ByteWriter w;
  w.raw(HashTagBytes(tag));
  w.raw(payload);
  Digest digest = Sha256(w.bytes());
  Scalar h = fq.From(ReadFixed(digest));
  return h.IsZero() ? fq.One() : h;
}

Scalar HashPoints(const Curve& curve, const Point& a, const Point& b) {
  curve.RequireOnCurve(a, "hash input");
  curve.RequireOnCurve(b, "hash input");
  Bytes payload;
  curve.AppendPoint(payload, a);
  curve.AppendPoint(payload, b);
  return HashToScalar(curve.fq(), HashTag::kHashPoint, payload);
}

Scalar HashBlock(const Curve& curve, std::span<const Point> points,
                 const Point& r) {
  if (points.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "hash of an empty block");
  }
  Scalar h = curve.fq().One();
  for (const Point& p : points) {
    h = curve.fq().Mul(h, HashPoints(curve, p, r));
  }
  return h;
}

Scalar AttributeToScalar(const ScalarField& fq, std::string_view label) {
  if (label.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "empty attribute label");
  }
  return HashToScalar(
      fq, HashTag::kAttr,
      std::span(reinterpret_cast<const uint8_t*>(label.data()), label.size()));
}

}  // namespace i2pa
