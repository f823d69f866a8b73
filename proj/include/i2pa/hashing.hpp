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

// Hashes into F_q^*.
//
// Every hash is SHA-256(tag || payload) read as a big-endian integer and
// reduced mod q, with 0 remapped to 1. The tags are the ASCII strings
// "ATTR", "HPOINT" and "FSCHAL"; none is a prefix of another. Points enter
// the payload as fixed-width big-endian x || y, each coordinate
// ceil(bits(p) / 8) bytes wide.
//
// The reduction of a 256-bit digest mod q is biased by about q / 2^256,
// negligible on the production curve and irrelevant on the toy curve where
// only determinism matters.

#ifndef I2PA_HASHING_HPP_
#define I2PA_HASHING_HPP_

#include <span>
#include <string_view>

#include "i2pa/curve.hpp"

namespace i2pa {

enum class HashTag { kAttr, kHashPoint, kFsChallenge };

std::string_view HashTagBytes(HashTag tag);

Scalar HashToScalar(const ScalarField& fq, HashTag tag,
                    std::span<const uint8_t> payload);

// H(A, B). Order-sensitive. Throws kOffCurve for off-curve inputs.
Scalar HashPoints(const Curve& curve, const Point& a, const Point& b);

// prod_i H(points[i], r) mod q. Throws kInvalidArgument on an empty list.
Scalar HashBlock(const Curve& curve, std::span<const Point> points,
                 const Point& r);

// Maps an attribute label to a scalar. Throws kInvalidArgument on an empty
// label.
Scalar AttributeToScalar(const ScalarField& fq, std::string_view label);

}  // namespace i2pa

#endif  // I2PA_HASHING_HPP_
