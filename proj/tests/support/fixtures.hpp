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

#ifndef I2PA_TESTS_FIXTURES_HPP_
#define I2PA_TESTS_FIXTURES_HPP_

#include <vector>

#include "i2pa/params.hpp"
#include "i2pa/random.hpp"

namespace fixtures {

// Issuer secret 5 on the toy curve, 7 on the production curve.
inline const i2pa::SetupResult& Toy() {
  static const i2pa::SetupResult s =
      i2pa::SetupWithSecret(i2pa::CurveChoice::kToy, i2pa::Scalar(5));
  return s;
}

inline const i2pa::SetupResult& Prod() {
  static const i2pa::SetupResult s =
      i2pa::SetupWithSecret(i2pa::CurveChoice::kProduction, i2pa::Scalar(7));
  return s;
}

inline const i2pa::Curve& Tiny13() {
  // 8 points; (0, 12) has order 2.
  static const i2pa::Curve c(i2pa::CurveParams{"tiny13", 13, 2, 0, 12, 2, 4});
  return c;
}

inline std::vector<i2pa::Scalar> RandomAttributes(const i2pa::SystemParams& p,
                                                  size_t n,
                                                  i2pa::RandomSource& rng) {
  std::vector<i2pa::Scalar> out;
  for (size_t i = 0; i < n; ++i) out.push_back(p.fq().RandomNonZero(rng));
  return out;
}

}  // namespace fixtures

#endif  // I2PA_TESTS_FIXTURES_HPP_
