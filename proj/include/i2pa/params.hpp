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

// System parameters and issuer key generation.
//
// The security parameter does not synthesize a curve; it selects one of the
// two embedded curves and is recorded alongside it. The issuer secret never
// appears in SystemParams or its serialization; it only lives in IssuerKey
// and the issuer key file.

#ifndef I2PA_PARAMS_HPP_
#define I2PA_PARAMS_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "i2pa/curve.hpp"

namespace i2pa {

enum class CurveChoice { kToy, kProduction };

CurveChoice ParseCurveChoice(std::string_view name);  // "toy" | "prod"
CurveParams ParamsFor(CurveChoice choice);

inline constexpr std::string_view kHashId = "sha256-mod-q";

struct SystemParams {
  Curve curve;
  Point issuer_public;  // P_pub
  std::string hash_id = std::string(kHashId);
  unsigned security_bits = 0;

  const ScalarField& fq() const { return curve.fq(); }
  const Point& base() const { return curve.base(); }
};

struct IssuerKey {
  Scalar secret;  // x in [1, q-1]
  Point public_key;
};

struct SetupResult {
  SystemParams params;
  IssuerKey key;
};

SetupResult Setup(CurveChoice choice, RandomSource& rng);
// Deterministic variant with a caller-chosen secret; rejects 0.
SetupResult SetupWithSecret(CurveChoice choice, const Scalar& secret);

struct ValidationReport {
  std::vector<std::string> reasons;
  bool ok() const { return reasons.empty(); }
  explicit operator bool() const { return ok(); }
};

// Checks P_pub: on the curve, not neutral, and q * P_pub = neutral.
ValidationReport ValidateParams(const SystemParams& params);
// Additionally checks x in [1, q-1] and P_pub = x * P.
ValidationReport ValidateIssuerKey(const SystemParams& params,
                                   const IssuerKey& key);

// SHA-256 over the canonical fixed-width encoding of p, d, P, q, cofactor
// and P_pub. Binds tokens and proofs to one parameter set.
Digest ParamsDigest(const SystemParams& params);

// Params file: curve fixture keys plus "Ppubx", "Ppuby", "k" and "hash".
std::string FormatParams(const SystemParams& params);
SystemParams ParseParams(std::string_view text);
// Key file: the params keys plus "x".
std::string FormatIssuerKey(const SystemParams& params, const IssuerKey& key);
IssuerKey ParseIssuerKey(std::string_view text, const SystemParams& params);

}  // namespace i2pa

#endif  // I2PA_PARAMS_HPP_
