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

#include "i2pa/params.hpp"

#include "i2pa/keyvalue.hpp"

namespace i2pa {
namespace {

const Curve& StandardCurve(CurveChoice choice) {
  static const Curve toy(ToyCurveParams());
  static const Curve production(Curve1174Params());
  return choice == CurveChoice::kToy ? toy : production;
}

// Generic-attack security of a prime-order group: half the order's bits.
unsigned SecurityBits(const Curve& curve) {
  return static_cast<unsigned>(mpz_sizeinbase(curve.order().get_mpz_t(), 2) / 2);
}

SetupResult Finish(CurveChoice choice, const Scalar& secret) {
  const Curve& curve = StandardCurve(choice);
  Point pub = curve.Multiply(secret, curve.base());
  SystemParams params{curve, pub, std::string(kHashId), SecurityBits(curve)};
  return SetupResult{std::move(params), IssuerKey{secret, pub}};
}

void AddParamsKeys(KeyValueText& kv, const SystemParams& params) {
  const CurveParams& c = params.curve.params();
  kv.Set("name", c.name);
  kv.SetInt("p", c.p);
  kv.SetInt("d", c.d);
  kv.SetInt("Px", c.base_x);
  kv.SetInt("Py", c.base_y);
  kv.SetInt("q", c.q);
  kv.SetInt("cofactor", c.cofactor);
  kv.SetInt("Ppubx", params.issuer_public.x.value());
  kv.SetInt("Ppuby", params.issuer_public.y.value());
  kv.Set("k", std::to_string(params.security_bits));
  kv.Set("hash", params.hash_id);
}

}  // namespace

CurveChoice ParseCurveChoice(std::string_view name) {
  if (name == "toy") return CurveChoice::kToy;
  if (name == "prod" || name == "production") return CurveChoice::kProduction;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown curve '" + std::string(name) + "' (expected toy|prod)");
}

CurveParams ParamsFor(CurveChoice choice) {
  return choice == CurveChoice::kToy ? ToyCurveParams() : Curve1174Params();
}

SetupResult Setup(CurveChoice choice, RandomSource& rng) {
  const Curve& curve = StandardCurve(choice);
  return Finish(choice, curve.fq().RandomNonZero(rng));
}

SetupResult SetupWithSecret(CurveChoice choice, const Scalar& secret) {
  const Curve& curve = StandardCurve(choice);
  if (secret.IsZero() || secret.value() >= curve.order()) {
    throw Error(ErrorCode::kInvalidArgument,
                "issuer secret must lie in [1, q-1]");
  }
  return Finish(choice, secret);
}

ValidationReport ValidateParams(const SystemParams& params) {
  ValidationReport report;
  const Curve& curve = params.curve;
  const Point& pub = params.issuer_public;
  if (!curve.IsOnCurve(pub)) {
    report.reasons.push_back("P_pub is not on the curve");
    return report;
  }
  if (pub == curve.Neutral()) {
    report.reasons.push_back("P_pub is the neutral element");
  }
  if (!(curve.MultiplyInteger(curve.order(), pub) == curve.Neutral())) {
    report.reasons.push_back("P_pub is not in the subgroup generated by P");
  }
  if (params.hash_id != kHashId) {
    report.reasons.push_back("unsupported hash '" + params.hash_id + "'");
  }
  return report;
}

ValidationReport ValidateIssuerKey(const SystemParams& params,
                                   const IssuerKey& key) {
  ValidationReport report = ValidateParams(params);
  if (key.secret.IsZero() || key.secret.value() >= params.curve.order()) {
    report.reasons.push_back("issuer secret outside [1, q-1]");
    return report;
  }
  if (!(key.public_key == params.issuer_public)) {
    report.reasons.push_back("key file public key differs from params");
  }
  if (!(params.curve.Multiply(key.secret, params.base()) == key.public_key)) {
    report.reasons.push_back("P_pub != x * P");
  }
  return report;
}

Digest ParamsDigest(const SystemParams& params) {
  const Curve& curve = params.curve;
  const CurveParams& c = curve.params();
  size_t w = curve.fp().width();
  ByteWriter out;
  out.raw(std::string_view("i2pa-params-v1"));
  out.fixed(c.p, w);
  out.fixed(c.d, w);
  out.fixed(c.base_x, w);
  out.fixed(c.base_y, w);
  out.fixed(c.q, w);
  out.fixed(c.cofactor, w);
  out.fixed(params.issuer_public.x.value(), w);
  out.fixed(params.issuer_public.y.value(), w);
  out.raw(params.hash_id);
  return Sha256(out.bytes());
}

std::string FormatParams(const SystemParams& params) {
  KeyValueText kv;
  AddParamsKeys(kv, params);
  return kv.Format();
}

SystemParams ParseParams(std::string_view text) {
  KeyValueText kv = KeyValueText::Parse(text);
  CurveParams c;
  c.name = kv.Has("name") ? kv.Get("name") : "custom";
  c.p = kv.GetInt("p");
  c.d = kv.GetInt("d");
  c.base_x = kv.GetInt("Px");
  c.base_y = kv.GetInt("Py");
  c.q = kv.GetInt("q");
  c.cofactor = kv.GetInt("cofactor");
  Curve curve = [&] {
    try {
      return Curve(c);
    } catch (const Error& e) {
      throw Error(ErrorCode::kMalformed, e.what());
    }
  }();
  BigInt px = kv.GetInt("Ppubx");
  BigInt py = kv.GetInt("Ppuby");
  if (px >= c.p || py >= c.p) {
    throw Error(ErrorCode::kMalformed, "P_pub coordinates out of range");
  }
  Point pub{curve.fp().Canonical(px), curve.fp().Canonical(py)};
  unsigned k = kv.Has("k") ? static_cast<unsigned>(kv.GetInt("k").get_ui())
                           : SecurityBits(curve);
  std::string hash = kv.Has("hash") ? kv.Get("hash") : std::string(kHashId);
  SystemParams params{std::move(curve), pub, std::move(hash), k};
  ValidationReport report = ValidateParams(params);
  if (!report) {
    throw Error(ErrorCode::kMalformed, "invalid params: " + report.reasons[0]);
  }
  return params;
}

std::string FormatIssuerKey(const SystemParams& params, const IssuerKey& key) {
  KeyValueText kv;
  AddParamsKeys(kv, params);
  kv.SetInt("x", key.secret.value());
  return kv.Format();
}

IssuerKey ParseIssuerKey(std::string_view text, const SystemParams& params) {
  KeyValueText kv = KeyValueText::Parse(text);
  BigInt x = kv.GetInt("x");
  if (x == 0 || x >= params.curve.order()) {
    throw Error(ErrorCode::kMalformed, "issuer secret outside [1, q-1]");
  }
  IssuerKey key{params.fq().Canonical(x), params.issuer_public};
  if (kv.GetInt("Ppubx") != params.issuer_public.x.value() ||
      kv.GetInt("Ppuby") != params.issuer_public.y.value()) {
    throw Error(ErrorCode::kMalformed, "key file belongs to other params");
  }
  ValidationReport report = ValidateIssuerKey(params, key);
  if (!report) {
    throw Error(ErrorCode::kMalformed, "invalid key: " + report.reasons[0]);
  }
  return key;
}

}  // namespace i2pa
