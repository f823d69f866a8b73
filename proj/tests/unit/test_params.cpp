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

#include "doctest.h"
#include "i2pa/error.hpp"
#include "i2pa/params.hpp"
#include "i2pa/random.hpp"
#include "support/fixtures.hpp"

using namespace i2pa;

TEST_CASE("toy setup with seed 7 yields a key the DLP oracle recovers") {
  SeededRandom rng(7, "setup");
  SetupResult s = Setup(CurveChoice::kToy, rng);
  const Curve& c = s.params.curve;
  // Frozen from an independent reimplementation of the seeded stream.
  CHECK(s.key.secret == Scalar(164));
  CHECK(s.params.issuer_public == c.MakePoint(271, 219));
  CHECK(c.DiscreteLog(s.params.issuer_public, c.base()) == s.key.secret);
  CHECK(s.params.security_bits == 4);  // bits(263) / 2
  CHECK(ValidateIssuerKey(s.params, s.key).ok());
}

TEST_CASE("forced secret 1 gives P_pub = P") {
  SetupResult s = SetupWithSecret(CurveChoice::kToy, Scalar(1));
  CHECK(s.params.issuer_public == s.params.base());
  CHECK_THROWS_AS(SetupWithSecret(CurveChoice::kToy, Scalar(0)), Error);
  CHECK_THROWS_AS(SetupWithSecret(CurveChoice::kToy, Scalar(263)), Error);
}

TEST_CASE("distinct seeds give distinct secrets") {
  SeededRandom a(1, "setup"), b(2, "setup");
  SetupResult sa = Setup(CurveChoice::kProduction, a);
  SetupResult sb = Setup(CurveChoice::kProduction, b);
  CHECK_FALSE(sa.key.secret == sb.key.secret);
  CHECK(sa.params.security_bits == 124);
}

TEST_CASE("parameter validation") {
  SystemParams p = fixtures::Prod().params;
  CHECK(ValidateParams(p).ok());

  SystemParams off = p;
  off.issuer_public = Point{FieldElement(1), FieldElement(1)};
  CHECK_FALSE(ValidateParams(off).ok());

  SystemParams neutral = p;
  neutral.issuer_public = p.curve.Neutral();
  CHECK_FALSE(ValidateParams(neutral).ok());

  // An order-4 point is on the curve but outside <P>.
  SystemParams torsion = p;
  torsion.issuer_public = p.curve.MakePoint(1, 0);
  ValidationReport r = ValidateParams(torsion);
  CHECK_FALSE(r.ok());
  CHECK_FALSE(r.reasons.empty());

  SystemParams hash = p;
  hash.hash_id = "md5";
  CHECK_FALSE(ValidateParams(hash).ok());

  IssuerKey wrong = fixtures::Prod().key;
  wrong.secret = Scalar(8);
  CHECK_FALSE(ValidateIssuerKey(p, wrong).ok());
}

TEST_CASE("params and key files round-trip and never leak the secret") {
  const SetupResult& s = fixtures::Toy();
  std::string text = FormatParams(s.params);
  CHECK(text.find("\nx=") == std::string::npos);
  SystemParams back = ParseParams(text);
  CHECK(back.issuer_public == s.params.issuer_public);
  CHECK(ParamsDigest(back) == ParamsDigest(s.params));

  std::string key_text = FormatIssuerKey(s.params, s.key);
  IssuerKey key = ParseIssuerKey(key_text, back);
  CHECK(key.secret == s.key.secret);

  std::string tampered = text;
  tampered.replace(tampered.find("Ppuby="), 6, "Ppuby=1");
  CHECK_THROWS_AS(ParseParams(tampered), Error);
}

TEST_CASE("params digest separates parameter sets") {
  CHECK(ParamsDigest(fixtures::Toy().params) !=
        ParamsDigest(fixtures::Prod().params));
  SetupResult other = SetupWithSecret(CurveChoice::kToy, Scalar(6));
  CHECK(ParamsDigest(other.params) != ParamsDigest(fixtures::Toy().params));
}

TEST_CASE("curve choice names") {
  CHECK(ParseCurveChoice("toy") == CurveChoice::kToy);
  CHECK(ParseCurveChoice("prod") == CurveChoice::kProduction);
  CHECK(ParseCurveChoice("production") == CurveChoice::kProduction);
  CHECK_THROWS_AS(ParseCurveChoice("p256"), Error);
}
