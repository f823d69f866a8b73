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
#include "i2pa/credential.hpp"
#include "i2pa/error.hpp"
#include "i2pa/issuance.hpp"
#include "i2pa/random.hpp"
#include "support/fixtures.hpp"

using namespace i2pa;

namespace {

Credential Issue(const SetupResult& s, std::vector<Scalar> attrs, RandomSource& rng) {
  IssuerSession issuer = IssuerSession::Start(s.params, s.key, rng);
  auto [user, request] = UserSession::Blind(s.params, issuer.session(), issuer.r_bar(),
                                            std::move(attrs), rng);
  return user.Unblind(issuer.Sign(request));
}

}  // namespace

TEST_CASE("fresh credential verifies; a bumped s does not") {
  const SetupResult& s = fixtures::Toy();
  SeededRandom rng(61);
  Credential cred = Issue(s, {Scalar(3), Scalar(4)}, rng);
  PresentationToken token = Present(s.params, cred, rng, /*randomize=*/false);
  CHECK(token.sig == SignatureOf(cred));
  CHECK(VerifyPresentation(s.params, token));
  CHECK(VerifySignature(s.params, token.sig, token.master_proof));

  PresentationSignature bumped = token.sig;
  bumped.s = s.params.fq().Add(bumped.s, s.params.fq().One());
  CHECK_FALSE(SignatureEquationHolds(s.params, bumped));
  CHECK_FALSE(VerifySignature(s.params, bumped, token.master_proof));
}

TEST_CASE("valid equation with an invalid proof is rejected") {
  const SetupResult& s = fixtures::Toy();
  SeededRandom rng(62);
  Credential cred = Issue(s, {Scalar(3)}, rng);
  PresentationToken token = Present(s.params, cred, rng);
  CHECK(SignatureEquationHolds(s.params, token.sig));
  SchnorrTranscript broken = token.master_proof;
  broken.response = s.params.fq().Add(broken.response, s.params.fq().One());
  CHECK_FALSE(VerifySignature(s.params, token.sig, broken));
  PresentationToken t2 = token;
  t2.master_proof = broken;
  CHECK_FALSE(VerifyPresentation(s.params, t2));
}

TEST_CASE("randomization") {
  const SetupResult& s = fixtures::Toy();
  const ScalarField& fq = s.params.fq();
  SeededRandom rng(63);
  Credential cred = Issue(s, {Scalar(7), Scalar(8)}, rng);
  PresentationSignature sig = SignatureOf(cred);

  PresentationSignature one = Randomize(s.params, sig, rng);
  CHECK(SignatureEquationHolds(s.params, one));
  CHECK(one.h == sig.h);

  Scalar r1(11), r2(250);
  PresentationSignature twice =
      RandomizeWith(s.params, RandomizeWith(s.params, sig, r1), r2);
  CHECK(twice == RandomizeWith(s.params, sig, fq.Add(r1, r2)));
  CHECK(RandomizeWith(s.params, sig, Scalar(0)) == sig);

  for (long r = 1; r < 263; ++r) {
    PresentationSignature x = RandomizeWith(s.params, sig, Scalar(r));
    REQUIRE_FALSE(x.r == sig.r);
    REQUIRE_FALSE(x.s == sig.s);
  }
}

TEST_CASE("presentation encoding and bit flips") {
  const SetupResult& s = fixtures::Prod();
  SeededRandom rng(64);
  Credential cred = Issue(s, {Scalar(3), Scalar(4)}, rng);
  PresentationToken token = Present(s.params, cred, rng);
  WireMessage msg = EncodePresentation(s.params, token);
  Bytes wire = EncodeWire(msg);
  PresentationToken back = DecodePresentation(s.params, DecodeWire(wire));
  CHECK(back == token);
  CHECK(VerifyPresentation(s.params, back));

  // Every single-bit flip in the body either fails to parse or verify.
  size_t header = kWireHeaderSize;
  int accepted = 0;
  for (size_t i = header; i < wire.size(); i += 7) {
    Bytes flipped = wire;
    flipped[i] ^= 0x01;
    try {
      if (VerifyPresentation(s.params, DecodePresentation(s.params, DecodeWire(flipped)))) {
        ++accepted;
      }
    } catch (const Error&) {
    }
  }
  CHECK(accepted == 0);
}

TEST_CASE("tokens are bound to the session and the params") {
  const SetupResult& s = fixtures::Toy();
  SeededRandom rng(65);
  Credential cred = Issue(s, {Scalar(3)}, rng);
  PresentationToken token = Present(s.params, cred, rng);
  PresentationToken moved = token;
  moved.session[0] ^= 1;
  CHECK_FALSE(VerifyPresentation(s.params, moved));
  SetupResult other = SetupWithSecret(CurveChoice::kToy, Scalar(6));
  CHECK_FALSE(VerifyPresentation(other.params, token));
}

TEST_CASE("credential text round-trip") {
  const SetupResult& s = fixtures::Toy();
  SeededRandom rng(66);
  Credential cred = Issue(s, {Scalar(3), Scalar(4)}, rng);
  cred.labels = {"master", "age=18"};
  std::string text = FormatCredential(s.params, cred);
  Credential back = ParseCredential(text, s.params);
  CHECK(back.attributes == cred.attributes);
  CHECK(back.labels == cred.labels);
  CHECK(back.r == cred.r);
  CHECK(back.s == cred.s);
  CHECK(back.h == cred.h);
  CHECK(CredentialIsConsistent(s.params, back));

  SetupResult other = SetupWithSecret(CurveChoice::kToy, Scalar(6));
  CHECK_THROWS_AS(ParseCredential(text, other.params), Error);
  std::string bad_n = text;
  bad_n.replace(bad_n.find("n=2"), 3, "n=0");
  CHECK_THROWS_AS(ParseCredential(bad_n, s.params), Error);
}

TEST_CASE("consistency check catches a wrong h") {
  const SetupResult& s = fixtures::Toy();
  SeededRandom rng(67);
  Credential cred = Issue(s, {Scalar(3), Scalar(4)}, rng);
  Credential wrong = cred;
  wrong.attributes[1] = Scalar(5);
  CHECK_FALSE(CredentialIsConsistent(s.params, wrong));
  CHECK_FALSE(CredentialIsConsistent(s.params, Credential{}));
}
