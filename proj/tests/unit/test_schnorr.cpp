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
#include "i2pa/schnorr.hpp"
#include "i2pa/random.hpp"
#include "support/fixtures.hpp"

using namespace i2pa;

TEST_CASE("commitment") {
  const Curve& c = fixtures::Toy().params.curve;
  CHECK(PkCommitWithNonce(c, Scalar(1)).commitment == c.base());
  CHECK_THROWS_AS(PkCommitWithNonce(c, Scalar(0)), Error);
  SeededRandom rng(31);
  for (int i = 0; i < 20; ++i) {
    ProofNonce n = PkCommit(c, rng);
    REQUIRE_FALSE(n.nonce.IsZero());
    REQUIRE(c.DiscreteLog(n.commitment, c.base()) == n.nonce);
  }
}

TEST_CASE("response") {
  const ScalarField& fq = fixtures::Toy().params.fq();
  CHECK(PkRespond(fq, Scalar(17), Scalar(5), Scalar(0)) == Scalar(5));
  CHECK(PkRespond(fq, Scalar(0), Scalar(5), Scalar(99)) == Scalar(5));
  ScalarField f11(BigInt(11));
  CHECK(PkRespond(f11, Scalar(3), Scalar(5), Scalar(2)) == Scalar(0));
}

TEST_CASE("interactive verification") {
  const Curve& c = fixtures::Toy().params.curve;
  SeededRandom rng(32);
  Scalar secret(42);
  Point y = c.Multiply(secret, c.base());
  ProofNonce n = PkCommit(c, rng);
  Scalar ch = PkRandomChallenge(c.fq(), rng);
  SchnorrTranscript t{n.commitment, ch, PkRespond(c.fq(), secret, n.nonce, ch), y};
  CHECK(PkVerify(c, t));
  SchnorrTranscript bumped = t;
  bumped.response = c.fq().Add(t.response, c.fq().One());
  CHECK_FALSE(PkVerify(c, bumped));
  SchnorrTranscript off = t;
  off.commitment = Point{FieldElement(1), FieldElement(1)};
  CHECK_FALSE(PkVerify(c, off));
}

TEST_CASE("completeness over 1000 proofs") {
  const Curve& c = fixtures::Toy().params.curve;
  SeededRandom rng(33);
  for (int i = 0; i < 1000; ++i) {
    Scalar secret = c.fq().RandomNonZero(rng);
    Point y = c.Multiply(secret, c.base());
    ProofNonce n = PkCommit(c, rng);
    Scalar ch = PkRandomChallenge(c.fq(), rng);
    REQUIRE(PkVerify(c, {n.commitment, ch, PkRespond(c.fq(), secret, n.nonce, ch), y}));
  }
}

TEST_CASE("a prover with the wrong witness is rejected") {
  const Curve& c = fixtures::Toy().params.curve;
  SeededRandom rng(34);
  int accepted = 0;
  for (int i = 0; i < 1000; ++i) {
    Scalar secret = c.fq().RandomNonZero(rng);
    Scalar wrong = c.fq().RandomNonZero(rng);
    while (wrong == secret) wrong = c.fq().RandomNonZero(rng);
    Point y = c.Multiply(secret, c.base());
    ProofNonce n = PkCommit(c, rng);
    Scalar ch = PkRandomChallenge(c.fq(), rng);
    if (PkVerify(c, {n.commitment, ch, PkRespond(c.fq(), wrong, n.nonce, ch), y})) {
      ++accepted;
    }
  }
  CHECK(accepted == 0);
}

TEST_CASE("random challenges are never zero") {
  ScalarField f(BigInt(3));
  SeededRandom rng(35);
  for (int i = 0; i < 500; ++i) REQUIRE_FALSE(PkRandomChallenge(f, rng).IsZero());
}

TEST_CASE("fiat-shamir proofs") {
  const Curve& c = fixtures::Prod().params.curve;
  SeededRandom rng(36);
  Scalar secret = c.fq().RandomNonZero(rng);
  Point y = c.Multiply(secret, c.base());
  Bytes ctx = {'c', 't', 'x'};
  SchnorrTranscript t = PkFsProve(c, secret, y, ctx, rng);
  CHECK(PkFsVerify(c, t, ctx));
  Bytes other = {'c', 't', 'y'};
  CHECK_FALSE(PkFsVerify(c, t, other));
  SchnorrTranscript moved = t;
  moved.challenge = c.fq().Add(t.challenge, c.fq().One());
  CHECK_FALSE(PkFsVerify(c, moved, ctx));
  Point a = t.commitment;
  CHECK(PkChallenge(c, std::span(&a, 1), std::span(&y, 1), ctx) == t.challenge);
}

TEST_CASE("special soundness recovers the secret") {
  const Curve& c = fixtures::Toy().params.curve;
  SeededRandom rng(37);
  for (int i = 0; i < 50; ++i) {
    Scalar secret = c.fq().RandomNonZero(rng);
    Point y = c.Multiply(secret, c.base());
    ProofNonce n = PkCommit(c, rng);
    Scalar c1 = PkRandomChallenge(c.fq(), rng);
    Scalar c2 = PkRandomChallenge(c.fq(), rng);
    while (c2 == c1) c2 = PkRandomChallenge(c.fq(), rng);
    SchnorrTranscript t1{n.commitment, c1, PkRespond(c.fq(), secret, n.nonce, c1), y};
    SchnorrTranscript t2{n.commitment, c2, PkRespond(c.fq(), secret, n.nonce, c2), y};
    REQUIRE(ExtractWitness(c.fq(), t1, t2) == secret);
  }
  SchnorrTranscript same{c.base(), Scalar(3), Scalar(4), c.base()};
  CHECK_THROWS_AS(ExtractWitness(c.fq(), same, same), Error);
}

TEST_CASE("transcript encoding") {
  const Curve& c = fixtures::Toy().params.curve;
  SchnorrTranscript t{c.Multiply(Scalar(9), c.base()), Scalar(10), Scalar(11),
                      c.Multiply(Scalar(12), c.base())};
  Bytes out;
  AppendTranscript(c, out, t);
  CHECK(out.size() == c.point_width() + 2 * c.fq().width());
  ByteReader in(out);
  CHECK(ReadTranscript(c, in, t.statement) == t);
}
