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

#include "i2pa/schnorr.hpp"

#include "i2pa/hashing.hpp"
#include "i2pa/opcount.hpp"

namespace i2pa {

ProofNonce PkCommit(const Curve& curve, RandomSource& rng) {
  return PkCommitWithNonce(curve, curve.fq().RandomNonZero(rng));
}

ProofNonce PkCommitWithNonce(const Curve& curve, const Scalar& nonce) {
  if (nonce.IsZero()) {
    throw Error(ErrorCode::kInvalidArgument, "proof nonce must be non-zero");
  }
  StepScope step("pk.commit");
  return ProofNonce{nonce, curve.Multiply(nonce, curve.base())};
}

Scalar PkRespond(const ScalarField& fq, const Scalar& secret,
                 const Scalar& nonce, const Scalar& challenge) {
  return fq.Add(fq.Mul(challenge, secret), nonce);
}

Scalar PkRandomChallenge(const ScalarField& fq, RandomSource& rng) {
  return fq.RandomNonZero(rng);
}

bool PkVerify(const Curve& curve, const SchnorrTranscript& t) {
  if (!curve.IsOnCurve(t.commitment) || !curve.IsOnCurve(t.statement)) {
    return false;
  }
  StepScope step("pk.verify");
  Point lhs = curve.Multiply(t.response, curve.base());
  Point rhs =
      curve.Add(t.commitment, curve.Multiply(t.challenge, t.statement));
  return lhs == rhs;
}

Scalar PkChallenge(const Curve& curve, std::span<const Point> commitments,
                   std::span<const Point> statements,
                   std::span<const uint8_t> context) {
  if (commitments.size() != statements.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "commitment and statement counts differ");
  }
  Bytes payload;
  for (size_t i = 0; i < commitments.size(); ++i) {
    curve.AppendPoint(payload, commitments[i]);
    curve.AppendPoint(payload, statements[i]);
  }
  payload.insert(payload.end(), context.begin(), context.end());
  return HashToScalar(curve.fq(), HashTag::kFsChallenge, payload);
}

SchnorrTranscript PkFsProve(const Curve& curve, const Scalar& secret,
                            const Point& statement,
                            std::span<const uint8_t> context,
                            RandomSource& rng) {
  ProofNonce n = PkCommit(curve, rng);
  Scalar c = PkChallenge(curve, std::span(&n.commitment, 1),
                         std::span(&statement, 1), context);
  return SchnorrTranscript{n.commitment, c,
                           PkRespond(curve.fq(), secret, n.nonce, c),
                           statement};
}

bool PkFsVerify(const Curve& curve, const SchnorrTranscript& t,
                std::span<const uint8_t> context) {
  if (!curve.IsOnCurve(t.commitment) || !curve.IsOnCurve(t.statement)) {
    return false;
  }
  Scalar c = PkChallenge(curve, std::span(&t.commitment, 1),
                         std::span(&t.statement, 1), context);
  return c == t.challenge && PkVerify(curve, t);
}

Scalar ExtractWitness(const ScalarField& fq, const SchnorrTranscript& a,
                      const SchnorrTranscript& b) {
  if (!(a.commitment == b.commitment) || !(a.statement == b.statement)) {
    throw Error(ErrorCode::kInvalidArgument,
                "extraction needs a shared commitment and statement");
  }
  if (a.challenge == b.challenge) {
    throw Error(ErrorCode::kInvalidArgument,
                "extraction needs two distinct challenges");
  }
  return fq.Mul(fq.Sub(a.response, b.response),
                fq.Inverse(fq.Sub(a.challenge, b.challenge)));
}

void AppendTranscript(const Curve& curve, Bytes& out,
                      const SchnorrTranscript& t) {
  curve.AppendPoint(out, t.commitment);
  curve.fq().Append(out, t.challenge);
  curve.fq().Append(out, t.response);
}

SchnorrTranscript ReadTranscript(const Curve& curve, ByteReader& in,
                                 const Point& statement) {
  SchnorrTranscript t;
  t.commitment = curve.ReadPoint(in);
  t.challenge = curve.fq().Read(in);
  t.response = curve.fq().Read(in);
  t.statement = statement;
  return t;
}

}  // namespace i2pa
