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

// Schnorr proof of knowledge of a discrete logarithm, PK{(mu): Y = mu * P}.
//
//   prover                          verifier
//   w <- [1, q-1], A = w * P   -- A -->
//                              <-- c --   c <- [1, q-1]
//   r = c * mu + w mod q       -- r -->   accept iff r * P == A + c * Y
//
// The Fiat-Shamir variant derives c = H_FSCHAL(A || Y || context). When
// several statements are proven together (selective disclosure) they share
// one challenge computed over every (A_i, Y_i) pair followed by the context.
//
// The nonce w never leaves the prover: it is not part of the transcript.

#ifndef I2PA_SCHNORR_HPP_
#define I2PA_SCHNORR_HPP_

#include <span>

#include "i2pa/curve.hpp"

namespace i2pa {

struct SchnorrTranscript {
  Point commitment;  // A
  Scalar challenge;  // c
  Scalar response;   // r
  Point statement;   // Y, public

  friend bool operator==(const SchnorrTranscript&,
                         const SchnorrTranscript&) = default;
};

struct ProofNonce {
  Scalar nonce;  // w, secret
  Point commitment;
};

ProofNonce PkCommit(const Curve& curve, RandomSource& rng);
// Throws kInvalidArgument for w = 0.
ProofNonce PkCommitWithNonce(const Curve& curve, const Scalar& nonce);

// c * secret + nonce mod q.
Scalar PkRespond(const ScalarField& fq, const Scalar& secret,
                 const Scalar& nonce, const Scalar& challenge);

// Verifier challenge for the interactive variant, uniform in [1, q-1].
// A zero challenge would let any prover pass.
Scalar PkRandomChallenge(const ScalarField& fq, RandomSource& rng);

// r * P == A + c * Y. Off-curve points make it return false.
bool PkVerify(const Curve& curve, const SchnorrTranscript& t);

Scalar PkChallenge(const Curve& curve, std::span<const Point> commitments,
                   std::span<const Point> statements,
                   std::span<const uint8_t> context);

// The prover must pass statement = secret * P; this is not checked.
SchnorrTranscript PkFsProve(const Curve& curve, const Scalar& secret,
                            const Point& statement,
                            std::span<const uint8_t> context,
                            RandomSource& rng);

// Recomputes the challenge from the transcript and context, then PkVerify.
bool PkFsVerify(const Curve& curve, const SchnorrTranscript& t,
                std::span<const uint8_t> context);

// Special soundness: two accepting transcripts with the same commitment
// and different challenges reveal (r1 - r2) / (c1 - c2) mod q.
Scalar ExtractWitness(const ScalarField& fq, const SchnorrTranscript& a,
                      const SchnorrTranscript& b);

// A.x || A.y || c || r, fixed width. The statement travels separately.
void AppendTranscript(const Curve& curve, Bytes& out,
                      const SchnorrTranscript& t);
SchnorrTranscript ReadTranscript(const Curve& curve, ByteReader& in,
                                 const Point& statement);

}  // namespace i2pa

#endif  // I2PA_SCHNORR_HPP_
