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

// Selective disclosure.
//
// The prover reveals m_i for i in D and, for every hidden index i in H
// (always including 0), the commitment P_i = m_i P plus a Schnorr proof of
// m_i. All hidden proofs share one Fiat-Shamir challenge computed over
// every (A_i, P_i) and the rest of the token, which makes them a single
// conjunctive proof.
//
// The verifier recomputes P_i for the disclosed scalars and accepts iff
//
//   (prod_{i in H} H(P_i, R)) P_pub == (prod_{i in D} H(P_i, R))^-1 (s P - R)
//
// the token's h equals the full product, and every hidden proof verifies.
// Hidden commitments are deterministic, so low-entropy hidden attributes
// can be recovered by guessing m and comparing m P.

#ifndef I2PA_DISCLOSURE_HPP_
#define I2PA_DISCLOSURE_HPP_

#include <map>
#include <set>

#include "i2pa/credential.hpp"

namespace i2pa {

struct DisclosureToken {
  SessionId session{};
  Digest params_digest{};
  PresentationSignature sig;
  size_t attribute_count = 0;
  std::map<size_t, Scalar> disclosed;
  std::map<size_t, Point> hidden_commitments;
  std::map<size_t, SchnorrTranscript> hidden_proofs;

  friend bool operator==(const DisclosureToken&,
                         const DisclosureToken&) = default;
};

// Refuses index 0 and indices beyond the credential (kInvalidArgument).
DisclosureToken PresentSelective(const SystemParams& params,
                                 const Credential& cred,
                                 const std::set<size_t>& disclose,
                                 RandomSource& rng);

// Fills token.hidden_proofs from the witnesses for each hidden index.
// Split out so tests can re-prove after substituting a commitment.
void ProveHidden(const SystemParams& params, DisclosureToken& token,
                 const std::map<size_t, Scalar>& witnesses, RandomSource& rng);

// Index sets partition [0, attribute_count), 0 is hidden, and every hidden
// index has one commitment and one proof about it.
bool PartitionIsValid(const DisclosureToken& token);

// Bytes bound into the shared challenge: session, params digest, type,
// (R, s, h), the index layout and the disclosed scalars.
Bytes DisclosureContext(const SystemParams& params,
                        const DisclosureToken& token);

struct SplitEquation {
  Scalar h_hidden;
  Scalar h_disclosed;
  Point lhs;  // h_hidden * P_pub
  Point rhs;  // h_disclosed^-1 * (s P - R)
};

// Requires a valid partition and on-curve points (kInvalidArgument).
SplitEquation EvaluateSplitEquation(const SystemParams& params,
                                    const DisclosureToken& token);

bool VerifyDisclosure(const SystemParams& params, const DisclosureToken& token);

// DISCLOSE body: digest || R || s || h || n (u8) || |D| (u8) ||
// disclosed bitmap (u64, bit i set when m_i is disclosed) || disclosed
// scalars || hidden commitments || hidden proofs (A || c || r), each list
// in ascending index order.
WireMessage EncodeDisclosure(const SystemParams& params,
                             const DisclosureToken& token);
DisclosureToken DecodeDisclosure(const SystemParams& params,
                                 const WireMessage& msg);

}  // namespace i2pa

#endif  // I2PA_DISCLOSURE_HPP_
