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

// Credentials, their verification and randomization.
//
// A credential is (m_0..m_l, R, s, h) with h = prod_i H(m_i P, R) and
// s P = h P_pub + R. m_0 is the owner's master secret and is never shown.
//
// Verifiers use the transmitted h and never recompute it: after
// randomization R-hat = R + rP no longer matches the R that was hashed at
// issuance. Note that h itself is unchanged by randomization, so it is
// identical across every presentation of one credential.

#ifndef I2PA_CREDENTIAL_HPP_
#define I2PA_CREDENTIAL_HPP_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "i2pa/params.hpp"
#include "i2pa/schnorr.hpp"
#include "i2pa/wire.hpp"

namespace i2pa {

inline constexpr size_t kMaxAttributes = 64;

struct Credential {
  std::vector<Scalar> attributes;  // m_0 first
  // Optional human-readable labels, parallel to attributes; labels[0]
  // names the master secret.
  std::vector<std::string> labels;
  Point r;
  Scalar s;
  Scalar h;
};

struct PresentationSignature {
  Point r;
  Scalar s;
  Scalar h;

  friend bool operator==(const PresentationSignature&,
                         const PresentationSignature&) = default;
};

PresentationSignature SignatureOf(const Credential& cred);

// P_i = m_i * P for every attribute.
std::vector<Point> AttributeCommitments(const Curve& curve,
                                        std::span<const Scalar> attributes);

// s * P == h * P_pub + R (2 scalar multiplications, 1 addition).
bool SignatureEquationHolds(const SystemParams& params,
                            const PresentationSignature& sig);

// The signature equation and the proof of the master secret, both
// required. Off-curve R is a rejection.
bool VerifySignature(const SystemParams& params,
                     const PresentationSignature& sig,
                     const SchnorrTranscript& master_proof);

// Full check a credential holder can run: signature equation and
// h == prod H(m_i P, R).
bool CredentialIsConsistent(const SystemParams& params, const Credential& cred);

// (R + rP, s + r, h) for a fresh r in [1, q-1].
PresentationSignature Randomize(const SystemParams& params,
                                const PresentationSignature& sig,
                                RandomSource& rng);
PresentationSignature RandomizeWith(const SystemParams& params,
                                    const PresentationSignature& sig,
                                    const Scalar& r);

// A non-interactive presentation: the signature, P_0 and a Fiat-Shamir
// proof of m_0 whose challenge binds the session id, the params digest and
// (R, s, h).
struct PresentationToken {
  SessionId session{};
  Digest params_digest{};
  PresentationSignature sig;
  SchnorrTranscript master_proof;  // statement is P_0

  friend bool operator==(const PresentationToken&,
                         const PresentationToken&) = default;
};

Bytes PresentationContext(const SystemParams& params, const SessionId& session,
                          const PresentationSignature& sig);

PresentationToken Present(const SystemParams& params, const Credential& cred,
                          RandomSource& rng, bool randomize = true);

bool VerifyPresentation(const SystemParams& params,
                        const PresentationToken& token);

// PRESENT body: digest || R || s || h || P_0 || A || c || r.
WireMessage EncodePresentation(const SystemParams& params,
                               const PresentationToken& token);
PresentationToken DecodePresentation(const SystemParams& params,
                                     const WireMessage& msg);

// Text format with keys curve, digest, n, m<i>, label<i>, Rx, Ry, s, h.
std::string FormatCredential(const SystemParams& params, const Credential& cred);
Credential ParseCredential(std::string_view text, const SystemParams& params);

}  // namespace i2pa

#endif  // I2PA_CREDENTIAL_HPP_
