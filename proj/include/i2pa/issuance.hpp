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

// Blind issuance of a credential over a block of attributes m_0..m_l.
//
//   user                                             issuer
//                                  <-- R_bar --      k_bar <- F_q*, R_bar = k_bar P
//   alpha, beta <- F_q*
//   R = alpha R_bar + beta P
//   P_i = m_i P,  h = prod_i H(P_i, R)
//   h_bar = h / alpha mod q
//   PK{(mu): P_0 = mu P}     -- h_bar, P_0, PK -->
//                                  <-- s_bar --      s_bar = h_bar x + k_bar mod q
//   check s_bar P == h_bar P_pub + R_bar
//   s = alpha s_bar + beta mod q
//
// A single-attribute credential is the l = 0 case, where h = H(P_0, R).
// The issuer sees R_bar, h_bar, the transmitted commitments, the proof and
// s_bar; it never sees R, s or h.

#ifndef I2PA_ISSUANCE_HPP_
#define I2PA_ISSUANCE_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "i2pa/credential.hpp"

namespace i2pa {

struct IssuanceOptions {
  // Send only P_0. When false every commitment P_0..P_l is sent so the
  // issuer can log the credential's shape; signing does not use them.
  bool strict = true;
  // Live challenge from the issuer instead of a Fiat-Shamir challenge.
  bool interactive = false;
};

// ISS2 body.
struct BlindRequest {
  Scalar h_bar;
  std::vector<Point> commitments;  // P_0 first
  // statement == commitments[0]. In interactive mode challenge and
  // response are zero until the CHAL exchange completes.
  SchnorrTranscript proof;

  friend bool operator==(const BlindRequest&, const BlindRequest&) = default;
};

Bytes EncodeBlindRequest(const Curve& curve, const BlindRequest& request);
// `interactive` selects the body layout without challenge and response.
BlindRequest DecodeBlindRequest(const Curve& curve,
                                std::span<const uint8_t> body,
                                bool interactive);

// Fiat-Shamir context for the issuance proof: session id, params digest,
// message type and h_bar.
Bytes IssuanceProofContext(const SystemParams& params, const SessionId& session,
                           const Scalar& h_bar);

// h_bar * x + k_bar mod q.
Scalar BlindSign(const ScalarField& fq, const Scalar& h_bar,
                 const Scalar& secret, const Scalar& k_bar);

enum class IssuerState { kStarted, kChallenged, kSigned, kAborted };

// Everything the issuer received or sent, in order.
struct IssuerTraceEntry {
  std::string label;
  Bytes value;
};

// Issuer side of one session. Holds references to params and key, which
// must outlive it. Move-only; the nonce is erased once used.
class IssuerSession {
 public:
  static IssuerSession Start(const SystemParams& params, const IssuerKey& key,
                             RandomSource& rng);
  static IssuerSession StartWithNonce(const SystemParams& params,
                                      const IssuerKey& key,
                                      const Scalar& k_bar,
                                      const SessionId& session);

  IssuerSession(IssuerSession&&) = default;
  IssuerSession& operator=(IssuerSession&&) = default;

  const Point& r_bar() const { return r_bar_; }
  const SessionId& session() const { return session_; }
  IssuerState state() const { return state_; }
  const std::vector<IssuerTraceEntry>& trace() const { return trace_; }

  // Interactive proof: stores the request (whose proof carries only the
  // commitment A) and returns a fresh challenge.
  Scalar Challenge(const BlindRequest& request, RandomSource& rng);
  // Interactive proof: completes the stored proof with the user's response,
  // verifies it and signs.
  Scalar SignAfterChallenge(const Scalar& response);
  // Non-interactive proof: verifies the Fiat-Shamir proof and signs.
  Scalar Sign(const BlindRequest& request);

  // Test hook: the nonce while the session is still open.
  const std::optional<Scalar>& k_bar_for_testing() const { return k_bar_; }

 private:
  IssuerSession(const SystemParams& params, const IssuerKey& key)
      : params_(&params), key_(&key) {}

  void CheckRequestShape(const BlindRequest& request) const;
  Scalar VerifyAndSign(const BlindRequest& request, bool fiat_shamir);
  void Abort(const std::string& why);
  void Record(std::string label, Bytes value);

  const SystemParams* params_;
  const IssuerKey* key_;
  SessionId session_{};
  std::optional<Scalar> k_bar_;
  Point r_bar_;
  IssuerState state_ = IssuerState::kStarted;
  std::optional<BlindRequest> pending_;
  std::optional<Scalar> challenge_;
  std::vector<IssuerTraceEntry> trace_;
};

struct UserBlindState {
  Scalar alpha;
  Scalar beta;
  Point r_bar;
  Point r;
  Scalar h;
  Scalar h_bar;
  std::vector<Scalar> attributes;
  std::vector<Point> commitments;  // all of them, P_i = m_i P
  std::optional<Scalar> proof_nonce;  // interactive mode, until answered
};

enum class UserState { kBlinded, kAnswered, kDone, kAborted };

class UserSession {
 public:
  // Validates R_bar and the attributes (1..64 entries, none zero), draws
  // alpha, beta and the proof nonce, and builds the ISS2 request.
  static std::pair<UserSession, BlindRequest> Blind(
      const SystemParams& params, const SessionId& session, const Point& r_bar,
      std::vector<Scalar> attributes, RandomSource& rng,
      IssuanceOptions options = {});
  // Same with caller-chosen blinding factors. alpha must be non-zero;
  // beta = 0 is allowed here for identity-blinding checks.
  static std::pair<UserSession, BlindRequest> BlindWithFactors(
      const SystemParams& params, const SessionId& session, const Point& r_bar,
      std::vector<Scalar> attributes, const Scalar& alpha, const Scalar& beta,
      RandomSource& rng, IssuanceOptions options = {});

  UserSession(UserSession&&) = default;
  UserSession& operator=(UserSession&&) = default;

  const UserBlindState& state() const { return state_; }
  UserState status() const { return status_; }

  // Interactive proof response r = c m_0 + w.
  Scalar Respond(const Scalar& challenge);

  // Checks s_bar P == h_bar P_pub + R_bar (kIssuerMisbehavior otherwise),
  // then s = alpha s_bar + beta.
  Credential Unblind(const Scalar& s_bar);

 private:
  UserSession(const SystemParams& params, IssuanceOptions options)
      : params_(&params), options_(options) {}

  const SystemParams* params_;
  IssuanceOptions options_;
  SessionId session_{};
  UserBlindState state_;
  UserState status_ = UserState::kBlinded;
};

}  // namespace i2pa

#endif  // I2PA_ISSUANCE_HPP_
