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

#include "i2pa/issuance.hpp"

#include "i2pa/hashing.hpp"
#include "i2pa/opcount.hpp"

namespace i2pa {

Bytes EncodeBlindRequest(const Curve& curve, const BlindRequest& request) {
  if (request.commitments.empty() ||
      request.commitments.size() > kMaxAttributes) {
    throw Error(ErrorCode::kInvalidArgument, "bad commitment count");
  }
  Bytes out;
  curve.fq().Append(out, request.h_bar);
  out.push_back(static_cast<uint8_t>(request.commitments.size()));
  for (const Point& p : request.commitments) curve.AppendPoint(out, p);
  AppendTranscript(curve, out, request.proof);
  return out;
}

BlindRequest DecodeBlindRequest(const Curve& curve,
                                std::span<const uint8_t> body,
                                bool interactive) {
  ByteReader in(body);
  BlindRequest request;
  request.h_bar = curve.fq().Read(in);
  size_t count = in.u8();
  if (count == 0 || count > kMaxAttributes) {
    throw Error(ErrorCode::kMalformed, "bad commitment count");
  }
  for (size_t i = 0; i < count; ++i) {
    request.commitments.push_back(curve.ReadPoint(in));
  }
  if (interactive) {
    request.proof.commitment = curve.ReadPoint(in);
    request.proof.challenge = curve.fq().Zero();
    request.proof.response = curve.fq().Zero();
    request.proof.statement = request.commitments[0];
    // Interactive bodies still carry zeroed c and r fields.
    Scalar c = curve.fq().Read(in);
    Scalar r = curve.fq().Read(in);
    if (!c.IsZero() || !r.IsZero()) {
      throw Error(ErrorCode::kMalformed,
                  "interactive request must not carry a challenge");
    }
  } else {
    request.proof = ReadTranscript(curve, in, request.commitments[0]);
  }
  in.ExpectEnd();
  return request;
}

Bytes IssuanceProofContext(const SystemParams& params, const SessionId& session,
                           const Scalar& h_bar) {
  ByteWriter w;
  w.raw(std::string_view("i2pa-issue"));
  w.raw(session);
  w.raw(ParamsDigest(params));
  w.u8(static_cast<uint8_t>(MessageType::kIss2));
  Bytes out = std::move(w).bytes();
  params.fq().Append(out, h_bar);
  return out;
}

Scalar BlindSign(const ScalarField& fq, const Scalar& h_bar,
                 const Scalar& secret, const Scalar& k_bar) {
  return fq.Add(fq.Mul(h_bar, secret), k_bar);
}

// --- issuer ---------------------------------------------------------------

IssuerSession IssuerSession::Start(const SystemParams& params,
                                   const IssuerKey& key, RandomSource& rng) {
  SessionId session;
  rng.Fill(session);
  return StartWithNonce(params, key, params.fq().RandomNonZero(rng), session);
}

IssuerSession IssuerSession::StartWithNonce(const SystemParams& params,
                                            const IssuerKey& key,
                                            const Scalar& k_bar,
                                            const SessionId& session) {
  if (k_bar.IsZero()) {
    throw Error(ErrorCode::kInvalidArgument, "issuer nonce must be non-zero");
  }
  IssuerSession s(params, key);
  s.session_ = session;
  s.k_bar_ = k_bar;
  {
    StepScope step("issuer.commit");
    s.r_bar_ = params.curve.Multiply(k_bar, params.base());
  }
  s.Record("out R_bar", params.curve.EncodePoint(s.r_bar_));
  return s;
}

void IssuerSession::Record(std::string label, Bytes value) {
  trace_.push_back({std::move(label), std::move(value)});
}

void IssuerSession::Abort(const std::string& why) {
  state_ = IssuerState::kAborted;
  k_bar_.reset();
  throw Error(ErrorCode::kProtocol, why);
}

void IssuerSession::CheckRequestShape(const BlindRequest& request) const {
  const Curve& curve = params_->curve;
  if (request.commitments.empty() ||
      request.commitments.size() > kMaxAttributes) {
    throw Error(ErrorCode::kProtocol, "bad commitment count");
  }
  for (const Point& p : request.commitments) {
    if (!curve.IsOnCurve(p)) {
      throw Error(ErrorCode::kProtocol, "commitment off curve");
    }
  }
  if (!(request.proof.statement == request.commitments[0])) {
    throw Error(ErrorCode::kProtocol, "proof is not about P_0");
  }
}

Scalar IssuerSession::Challenge(const BlindRequest& request,
                                RandomSource& rng) {
  if (state_ != IssuerState::kStarted) {
    Abort("challenge requested in state other than started");
  }
  const Curve& curve = params_->curve;
  Record("in h_bar", [&] {
    Bytes b;
    curve.fq().Append(b, request.h_bar);
    return b;
  }());
  for (const Point& p : request.commitments) {
    Record("in commitment", curve.EncodePoint(p));
  }
  Record("in proof commitment", curve.EncodePoint(request.proof.commitment));
  try {
    CheckRequestShape(request);
  } catch (const Error& e) {
    Abort(e.what());
  }
  pending_ = request;
  challenge_ = PkRandomChallenge(curve.fq(), rng);
  state_ = IssuerState::kChallenged;
  Record("out challenge", [&] {
    Bytes b;
    curve.fq().Append(b, *challenge_);
    return b;
  }());
  return *challenge_;
}

Scalar IssuerSession::SignAfterChallenge(const Scalar& response) {
  if (state_ != IssuerState::kChallenged) {
    Abort("response received without an outstanding challenge");
  }
  Record("in response", [&] {
    Bytes b;
    params_->fq().Append(b, response);
    return b;
  }());
  BlindRequest request = *pending_;
  request.proof.challenge = *challenge_;
  request.proof.response = response;
  return VerifyAndSign(request, /*fiat_shamir=*/false);
}

Scalar IssuerSession::Sign(const BlindRequest& request) {
  if (state_ != IssuerState::kStarted) {
    Abort(state_ == IssuerState::kSigned
              ? "session already signed; nonces are single-use"
              : "sign requested in state other than started");
  }
  const Curve& curve = params_->curve;
  Record("in h_bar", [&] {
    Bytes b;
    curve.fq().Append(b, request.h_bar);
    return b;
  }());
  for (const Point& p : request.commitments) {
    Record("in commitment", curve.EncodePoint(p));
  }
  Bytes proof_bytes;
  AppendTranscript(curve, proof_bytes, request.proof);
  Record("in proof", std::move(proof_bytes));
  return VerifyAndSign(request, /*fiat_shamir=*/true);
}

Scalar IssuerSession::VerifyAndSign(const BlindRequest& request,
                                    bool fiat_shamir) {
  try {
    CheckRequestShape(request);
  } catch (const Error& e) {
    Abort(e.what());
  }
  bool proof_ok =
      fiat_shamir
          ? PkFsVerify(params_->curve, request.proof,
                       IssuanceProofContext(*params_, session_, request.h_bar))
          : PkVerify(params_->curve, request.proof);
  if (!proof_ok) Abort("proof of the master secret does not verify");
  Scalar s_bar = BlindSign(params_->fq(), request.h_bar, key_->secret, *k_bar_);
  k_bar_.reset();
  pending_.reset();
  state_ = IssuerState::kSigned;
  Bytes b;
  params_->fq().Append(b, s_bar);
  Record("out s_bar", std::move(b));
  return s_bar;
}

// --- user -----------------------------------------------------------------

std::pair<UserSession, BlindRequest> UserSession::Blind(
    const SystemParams& params, const SessionId& session, const Point& r_bar,
    std::vector<Scalar> attributes, RandomSource& rng,
    IssuanceOptions options) {
  Scalar alpha = params.fq().RandomNonZero(rng);
  Scalar beta = params.fq().RandomNonZero(rng);
  return BlindWithFactors(params, session, r_bar, std::move(attributes), alpha,
                          beta, rng, options);
}

std::pair<UserSession, BlindRequest> UserSession::BlindWithFactors(
    const SystemParams& params, const SessionId& session, const Point& r_bar,
    std::vector<Scalar> attributes, const Scalar& alpha, const Scalar& beta,
    RandomSource& rng, IssuanceOptions options) {
  const Curve& curve = params.curve;
  const ScalarField& fq = params.fq();
  curve.RequireOnCurve(r_bar, "R_bar");
  if (attributes.empty() || attributes.size() > kMaxAttributes) {
    throw Error(ErrorCode::kInvalidArgument,
                "a credential carries 1 to 64 attributes");
  }
  for (const Scalar& m : attributes) {
    if (m.IsZero()) {
      throw Error(ErrorCode::kInvalidArgument, "attribute scalar is zero");
    }
  }
  if (alpha.IsZero()) {
    throw Error(ErrorCode::kInvalidArgument, "alpha must be non-zero");
  }

  UserSession user(params, options);
  user.session_ = session;
  UserBlindState& st = user.state_;
  st.alpha = alpha;
  st.beta = beta;
  st.r_bar = r_bar;
  {
    StepScope step("user.blind");
    st.r = curve.Add(curve.Multiply(alpha, r_bar),
                     curve.Multiply(beta, curve.base()));
  }
  {
    StepScope step("user.commitments");
    st.commitments = AttributeCommitments(curve, attributes);
  }
  st.attributes = std::move(attributes);
  st.h = HashBlock(curve, st.commitments, st.r);
  st.h_bar = fq.Mul(st.h, fq.Inverse(alpha));

  BlindRequest request;
  request.h_bar = st.h_bar;
  if (options.strict) {
    request.commitments = {st.commitments[0]};
  } else {
    request.commitments = st.commitments;
  }
  const Point& p0 = st.commitments[0];
  if (options.interactive) {
    ProofNonce n = PkCommit(curve, rng);
    st.proof_nonce = n.nonce;
    request.proof = SchnorrTranscript{n.commitment, fq.Zero(), fq.Zero(), p0};
  } else {
    request.proof =
        PkFsProve(curve, st.attributes[0], p0,
                  IssuanceProofContext(params, session, st.h_bar), rng);
  }
  return {std::move(user), std::move(request)};
}

Scalar UserSession::Respond(const Scalar& challenge) {
  if (status_ != UserState::kBlinded || !state_.proof_nonce) {
    throw Error(ErrorCode::kProtocol, "no interactive proof awaiting a challenge");
  }
  Scalar r = PkRespond(params_->fq(), state_.attributes[0], *state_.proof_nonce,
                       challenge);
  state_.proof_nonce.reset();
  status_ = UserState::kAnswered;
  return r;
}

Credential UserSession::Unblind(const Scalar& s_bar) {
  bool ready = options_.interactive ? status_ == UserState::kAnswered
                                    : status_ == UserState::kBlinded;
  if (!ready) {
    throw Error(ErrorCode::kProtocol, "unblind called out of order");
  }
  const Curve& curve = params_->curve;
  const ScalarField& fq = params_->fq();
  bool ok;
  {
    StepScope step("user.unblind_check");
    Point lhs = curve.Multiply(s_bar, curve.base());
    Point rhs = curve.Add(curve.Multiply(state_.h_bar, params_->issuer_public),
                          state_.r_bar);
    ok = lhs == rhs;
  }
  if (!ok) {
    status_ = UserState::kAborted;
    throw Error(ErrorCode::kIssuerMisbehavior,
                "blinded signature fails s_bar P = h_bar P_pub + R_bar");
  }
  status_ = UserState::kDone;
  Credential cred;
  cred.attributes = state_.attributes;
  cred.r = state_.r;
  cred.s = fq.Add(fq.Mul(state_.alpha, s_bar), state_.beta);
  cred.h = state_.h;
  return cred;
}

}  // namespace i2pa
