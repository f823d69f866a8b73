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

#include "i2pa/disclosure.hpp"

#include <algorithm>
#include <vector>

#include "i2pa/hashing.hpp"
#include "i2pa/opcount.hpp"

namespace i2pa {
namespace {

uint64_t DisclosedBitmap(const DisclosureToken& token) {
  uint64_t bits = 0;
  for (const auto& [i, m] : token.disclosed) bits |= uint64_t{1} << i;
  return bits;
}

// Commitments and proof commitments of the hidden indices, ascending.
void HiddenPoints(const DisclosureToken& token, std::vector<Point>& a,
                  std::vector<Point>& statements) {
  for (const auto& [i, proof] : token.hidden_proofs) {
    a.push_back(proof.commitment);
    statements.push_back(token.hidden_commitments.at(i));
  }
}

}  // namespace

bool PartitionIsValid(const DisclosureToken& token) {
  size_t n = token.attribute_count;
  if (n == 0 || n > kMaxAttributes) return false;
  if (token.disclosed.size() + token.hidden_commitments.size() != n) {
    return false;
  }
  if (token.hidden_proofs.size() != token.hidden_commitments.size()) {
    return false;
  }
  if (!token.hidden_commitments.contains(0)) return false;
  for (const auto& [i, m] : token.disclosed) {
    if (i >= n || token.hidden_commitments.contains(i)) return false;
  }
  for (const auto& [i, p] : token.hidden_commitments) {
    if (i >= n) return false;
    auto proof = token.hidden_proofs.find(i);
    if (proof == token.hidden_proofs.end() || !(proof->second.statement == p)) {
      return false;
    }
  }
  return true;
}

Bytes DisclosureContext(const SystemParams& params,
                        const DisclosureToken& token) {
  const Curve& curve = params.curve;
  ByteWriter w;
  w.raw(std::string_view("i2pa-disclose"));
  w.raw(token.session);
  w.raw(ParamsDigest(params));
  w.u8(static_cast<uint8_t>(MessageType::kDisclose));
  Bytes out = std::move(w).bytes();
  curve.AppendPoint(out, token.sig.r);
  curve.fq().Append(out, token.sig.s);
  curve.fq().Append(out, token.sig.h);
  ByteWriter layout;
  layout.u8(static_cast<uint8_t>(token.attribute_count));
  layout.u64(DisclosedBitmap(token));
  out.insert(out.end(), layout.bytes().begin(), layout.bytes().end());
  for (const auto& [i, m] : token.disclosed) curve.fq().Append(out, m);
  return out;
}

void ProveHidden(const SystemParams& params, DisclosureToken& token,
                 const std::map<size_t, Scalar>& witnesses, RandomSource& rng) {
  const Curve& curve = params.curve;
  std::map<size_t, ProofNonce> nonces;
  std::vector<Point> commitments;
  std::vector<Point> statements;
  for (const auto& [i, p] : token.hidden_commitments) {
    if (!witnesses.contains(i)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "no witness for hidden index " + std::to_string(i));
    }
    ProofNonce n = PkCommit(curve, rng);
    commitments.push_back(n.commitment);
    statements.push_back(p);
    nonces.emplace(i, std::move(n));
  }
  Scalar c = PkChallenge(curve, commitments, statements,
                         DisclosureContext(params, token));
  token.hidden_proofs.clear();
  for (const auto& [i, p] : token.hidden_commitments) {
    const ProofNonce& n = nonces.at(i);
    token.hidden_proofs.emplace(
        i, SchnorrTranscript{n.commitment, c,
                             PkRespond(curve.fq(), witnesses.at(i), n.nonce, c),
                             p});
  }
}

DisclosureToken PresentSelective(const SystemParams& params,
                                 const Credential& cred,
                                 const std::set<size_t>& disclose,
                                 RandomSource& rng) {
  size_t n = cred.attributes.size();
  if (n == 0 || n > kMaxAttributes) {
    throw Error(ErrorCode::kInvalidArgument, "bad attribute count");
  }
  if (disclose.contains(0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "the master secret (index 0) is never disclosed");
  }
  for (size_t i : disclose) {
    if (i >= n) {
      throw Error(ErrorCode::kInvalidArgument,
                  "index " + std::to_string(i) + " beyond the credential");
    }
  }
  const Curve& curve = params.curve;
  DisclosureToken token;
  rng.Fill(token.session);
  token.params_digest = ParamsDigest(params);
  token.sig = SignatureOf(cred);
  token.attribute_count = n;
  std::map<size_t, Scalar> witnesses;
  StepScope step("prover.hidden_commitments");
  for (size_t i = 0; i < n; ++i) {
    if (disclose.contains(i)) {
      token.disclosed.emplace(i, cred.attributes[i]);
    } else {
      token.hidden_commitments.emplace(
          i, curve.Multiply(cred.attributes[i], curve.base()));
      witnesses.emplace(i, cred.attributes[i]);
    }
  }
  ProveHidden(params, token, witnesses, rng);
  return token;
}

SplitEquation EvaluateSplitEquation(const SystemParams& params,
                                    const DisclosureToken& token) {
  if (!PartitionIsValid(token)) {
    throw Error(ErrorCode::kInvalidArgument, "malformed index partition");
  }
  const Curve& curve = params.curve;
  const ScalarField& fq = params.fq();
  const Point& r = token.sig.r;
  curve.RequireOnCurve(r, "R");
  SplitEquation eq;
  eq.h_hidden = fq.One();
  for (const auto& [i, p] : token.hidden_commitments) {
    eq.h_hidden = fq.Mul(eq.h_hidden, HashPoints(curve, p, r));
  }
  eq.h_disclosed = fq.One();
  {
    StepScope step("verifier.disclosed_commitments");
    for (const auto& [i, m] : token.disclosed) {
      Point p = curve.Multiply(m, curve.base());
      eq.h_disclosed = fq.Mul(eq.h_disclosed, HashPoints(curve, p, r));
    }
  }
  StepScope step("verifier.split_equation");
  eq.lhs = curve.Multiply(eq.h_hidden, params.issuer_public);
  Point s_p_minus_r = curve.Subtract(curve.Multiply(token.sig.s, curve.base()), r);
  eq.rhs = curve.Multiply(fq.Inverse(eq.h_disclosed), s_p_minus_r);
  return eq;
}

bool VerifyDisclosure(const SystemParams& params,
                      const DisclosureToken& token) {
  const Curve& curve = params.curve;
  if (!PartitionIsValid(token)) return false;
  if (token.params_digest != ParamsDigest(params)) return false;
  if (!curve.IsOnCurve(token.sig.r)) return false;
  for (const auto& [i, p] : token.hidden_commitments) {
    if (!curve.IsOnCurve(p)) return false;
  }
  SplitEquation eq = EvaluateSplitEquation(params, token);
  if (!(eq.lhs == eq.rhs)) return false;
  if (!(params.fq().Mul(eq.h_hidden, eq.h_disclosed) == token.sig.h)) {
    return false;
  }
  std::vector<Point> commitments;
  std::vector<Point> statements;
  HiddenPoints(token, commitments, statements);
  Scalar c = PkChallenge(curve, commitments, statements,
                         DisclosureContext(params, token));
  for (const auto& [i, proof] : token.hidden_proofs) {
    if (!(proof.challenge == c) || !PkVerify(curve, proof)) return false;
  }
  return true;
}

WireMessage EncodeDisclosure(const SystemParams& params,
                             const DisclosureToken& token) {
  if (!PartitionIsValid(token)) {
    throw Error(ErrorCode::kInvalidArgument, "malformed index partition");
  }
  const Curve& curve = params.curve;
  Bytes body(token.params_digest.begin(), token.params_digest.end());
  curve.AppendPoint(body, token.sig.r);
  curve.fq().Append(body, token.sig.s);
  curve.fq().Append(body, token.sig.h);
  ByteWriter header;
  header.u8(static_cast<uint8_t>(token.attribute_count));
  header.u8(static_cast<uint8_t>(token.disclosed.size()));
  header.u64(DisclosedBitmap(token));
  body.insert(body.end(), header.bytes().begin(), header.bytes().end());
  for (const auto& [i, m] : token.disclosed) curve.fq().Append(body, m);
  for (const auto& [i, p] : token.hidden_commitments) curve.AppendPoint(body, p);
  for (const auto& [i, proof] : token.hidden_proofs) {
    AppendTranscript(curve, body, proof);
  }
  return WireMessage{kWireVersion, MessageType::kDisclose, token.session,
                     std::move(body)};
}

DisclosureToken DecodeDisclosure(const SystemParams& params,
                                 const WireMessage& msg) {
  if (msg.type != MessageType::kDisclose) {
    throw Error(ErrorCode::kMalformed, "not a DISCLOSE message");
  }
  const Curve& curve = params.curve;
  ByteReader in(msg.body);
  DisclosureToken token;
  token.session = msg.session;
  auto digest = in.raw(token.params_digest.size());
  std::copy(digest.begin(), digest.end(), token.params_digest.begin());
  token.sig.r = curve.ReadPoint(in);
  token.sig.s = curve.fq().Read(in);
  token.sig.h = curve.fq().Read(in);
  size_t n = in.u8();
  size_t disclosed_count = in.u8();
  uint64_t bitmap = in.u64();
  if (n == 0 || n > kMaxAttributes) {
    throw Error(ErrorCode::kMalformed, "attribute count out of range");
  }
  if (n < 64 && (bitmap >> n) != 0) {
    throw Error(ErrorCode::kMalformed, "bitmap names indices beyond n");
  }
  if ((bitmap & 1) != 0) {
    throw Error(ErrorCode::kMalformed, "index 0 marked as disclosed");
  }
  if (static_cast<size_t>(__builtin_popcountll(bitmap)) != disclosed_count) {
    throw Error(ErrorCode::kMalformed, "disclosed count does not match bitmap");
  }
  token.attribute_count = n;
  for (size_t i = 0; i < n; ++i) {
    if (bitmap >> i & 1) token.disclosed.emplace(i, curve.fq().Read(in));
  }
  for (size_t i = 0; i < n; ++i) {
    if (!(bitmap >> i & 1)) token.hidden_commitments.emplace(i, curve.ReadPoint(in));
  }
  for (const auto& [i, p] : token.hidden_commitments) {
    token.hidden_proofs.emplace(i, ReadTranscript(curve, in, p));
  }
  in.ExpectEnd();
  return token;
}

}  // namespace i2pa
