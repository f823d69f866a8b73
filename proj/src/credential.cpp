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

#include "i2pa/credential.hpp"

#include <algorithm>

#include "i2pa/hashing.hpp"
#include "i2pa/keyvalue.hpp"
#include "i2pa/opcount.hpp"

namespace i2pa {

PresentationSignature SignatureOf(const Credential& cred) {
  return PresentationSignature{cred.r, cred.s, cred.h};
}

std::vector<Point> AttributeCommitments(const Curve& curve,
                                        std::span<const Scalar> attributes) {
  std::vector<Point> out;
  out.reserve(attributes.size());
  for (const Scalar& m : attributes) out.push_back(curve.Multiply(m, curve.base()));
  return out;
}

bool SignatureEquationHolds(const SystemParams& params,
                            const PresentationSignature& sig) {
  const Curve& curve = params.curve;
  if (!curve.IsOnCurve(sig.r)) return false;
  Point lhs = curve.Multiply(sig.s, curve.base());
  Point rhs = curve.Add(curve.Multiply(sig.h, params.issuer_public), sig.r);
  return lhs == rhs;
}

bool VerifySignature(const SystemParams& params,
                     const PresentationSignature& sig,
                     const SchnorrTranscript& master_proof) {
  bool equation = [&] {
    StepScope step("verifier.equation");
    return SignatureEquationHolds(params, sig);
  }();
  return equation && PkVerify(params.curve, master_proof);
}

bool CredentialIsConsistent(const SystemParams& params,
                            const Credential& cred) {
  if (cred.attributes.empty() || cred.attributes.size() > kMaxAttributes) {
    return false;
  }
  if (!SignatureEquationHolds(params, SignatureOf(cred))) return false;
  std::vector<Point> commitments =
      AttributeCommitments(params.curve, cred.attributes);
  return HashBlock(params.curve, commitments, cred.r) == cred.h;
}

PresentationSignature Randomize(const SystemParams& params,
                                const PresentationSignature& sig,
                                RandomSource& rng) {
  return RandomizeWith(params, sig, params.fq().RandomNonZero(rng));
}

PresentationSignature RandomizeWith(const SystemParams& params,
                                    const PresentationSignature& sig,
                                    const Scalar& r) {
  const Curve& curve = params.curve;
  StepScope step("prover.randomize");
  return PresentationSignature{
      curve.Add(sig.r, curve.Multiply(r, curve.base())),
      params.fq().Add(sig.s, r), sig.h};
}

Bytes PresentationContext(const SystemParams& params, const SessionId& session,
                          const PresentationSignature& sig) {
  const Curve& curve = params.curve;
  Bytes out;
  ByteWriter w;
  w.raw(std::string_view("i2pa-present"));
  w.raw(session);
  w.raw(ParamsDigest(params));
  w.u8(static_cast<uint8_t>(MessageType::kPresent));
  out = std::move(w).bytes();
  curve.AppendPoint(out, sig.r);
  curve.fq().Append(out, sig.s);
  curve.fq().Append(out, sig.h);
  return out;
}

PresentationToken Present(const SystemParams& params, const Credential& cred,
                          RandomSource& rng, bool randomize) {
  if (cred.attributes.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "credential has no attributes");
  }
  const Curve& curve = params.curve;
  PresentationToken token;
  rng.Fill(token.session);
  token.params_digest = ParamsDigest(params);
  token.sig = SignatureOf(cred);
  if (randomize) token.sig = Randomize(params, token.sig, rng);
  Point master_commitment = [&] {
    StepScope step("prover.master_commitment");
    return curve.Multiply(cred.attributes[0], curve.base());
  }();
  Bytes context = PresentationContext(params, token.session, token.sig);
  token.master_proof = PkFsProve(curve, cred.attributes[0], master_commitment,
                                 context, rng);
  return token;
}

bool VerifyPresentation(const SystemParams& params,
                        const PresentationToken& token) {
  if (token.params_digest != ParamsDigest(params)) return false;
  Bytes context = PresentationContext(params, token.session, token.sig);
  bool equation = [&] {
    StepScope step("verifier.equation");
    return SignatureEquationHolds(params, token.sig);
  }();
  return equation && PkFsVerify(params.curve, token.master_proof, context);
}

WireMessage EncodePresentation(const SystemParams& params,
                               const PresentationToken& token) {
  const Curve& curve = params.curve;
  Bytes body(token.params_digest.begin(), token.params_digest.end());
  curve.AppendPoint(body, token.sig.r);
  curve.fq().Append(body, token.sig.s);
  curve.fq().Append(body, token.sig.h);
  curve.AppendPoint(body, token.master_proof.statement);
  AppendTranscript(curve, body, token.master_proof);
  return WireMessage{kWireVersion, MessageType::kPresent, token.session,
                     std::move(body)};
}

PresentationToken DecodePresentation(const SystemParams& params,
                                     const WireMessage& msg) {
  if (msg.type != MessageType::kPresent) {
    throw Error(ErrorCode::kMalformed, "not a PRESENT message");
  }
  const Curve& curve = params.curve;
  ByteReader in(msg.body);
  PresentationToken token;
  token.session = msg.session;
  auto digest = in.raw(token.params_digest.size());
  std::copy(digest.begin(), digest.end(), token.params_digest.begin());
  token.sig.r = curve.ReadPoint(in);
  token.sig.s = curve.fq().Read(in);
  token.sig.h = curve.fq().Read(in);
  Point statement = curve.ReadPoint(in);
  token.master_proof = ReadTranscript(curve, in, statement);
  in.ExpectEnd();
  return token;
}

std::string FormatCredential(const SystemParams& params,
                             const Credential& cred) {
  KeyValueText kv;
  kv.Set("curve", params.curve.name());
  Digest digest = ParamsDigest(params);
  kv.Set("digest", ToHex(digest));
  kv.Set("n", std::to_string(cred.attributes.size()));
  for (size_t i = 0; i < cred.attributes.size(); ++i) {
    kv.SetInt("m" + std::to_string(i), cred.attributes[i].value());
    if (i < cred.labels.size()) {
      kv.Set("label" + std::to_string(i), cred.labels[i]);
    }
  }
  kv.SetInt("Rx", cred.r.x.value());
  kv.SetInt("Ry", cred.r.y.value());
  kv.SetInt("s", cred.s.value());
  kv.SetInt("h", cred.h.value());
  return kv.Format();
}

Credential ParseCredential(std::string_view text, const SystemParams& params) {
  KeyValueText kv = KeyValueText::Parse(text);
  Digest digest = ParamsDigest(params);
  if (kv.Get("digest") != ToHex(digest)) {
    throw Error(ErrorCode::kMalformed,
                "credential was issued under different params");
  }
  const ScalarField& fq = params.fq();
  auto scalar = [&](const std::string& key) {
    BigInt v = kv.GetInt(key);
    if (v >= fq.modulus()) {
      throw Error(ErrorCode::kMalformed, "'" + key + "' out of range");
    }
    return Scalar(v);
  };
  BigInt n = kv.GetInt("n");
  if (n < 1 || n > kMaxAttributes) {
    throw Error(ErrorCode::kMalformed, "attribute count out of range");
  }
  Credential cred;
  for (unsigned long i = 0; i < n.get_ui(); ++i) {
    cred.attributes.push_back(scalar("m" + std::to_string(i)));
    std::string label_key = "label" + std::to_string(i);
    if (kv.Has(label_key)) {
      cred.labels.resize(i + 1);
      cred.labels[i] = kv.Get(label_key);
    }
  }
  BigInt rx = kv.GetInt("Rx");
  BigInt ry = kv.GetInt("Ry");
  if (rx >= params.curve.fp().modulus() || ry >= params.curve.fp().modulus()) {
    throw Error(ErrorCode::kMalformed, "R coordinates out of range");
  }
  cred.r = Point{FieldElement(rx), FieldElement(ry)};
  if (!params.curve.IsOnCurve(cred.r)) {
    throw Error(ErrorCode::kMalformed, "R is not on the curve");
  }
  cred.s = scalar("s");
  cred.h = scalar("h");
  return cred;
}

}  // namespace i2pa
