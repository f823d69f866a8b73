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

#include "i2pa/harness.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace i2pa {
namespace {

const WireMessage& FindMessage(const Transcript& t, MessageType type) {
  for (const TranscriptEntry& e : t.entries) {
    if (e.message.type == type) return e.message;
  }
  throw Error(ErrorCode::kNotFound,
              "transcript has no " + std::string(MessageTypeName(type)));
}

bool SameProtocolOps(const OpTally& a, const OpTally& b) {
  return a.scalar_mults == b.scalar_mults && a.point_adds == b.point_adds &&
         a.point_doubles == b.point_doubles;
}

struct RunCounts {
  OpTally core;
  OpTally proof;
  std::map<std::string, OpTally> steps;

  // Internal double-and-add steps depend on the scalars and are ignored.
  bool operator==(const RunCounts& o) const {
    return SameProtocolOps(core, o.core) && SameProtocolOps(proof, o.proof);
  }
};

RunCounts Collect(const OpCounter& counter) {
  return RunCounts{counter.CoreTally(), counter.ProofTally(), counter.by_step()};
}

RunCounts CountIssuance(const SystemParams& params, const IssuerKey& key,
                        const std::vector<Scalar>& attributes,
                        RandomSource& rng, Credential& out) {
  OpCounter counter;
  {
    CountingScope scope(counter);
    IssuerSession issuer = IssuerSession::Start(params, key, rng);
    auto [user, request] = UserSession::Blind(params, issuer.session(),
                                              issuer.r_bar(), attributes, rng);
    Scalar s_bar = issuer.Sign(request);
    out = user.Unblind(s_bar);
  }
  return Collect(counter);
}

RunCounts CountVerification(const SystemParams& params,
                            const Credential& cred, RandomSource& rng) {
  PresentationToken token = Present(params, cred, rng);
  OpCounter counter;
  bool ok;
  {
    CountingScope scope(counter);
    ok = VerifyPresentation(params, token);
  }
  if (!ok) throw Error(ErrorCode::kProtocol, "bench presentation rejected");
  return Collect(counter);
}

OpCountReport MakeReport(BenchProtocol protocol, size_t n,
                         const RunCounts& counts) {
  OpCountReport r;
  r.protocol = protocol;
  r.n = n;
  r.measured_ms = counts.core.scalar_mults;
  r.measured_ap = counts.core.point_adds;
  r.pk_ms = counts.proof.scalar_mults;
  r.pk_ap = counts.proof.point_adds;
  if (protocol == BenchProtocol::kIssuance) {
    r.paper_ms = PaperIssuanceMs(n);
    r.paper_ap = kPaperIssuanceAp;
  } else {
    r.paper_ms = kPaperVerificationMs;
    r.paper_ap = kPaperVerificationAp;
  }
  r.breakdown = counts.steps;
  return r;
}

}  // namespace

// --- blindness ------------------------------------------------------------

BlindPairing PairViewWithOutput(const SystemParams& params,
                                const IssuerView& view,
                                const UserOutput& output) {
  const Curve& curve = params.curve;
  const ScalarField& fq = params.fq();
  if (view.h_bar.IsZero() || output.h.IsZero()) {
    throw Error(ErrorCode::kInvalidArgument, "zero hash value");
  }
  if (!SignatureEquationHolds(params, {view.r_bar, view.s_bar, view.h_bar})) {
    throw Error(ErrorCode::kInvalidArgument,
                "issuer view fails s_bar P = h_bar P_pub + R_bar");
  }
  if (!SignatureEquationHolds(params, {output.r, output.s, output.h})) {
    throw Error(ErrorCode::kInvalidArgument,
                "user output fails s P = h P_pub + R");
  }
  BlindPairing pairing{view, output, {}, {}, false};
  pairing.derived_alpha = fq.Mul(output.h, fq.Inverse(view.h_bar));
  pairing.derived_beta =
      fq.Sub(output.s, fq.Mul(pairing.derived_alpha, view.s_bar));
  Point expected =
      curve.Add(curve.Multiply(pairing.derived_alpha, view.r_bar),
                curve.Multiply(pairing.derived_beta, curve.base()));
  pairing.consistent = expected == output.r;
  return pairing;
}

bool BlindnessCrosscheck(const SystemParams& params, const IssuerView& view,
                         const UserOutput& output) {
  return PairViewWithOutput(params, view, output).consistent;
}

IssuerView IssuerViewOf(const SystemParams& params, const IssuanceRun& run) {
  const Curve& curve = params.curve;
  IssuerView view;
  {
    ByteReader in(FindMessage(run.issuer_transcript, MessageType::kIss1).body);
    view.r_bar = curve.ReadPoint(in);
  }
  {
    ByteReader in(FindMessage(run.issuer_transcript, MessageType::kIss2).body);
    view.h_bar = params.fq().Read(in);
  }
  {
    ByteReader in(FindMessage(run.issuer_transcript, MessageType::kIss3).body);
    view.s_bar = params.fq().Read(in);
  }
  return view;
}

UserOutput UserOutputOf(const Credential& cred) {
  return UserOutput{cred.r, cred.s, cred.h};
}

// --- unforgeability -------------------------------------------------------

SimulatedSignature SimulateIssue(const SystemParams& params, const Scalar& h,
                                 RandomSource& rng) {
  return SimulateIssueWith(params, h, params.fq().Random(rng));
}

SimulatedSignature SimulateIssueWith(const SystemParams& params,
                                     const Scalar& h, const Scalar& s) {
  const Curve& curve = params.curve;
  Point r = curve.Subtract(curve.Multiply(s, curve.base()),
                           curve.Multiply(h, params.issuer_public));
  return SimulatedSignature{r, s, h};
}

Scalar HashingOracle::Query(const Bytes& input, RandomSource& rng) {
  auto it = table_.find(input);
  if (it != table_.end()) return it->second;
  Scalar h = fq_.RandomNonZero(rng);
  table_.emplace(input, h);
  return h;
}

IssuingOracle::Answer IssuingOracle::Query(const Scalar& h, RandomSource& rng) {
  bool known = std::any_of(hashes_.table().begin(), hashes_.table().end(),
                           [&](const auto& kv) { return kv.second == h; });
  if (!known) {
    ++aborts_;
    return Answer{true, {}};
  }
  ++answered_;
  return Answer{false, SimulateIssue(params_, h, rng)};
}

SchnorrTranscript ForgeMasterProof(const Curve& curve, const Point& statement,
                                   std::span<const uint8_t> context,
                                   RandomSource& rng) {
  (void)context;  // unknown before A is fixed; that is the point
  const ScalarField& fq = curve.fq();
  Scalar r = fq.Random(rng);
  Scalar guess = fq.RandomNonZero(rng);
  Point a = curve.Subtract(curve.Multiply(r, curve.base()),
                           curve.Multiply(guess, statement));
  return SchnorrTranscript{a, guess, r, statement};
}

// --- op counts ------------------------------------------------------------

std::string_view BenchProtocolName(BenchProtocol p) {
  return p == BenchProtocol::kIssuance ? "issuance" : "verification";
}

std::vector<OpCountReport> OpCountBench(const SystemParams& params,
                                        const IssuerKey& key, size_t n,
                                        size_t repeat, RandomSource& rng) {
  if (n == 0 || n > kMaxAttributes) {
    throw Error(ErrorCode::kInvalidArgument, "bench needs 1..64 attributes");
  }
  repeat = std::max<size_t>(repeat, 1);
  std::vector<Scalar> attributes;
  for (size_t i = 0; i < n; ++i) {
    attributes.push_back(params.fq().RandomNonZero(rng));
  }
  RunCounts issuance;
  RunCounts verification;
  for (size_t k = 0; k < repeat; ++k) {
    Credential cred;
    RunCounts i = CountIssuance(params, key, attributes, rng, cred);
    RunCounts v = CountVerification(params, cred, rng);
    if (k == 0) {
      issuance = i;
      verification = v;
    } else if (!(i == issuance) || !(v == verification)) {
      throw Error(ErrorCode::kProtocol, "op counts differ across repetitions");
    }
  }
  return {MakeReport(BenchProtocol::kIssuance, n, issuance),
          MakeReport(BenchProtocol::kVerification, n, verification)};
}

std::string FormatBenchTable(const std::vector<OpCountReport>& reports) {
  const std::vector<std::string> header = {
      "protocol", "n", "measured_Ms", "paper_Ms", "measured_Ap",
      "paper_Ap", "pk_Ms", "pk_Ap"};
  std::vector<std::vector<std::string>> rows = {header};
  for (const OpCountReport& r : reports) {
    rows.push_back({std::string(BenchProtocolName(r.protocol)),
                    std::to_string(r.n), std::to_string(r.measured_ms),
                    std::to_string(r.paper_ms), std::to_string(r.measured_ap),
                    std::to_string(r.paper_ap), std::to_string(r.pk_ms),
                    std::to_string(r.pk_ap)});
  }
  std::vector<size_t> widths(header.size(), 0);
  for (const auto& row : rows) {
    for (size_t c = 0; c < row.size(); ++c) {
      widths[c] = std::max(widths[c], row[c].size());
    }
  }
  std::ostringstream out;
  for (const auto& row : rows) {
    for (size_t c = 0; c < row.size(); ++c) {
      if (c == 0) {
        out << std::left << std::setw(static_cast<int>(widths[c])) << row[c];
      } else {
        out << "  " << std::right << std::setw(static_cast<int>(widths[c]))
            << row[c];
      }
    }
    out << '\n';
  }
  return out.str();
}

std::string FormatBreakdown(const OpCountReport& report) {
  std::ostringstream out;
  out << BenchProtocolName(report.protocol) << " n=" << report.n << '\n';
  size_t width = 4;
  for (const auto& [step, tally] : report.breakdown) {
    width = std::max(width, step.size());
  }
  for (const auto& [step, tally] : report.breakdown) {
    if (tally.scalar_mults == 0 && tally.point_adds == 0 &&
        tally.point_doubles == 0) {
      continue;
    }
    out << "  " << std::left << std::setw(static_cast<int>(width)) << step
        << "  M_s=" << tally.scalar_mults << "  A_p=" << tally.point_adds;
    if (tally.point_doubles != 0) out << "  D_p=" << tally.point_doubles;
    out << '\n';
  }
  return out.str();
}

}  // namespace i2pa
