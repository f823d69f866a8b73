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

// Executable checks of the scheme's security arguments and cost claims.
//
// Blindness. Any issuer view (R_bar, h_bar, s_bar) and any valid output
// (R, s, h) are linked by alpha = h / h_bar and beta = s - alpha s_bar,
// and these always satisfy R = alpha R_bar + beta P. So the issuer's view
// carries no information about which output it produced. The factors are
// derived from public values only; the issuer secret is not needed.
//
// Unforgeability. The reduction answers signing queries without the secret
// key: pick s, set R = s P - h P_pub. Such triples pass the signature
// equation but cannot come with a proof of the master secret. The advantage
// bounds of the reduction (epsilon, epsilon', t, t', q_i, q_h) are analysis
// only and are not computed here.
//
// Cost. Curve operations are counted per protocol step and compared with
// the published formulas: issuance (n + 6) M_s + 2 A_p, verification
// 2 M_s + 1 A_p. Proof-of-knowledge costs are reported in their own columns.

#ifndef I2PA_HARNESS_HPP_
#define I2PA_HARNESS_HPP_

#include <map>
#include <string>
#include <vector>

#include "i2pa/opcount.hpp"
#include "i2pa/protocol.hpp"

namespace i2pa {

struct IssuerView {
  Point r_bar;
  Scalar h_bar;
  Scalar s_bar;
};

struct UserOutput {
  Point r;
  Scalar s;
  Scalar h;
};

struct BlindPairing {
  IssuerView issuer_view;
  UserOutput user_output;
  Scalar derived_alpha;  // h / h_bar
  Scalar derived_beta;   // s - alpha s_bar
  bool consistent = false;  // R == alpha R_bar + beta P
};

// Throws kInvalidArgument unless s_bar P = h_bar P_pub + R_bar,
// s P = h P_pub + R, and h_bar, h are non-zero.
BlindPairing PairViewWithOutput(const SystemParams& params,
                                const IssuerView& view,
                                const UserOutput& output);
bool BlindnessCrosscheck(const SystemParams& params, const IssuerView& view,
                         const UserOutput& output);

// Extracts the view the issuer saw and the output the user kept from one
// run. The view is parsed back from the issuer's side of the transcript.
IssuerView IssuerViewOf(const SystemParams& params, const IssuanceRun& run);
UserOutput UserOutputOf(const Credential& cred);

// Signing-oracle answer built from public values only.
struct SimulatedSignature {
  Point r;
  Scalar s;
  Scalar h;
};
SimulatedSignature SimulateIssue(const SystemParams& params, const Scalar& h,
                                 RandomSource& rng);
SimulatedSignature SimulateIssueWith(const SystemParams& params,
                                     const Scalar& h, const Scalar& s);

// Random-oracle bookkeeping for the forgery game: each distinct query
// gets one uniformly random answer, recorded for later lookups.
class HashingOracle {
 public:
  explicit HashingOracle(const ScalarField& fq) : fq_(fq) {}
  Scalar Query(const Bytes& input, RandomSource& rng);
  size_t queries() const { return table_.size(); }
  const std::map<Bytes, Scalar>& table() const { return table_; }

 private:
  const ScalarField& fq_;
  std::map<Bytes, Scalar> table_;
};

// Signing oracle of the reduction. Answers with SimulateIssue for queries
// whose h comes from the hashing oracle; a query naming an h that the
// hashing oracle never produced is the reduction's failure event and is
// reported as an abort.
class IssuingOracle {
 public:
  IssuingOracle(const SystemParams& params, const HashingOracle& hashes)
      : params_(params), hashes_(hashes) {}
  struct Answer {
    bool aborted = false;
    SimulatedSignature sig;
  };
  Answer Query(const Scalar& h, RandomSource& rng);
  size_t answered() const { return answered_; }
  size_t aborts() const { return aborts_; }

 private:
  const SystemParams& params_;
  const HashingOracle& hashes_;
  size_t answered_ = 0;
  size_t aborts_ = 0;
};

// Best effort by a prover that lacks the witness for `statement`: picks
// the response and a guessed challenge first, then A = r P - c' Y. The
// result passes Fiat-Shamir verification only if c' happens to equal the
// hash, which occurs with probability about 1/q.
SchnorrTranscript ForgeMasterProof(const Curve& curve, const Point& statement,
                                   std::span<const uint8_t> context,
                                   RandomSource& rng);

enum class BenchProtocol { kIssuance, kVerification };

struct OpCountReport {
  BenchProtocol protocol;
  size_t n = 0;  // attribute count
  uint64_t measured_ms = 0;
  uint64_t measured_ap = 0;
  uint64_t paper_ms = 0;
  uint64_t paper_ap = 0;
  uint64_t pk_ms = 0;
  uint64_t pk_ap = 0;
  std::map<std::string, OpTally> breakdown;  // per step, one run
};

inline uint64_t PaperIssuanceMs(size_t n) { return n + 6; }
inline constexpr uint64_t kPaperIssuanceAp = 2;
inline constexpr uint64_t kPaperVerificationMs = 2;
inline constexpr uint64_t kPaperVerificationAp = 1;

// Runs `repeat` issuances and presentation verifications with n
// attributes and counts one of them (counts are identical across runs).
// Throws kInvalidArgument for n = 0 or n > kMaxAttributes, and kProtocol
// if two repetitions measure differently.
std::vector<OpCountReport> OpCountBench(const SystemParams& params,
                                        const IssuerKey& key, size_t n,
                                        size_t repeat, RandomSource& rng);

// Aligned table with columns protocol, n, measured_Ms, paper_Ms,
// measured_Ap, paper_Ap, pk_Ms, pk_Ap.
std::string FormatBenchTable(const std::vector<OpCountReport>& reports);
// Per-step breakdown for one report.
std::string FormatBreakdown(const OpCountReport& report);

std::string_view BenchProtocolName(BenchProtocol p);

}  // namespace i2pa

#endif  // I2PA_HARNESS_HPP_
