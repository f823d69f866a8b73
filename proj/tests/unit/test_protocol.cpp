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

#include <unistd.h>

#include <filesystem>
#include <thread>

#include "doctest.h"
#include "i2pa/error.hpp"
#include "i2pa/protocol.hpp"
#include "i2pa/random.hpp"
#include "support/fixtures.hpp"

using namespace i2pa;

namespace {

WireMessage Iss1(const SystemParams& p) {
  SessionId sid{};
  for (size_t i = 0; i < sid.size(); ++i) sid[i] = static_cast<uint8_t>(i);
  return WireMessage{kWireVersion, MessageType::kIss1, sid,
                     p.curve.EncodePoint(p.base())};
}

}  // namespace

TEST_CASE("wire framing") {
  WireMessage m = Iss1(fixtures::Toy().params);
  Bytes enc = EncodeWire(m);
  CHECK(enc.size() == kWireHeaderSize + 4);
  CHECK(enc[0] == 0x01);
  CHECK(enc[1] == 0x01);
  CHECK(enc[21] == 4);
  CHECK(DecodeWire(enc) == m);

  Bytes longer = enc;
  longer[21] = 5;
  CHECK_THROWS_AS(DecodeWire(longer), Error);
  Bytes trailing = enc;
  trailing.push_back(0);
  CHECK_THROWS_AS(DecodeWire(trailing), Error);
  Bytes v2 = enc;
  v2[0] = 0x02;
  CHECK_THROWS_AS(DecodeWire(v2), Error);
  Bytes tag = enc;
  tag[1] = 0x05;
  CHECK_THROWS_AS(DecodeWire(tag), Error);
  CHECK_THROWS_AS(DecodeWire(std::span(enc).first(10)), Error);
  Bytes huge = enc;
  huge[18] = 0xff;
  CHECK_THROWS_AS(DecodeWireHeader(std::span(huge).first(kWireHeaderSize)), Error);

  CHECK(IsKnownMessageType(0x11));
  CHECK_FALSE(IsKnownMessageType(0x12));
  CHECK(MessageTypeName(MessageType::kDisclose) == "DISCLOSE");
}

TEST_CASE("toy curve, three attributes, seed 9") {
  const SetupResult& s = fixtures::Toy();
  SeededRandom issuer_rng(9, "issuer"), user_rng(9, "user");
  IssuanceRun run = RunIssuance(s.params, s.key, {Scalar(3), Scalar(4), Scalar(5)},
                                issuer_rng, user_rng);
  CHECK(CredentialIsConsistent(s.params, run.credential));
  SeededRandom present_rng(9, "present");
  CHECK(VerifyPresentation(s.params, Present(s.params, run.credential, present_rng)));
  REQUIRE(run.user_transcript.entries.size() == 3);
  CHECK(run.user_transcript == run.issuer_transcript);
  CHECK(run.user_transcript.entries[0].message.type == MessageType::kIss1);
  CHECK(run.user_transcript.entries[1].direction == Direction::kUserToIssuer);
  CHECK(run.issuer_trace.back().label == "out s_bar");
}

TEST_CASE("interactive run exchanges CHAL both ways") {
  const SetupResult& s = fixtures::Toy();
  SeededRandom issuer_rng(10, "issuer"), user_rng(10, "user");
  IssuanceOptions opts{.strict = true, .interactive = true};
  IssuanceRun run =
      RunIssuance(s.params, s.key, {Scalar(3), Scalar(4)}, issuer_rng, user_rng, opts);
  CHECK(CredentialIsConsistent(s.params, run.credential));
  REQUIRE(run.user_transcript.entries.size() == 5);
  CHECK(run.user_transcript.entries[2].message.type == MessageType::kChal);
  CHECK(run.user_transcript.entries[2].direction == Direction::kIssuerToUser);
  CHECK(run.user_transcript.entries[3].message.type == MessageType::kChal);
  CHECK(run.user_transcript.entries[3].direction == Direction::kUserToIssuer);
}

TEST_CASE("tampered s_bar aborts at the user's unblind check") {
  const SetupResult& s = fixtures::Toy();
  SeededRandom issuer_rng(11, "issuer"), user_rng(11, "user");
  auto tamper = [&](Transport& inner) -> std::unique_ptr<Transport> {
    return std::make_unique<MutatingTransport>(inner, [&](WireMessage& m) {
      if (m.type != MessageType::kIss3) return;
      ByteReader in(m.body);
      Scalar v = s.params.fq().Read(in);
      m.body.clear();
      s.params.fq().Append(m.body, s.params.fq().Add(v, s.params.fq().One()));
    });
  };
  try {
    RunIssuance(s.params, s.key, {Scalar(3)}, issuer_rng, user_rng, {}, tamper);
    FAIL("tampered run completed");
  } catch (const ProtocolAbort& e) {
    CHECK(e.step() == "user.unblind");
    CHECK(e.code() == ErrorCode::kIssuerMisbehavior);
  }
}

TEST_CASE("issuer-side abort is reported with the issuer's step") {
  const SetupResult& s = fixtures::Toy();
  SeededRandom issuer_rng(12, "issuer"), user_rng(12, "user");
  IssuanceOptions user_opts{.strict = true, .interactive = false};
  // The issuer expects an interactive layout; the user sends a
  // non-interactive one, whose non-zero challenge the issuer refuses.
  auto [issuer_end, user_end] = MakeChannelPair();
  std::exception_ptr issuer_error;
  std::thread t([&, &ie = issuer_end] {
    try {
      RunIssuer(s.params, s.key, *ie, issuer_rng, {.strict = true, .interactive = true});
    } catch (...) {
      issuer_error = std::current_exception();
      ie->Close();
    }
  });
  CHECK_THROWS_AS(RunUser(s.params, {Scalar(3)}, *user_end, user_rng, user_opts),
                  ProtocolAbort);
  t.join();
  REQUIRE(issuer_error);
  try {
    std::rethrow_exception(issuer_error);
  } catch (const ProtocolAbort& e) {
    CHECK(e.step() == "issuer.receive_iss2");
  }
}

TEST_CASE("replay reproduces the credential byte for byte") {
  const SetupResult& s = fixtures::Toy();
  SeededRandom issuer_base(13, "issuer"), user_base(13, "user");
  RecordingRandom issuer_rng(issuer_base), user_rng(user_base);
  std::vector<Scalar> attrs = {Scalar(3), Scalar(4), Scalar(5)};
  IssuanceRun run = RunIssuance(s.params, s.key, attrs, issuer_rng, user_rng);

  ReplayRandom user_replay(user_rng.recorded());
  Credential again = ReplayUser(s.params, attrs, run.user_transcript, user_replay);
  CHECK(FormatCredential(s.params, again) == FormatCredential(s.params, run.credential));

  ReplayRandom issuer_replay(issuer_rng.recorded());
  CHECK_NOTHROW(ReplayIssuer(s.params, s.key, run.issuer_transcript, issuer_replay));

  // Different randomness diverges from the recording.
  SeededRandom other(14, "user");
  CHECK_THROWS_AS(ReplayUser(s.params, attrs, run.user_transcript, other), Error);
}

TEST_CASE("transcript file encoding") {
  const SetupResult& s = fixtures::Toy();
  SeededRandom issuer_rng(15, "issuer"), user_rng(15, "user");
  IssuanceRun run = RunIssuance(s.params, s.key, {Scalar(3)}, issuer_rng, user_rng);
  Bytes enc = run.user_transcript.Encode();
  CHECK(Transcript::Decode(enc) == run.user_transcript);
  Bytes bad = enc;
  bad[0] = 'X';
  CHECK_THROWS_AS(Transcript::Decode(bad), Error);
  CHECK_THROWS_AS(Transcript::Decode(std::span(enc).first(enc.size() - 1)), Error);
}

TEST_CASE("session ids must match") {
  const SetupResult& s = fixtures::Toy();
  SeededRandom issuer_rng(16, "issuer"), user_rng(16, "user");
  auto rewrite = [&](Transport& inner) -> std::unique_ptr<Transport> {
    return std::make_unique<MutatingTransport>(inner, [](WireMessage& m) {
      if (m.type == MessageType::kIss3) m.session[0] ^= 1;
    });
  };
  try {
    RunIssuance(s.params, s.key, {Scalar(3)}, issuer_rng, user_rng, {}, rewrite);
    FAIL("mismatched session accepted");
  } catch (const ProtocolAbort& e) {
    CHECK(e.step() == "user.receive_iss3");
  }
}

TEST_CASE("issuance over a pipe pair") {
  const SetupResult& s = fixtures::Prod();
  int a[2], b[2];
  REQUIRE(pipe(a) == 0);
  REQUIRE(pipe(b) == 0);
  StreamTransport issuer_side(b[0], a[1]);
  StreamTransport user_side(a[0], b[1]);
  SeededRandom issuer_rng(17, "issuer"), user_rng(17, "user");
  std::thread t([&] { RunIssuer(s.params, s.key, issuer_side, issuer_rng); });
  Credential cred = RunUser(s.params, {Scalar(3), Scalar(4)}, user_side, user_rng);
  t.join();
  CHECK(CredentialIsConsistent(s.params, cred));
}

TEST_CASE("issuance over named pipes") {
  namespace fs = std::filesystem;
  const SetupResult& s = fixtures::Toy();
  fs::path dir = fs::temp_directory_path() / ("i2pa-fifo-" + std::to_string(getpid()));
  fs::create_directories(dir);
  SeededRandom issuer_rng(18, "issuer"), user_rng(18, "user");
  std::thread t([&] {
    std::unique_ptr<Transport> tr = ListenFifo(dir.string());
    RunIssuer(s.params, s.key, *tr, issuer_rng);
  });
  std::unique_ptr<Transport> tr = ConnectFifo(dir.string());
  Credential cred = RunUser(s.params, {Scalar(3)}, *tr, user_rng);
  t.join();
  CHECK(CredentialIsConsistent(s.params, cred));
  fs::remove_all(dir);
}

TEST_CASE("closed channels fail fast") {
  auto [a, b] = MakeChannelPair();
  a->Close();
  CHECK_THROWS_AS(b->Receive(), Error);
  CHECK_THROWS_AS(b->Send(Iss1(fixtures::Toy().params)), Error);
}
