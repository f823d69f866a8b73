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

// Session orchestration for blind issuance.
//
// Message flow, one session per connection:
//
//   issuer --ISS1{R_bar}-->  user
//   issuer <--ISS2{h_bar, commitments, proof}--  user
//   issuer --CHAL{c}-->  user           interactive proof only
//   issuer <--CHAL{r}--  user           interactive proof only
//   issuer --ISS3{s_bar}-->  user
//
// Every message after ISS1 must carry the session id the issuer chose.
// Failures surface as ProtocolAbort naming the step that failed.

#ifndef I2PA_PROTOCOL_HPP_
#define I2PA_PROTOCOL_HPP_

#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "i2pa/issuance.hpp"

namespace i2pa {

enum class Direction : uint8_t { kIssuerToUser = 0, kUserToIssuer = 1 };

Direction Opposite(Direction d);

struct TranscriptEntry {
  Direction direction;
  WireMessage message;

  friend bool operator==(const TranscriptEntry&,
                         const TranscriptEntry&) = default;
};

// File layout: "I2PT" || version (u8) || count (u32) || entries, each
// direction (u8) || length (u32) || framed wire message.
struct Transcript {
  std::vector<TranscriptEntry> entries;

  Bytes Encode() const;
  static Transcript Decode(std::span<const uint8_t> bytes);

  friend bool operator==(const Transcript&, const Transcript&) = default;
};

// Blocking, ordered message channel. Receive throws kIo once the peer has
// closed and nothing is left to read.
class Transport {
 public:
  virtual ~Transport() = default;
  virtual void Send(const WireMessage& msg) = 0;
  virtual WireMessage Receive() = 0;
  virtual void Close() {}
};

// Two connected in-process endpoints, safe to drive from two threads.
// Closing or destroying either end closes both directions.
std::pair<std::unique_ptr<Transport>, std::unique_ptr<Transport>>
MakeChannelPair();

// Framed messages over a pair of file descriptors (pipes or FIFOs).
class StreamTransport final : public Transport {
 public:
  // Takes ownership of both descriptors.
  StreamTransport(int read_fd, int write_fd);
  ~StreamTransport() override;
  StreamTransport(const StreamTransport&) = delete;
  StreamTransport& operator=(const StreamTransport&) = delete;

  void Send(const WireMessage& msg) override;
  WireMessage Receive() override;
  void Close() override;

 private:
  int read_fd_;
  int write_fd_;
};

// Opens the FIFO pair "i2u" and "u2i" inside `dir`. The issuer side
// creates them if missing; the user side waits up to `timeout_ms` for them
// to appear. Both sides open i2u first so the blocking opens pair up.
std::unique_ptr<Transport> ListenFifo(const std::string& dir);
std::unique_ptr<Transport> ConnectFifo(const std::string& dir,
                                       int timeout_ms = 10000);

// Appends every message passing through `inner` to `transcript`.
class RecordingTransport final : public Transport {
 public:
  RecordingTransport(Transport& inner, Transcript& transcript,
                     Direction outgoing)
      : inner_(inner), transcript_(transcript), outgoing_(outgoing) {}

  void Send(const WireMessage& msg) override;
  WireMessage Receive() override;
  void Close() override { inner_.Close(); }

 private:
  Transport& inner_;
  Transcript& transcript_;
  Direction outgoing_;
};

// Plays one party's peer from a recorded transcript. Incoming messages are
// served from the recording; outgoing ones must match it byte for byte
// (kProtocol on divergence).
class ReplayTransport final : public Transport {
 public:
  ReplayTransport(const Transcript& transcript, Direction outgoing)
      : transcript_(transcript), outgoing_(outgoing) {}

  void Send(const WireMessage& msg) override;
  WireMessage Receive() override;
  bool finished() const { return pos_ == transcript_.entries.size(); }

 private:
  const Transcript& transcript_;
  Direction outgoing_;
  size_t pos_ = 0;
};

// Rewrites outgoing messages before forwarding them. For fault injection.
class MutatingTransport final : public Transport {
 public:
  MutatingTransport(Transport& inner, std::function<void(WireMessage&)> mutate)
      : inner_(inner), mutate_(std::move(mutate)) {}

  void Send(const WireMessage& msg) override;
  WireMessage Receive() override { return inner_.Receive(); }
  void Close() override { inner_.Close(); }

 private:
  Transport& inner_;
  std::function<void(WireMessage&)> mutate_;
};

// Runs the issuer side of one session. Returns the issuer's trace.
std::vector<IssuerTraceEntry> RunIssuer(const SystemParams& params,
                                        const IssuerKey& key,
                                        Transport& transport,
                                        RandomSource& rng,
                                        IssuanceOptions options = {});

// Runs the user side of one session and returns the unblinded credential.
Credential RunUser(const SystemParams& params, std::vector<Scalar> attributes,
                   Transport& transport, RandomSource& rng,
                   IssuanceOptions options = {});

struct IssuanceRun {
  Credential credential;
  Transcript user_transcript;
  Transcript issuer_transcript;
  std::vector<IssuerTraceEntry> issuer_trace;
};

// Both parties over an in-process channel, the issuer on its own thread.
// `issuer_wrap`, when set, wraps the issuer's transport (fault injection).
IssuanceRun RunIssuance(
    const SystemParams& params, const IssuerKey& key,
    std::vector<Scalar> attributes, RandomSource& issuer_rng,
    RandomSource& user_rng, IssuanceOptions options = {},
    std::function<std::unique_ptr<Transport>(Transport&)> issuer_wrap = {});

// Re-runs one side against a recorded transcript. The party's randomness
// must reproduce the recorded run (e.g. ReplayRandom over the bytes a
// RecordingRandom captured).
Credential ReplayUser(const SystemParams& params,
                      std::vector<Scalar> attributes,
                      const Transcript& transcript, RandomSource& rng,
                      IssuanceOptions options = {});
void ReplayIssuer(const SystemParams& params, const IssuerKey& key,
                  const Transcript& transcript, RandomSource& rng,
                  IssuanceOptions options = {});

}  // namespace i2pa

#endif  // I2PA_PROTOCOL_HPP_
