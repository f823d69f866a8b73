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

#include "i2pa/protocol.hpp"

#include <errno.h>
#include <fcntl.h>
#include <sys/stat.h>
#include <unistd.h>

#include <chrono>
#include <condition_variable>
#include <cstring>
#include <deque>
#include <filesystem>
#include <mutex>
#include <thread>

namespace i2pa {
namespace {

constexpr std::string_view kTranscriptMagic = "I2PT";
constexpr uint8_t kTranscriptVersion = 1;

template <typename F>
auto AtStep(const char* step, F&& f) {
  try {
    return f();
  } catch (const ProtocolAbort&) {
    throw;
  } catch (const Error& e) {
    throw ProtocolAbort(e.code(), step, e.what());
  }
}

void Expect(const WireMessage& msg, MessageType type, const SessionId& session) {
  if (msg.type != type) {
    throw Error(ErrorCode::kProtocol,
                "expected " + std::string(MessageTypeName(type)) + ", got " +
                    std::string(MessageTypeName(msg.type)));
  }
  if (msg.session != session) {
    throw Error(ErrorCode::kProtocol, "session id mismatch");
  }
}

Bytes ScalarBody(const ScalarField& fq, const Scalar& v) {
  Bytes out;
  fq.Append(out, v);
  return out;
}

Scalar ReadScalarBody(const ScalarField& fq, const Bytes& body) {
  ByteReader in(body);
  Scalar v = fq.Read(in);
  in.ExpectEnd();
  return v;
}

// --- in-process channel ---------------------------------------------------

struct ChannelState {
  std::mutex mu;
  std::condition_variable cv;
  std::deque<WireMessage> queues[2];
  bool closed = false;
};

class ChannelEnd final : public Transport {
 public:
  ChannelEnd(std::shared_ptr<ChannelState> state, int side)
      : state_(std::move(state)), side_(side) {}
  ~ChannelEnd() override { Close(); }

  void Send(const WireMessage& msg) override {
    std::lock_guard<std::mutex> lock(state_->mu);
    if (state_->closed) throw Error(ErrorCode::kIo, "channel closed");
    state_->queues[1 - side_].push_back(msg);
    state_->cv.notify_all();
  }

  WireMessage Receive() override {
    std::unique_lock<std::mutex> lock(state_->mu);
    auto& queue = state_->queues[side_];
    state_->cv.wait(lock, [&] { return !queue.empty() || state_->closed; });
    if (queue.empty()) throw Error(ErrorCode::kIo, "channel closed by peer");
    WireMessage msg = std::move(queue.front());
    queue.pop_front();
    return msg;
  }

  void Close() override {
    std::lock_guard<std::mutex> lock(state_->mu);
    state_->closed = true;
    state_->cv.notify_all();
  }

 private:
  std::shared_ptr<ChannelState> state_;
  int side_;
};

// --- fd helpers -----------------------------------------------------------

void WriteAll(int fd, std::span<const uint8_t> data) {
  while (!data.empty()) {
    ssize_t n = ::write(fd, data.data(), data.size());
    if (n < 0 && errno == EINTR) continue;
    if (n <= 0) {
      throw Error(ErrorCode::kIo, std::string("write: ") + std::strerror(errno));
    }
    data = data.subspan(static_cast<size_t>(n));
  }
}

void ReadAll(int fd, std::span<uint8_t> out) {
  while (!out.empty()) {
    ssize_t n = ::read(fd, out.data(), out.size());
    if (n < 0 && errno == EINTR) continue;
    if (n < 0) {
      throw Error(ErrorCode::kIo, std::string("read: ") + std::strerror(errno));
    }
    if (n == 0) throw Error(ErrorCode::kIo, "stream closed by peer");
    out = out.subspan(static_cast<size_t>(n));
  }
}

int OpenOrThrow(const std::string& path, int flags) {
  int fd;
  do {
    fd = ::open(path.c_str(), flags);
  } while (fd < 0 && errno == EINTR);
  if (fd < 0) {
    throw Error(ErrorCode::kIo, "open " + path + ": " + std::strerror(errno));
  }
  return fd;
}

void MakeFifo(const std::string& path) {
  if (::mkfifo(path.c_str(), 0600) != 0 && errno != EEXIST) {
    throw Error(ErrorCode::kIo, "mkfifo " + path + ": " + std::strerror(errno));
  }
}

}  // namespace

Direction Opposite(Direction d) {
  return d == Direction::kIssuerToUser ? Direction::kUserToIssuer
                                       : Direction::kIssuerToUser;
}

// --- transcript -----------------------------------------------------------

Bytes Transcript::Encode() const {
  ByteWriter w;
  w.raw(kTranscriptMagic);
  w.u8(kTranscriptVersion);
  w.u32(static_cast<uint32_t>(entries.size()));
  for (const TranscriptEntry& e : entries) {
    Bytes wire = EncodeWire(e.message);
    w.u8(static_cast<uint8_t>(e.direction));
    w.u32(static_cast<uint32_t>(wire.size()));
    w.raw(wire);
  }
  return std::move(w).bytes();
}

Transcript Transcript::Decode(std::span<const uint8_t> bytes) {
  ByteReader in(bytes);
  auto magic = in.raw(kTranscriptMagic.size());
  if (!std::equal(magic.begin(), magic.end(), kTranscriptMagic.begin())) {
    throw Error(ErrorCode::kMalformed, "not a transcript file");
  }
  if (in.u8() != kTranscriptVersion) {
    throw Error(ErrorCode::kMalformed, "unsupported transcript version");
  }
  uint32_t count = in.u32();
  Transcript t;
  for (uint32_t i = 0; i < count; ++i) {
    uint8_t dir = in.u8();
    if (dir > 1) throw Error(ErrorCode::kMalformed, "bad transcript direction");
    uint32_t length = in.u32();
    if (length > kWireHeaderSize + kMaxBodyLength) {
      throw Error(ErrorCode::kMalformed, "transcript entry too long");
    }
    t.entries.push_back(
        {static_cast<Direction>(dir), DecodeWire(in.raw(length))});
  }
  in.ExpectEnd();
  return t;
}

// --- transports -----------------------------------------------------------

std::pair<std::unique_ptr<Transport>, std::unique_ptr<Transport>>
MakeChannelPair() {
  auto state = std::make_shared<ChannelState>();
  return {std::make_unique<ChannelEnd>(state, 0),
          std::make_unique<ChannelEnd>(state, 1)};
}

StreamTransport::StreamTransport(int read_fd, int write_fd)
    : read_fd_(read_fd), write_fd_(write_fd) {}

StreamTransport::~StreamTransport() { Close(); }

void StreamTransport::Send(const WireMessage& msg) {
  if (write_fd_ < 0) throw Error(ErrorCode::kIo, "stream closed");
  WriteAll(write_fd_, EncodeWire(msg));
}

WireMessage StreamTransport::Receive() {
  if (read_fd_ < 0) throw Error(ErrorCode::kIo, "stream closed");
  Bytes frame(kWireHeaderSize);
  ReadAll(read_fd_, frame);
  WireHeader header = DecodeWireHeader(frame);
  frame.resize(kWireHeaderSize + header.body_length);
  ReadAll(read_fd_, std::span(frame).subspan(kWireHeaderSize));
  return DecodeWire(frame);
}

void StreamTransport::Close() {
  if (read_fd_ >= 0) ::close(read_fd_);
  if (write_fd_ >= 0 && write_fd_ != read_fd_) ::close(write_fd_);
  read_fd_ = write_fd_ = -1;
}

std::unique_ptr<Transport> ListenFifo(const std::string& dir) {
  std::string i2u = dir + "/i2u";
  std::string u2i = dir + "/u2i";
  MakeFifo(i2u);
  MakeFifo(u2i);
  int write_fd = OpenOrThrow(i2u, O_WRONLY);
  int read_fd = OpenOrThrow(u2i, O_RDONLY);
  return std::make_unique<StreamTransport>(read_fd, write_fd);
}

std::unique_ptr<Transport> ConnectFifo(const std::string& dir, int timeout_ms) {
  namespace fs = std::filesystem;
  std::string i2u = dir + "/i2u";
  std::string u2i = dir + "/u2i";
  auto deadline =
      std::chrono::steady_clock::now() + std::chrono::milliseconds(timeout_ms);
  while (!(fs::exists(i2u) && fs::exists(u2i))) {
    if (std::chrono::steady_clock::now() > deadline) {
      throw Error(ErrorCode::kIo, "no issuer listening in " + dir);
    }
    std::this_thread::sleep_for(std::chrono::milliseconds(20));
  }
  int read_fd = OpenOrThrow(i2u, O_RDONLY);
  int write_fd = OpenOrThrow(u2i, O_WRONLY);
  return std::make_unique<StreamTransport>(read_fd, write_fd);
}

void RecordingTransport::Send(const WireMessage& msg) {
  transcript_.entries.push_back({outgoing_, msg});
  inner_.Send(msg);
}

WireMessage RecordingTransport::Receive() {
  WireMessage msg = inner_.Receive();
  transcript_.entries.push_back({Opposite(outgoing_), msg});
  return msg;
}

void ReplayTransport::Send(const WireMessage& msg) {
  if (pos_ >= transcript_.entries.size()) {
    throw Error(ErrorCode::kProtocol, "replay: message beyond the recording");
  }
  const TranscriptEntry& e = transcript_.entries[pos_];
  if (e.direction != outgoing_ || !(e.message == msg)) {
    throw Error(ErrorCode::kProtocol,
                "replay diverged at entry " + std::to_string(pos_));
  }
  ++pos_;
}

WireMessage ReplayTransport::Receive() {
  if (pos_ >= transcript_.entries.size()) {
    throw Error(ErrorCode::kIo, "replay: recording exhausted");
  }
  const TranscriptEntry& e = transcript_.entries[pos_];
  if (e.direction == outgoing_) {
    throw Error(ErrorCode::kProtocol,
                "replay: expected to send at entry " + std::to_string(pos_));
  }
  ++pos_;
  return e.message;
}

void MutatingTransport::Send(const WireMessage& msg) {
  WireMessage copy = msg;
  mutate_(copy);
  inner_.Send(copy);
}

// --- parties --------------------------------------------------------------

std::vector<IssuerTraceEntry> RunIssuer(const SystemParams& params,
                                        const IssuerKey& key,
                                        Transport& transport,
                                        RandomSource& rng,
                                        IssuanceOptions options) {
  const Curve& curve = params.curve;
  IssuerSession session = AtStep("issuer.commit", [&] {
    return IssuerSession::Start(params, key, rng);
  });
  const SessionId sid = session.session();
  AtStep("issuer.send_iss1", [&] {
    transport.Send(WireMessage{kWireVersion, MessageType::kIss1, sid,
                               curve.EncodePoint(session.r_bar())});
  });
  BlindRequest request = AtStep("issuer.receive_iss2", [&] {
    WireMessage msg = transport.Receive();
    Expect(msg, MessageType::kIss2, sid);
    return DecodeBlindRequest(curve, msg.body, options.interactive);
  });
  Scalar s_bar;
  if (options.interactive) {
    AtStep("issuer.challenge", [&] {
      Scalar c = session.Challenge(request, rng);
      transport.Send(WireMessage{kWireVersion, MessageType::kChal, sid,
                                 ScalarBody(params.fq(), c)});
    });
    s_bar = AtStep("issuer.sign", [&] {
      WireMessage msg = transport.Receive();
      Expect(msg, MessageType::kChal, sid);
      return session.SignAfterChallenge(ReadScalarBody(params.fq(), msg.body));
    });
  } else {
    s_bar = AtStep("issuer.sign", [&] { return session.Sign(request); });
  }
  AtStep("issuer.send_iss3", [&] {
    transport.Send(WireMessage{kWireVersion, MessageType::kIss3, sid,
                               ScalarBody(params.fq(), s_bar)});
  });
  return session.trace();
}

Credential RunUser(const SystemParams& params, std::vector<Scalar> attributes,
                   Transport& transport, RandomSource& rng,
                   IssuanceOptions options) {
  const Curve& curve = params.curve;
  auto [sid, r_bar] = AtStep("user.receive_iss1", [&] {
    WireMessage msg = transport.Receive();
    if (msg.type != MessageType::kIss1) {
      throw Error(ErrorCode::kProtocol, "expected ISS1");
    }
    ByteReader in(msg.body);
    Point p = curve.ReadPoint(in);
    in.ExpectEnd();
    return std::pair{msg.session, p};
  });
  auto [user, request] = AtStep("user.blind", [&] {
    return UserSession::Blind(params, sid, r_bar, std::move(attributes), rng,
                              options);
  });
  AtStep("user.send_iss2", [&] {
    transport.Send(WireMessage{kWireVersion, MessageType::kIss2, sid,
                               EncodeBlindRequest(curve, request)});
  });
  if (options.interactive) {
    AtStep("user.respond", [&] {
      WireMessage msg = transport.Receive();
      Expect(msg, MessageType::kChal, sid);
      Scalar r = user.Respond(ReadScalarBody(params.fq(), msg.body));
      transport.Send(WireMessage{kWireVersion, MessageType::kChal, sid,
                                 ScalarBody(params.fq(), r)});
    });
  }
  Scalar s_bar = AtStep("user.receive_iss3", [&] {
    WireMessage msg = transport.Receive();
    Expect(msg, MessageType::kIss3, sid);
    return ReadScalarBody(params.fq(), msg.body);
  });
  return AtStep("user.unblind", [&] { return user.Unblind(s_bar); });
}

IssuanceRun RunIssuance(
    const SystemParams& params, const IssuerKey& key,
    std::vector<Scalar> attributes, RandomSource& issuer_rng,
    RandomSource& user_rng, IssuanceOptions options,
    std::function<std::unique_ptr<Transport>(Transport&)> issuer_wrap) {
  auto [issuer_end, user_end] = MakeChannelPair();
  IssuanceRun run;
  std::exception_ptr issuer_error;
  std::thread issuer([&, &issuer_end = issuer_end] {
    try {
      std::unique_ptr<Transport> wrapped;
      Transport* base = issuer_end.get();
      if (issuer_wrap) {
        wrapped = issuer_wrap(*base);
        base = wrapped.get();
      }
      RecordingTransport rec(*base, run.issuer_transcript,
                             Direction::kIssuerToUser);
      run.issuer_trace = RunIssuer(params, key, rec, issuer_rng, options);
    } catch (...) {
      issuer_error = std::current_exception();
      issuer_end->Close();
    }
  });
  std::exception_ptr user_error;
  bool user_saw_close = false;
  try {
    RecordingTransport rec(*user_end, run.user_transcript,
                           Direction::kUserToIssuer);
    run.credential = RunUser(params, std::move(attributes), rec, user_rng,
                             options);
  } catch (const Error& e) {
    user_error = std::current_exception();
    user_saw_close = e.code() == ErrorCode::kIo;
    user_end->Close();
  } catch (...) {
    user_error = std::current_exception();
    user_end->Close();
  }
  issuer.join();
  // When the issuer aborted first the user only sees a closed channel;
  // report the issuer's failure, which names the real step.
  if (issuer_error && (!user_error || user_saw_close)) {
    std::rethrow_exception(issuer_error);
  }
  if (user_error) std::rethrow_exception(user_error);
  return run;
}

Credential ReplayUser(const SystemParams& params,
                      std::vector<Scalar> attributes,
                      const Transcript& transcript, RandomSource& rng,
                      IssuanceOptions options) {
  ReplayTransport replay(transcript, Direction::kUserToIssuer);
  Credential cred = RunUser(params, std::move(attributes), replay, rng, options);
  if (!replay.finished()) {
    throw Error(ErrorCode::kProtocol, "replay ended before the recording");
  }
  return cred;
}

void ReplayIssuer(const SystemParams& params, const IssuerKey& key,
                  const Transcript& transcript, RandomSource& rng,
                  IssuanceOptions options) {
  ReplayTransport replay(transcript, Direction::kIssuerToUser);
  RunIssuer(params, key, replay, rng, options);
  if (!replay.finished()) {
    throw Error(ErrorCode::kProtocol, "replay ended before the recording");
  }
}

}  // namespace i2pa
