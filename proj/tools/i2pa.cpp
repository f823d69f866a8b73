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

// i2pa: setup, issuance, presentation and benchmarking from the shell.
//
// Exit codes: 0 accept or success, 1 reject (bad token, aborted session),
// 2 usage error or malformed input.

#include <signal.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "i2pa/disclosure.hpp"
#include "i2pa/harness.hpp"
#include "i2pa/hashing.hpp"
#include "i2pa/keyvalue.hpp"
#include "i2pa/protocol.hpp"
#include "i2pa/random.hpp"

namespace fs = std::filesystem;
using namespace i2pa;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitReject = 1;
constexpr int kExitMalformed = 2;

// Thrown for a verdict the command reports as exit 1.
struct Rejection {
  std::string reason;
};

struct Common {
  std::optional<uint64_t> seed;
  std::string params_dir;
};

std::unique_ptr<RandomSource> MakeRandom(const Common& c, std::string_view label) {
  if (c.seed) return std::make_unique<SeededRandom>(*c.seed, label);
  return std::make_unique<SystemRandom>();
}

std::string ParamsDir(const Common& c) {
  if (!c.params_dir.empty()) return c.params_dir;
  if (const char* env = std::getenv("I2PA_PARAMS_DIR"); env && *env) return env;
  throw Error(ErrorCode::kInvalidArgument,
              "no params directory (use --params or set I2PA_PARAMS_DIR)");
}

SystemParams LoadParams(const Common& c) {
  return ParseParams(ReadTextFile(ParamsDir(c) + "/params.txt"));
}

IssuerKey LoadIssuerKey(const Common& c, const SystemParams& params) {
  return ParseIssuerKey(ReadTextFile(ParamsDir(c) + "/issuer.key"), params);
}

void WritePrivate(const std::string& path, std::string_view contents) {
  WriteFile(path, contents);
  fs::permissions(path, fs::perms::owner_read | fs::perms::owner_write,
                  fs::perm_options::replace);
}

// Non-empty lines, trailing whitespace trimmed. Line 0 labels the master
// secret.
std::vector<std::string> ReadLabels(const std::string& path) {
  std::istringstream in(ReadTextFile(path));
  std::vector<std::string> labels;
  for (std::string line; std::getline(in, line);) {
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) {
      line.pop_back();
    }
    if (!line.empty()) labels.push_back(line);
  }
  if (labels.empty()) {
    throw Error(ErrorCode::kMalformed, path + ": no attribute lines");
  }
  if (labels.size() > kMaxAttributes) {
    throw Error(ErrorCode::kMalformed, path + ": more than 64 attributes");
  }
  return labels;
}

// Reads m_0 from `path`, creating the file on first use.
Scalar MasterSecret(const std::string& path, const SystemParams& params,
                    const Common& c) {
  if (fs::exists(path)) {
    KeyValueText kv = KeyValueText::Parse(ReadTextFile(path));
    if (kv.Get("curve") != params.curve.name()) {
      throw Error(ErrorCode::kMalformed, path + ": key belongs to curve " + kv.Get("curve"));
    }
    BigInt m0 = kv.GetInt("m0");
    if (m0 <= 0 || m0 >= params.fq().modulus()) {
      throw Error(ErrorCode::kMalformed, path + ": m0 out of range");
    }
    return Scalar(m0);
  }
  Scalar m0 = params.fq().RandomNonZero(*MakeRandom(c, "master"));
  KeyValueText kv;
  kv.Set("curve", params.curve.name());
  kv.SetInt("m0", m0.value());
  WritePrivate(path, kv.Format());
  std::cerr << "created master secret " << path << "\n";
  return m0;
}

struct UserInput {
  std::vector<Scalar> attributes;
  std::vector<std::string> labels;
};

UserInput LoadUserInput(const SystemParams& params, const std::string& attrs_path,
                        std::string key_path, const Common& c) {
  UserInput in;
  in.labels = ReadLabels(attrs_path);
  if (key_path.empty()) {
    key_path = (fs::path(attrs_path).parent_path() / "user.key").string();
  }
  in.attributes.push_back(MasterSecret(key_path, params, c));
  for (size_t i = 1; i < in.labels.size(); ++i) {
    in.attributes.push_back(AttributeToScalar(params.fq(), in.labels[i]));
  }
  return in;
}

Credential LoadCredential(const std::string& path, const SystemParams& params) {
  return ParseCredential(ReadTextFile(path), params);
}

std::set<size_t> ParseIndexList(const std::string& text) {
  std::set<size_t> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    if (item.empty()) continue;
    size_t pos = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != item.size()) {
      throw Error(ErrorCode::kInvalidArgument, "bad index '" + item + "'");
    }
    out.insert(v);
  }
  return out;
}

// --- subcommands ----------------------------------------------------------

struct SetupArgs {
  std::string curve = "toy";
  std::string out;
};

int RunSetup(const Common& c, const SetupArgs& a) {
  SetupResult s = Setup(ParseCurveChoice(a.curve), *MakeRandom(c, "setup"));
  fs::create_directories(a.out);
  WriteFile(a.out + "/params.txt", FormatParams(s.params));
  WritePrivate(a.out + "/issuer.key", FormatIssuerKey(s.params, s.key));
  std::cout << "curve " << s.params.curve.name() << "\n"
            << "P_pub (" << s.params.issuer_public.x.ToString() << ", "
            << s.params.issuer_public.y.ToString() << ")\n"
            << "digest " << ToHex(ParamsDigest(s.params)) << "\n";
  return kExitOk;
}

struct IssueArgs {
  std::string attrs;
  std::string out;
  std::string user_key;
  std::string transcript;
  std::string listen;
  std::string connect;
  bool interactive = false;
  bool full_commitments = false;
};

void WriteTranscript(const std::string& path, const Transcript& t) {
  if (!path.empty()) WriteFile(path, t.Encode());
}

void RequireUserArgs(const IssueArgs& a) {
  if (a.attrs.empty() || a.out.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "issue needs --attrs and --out");
  }
}

void SaveCredential(const SystemParams& params, const IssueArgs& a,
                    Credential cred, const UserInput& in) {
  cred.labels = in.labels;
  WritePrivate(a.out, FormatCredential(params, cred));
  std::cout << "credential " << a.out << " (" << cred.attributes.size()
            << " attributes)\n";
}

int RunIssue(const Common& c, const IssueArgs& a) {
  SystemParams params = LoadParams(c);
  IssuanceOptions opts{.strict = !a.full_commitments, .interactive = a.interactive};
  if (!a.listen.empty()) {
    IssuerKey key = LoadIssuerKey(c, params);
    auto rng = MakeRandom(c, "issuer");
    std::unique_ptr<Transport> fifo = ListenFifo(a.listen);
    Transcript t;
    RecordingTransport rec(*fifo, t, Direction::kIssuerToUser);
    std::vector<IssuerTraceEntry> trace = RunIssuer(params, key, rec, *rng, opts);
    fifo->Close();
    WriteTranscript(a.transcript, t);
    std::cout << "issued one credential, " << trace.size() << " trace entries\n";
    return kExitOk;
  }
  RequireUserArgs(a);
  UserInput in = LoadUserInput(params, a.attrs, a.user_key, c);
  if (!a.connect.empty()) {
    auto rng = MakeRandom(c, "user");
    std::unique_ptr<Transport> fifo = ConnectFifo(a.connect);
    Transcript t;
    RecordingTransport rec(*fifo, t, Direction::kUserToIssuer);
    Credential cred = RunUser(params, in.attributes, rec, *rng, opts);
    fifo->Close();
    WriteTranscript(a.transcript, t);
    SaveCredential(params, a, std::move(cred), in);
    return kExitOk;
  }
  IssuerKey key = LoadIssuerKey(c, params);
  auto issuer_rng = MakeRandom(c, "issuer");
  auto user_rng = MakeRandom(c, "user");
  IssuanceRun run =
      RunIssuance(params, key, in.attributes, *issuer_rng, *user_rng, opts);
  WriteTranscript(a.transcript, run.user_transcript);
  SaveCredential(params, a, std::move(run.credential), in);
  return kExitOk;
}

struct VerifyArgs {
  std::string token;
};

int RunVerify(const Common& c, const VerifyArgs& a) {
  SystemParams params = LoadParams(c);
  WireMessage msg = DecodeWire(ReadBinaryFile(a.token));
  // A well-framed body that fails to decode (off-curve point, scalar out
  // of range) is a forged token, not a usage error.
  try {
    if (msg.type == MessageType::kPresent) {
      if (!VerifyPresentation(params, DecodePresentation(params, msg))) {
        throw Rejection{"presentation does not verify"};
      }
      std::cout << "accept\n";
      return kExitOk;
    }
    if (msg.type == MessageType::kDisclose) {
      DisclosureToken token = DecodeDisclosure(params, msg);
      if (!VerifyDisclosure(params, token)) {
        throw Rejection{"disclosure does not verify"};
      }
      std::cout << "accept\n";
      for (const auto& [i, m] : token.disclosed) {
        std::cout << "m" << i << "=" << m.ToString() << "\n";
      }
      return kExitOk;
    }
  } catch (const Error& e) {
    throw Rejection{e.what()};
  }
  throw Error(ErrorCode::kMalformed,
              std::string("not a token: ") + std::string(MessageTypeName(msg.type)));
}

struct TokenArgs {
  std::string cred;
  std::string out;
  std::string disclose;
};

int RunRandomize(const Common& c, const TokenArgs& a) {
  SystemParams params = LoadParams(c);
  Credential cred = LoadCredential(a.cred, params);
  PresentationToken token = Present(params, cred, *MakeRandom(c, "present"), true);
  WriteFile(a.out, EncodeWire(EncodePresentation(params, token)));
  std::cout << "token " << a.out << "\n";
  return kExitOk;
}

int RunPresent(const Common& c, const TokenArgs& a) {
  SystemParams params = LoadParams(c);
  Credential cred = LoadCredential(a.cred, params);
  DisclosureToken token = PresentSelective(params, cred, ParseIndexList(a.disclose),
                                           *MakeRandom(c, "present"));
  WriteFile(a.out, EncodeWire(EncodeDisclosure(params, token)));
  std::cout << "token " << a.out << " (" << token.disclosed.size() << " of "
            << token.attribute_count << " disclosed)\n";
  return kExitOk;
}

struct BenchArgs {
  size_t attrs = 0;
  size_t repeat = 1;
  std::string curve = "prod";
  bool breakdown = false;
};

int RunBench(const Common& c, const BenchArgs& a) {
  SetupResult s = Setup(ParseCurveChoice(a.curve), *MakeRandom(c, "setup"));
  std::vector<OpCountReport> reports =
      OpCountBench(s.params, s.key, a.attrs, a.repeat, *MakeRandom(c, "bench"));
  std::cout << FormatBenchTable(reports);
  if (a.breakdown) {
    for (const OpCountReport& r : reports) std::cout << FormatBreakdown(r);
  }
  return kExitOk;
}

void AddCommon(CLI::App* sub, Common& c, bool params) {
  sub->add_option("--seed", c.seed, "Deterministic randomness seed");
  if (params) {
    sub->add_option("--params", c.params_dir,
                    "Params directory (default $I2PA_PARAMS_DIR)");
  }
}

}  // namespace

int main(int argc, char** argv) {
  ::signal(SIGPIPE, SIG_IGN);
  CLI::App app{"I2PA anonymous credentials"};
  app.require_subcommand(1);
  Common common;

  SetupArgs setup;
  CLI::App* setup_cmd = app.add_subcommand("setup", "Generate params and issuer key");
  AddCommon(setup_cmd, common, false);
  setup_cmd->add_option("--curve", setup.curve, "toy or prod")
      ->check(CLI::IsMember({"toy", "prod"}));
  setup_cmd->add_option("--out", setup.out, "Output directory")->required();

  IssueArgs issue;
  CLI::App* issue_cmd = app.add_subcommand("issue", "Run blind issuance");
  AddCommon(issue_cmd, common, true);
  issue_cmd->add_option("--attrs", issue.attrs, "Attribute file, one label per line");
  issue_cmd->add_option("--out", issue.out, "Credential output file");
  issue_cmd->add_option("--user-key", issue.user_key,
                        "Master secret file (default user.key beside --attrs)");
  issue_cmd->add_option("--transcript", issue.transcript, "Write the session transcript");
  auto* listen = issue_cmd->add_option("--listen", issue.listen,
                                       "Act as issuer on the FIFO pair in DIR");
  auto* connect = issue_cmd->add_option("--connect", issue.connect,
                                        "Act as user on the FIFO pair in DIR");
  listen->excludes(connect);
  issue_cmd->add_flag("--interactive", issue.interactive,
                      "Live challenge instead of Fiat-Shamir");
  issue_cmd->add_flag("--full-commitments", issue.full_commitments,
                      "Send every attribute commitment, not only P_0");

  VerifyArgs verify;
  CLI::App* verify_cmd = app.add_subcommand("verify", "Verify a token");
  AddCommon(verify_cmd, common, true);
  verify_cmd->add_option("--token", verify.token, "Token file")->required();

  TokenArgs randomize;
  CLI::App* randomize_cmd =
      app.add_subcommand("randomize", "Randomized presentation of a credential");
  AddCommon(randomize_cmd, common, true);
  randomize_cmd->add_option("--cred", randomize.cred, "Credential file")->required();
  randomize_cmd->add_option("--out", randomize.out, "Token output file")->required();

  TokenArgs present;
  CLI::App* present_cmd = app.add_subcommand("present", "Selective disclosure");
  AddCommon(present_cmd, common, true);
  present_cmd->add_option("--cred", present.cred, "Credential file")->required();
  present_cmd->add_option("--out", present.out, "Token output file")->required();
  present_cmd->add_option("--disclose", present.disclose,
                          "Comma-separated indices to reveal (0 is never allowed)")
      ->required();

  BenchArgs bench;
  CLI::App* bench_cmd = app.add_subcommand("bench", "Count curve operations");
  AddCommon(bench_cmd, common, false);
  bench_cmd->add_option("--attrs", bench.attrs, "Attribute count n")
      ->required()
      ->check(CLI::Range(1, 64));
  bench_cmd->add_option("--repeat", bench.repeat, "Repetitions")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--curve", bench.curve, "toy or prod")
      ->check(CLI::IsMember({"toy", "prod"}));
  bench_cmd->add_flag("--breakdown", bench.breakdown, "Per-step counts");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitMalformed;
  }

  try {
    if (*setup_cmd) return RunSetup(common, setup);
    if (*issue_cmd) return RunIssue(common, issue);
    if (*verify_cmd) return RunVerify(common, verify);
    if (*randomize_cmd) return RunRandomize(common, randomize);
    if (*present_cmd) return RunPresent(common, present);
    if (*bench_cmd) return RunBench(common, bench);
  } catch (const Rejection& r) {
    std::cout << "reject\n";
    std::cerr << "i2pa: " << r.reason << "\n";
    return kExitReject;
  } catch (const ProtocolAbort& e) {
    std::cerr << "i2pa: session aborted at " << e.step() << ": " << e.what() << "\n";
    return kExitReject;
  } catch (const Error& e) {
    std::cerr << "i2pa: " << ErrorCodeName(e.code()) << ": " << e.what() << "\n";
    bool reject = e.code() == ErrorCode::kProtocol ||
                  e.code() == ErrorCode::kIssuerMisbehavior;
    return reject ? kExitReject : kExitMalformed;
  } catch (const std::exception& e) {
    std::cerr << "i2pa: " << e.what() << "\n";
    return kExitMalformed;
  }
  return kExitMalformed;
}
