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

// Python bindings. Scalars cross the boundary as Python ints, tokens and
// transcripts as bytes, params/keys/credentials as their text formats.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <optional>

#include "i2pa/disclosure.hpp"
#include "i2pa/harness.hpp"
#include "i2pa/hashing.hpp"
#include "i2pa/protocol.hpp"
#include "i2pa/random.hpp"

namespace py = pybind11;
using namespace i2pa;

namespace {

std::unique_ptr<RandomSource> MakeRandom(std::optional<uint64_t> seed,
                                         std::string_view label) {
  if (seed) return std::make_unique<SeededRandom>(*seed, label);
  return std::make_unique<SystemRandom>();
}

py::int_ ToPy(const BigInt& v) {
  return py::int_(py::reinterpret_steal<py::object>(
      PyLong_FromString(v.get_str().c_str(), nullptr, 10)));
}

Scalar ToScalar(const SystemParams& params, const py::int_& v) {
  BigInt b(py::str(v).cast<std::string>());
  if (b < 0 || b >= params.fq().modulus()) {
    throw Error(ErrorCode::kInvalidArgument, "scalar out of range [0, q)");
  }
  return Scalar(b);
}

py::bytes ToBytes(const Bytes& b) {
  return py::bytes(reinterpret_cast<const char*>(b.data()), b.size());
}

Bytes FromBytes(const py::bytes& b) {
  std::string s = b;
  return Bytes(s.begin(), s.end());
}

py::list Scalars(const std::vector<Scalar>& v) {
  py::list out;
  for (const Scalar& s : v) out.append(ToPy(s.value()));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "I2PA attribute-based anonymous credentials";

  static py::exception<Error> error(m, "Error", PyExc_ValueError);
  static py::exception<ProtocolAbort> abort(m, "ProtocolAbort", error.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ProtocolAbort& e) {
      py::set_error(abort, e.what());
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });

  py::class_<SystemParams>(m, "SystemParams")
      .def_static("from_text", [](const std::string& t) { return ParseParams(t); })
      .def("to_text", &FormatParams)
      .def_property_readonly("curve", [](const SystemParams& p) { return p.curve.name(); })
      .def_property_readonly("order", [](const SystemParams& p) { return ToPy(p.fq().modulus()); })
      .def_property_readonly("digest", [](const SystemParams& p) {
        Digest d = ParamsDigest(p);
        return ToBytes(Bytes(d.begin(), d.end()));
      })
      .def_property_readonly("issuer_public", [](const SystemParams& p) {
        return py::make_tuple(ToPy(p.issuer_public.x.value()),
                              ToPy(p.issuer_public.y.value()));
      });

  py::class_<IssuerKey>(m, "IssuerKey")
      .def_static("from_text", [](const std::string& t, const SystemParams& p) {
        return ParseIssuerKey(t, p);
      })
      .def("to_text", [](const IssuerKey& k, const SystemParams& p) {
        return FormatIssuerKey(p, k);
      });

  py::class_<Credential>(m, "Credential")
      .def_static("from_text", [](const std::string& t, const SystemParams& p) {
        return ParseCredential(t, p);
      })
      .def("to_text", [](const Credential& c, const SystemParams& p) {
        return FormatCredential(p, c);
      })
      .def_property_readonly("attributes", [](const Credential& c) { return Scalars(c.attributes); })
      .def_property_readonly("signature", [](const Credential& c) {
        return py::make_tuple(py::make_tuple(ToPy(c.r.x.value()), ToPy(c.r.y.value())),
                              ToPy(c.s.value()), ToPy(c.h.value()));
      })
      .def("is_consistent", [](const Credential& c, const SystemParams& p) {
        return CredentialIsConsistent(p, c);
      });

  m.def(
      "setup",
      [](const std::string& curve, std::optional<uint64_t> seed) {
        SetupResult s = Setup(ParseCurveChoice(curve), *MakeRandom(seed, "setup"));
        return py::make_tuple(s.params, s.key);
      },
      py::arg("curve") = "toy", py::arg("seed") = py::none(),
      "Fresh system params and issuer key for curve 'toy' or 'prod'.");

  m.def(
      "attribute_to_scalar",
      [](const SystemParams& p, const std::string& label) {
        return ToPy(AttributeToScalar(p.fq(), label).value());
      },
      py::arg("params"), py::arg("label"));

  m.def(
      "issue",
      [](const SystemParams& p, const IssuerKey& key, const std::vector<py::int_>& attrs,
         std::optional<uint64_t> seed, bool interactive, bool strict) {
        std::vector<Scalar> scalars;
        for (const py::int_& a : attrs) scalars.push_back(ToScalar(p, a));
        auto issuer_rng = MakeRandom(seed, "issuer");
        auto user_rng = MakeRandom(seed, "user");
        IssuanceRun run;
        {
          py::gil_scoped_release release;
          run = RunIssuance(p, key, std::move(scalars), *issuer_rng, *user_rng,
                            {.strict = strict, .interactive = interactive});
        }
        return py::make_tuple(run.credential, ToBytes(run.user_transcript.Encode()));
      },
      py::arg("params"), py::arg("key"), py::arg("attributes"),
      py::arg("seed") = py::none(), py::arg("interactive") = false,
      py::arg("strict") = true,
      "Runs both parties; attributes[0] is the master secret. Returns "
      "(credential, transcript bytes).");

  m.def(
      "present",
      [](const SystemParams& p, const Credential& c, std::optional<uint64_t> seed) {
        auto rng = MakeRandom(seed, "present");
        return ToBytes(EncodeWire(EncodePresentation(p, Present(p, c, *rng, true))));
      },
      py::arg("params"), py::arg("credential"), py::arg("seed") = py::none(),
      "Randomized presentation token (wire bytes).");

  m.def(
      "present_selective",
      [](const SystemParams& p, const Credential& c, const std::set<size_t>& disclose,
         std::optional<uint64_t> seed) {
        auto rng = MakeRandom(seed, "present");
        return ToBytes(EncodeWire(EncodeDisclosure(p, PresentSelective(p, c, disclose, *rng))));
      },
      py::arg("params"), py::arg("credential"), py::arg("disclose"),
      py::arg("seed") = py::none(), "Selective-disclosure token (wire bytes).");

  m.def(
      "verify",
      [](const SystemParams& p, const py::bytes& token) -> py::object {
        WireMessage msg = DecodeWire(FromBytes(token));
        try {
          if (msg.type == MessageType::kPresent) {
            return py::bool_(VerifyPresentation(p, DecodePresentation(p, msg)));
          }
          if (msg.type == MessageType::kDisclose) {
            DisclosureToken t = DecodeDisclosure(p, msg);
            if (!VerifyDisclosure(p, t)) return py::bool_(false);
            py::dict disclosed;
            for (const auto& [i, v] : t.disclosed) disclosed[py::int_(i)] = ToPy(v.value());
            return disclosed;
          }
        } catch (const Error&) {
          return py::bool_(false);
        }
        throw Error(ErrorCode::kMalformed, "not a token");
      },
      py::arg("params"), py::arg("token"),
      "False on rejection. A presentation returns True when accepted, a "
      "disclosure the dict of revealed attributes. Raises Error on bytes that "
      "are not a framed token.");

  m.def(
      "bench",
      [](const std::string& curve, size_t n, size_t repeat, std::optional<uint64_t> seed) {
        SetupResult s = Setup(ParseCurveChoice(curve), *MakeRandom(seed, "setup"));
        py::list out;
        for (const OpCountReport& r :
             OpCountBench(s.params, s.key, n, repeat, *MakeRandom(seed, "bench"))) {
          py::dict row;
          row["protocol"] = std::string(BenchProtocolName(r.protocol));
          row["n"] = r.n;
          row["measured_ms"] = r.measured_ms;
          row["paper_ms"] = r.paper_ms;
          row["measured_ap"] = r.measured_ap;
          row["paper_ap"] = r.paper_ap;
          row["pk_ms"] = r.pk_ms;
          row["pk_ap"] = r.pk_ap;
          out.append(row);
        }
        return out;
      },
      py::arg("curve") = "prod", py::arg("n"), py::arg("repeat") = 1,
      py::arg("seed") = py::none(), "Operation counts for issuance and verification.");
}
