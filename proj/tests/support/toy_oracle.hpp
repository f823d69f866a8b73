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

// Reference Edwards arithmetic on small curves with plain int64 math.
// Shares no code with the library; used to cross-check it.

#ifndef I2PA_TESTS_TOY_ORACLE_HPP_
#define I2PA_TESTS_TOY_ORACLE_HPP_

#include <cstdint>
#include <vector>

#include "i2pa/curve.hpp"

namespace toy_oracle {

struct Pt {
  int64_t x;
  int64_t y;
  friend bool operator==(const Pt&, const Pt&) = default;
};

inline int64_t Mod(int64_t a, int64_t m) { return ((a % m) + m) % m; }

inline int64_t PowMod(int64_t b, int64_t e, int64_t m) {
  int64_t r = 1;
  b = Mod(b, m);
  while (e > 0) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

struct Curve {
  int64_t p;
  int64_t d;

  int64_t Inv(int64_t a) const { return PowMod(a, p - 2, p); }

  bool On(Pt a) const {
    int64_t x2 = a.x * a.x % p;
    int64_t y2 = a.y * a.y % p;
    return Mod(x2 + y2, p) == Mod(1 + d * (x2 * y2 % p), p);
  }

  Pt Add(Pt a, Pt b) const {
    int64_t t = d * (a.x * b.x % p) % p * (a.y * b.y % p) % p;
    int64_t x = Mod(a.x * b.y + b.x * a.y, p) * Inv(Mod(1 + t, p)) % p;
    int64_t y = Mod(a.y * b.y - a.x * b.x, p) * Inv(Mod(1 - t, p)) % p;
    return {x, y};
  }

  Pt Neg(Pt a) const { return {Mod(-a.x, p), a.y}; }

  // k-fold repeated addition, no doubling shortcut.
  Pt Repeat(int64_t k, Pt a) const {
    Pt r{0, 1};
    for (int64_t i = 0; i < k; ++i) r = Add(r, a);
    return r;
  }

  std::vector<Pt> Enumerate() const {
    std::vector<Pt> out;
    for (int64_t x = 0; x < p; ++x) {
      for (int64_t y = 0; y < p; ++y) {
        if (On({x, y})) out.push_back({x, y});
      }
    }
    return out;
  }

  int64_t Order(Pt a) const {
    Pt r = a;
    int64_t k = 1;
    while (!(r == Pt{0, 1})) {
      r = Add(r, a);
      ++k;
    }
    return k;
  }
};

inline constexpr Curve kToy{1051, 2};
inline constexpr Curve kTiny{13, 2};
inline constexpr Pt kToyBase{378, 76};
inline constexpr int64_t kToyOrder = 263;

inline Pt From(const i2pa::Point& a) {
  return {static_cast<int64_t>(a.x.value().get_si()),
          static_cast<int64_t>(a.y.value().get_si())};
}

inline i2pa::Point To(const i2pa::Curve& curve, Pt a) {
  return curve.MakePoint(i2pa::BigInt(static_cast<long>(a.x)),
                         i2pa::BigInt(static_cast<long>(a.y)));
}

}  // namespace toy_oracle

#endif  // I2PA_TESTS_TOY_ORACLE_HPP_
