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

// Edwards curves x^2 + y^2 = 1 + d x^2 y^2 over F_p in affine coordinates.
//
// With d a non-square in F_p the addition law below is complete: neither
// denominator 1 +/- d x1 x2 y1 y2 can vanish, so Add needs no special
// cases for doubling, the neutral element (0, 1) or inverses (-x, y).
// Nothing here is constant time.

#ifndef I2PA_CURVE_HPP_
#define I2PA_CURVE_HPP_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "i2pa/field.hpp"

namespace i2pa {

struct Point {
  FieldElement x;
  FieldElement y;

  friend bool operator==(const Point& a, const Point& b) {
    return a.x == b.x && a.y == b.y;
  }
};

struct CurveParams {
  std::string name;
  BigInt p;
  BigInt d;
  BigInt base_x;
  BigInt base_y;
  BigInt q;  // prime order of the base point
  BigInt cofactor;
};

// Curve1174: x^2 + y^2 = 1 - 1174 x^2 y^2 over p = 2^251 - 9, group order
// 4q with q = 2^249 - 11332719920821432534773113288178349711.
// Bernstein, Hamburg, Krasnova, Lange, "Elligator" (2013), Section 5.
CurveParams Curve1174Params();

// x^2 + y^2 = 1 + 2 x^2 y^2 over F_1051 with 1052 = 4 * 263 points. Found by
// exhaustive search; the same numbers are frozen in
// data/curves/toy1051.txt.
CurveParams ToyCurveParams();

// Text fixture: lines "p=<dec>", "d=<dec>", "Px=<dec>", "Py=<dec>",
// "q=<dec>", "cofactor=<dec>", plus an optional "name=".
std::string FormatCurveParams(const CurveParams& params);
CurveParams ParseCurveParams(std::string_view text);

struct CurveOptions {
  // Check that every input to Add/Double/Multiply is on the curve.
  bool validate_inputs = false;
};

// Largest field size EnumeratePoints and DiscreteLog will accept.
inline constexpr long kEnumerationLimit = 10000;

class Curve {
 public:
  // Throws kInvalidArgument unless p and q are prime, d is a non-square
  // outside {0, 1}, the base point is on the curve and q * base = (0, 1).
  explicit Curve(CurveParams params, CurveOptions options = {});

  const CurveParams& params() const { return params_; }
  const std::string& name() const { return params_.name; }
  const CoordinateField& fp() const { return fp_; }
  const ScalarField& fq() const { return fq_; }
  const FieldElement& d() const { return d_; }
  const Point& base() const { return base_; }
  const BigInt& order() const { return params_.q; }

  Point Neutral() const { return Point{fp_.Zero(), fp_.One()}; }
  Point Negate(const Point& a) const { return Point{fp_.Neg(a.x), a.y}; }

  bool IsOnCurve(const Point& a) const;
  // Throws kOffCurve.
  void RequireOnCurve(const Point& a, std::string_view what) const;

  // Counted as one point addition.
  Point Add(const Point& a, const Point& b) const;
  // a + (-b); counted as one point addition.
  Point Subtract(const Point& a, const Point& b) const;
  // Dedicated doubling formula; counted as one point doubling.
  Point Double(const Point& a) const;
  // Double-and-add; counted as one scalar multiplication.
  Point Multiply(const Scalar& k, const Point& a) const;
  // Same, for integers outside [0, q) such as the group order itself.
  Point MultiplyInteger(const BigInt& k, const Point& a) const;

  // Every affine point, in lexicographic (x, y) order. Refuses p above
  // kEnumerationLimit.
  std::vector<Point> EnumeratePoints() const;
  // Smallest k >= 0 with k * base == target, by walking the multiples of
  // base. Throws kNotFound when target is not in <base>.
  Scalar DiscreteLog(const Point& target, const Point& base) const;

  size_t point_width() const { return 2 * fp_.width(); }
  void AppendPoint(Bytes& out, const Point& a) const;
  Bytes EncodePoint(const Point& a) const;
  // Rejects out-of-range coordinates and off-curve points (kMalformed).
  Point ReadPoint(ByteReader& in) const;
  Point MakePoint(const BigInt& x, const BigInt& y) const;

 private:
  Point AddUncounted(const Point& a, const Point& b) const;
  Point DoubleUncounted(const Point& a) const;
  Point MultiplyUncounted(const BigInt& k, const Point& a) const;

  CurveParams params_;
  CurveOptions options_;
  CoordinateField fp_;
  ScalarField fq_;
  FieldElement d_;
  Point base_;
};

}  // namespace i2pa

#endif  // I2PA_CURVE_HPP_
