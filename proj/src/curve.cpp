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

#include "i2pa/curve.hpp"

#include "i2pa/keyvalue.hpp"
#include "i2pa/opcount.hpp"

namespace i2pa {

bool IsProbablePrime(const BigInt& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

CurveParams Curve1174Params() {
  CurveParams c;
  c.name = "curve1174";
  c.p = (BigInt(1) << 251) - 9;
  c.d = c.p - 1174;
  c.base_x = BigInt(
      "1582619097725911541954547006453739763381091388846394833492296309729998"
      "839514");
  c.base_y = BigInt(
      "3037538013604154504764115728651437646519513534305223422754827055689195"
      "992590");
  c.q = (BigInt(1) << 249) - BigInt("11332719920821432534773113288178349711");
  c.cofactor = 4;
  return c;
}

CurveParams ToyCurveParams() {
  CurveParams c;
  c.name = "toy1051";
  c.p = 1051;
  c.d = 2;
  c.base_x = 378;
  c.base_y = 76;
  c.q = 263;
  c.cofactor = 4;
  return c;
}

std::string FormatCurveParams(const CurveParams& params) {
  KeyValueText kv;
  kv.Set("name", params.name);
  kv.SetInt("p", params.p);
  kv.SetInt("d", params.d);
  kv.SetInt("Px", params.base_x);
  kv.SetInt("Py", params.base_y);
  kv.SetInt("q", params.q);
  kv.SetInt("cofactor", params.cofactor);
  return kv.Format();
}

CurveParams ParseCurveParams(std::string_view text) {
  KeyValueText kv = KeyValueText::Parse(text);
  CurveParams c;
  c.name = kv.Has("name") ? kv.Get("name") : "custom";
  c.p = kv.GetInt("p");
  c.d = kv.GetInt("d");
  c.base_x = kv.GetInt("Px");
  c.base_y = kv.GetInt("Py");
  c.q = kv.GetInt("q");
  c.cofactor = kv.GetInt("cofactor");
  return c;
}

Curve::Curve(CurveParams params, CurveOptions options)
    : params_(std::move(params)),
      options_(options),
      fp_(params_.p),
      fq_(params_.q) {
  auto fail = [this](const std::string& why) {
    throw Error(ErrorCode::kInvalidArgument,
                "curve '" + params_.name + "': " + why);
  };
  if (!IsProbablePrime(params_.p)) fail("p is not prime");
  if (params_.p == 2) fail("characteristic 2 is not supported");
  if (!IsProbablePrime(params_.q)) fail("q is not prime");
  if (params_.d <= 1 || params_.d >= params_.p) fail("d must lie in [2, p-1]");
  d_ = fp_.Canonical(params_.d);
  if (fp_.IsSquare(d_)) fail("d is a square; the addition law is incomplete");
  if (params_.base_x >= params_.p || params_.base_y >= params_.p) {
    fail("base point coordinates out of range");
  }
  base_ = Point{fp_.Canonical(params_.base_x), fp_.Canonical(params_.base_y)};
  if (!IsOnCurve(base_)) fail("base point is not on the curve");
  if (!(MultiplyUncounted(params_.q, base_) == Neutral())) {
    fail("q * base is not the neutral element");
  }
  if (base_ == Neutral()) fail("base point is the neutral element");
}

bool Curve::IsOnCurve(const Point& a) const {
  if (a.x.value() < 0 || a.x.value() >= params_.p || a.y.value() < 0 ||
      a.y.value() >= params_.p) {
    return false;
  }
  FieldElement x2 = fp_.Square(a.x);
  FieldElement y2 = fp_.Square(a.y);
  FieldElement lhs = fp_.Add(x2, y2);
  FieldElement rhs = fp_.Add(fp_.One(), fp_.Mul(d_, fp_.Mul(x2, y2)));
  return lhs == rhs;
}

void Curve::RequireOnCurve(const Point& a, std::string_view what) const {
  if (!IsOnCurve(a)) {
    throw Error(ErrorCode::kOffCurve,
                std::string(what) + " (" + a.x.ToString() + ", " +
                    a.y.ToString() + ") is not on " + params_.name);
  }
}

Point Curve::AddUncounted(const Point& a, const Point& b) const {
  FieldElement x1y2 = fp_.Mul(a.x, b.y);
  FieldElement x2y1 = fp_.Mul(b.x, a.y);
  FieldElement y1y2 = fp_.Mul(a.y, b.y);
  FieldElement x1x2 = fp_.Mul(a.x, b.x);
  FieldElement t = fp_.Mul(d_, fp_.Mul(x1x2, y1y2));
  FieldElement den_x = fp_.Add(fp_.One(), t);
  FieldElement den_y = fp_.Sub(fp_.One(), t);
  // One inversion serves both denominators.
  FieldElement inv = fp_.Inverse(fp_.Mul(den_x, den_y));
  return Point{fp_.Mul(fp_.Add(x1y2, x2y1), fp_.Mul(den_y, inv)),
               fp_.Mul(fp_.Sub(y1y2, x1x2), fp_.Mul(den_x, inv))};
}

Point Curve::DoubleUncounted(const Point& a) const {
  FieldElement x2 = fp_.Square(a.x);
  FieldElement y2 = fp_.Square(a.y);
  FieldElement sum = fp_.Add(x2, y2);
  FieldElement den_x = sum;
  FieldElement den_y = fp_.Sub(fp_.From(2), sum);
  FieldElement inv = fp_.Inverse(fp_.Mul(den_x, den_y));
  FieldElement two_xy = fp_.Mul(fp_.From(2), fp_.Mul(a.x, a.y));
  return Point{fp_.Mul(two_xy, fp_.Mul(den_y, inv)),
               fp_.Mul(fp_.Sub(y2, x2), fp_.Mul(den_x, inv))};
}

Point Curve::MultiplyUncounted(const BigInt& k, const Point& a) const {
  if (k < 0) {
    throw Error(ErrorCode::kInvalidArgument, "negative scalar multiplier");
  }
  Point acc = Neutral();
  if (k == 0) return acc;
  size_t bits = mpz_sizeinbase(k.get_mpz_t(), 2);
  for (size_t i = bits; i-- > 0;) {
    acc = DoubleUncounted(acc);
    RecordCurveOp(CurveOp::kInternalDouble);
    if (mpz_tstbit(k.get_mpz_t(), i)) {
      acc = AddUncounted(acc, a);
      RecordCurveOp(CurveOp::kInternalAdd);
    }
  }
  return acc;
}

Point Curve::Add(const Point& a, const Point& b) const {
  if (options_.validate_inputs) {
    RequireOnCurve(a, "addend");
    RequireOnCurve(b, "addend");
  }
  RecordCurveOp(CurveOp::kPointAdd);
  return AddUncounted(a, b);
}

Point Curve::Subtract(const Point& a, const Point& b) const {
  return Add(a, Negate(b));
}

Point Curve::Double(const Point& a) const {
  if (options_.validate_inputs) RequireOnCurve(a, "doubling input");
  RecordCurveOp(CurveOp::kPointDouble);
  return DoubleUncounted(a);
}

Point Curve::Multiply(const Scalar& k, const Point& a) const {
  return MultiplyInteger(k.value(), a);
}

Point Curve::MultiplyInteger(const BigInt& k, const Point& a) const {
  if (options_.validate_inputs) RequireOnCurve(a, "multiplicand");
  RecordCurveOp(CurveOp::kScalarMult);
  return MultiplyUncounted(k, a);
}

std::vector<Point> Curve::EnumeratePoints() const {
  if (params_.p > kEnumerationLimit) {
    throw Error(ErrorCode::kInvalidArgument,
                "refusing to enumerate a field of size " + params_.p.get_str());
  }
  long p = params_.p.get_si();
  // roots[v] lists the square roots of v mod p.
  std::vector<std::vector<long>> roots(p);
  for (long y = 0; y < p; ++y) roots[(y * y) % p].push_back(y);
  std::vector<Point> out;
  for (long x = 0; x < p; ++x) {
    // y^2 (1 - d x^2) = 1 - x^2; 1 - d x^2 != 0 because d is a non-square.
    FieldElement fx = fp_.From(x);
    FieldElement x2 = fp_.Square(fx);
    FieldElement y2 = fp_.Mul(fp_.Sub(fp_.One(), x2),
                              fp_.Inverse(fp_.Sub(fp_.One(), fp_.Mul(d_, x2))));
    for (long y : roots[y2.value().get_si()]) out.push_back({fx, fp_.From(y)});
  }
  return out;
}

Scalar Curve::DiscreteLog(const Point& target, const Point& base) const {
  if (params_.p > kEnumerationLimit) {
    throw Error(ErrorCode::kInvalidArgument,
                "brute-force discrete log is limited to small curves");
  }
  RequireOnCurve(target, "discrete-log target");
  RequireOnCurve(base, "discrete-log base");
  Point acc = Neutral();
  // Any point order divides the group order, which is at most p + 1 + 2 sqrt(p).
  long limit = 2 * params_.p.get_si() + 2;
  for (long k = 0; k < limit; ++k) {
    if (acc == target) return fq_.From(k);
    acc = AddUncounted(acc, base);
    if (acc == Neutral()) break;
  }
  throw Error(ErrorCode::kNotFound, "target is not a multiple of the base");
}

void Curve::AppendPoint(Bytes& out, const Point& a) const {
  fp_.Append(out, a.x);
  fp_.Append(out, a.y);
}

Bytes Curve::EncodePoint(const Point& a) const {
  Bytes out;
  AppendPoint(out, a);
  return out;
}

Point Curve::ReadPoint(ByteReader& in) const {
  Point a{fp_.Read(in), fp_.Read(in)};
  if (!IsOnCurve(a)) {
    throw Error(ErrorCode::kMalformed, "encoded point is not on " + params_.name);
  }
  return a;
}

Point Curve::MakePoint(const BigInt& x, const BigInt& y) const {
  Point a{fp_.Canonical(x), fp_.Canonical(y)};
  RequireOnCurve(a, "point");
  return a;
}

}  // namespace i2pa
