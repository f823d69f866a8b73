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

// Prime-field arithmetic. Two distinct element types share one
// implementation: FieldElement lives in F_p (curve coordinates, d) and
// Scalar lives in F_q (keys, nonces, hashes, attributes). Elements are plain
// canonical residues; the modulus is held by the PrimeField that operates on
// them, so mixing the two fields is a compile error.

#ifndef I2PA_FIELD_HPP_
#define I2PA_FIELD_HPP_

#include <string>
#include <utility>

#include "i2pa/bytes.hpp"
#include "i2pa/error.hpp"
#include "i2pa/random.hpp"

namespace i2pa {

template <typename Tag>
class Residue {
 public:
  Residue() = default;
  explicit Residue(BigInt value) : value_(std::move(value)) {}
  explicit Residue(long value) : value_(value) {}

  const BigInt& value() const { return value_; }
  bool IsZero() const { return value_ == 0; }
  std::string ToString() const { return value_.get_str(); }

  friend bool operator==(const Residue& a, const Residue& b) {
    return a.value_ == b.value_;
  }
  friend bool operator<(const Residue& a, const Residue& b) {
    return a.value_ < b.value_;
  }

 private:
  BigInt value_;
};

struct CoordinateTag {};
struct ExponentTag {};

using FieldElement = Residue<CoordinateTag>;
using Scalar = Residue<ExponentTag>;

template <typename Element>
class PrimeField {
 public:
  explicit PrimeField(BigInt modulus)
      : modulus_(std::move(modulus)), width_(ByteWidthFor(modulus_)) {
    if (modulus_ < 2) {
      throw Error(ErrorCode::kInvalidArgument, "modulus must be at least 2");
    }
  }

  const BigInt& modulus() const { return modulus_; }
  // Fixed encoding width in bytes for elements of this field.
  size_t width() const { return width_; }

  // Reduces any integer (including negatives) into [0, modulus).
  Element From(const BigInt& v) const {
    BigInt r;
    mpz_mod(r.get_mpz_t(), v.get_mpz_t(), modulus_.get_mpz_t());
    return Element(std::move(r));
  }
  Element From(long v) const { return From(BigInt(v)); }
  // Accepts only already-canonical values.
  Element Canonical(const BigInt& v) const {
    if (v < 0 || v >= modulus_) {
      throw Error(ErrorCode::kInvalidArgument,
                  "value " + v.get_str() + " out of range");
    }
    return Element(v);
  }

  Element Zero() const { return Element(0L); }
  Element One() const { return Element(1L); }

  Element Add(const Element& a, const Element& b) const {
    BigInt r = a.value() + b.value();
    if (r >= modulus_) r -= modulus_;
    return Element(std::move(r));
  }
  Element Sub(const Element& a, const Element& b) const {
    BigInt r = a.value() - b.value();
    if (r < 0) r += modulus_;
    return Element(std::move(r));
  }
  Element Neg(const Element& a) const {
    if (a.IsZero()) return a;
    return Element(BigInt(modulus_ - a.value()));
  }
  Element Mul(const Element& a, const Element& b) const {
    BigInt r = a.value() * b.value();
    mpz_mod(r.get_mpz_t(), r.get_mpz_t(), modulus_.get_mpz_t());
    return Element(std::move(r));
  }
  Element Square(const Element& a) const { return Mul(a, a); }

  Element Pow(const Element& a, const BigInt& e) const {
    BigInt r;
    mpz_powm(r.get_mpz_t(), a.value().get_mpz_t(), e.get_mpz_t(),
             modulus_.get_mpz_t());
    return Element(std::move(r));
  }

  // Multiplicative inverse by the extended Euclidean algorithm.
  // Throws kInvalidArgument on zero.
  Element Inverse(const Element& a) const {
    BigInt r;
    if (a.IsZero() ||
        mpz_invert(r.get_mpz_t(), a.value().get_mpz_t(),
                   modulus_.get_mpz_t()) == 0) {
      throw Error(ErrorCode::kInvalidArgument, "inverse of zero");
    }
    return Element(std::move(r));
  }

  // Inverse as a^(m-2); only meaningful for prime moduli.
  Element InverseByExponent(const Element& a) const {
    if (a.IsZero()) {
      throw Error(ErrorCode::kInvalidArgument, "inverse of zero");
    }
    return Pow(a, modulus_ - 2);
  }

  // Euler's criterion. Zero counts as a square.
  bool IsSquare(const Element& a) const {
    if (a.IsZero()) return true;
    return Pow(a, (modulus_ - 1) / 2).value() == 1;
  }

  Element Random(RandomSource& rng) const { return Element(rng.Below(modulus_)); }
  // Uniform over [1, modulus - 1].
  Element RandomNonZero(RandomSource& rng) const {
    return Element(BigInt(rng.Below(modulus_ - 1) + 1));
  }

  void Append(Bytes& out, const Element& a) const {
    AppendFixed(out, a.value(), width_);
  }
  Element Read(ByteReader& in) const {
    BigInt v = in.fixed(width_);
    if (v >= modulus_) {
      throw Error(ErrorCode::kMalformed, "encoded residue out of range");
    }
    return Element(std::move(v));
  }

 private:
  BigInt modulus_;
  size_t width_;
};

using CoordinateField = PrimeField<FieldElement>;
using ScalarField = PrimeField<Scalar>;

bool IsProbablePrime(const BigInt& n);

}  // namespace i2pa

#endif  // I2PA_FIELD_HPP_
