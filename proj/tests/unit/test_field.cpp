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

#include <set>

#include "doctest.h"
#include "i2pa/curve.hpp"
#include "i2pa/error.hpp"
#include "i2pa/field.hpp"
#include "i2pa/random.hpp"

using namespace i2pa;

TEST_CASE("small-field arithmetic") {
  ScalarField f(BigInt(11));
  CHECK(f.Add(Scalar(7), Scalar(6)) == Scalar(2));
  CHECK(f.Sub(Scalar(3), Scalar(5)) == Scalar(9));
  CHECK(f.Neg(Scalar(0)) == Scalar(0));
  CHECK(f.Neg(Scalar(4)) == Scalar(7));
  CHECK(f.Mul(Scalar(4), Scalar(6)) == Scalar(2));
  CHECK(f.Square(Scalar(5)) == Scalar(3));
  CHECK(f.Pow(Scalar(2), BigInt(10)) == Scalar(1));
  CHECK(f.From(BigInt(-1)) == Scalar(10));
  CHECK(f.From(BigInt(23)) == Scalar(1));
  CHECK_THROWS_AS(f.Canonical(BigInt(11)), Error);
  CHECK_THROWS_AS(f.Canonical(BigInt(-1)), Error);
  CHECK_THROWS_AS(f.Inverse(Scalar(0)), Error);
}

TEST_CASE("inverse agrees with exponentiation for every toy element") {
  CoordinateField f(BigInt(1051));
  for (long a = 1; a < 1051; ++a) {
    FieldElement e(a);
    FieldElement inv = f.Inverse(e);
    REQUIRE(f.Mul(e, inv) == f.One());
    REQUIRE(inv == f.InverseByExponent(e));
  }
}

TEST_CASE("inverse agrees with exponentiation on the production field") {
  const CoordinateField f(Curve1174Params().p);
  SeededRandom rng(5);
  for (int i = 0; i < 100; ++i) {
    FieldElement e = f.RandomNonZero(rng);
    REQUIRE(f.Inverse(e) == f.InverseByExponent(e));
  }
}

TEST_CASE("euler criterion matches the set of squares") {
  CoordinateField f(BigInt(13));
  std::set<long> squares;
  for (long a = 1; a < 13; ++a) squares.insert(a * a % 13);
  for (long a = 1; a < 13; ++a) {
    CHECK(f.IsSquare(FieldElement(a)) == (squares.count(a) == 1));
  }
  CHECK_FALSE(f.IsSquare(FieldElement(2)));
}

TEST_CASE("sampling ranges") {
  ScalarField f(BigInt(3));
  SeededRandom rng(9);
  std::set<long> any, nonzero;
  for (int i = 0; i < 1000; ++i) {
    any.insert(f.Random(rng).value().get_si());
    nonzero.insert(f.RandomNonZero(rng).value().get_si());
  }
  CHECK(any == std::set<long>{0, 1, 2});
  CHECK(nonzero == std::set<long>{1, 2});
}

TEST_CASE("fixed-width serialization rejects out-of-range values") {
  ScalarField f(BigInt(263));
  CHECK(f.width() == 2);
  Bytes out;
  f.Append(out, Scalar(262));
  CHECK(out == Bytes{0x01, 0x06});
  ByteReader in(out);
  CHECK(f.Read(in) == Scalar(262));
  Bytes big = {0x01, 0x07};
  ByteReader bad(big);
  CHECK_THROWS_AS(f.Read(bad), Error);
}

TEST_CASE("primality") {
  CHECK(IsProbablePrime(BigInt(1051)));
  CHECK(IsProbablePrime(BigInt(263)));
  CHECK_FALSE(IsProbablePrime(BigInt(1052)));
  CHECK(IsProbablePrime(Curve1174Params().p));
  CHECK(IsProbablePrime(Curve1174Params().q));
}
