// Copyright 2026 The spinbrach authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <stdexcept>

#include "spinbrach/half_int.hpp"
#include "spinbrach/spin_algebra.hpp"

using spinbrach::HalfInt;

TEST_CASE("half-integers parse from fractions, decimals and integers") {
  CHECK(HalfInt::parse("2").twice() == 4);
  CHECK(HalfInt::parse("1/2").twice() == 1);
  CHECK(HalfInt::parse("3/2").twice() == 3);
  CHECK(HalfInt::parse("-1/2").twice() == -1);
  CHECK(HalfInt::parse("0.5").twice() == 1);
  CHECK(HalfInt::parse("1.5").twice() == 3);
  CHECK(HalfInt::parse("-0.5").twice() == -1);
  CHECK(HalfInt::parse("4/2").twice() == 4);
  CHECK(HalfInt::parse("0").twice() == 0);
}

TEST_CASE("non-half-integers are rejected") {
  CHECK_THROWS_AS(HalfInt::parse("0.3"), std::invalid_argument);
  CHECK_THROWS_AS(HalfInt::parse("1/3"), std::invalid_argument);
  CHECK_THROWS_AS(HalfInt::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(HalfInt::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(HalfInt::parse("abc"), std::invalid_argument);
  CHECK_THROWS_AS(HalfInt::parse("1.25"), std::invalid_argument);
  CHECK_THROWS_AS(HalfInt::from_double(0.25), std::invalid_argument);
}

TEST_CASE("value and parity accessors") {
  CHECK(HalfInt::from_twice(3).value() == 1.5);
  CHECK(HalfInt(2).is_integer());
  CHECK(!HalfInt::from_twice(1).is_integer());
  CHECK((-HalfInt::from_twice(3)).twice() == -3);
  CHECK(HalfInt::from_twice(3).str() == "3/2");
  CHECK(HalfInt(2).str() == "2");
  CHECK(HalfInt::from_twice(-1).str() == "-1/2");
}

TEST_CASE("projection validation enforces range and parity") {
  using spinbrach::validate_projection;
  using spinbrach::validate_spin;

  CHECK_NOTHROW(validate_projection(HalfInt(1), HalfInt(-1)));
  CHECK_NOTHROW(validate_projection(HalfInt::from_twice(3), HalfInt::from_twice(-1)));
  // |m| > s
  CHECK_THROWS_AS(validate_projection(HalfInt(1), HalfInt(2)), std::invalid_argument);
  // parity mismatch: integer s with half-odd m
  CHECK_THROWS_AS(validate_projection(HalfInt(1), HalfInt::from_twice(1)),
                  std::invalid_argument);
  CHECK_THROWS_AS(validate_spin(HalfInt(-1)), std::invalid_argument);
  CHECK_THROWS_AS(validate_spin(HalfInt(51)), std::invalid_argument);
  CHECK_NOTHROW(validate_spin(HalfInt(50)));
}
