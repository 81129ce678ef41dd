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

#ifndef SPINBRACH_HALF_INT_HPP
#define SPINBRACH_HALF_INT_HPP

#include <compare>
#include <string>
#include <string_view>

namespace spinbrach {

/// Exact half-integer, stored as the doubled value so that spin quantum
/// numbers and projections never accumulate floating-point drift.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  constexpr HalfInt(int whole) : twice_(2 * whole) {}  // NOLINT: implicit by design

  static constexpr HalfInt from_twice(int twice) {
    HalfInt h;
    h.twice_ = twice;
    return h;
  }

  /// Accepts only values whose double is exactly an integer (…, -1, -0.5, 0,
  /// 0.5, 1, …). Throws std::invalid_argument otherwise.
  static HalfInt from_double(double value);

  /// Parses "2", "-1", "0.5", "1.5", "3/2", "-1/2". Throws on anything else.
  static HalfInt parse(std::string_view text);

  constexpr int twice() const { return twice_; }
  constexpr double value() const { return twice_ / 2.0; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }

  constexpr HalfInt operator-() const { return from_twice(-twice_); }

  friend constexpr bool operator==(const HalfInt&, const HalfInt&) = default;
  friend constexpr auto operator<=>(const HalfInt&, const HalfInt&) = default;

  /// "2", "1/2", "-3/2" — exact textual form.
  std::string str() const;

 private:
  int twice_ = 0;
};

}  // namespace spinbrach

#endif  // SPINBRACH_HALF_INT_HPP
