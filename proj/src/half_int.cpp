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

#include "spinbrach/half_int.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace spinbrach {

namespace {

int parse_int(std::string_view text) {
  int out = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  }
  return out;
}

}  // namespace

HalfInt HalfInt::from_double(double value) {
  const double twice = 2.0 * value;
  if (!std::isfinite(twice) || std::rint(twice) != twice ||
      std::abs(twice) > 1e6) {
    throw std::invalid_argument("value is not a half-integer: " + std::to_string(value));
  }
  return from_twice(static_cast<int>(twice));
}

HalfInt HalfInt::parse(std::string_view text) {
  if (text.empty()) {
    throw std::invalid_argument("empty half-integer");
  }
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const int num = parse_int(text.substr(0, slash));
    const int den = parse_int(text.substr(slash + 1));
    if (den == 1) return HalfInt(num);
    if (den == 2) return from_twice(num);
    throw std::invalid_argument("denominator must be 1 or 2: '" + std::string(text) + "'");
  }
  if (text.find('.') != std::string_view::npos) {
    double v = 0.0;
    try {
      std::size_t used = 0;
      v = std::stod(std::string(text), &used);
      if (used != text.size()) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      throw std::invalid_argument("not a number: '" + std::string(text) + "'");
    }
    return from_double(v);
  }
  return HalfInt(parse_int(text));
}

std::string HalfInt::str() const {
  if (twice_ % 2 == 0) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

}  // namespace spinbrach
