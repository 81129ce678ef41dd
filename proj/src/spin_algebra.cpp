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

#include "spinbrach/spin_algebra.hpp"

#include <cmath>
#include <stdexcept>

namespace spinbrach {

void validate_spin(HalfInt s) {
  if (s.twice() < 0) {
    throw std::invalid_argument("spin must be non-negative, got s = " + s.str());
  }
  if (s.twice() > kMaxTwiceSpin) {
    throw std::invalid_argument("spin too large for dense matrices, got s = " + s.str());
  }
}

void validate_projection(HalfInt s, HalfInt m) {
  validate_spin(s);
  if (std::abs(m.twice()) > s.twice() || ((m.twice() - s.twice()) % 2) != 0) {
    throw std::invalid_argument("projection m = " + m.str() + " invalid for s = " + s.str());
  }
}

std::vector<HalfInt> descending_projections(HalfInt s) {
  validate_spin(s);
  std::vector<HalfInt> out;
  out.reserve(dimension(s));
  for (int tm = s.twice(); tm >= -s.twice(); tm -= 2) {
    out.push_back(HalfInt::from_twice(tm));
  }
  return out;
}

int basis_index(HalfInt s, HalfInt m) {
  validate_projection(s, m);
  return (s.twice() - m.twice()) / 2;
}

SpinOperators spin_operators(HalfInt s) {
  validate_spin(s);
  const int n = dimension(s);
  const double sv = s.value();

  // Raising operator in the descending-m basis: <m+1|S+|m> = sqrt(s(s+1) - m(m+1)).
  OperatorMatrix raise = OperatorMatrix::Zero(n, n);
  for (int col = 1; col < n; ++col) {
    const double m = sv - col;
    raise(col - 1, col) = std::sqrt(sv * (sv + 1.0) - m * (m + 1.0));
  }
  const OperatorMatrix lower = raise.adjoint();

  SpinOperators ops;
  ops.s = s;
  ops.sx = 0.5 * (raise + lower);
  ops.sy = Complex(0.0, -0.5) * (raise - lower);
  ops.sz = OperatorMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    ops.sz(i, i) = HalfInt::from_twice(s.twice() - 2 * i).value();
  }
  return ops;
}

StateVector basis_eigenstate(HalfInt s, HalfInt m) {
  StateVector e = StateVector::Zero(dimension(s));
  e(basis_index(s, m)) = 1.0;
  return e;
}

OperatorMatrix projection_operator(HalfInt s, const Eigen::Vector3d& axis) {
  if (std::abs(axis.norm() - 1.0) > 1e-12) {
    throw std::invalid_argument("projection axis must be a unit vector");
  }
  const SpinOperators ops = spin_operators(s);
  return axis.x() * ops.sx + axis.y() * ops.sy + axis.z() * ops.sz;
}

Eigen::Vector3d unit_vector(const Direction& dir) {
  return {std::sin(dir.theta) * std::cos(dir.phi),
          std::sin(dir.theta) * std::sin(dir.phi),
          std::cos(dir.theta)};
}

}  // namespace spinbrach
