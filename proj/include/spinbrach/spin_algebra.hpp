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

#ifndef SPINBRACH_SPIN_ALGEBRA_HPP
#define SPINBRACH_SPIN_ALGEBRA_HPP

#include <vector>

#include "spinbrach/half_int.hpp"
#include "spinbrach/types.hpp"

namespace spinbrach {

/// Dense matrices fit comfortably up to this spin (dimension 101).
inline constexpr int kMaxTwiceSpin = 100;

/// Matrix dimension 2s+1 of the spin-s representation.
inline int dimension(HalfInt s) { return s.twice() + 1; }

/// Throws std::invalid_argument unless 0 <= s <= 50.
void validate_spin(HalfInt s);

/// Throws std::invalid_argument unless |m| <= s and m has the parity of s.
void validate_projection(HalfInt s, HalfInt m);

/// Cartesian components of the spin-s operator in the descending-m S_z
/// eigenbasis (hbar = 1).
struct SpinOperators {
  HalfInt s;
  OperatorMatrix sx, sy, sz;
};

/// Builds sx, sy, sz from the ladder operators. sz = diag(s, s-1, ..., -s).
SpinOperators spin_operators(HalfInt s);

/// Eigenvalues of S_z (equivalently of any S.n) in basis order: s, s-1, ..., -s.
std::vector<HalfInt> descending_projections(HalfInt s);

/// Row index of projection m in the descending-m ordering.
int basis_index(HalfInt s, HalfInt m);

/// Unit vector with a single 1 at the slot of eigenvalue m.
StateVector basis_eigenstate(HalfInt s, HalfInt m);

/// S.n for a unit 3-vector n. Hermitian with spectrum {-s, ..., s}.
OperatorMatrix projection_operator(HalfInt s, const Eigen::Vector3d& axis);

/// Unit vector for spherical angles (theta, phi).
Eigen::Vector3d unit_vector(const Direction& dir);

}  // namespace spinbrach

#endif  // SPINBRACH_SPIN_ALGEBRA_HPP
