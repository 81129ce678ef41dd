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

#ifndef SPINBRACH_ROTOR_HPP
#define SPINBRACH_ROTOR_HPP

#include <complex>
#include <span>

#include "spinbrach/half_int.hpp"
#include "spinbrach/spin_algebra.hpp"
#include "spinbrach/types.hpp"

namespace spinbrach {

/// Matrix exponential exp(scale * A) for a generator A with known, pairwise
/// distinct half-integer spectrum, built by Lagrange interpolation over the
/// eigenvalues:
///
///   exp(scale*A) = sum_m [ prod_{k != m} (A - l_k) / (l_m - l_k) ] e^{l_m scale}
///
/// The denominators are formed from exact doubled integers, so the projector
/// weights carry no cancellation error. With scale = -i*chi and Hermitian A
/// the result is unitary.
///
/// Throws std::invalid_argument if the eigenvalue list has repeats or does
/// not match the matrix dimension.
OperatorMatrix spectral_exponential(const OperatorMatrix& generator,
                                    std::span<const HalfInt> eigenvalues,
                                    Complex scale);

/// exp(scale * A)|v> by the same Lagrange sum, applied factor by factor to
/// the vector. One matrix-vector product per factor, so state-level work
/// stays cheap at large dimensions.
StateVector spectral_exponential_apply(const OperatorMatrix& generator,
                                       std::span<const HalfInt> eigenvalues,
                                       Complex scale, const StateVector& vector);

/// Rotation unitary exp(-i*chi*S.n) about the unit axis n.
OperatorMatrix rotation_operator(HalfInt s, const Eigen::Vector3d& axis, double chi);

/// |psi_m(theta, phi)> = exp(-i*phi*S_z) exp(-i*theta*S_y) |m>, an eigenstate
/// of S.n(theta, phi) with eigenvalue m. The (theta, phi) family sweeps out
/// the rotational manifold of |m>.
StateVector rotate_eigenstate(HalfInt s, HalfInt m, double theta, double phi);

}  // namespace spinbrach

#endif  // SPINBRACH_ROTOR_HPP
