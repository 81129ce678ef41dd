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

#ifndef SPINBRACH_EVOLUTION_HPP
#define SPINBRACH_EVOLUTION_HPP

#include "spinbrach/half_int.hpp"
#include "spinbrach/types.hpp"

namespace spinbrach {

/// Static magnetic field: strength omega (frequency units, hbar = 1) along
/// the direction with spherical angles (theta', phi').
struct FieldSpec {
  double omega = 1.0;
  Direction direction;
};

/// Throws std::invalid_argument unless omega > 0 and theta' lies in [0, pi].
/// phi' is periodic and accepted as-is.
void validate_field(const FieldSpec& field);

/// H = omega * S.n'. Hermitian with eigenvalues {omega*m : m = -s..s}.
OperatorMatrix field_hamiltonian(HalfInt s, const FieldSpec& field);

/// exp(-iHt)|state>, evaluated through the spectral exponential of S.n' with
/// the exact eigenvalue ladder (no eigensolver involved). Norm-preserving.
StateVector evolve(const StateVector& state, HalfInt s, const FieldSpec& field,
                   double t);

/// Location (theta, phi) on the rotational manifold of the state evolved
/// from |m> for time t:
///   sin(theta/2) = sin(theta') sin(omega t / 2)
///   phi = phi' - atan2(cos(omega t/2), cos(theta') sin(omega t/2))
/// with phi shifted by pi on the half-periods where sin(omega t/2) < 0, so
/// that theta stays in [0, pi]. At omega*t = 0 (mod 2pi) the azimuth is
/// degenerate and the t -> 0+ limit phi = phi' - pi/2 is returned.
Direction evolved_angles(const FieldSpec& field, double t);

/// Global phase arg<psi_m(theta, phi)|state> in (-pi, pi]. The state must lie
/// on the manifold of |m>: fidelity below 1 - 1e-8 throws std::domain_error
/// ("state off manifold").
double global_phase(const StateVector& state, double theta, double phi, HalfInt m);

}  // namespace spinbrach

#endif  // SPINBRACH_EVOLUTION_HPP
