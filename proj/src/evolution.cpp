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

#include "spinbrach/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "spinbrach/rotor.hpp"
#include "spinbrach/spin_algebra.hpp"

namespace spinbrach {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kOnManifoldFidelity = 1.0 - 1e-8;
}  // namespace

void validate_field(const FieldSpec& field) {
  if (!(field.omega > 0.0)) {
    throw std::invalid_argument("field strength omega must be positive");
  }
  if (!(field.direction.theta >= 0.0) || field.direction.theta > kPi + 1e-9) {
    throw std::invalid_argument("field polar angle must lie in [0, pi]");
  }
  if (!std::isfinite(field.direction.phi)) {
    throw std::invalid_argument("field azimuth must be finite");
  }
}

OperatorMatrix field_hamiltonian(HalfInt s, const FieldSpec& field) {
  validate_field(field);
  return field.omega * projection_operator(s, unit_vector(field.direction));
}

StateVector evolve(const StateVector& state, HalfInt s, const FieldSpec& field,
                   double t) {
  validate_field(field);
  if (t < 0.0) {
    throw std::invalid_argument("evolution time must be non-negative");
  }
  if (state.size() != dimension(s)) {
    throw std::invalid_argument("state dimension does not match 2s+1");
  }
  // exp(-i H t) = exp(-i omega t S.n'): the generator keeps the exact
  // half-integer ladder, omega*t folds into the scale.
  const OperatorMatrix generator = projection_operator(s, unit_vector(field.direction));
  const std::vector<HalfInt> spectrum = descending_projections(s);
  return spectral_exponential_apply(generator, spectrum, Complex(0.0, -field.omega * t),
                                    state);
}

Direction evolved_angles(const FieldSpec& field, double t) {
  validate_field(field);
  if (t < 0.0) {
    throw std::invalid_argument("evolution time must be non-negative");
  }
  const double half = 0.5 * field.omega * t;
  const double cos_half = std::cos(half);
  const double sin_half = std::sin(half);
  if (sin_half == 0.0) {
    // Degenerate azimuth; keep the t -> 0+ limit.
    return {0.0, field.direction.phi - kPi / 2.0};
  }
  const double sin_tp = std::sin(field.direction.theta);
  const double cos_tp = std::cos(field.direction.theta);
  const double theta =
      2.0 * std::asin(std::min(1.0, std::abs(sin_tp * sin_half)));
  double phi = field.direction.phi - std::atan2(cos_half, cos_tp * sin_half);
  if (sin_half < 0.0) {
    // Second half-period: fold the sign of sin(theta/2) into the azimuth so
    // theta stays in [0, pi].
    phi += kPi;
  }
  return {theta, phi};
}

double global_phase(const StateVector& state, double theta, double phi, HalfInt m) {
  if (state.size() < 1) {
    throw std::invalid_argument("empty state");
  }
  const HalfInt s = HalfInt::from_twice(static_cast<int>(state.size()) - 1);
  const StateVector reference = rotate_eigenstate(s, m, theta, phi);
  const Complex overlap = reference.dot(state);
  if (std::abs(overlap) < kOnManifoldFidelity) {
    throw std::domain_error("state off manifold");
  }
  double beta = std::arg(overlap);
  if (beta <= -kPi) beta += 2.0 * kPi;  // report in (-pi, pi]
  return beta;
}

}  // namespace spinbrach
