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

#include "spinbrach/fubini_study.hpp"

#include <cmath>
#include <stdexcept>

#include "spinbrach/rotor.hpp"
#include "spinbrach/spin_algebra.hpp"

namespace spinbrach {

namespace {

void validate_gamma(double gamma) {
  if (!(gamma > 0.0)) {
    throw std::invalid_argument("gamma must be positive");
  }
}

// s + s^2 - m^2 = s(s+1) - m^2, exact from doubled integers.
double casimir_minus_msq(HalfInt s, HalfInt m) {
  const int ts = s.twice();
  const int tm = m.twice();
  return static_cast<double>(ts * (ts + 2) - tm * tm) / 4.0;
}

}  // namespace

TangentPair state_derivatives(HalfInt s, HalfInt m, double theta, double phi) {
  const SpinOperators ops = spin_operators(s);
  const std::vector<HalfInt> spectrum = descending_projections(s);

  const StateVector tilted = spectral_exponential_apply(
      ops.sy, spectrum, Complex(0.0, -theta), basis_eigenstate(s, m));

  const Complex minus_i(0.0, -1.0);
  StateVector d_theta = minus_i * (ops.sy * tilted);
  StateVector d_phi = tilted;
  for (int i = 0; i < d_theta.size(); ++i) {
    const double mi = HalfInt::from_twice(s.twice() - 2 * i).value();
    const Complex z_phase = std::exp(Complex(0.0, -phi * mi));
    d_theta(i) *= z_phase;
    d_phi(i) *= minus_i * mi * z_phase;
  }
  return {std::move(d_theta), std::move(d_phi)};
}

MetricTensor2 metric_tensor_numeric(HalfInt s, HalfInt m, double theta, double phi,
                                    double gamma) {
  validate_gamma(gamma);
  const StateVector psi = rotate_eigenstate(s, m, theta, phi);
  const TangentPair tangent = state_derivatives(s, m, theta, phi);
  const double g2 = gamma * gamma;

  const auto component = [&](const StateVector& a, const StateVector& b) {
    return g2 * (a.dot(b) - a.dot(psi) * psi.dot(b)).real();
  };
  MetricTensor2 g;
  g.g_tt = component(tangent.d_theta, tangent.d_theta);
  g.g_tp = component(tangent.d_theta, tangent.d_phi);
  g.g_pp = component(tangent.d_phi, tangent.d_phi);
  g.gamma = gamma;
  return g;
}

MetricTensor2 metric_tensor_closed(HalfInt s, HalfInt m, double theta, double gamma) {
  validate_gamma(gamma);
  validate_projection(s, m);
  MetricTensor2 g;
  g.g_tt = 0.5 * gamma * gamma * casimir_minus_msq(s, m);
  g.g_tp = 0.0;
  const double st = std::sin(theta);
  g.g_pp = g.g_tt * st * st;
  g.gamma = gamma;
  return g;
}

double manifold_radius(HalfInt s, HalfInt m, double gamma) {
  validate_gamma(gamma);
  validate_projection(s, m);
  return gamma / std::sqrt(2.0) * std::sqrt(casimir_minus_msq(s, m));
}

double m0_overlap(double theta, double phi, double theta2, double phi2) {
  return std::sin(theta) * std::sin(theta2) * std::cos(phi - phi2) +
         std::cos(theta) * std::cos(theta2);
}

}  // namespace spinbrach
