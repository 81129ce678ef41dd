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

#ifndef SPINBRACH_FUBINI_STUDY_HPP
#define SPINBRACH_FUBINI_STUDY_HPP

#include "spinbrach/half_int.hpp"
#include "spinbrach/types.hpp"

namespace spinbrach {

/// Fubini-Study metric tensor of a rotational manifold in (theta, phi)
/// coordinates, with the conventional overall scale gamma.
struct MetricTensor2 {
  double g_tt = 0.0;  // g_{theta theta}
  double g_tp = 0.0;  // g_{theta phi}
  double g_pp = 0.0;  // g_{phi phi}
  double gamma = 1.0;
};

/// Coordinate tangent vectors of |psi_m(theta, phi)>.
struct TangentPair {
  StateVector d_theta;
  StateVector d_phi;
};

/// Analytic derivatives of the rotated eigenstate:
///   |psi_theta> = exp(-i phi S_z) (-i S_y) exp(-i theta S_y) |m>
///   |psi_phi>   = (-i S_z) exp(-i phi S_z) exp(-i theta S_y) |m>
TangentPair state_derivatives(HalfInt s, HalfInt m, double theta, double phi);

/// Metric assembled from the state derivatives via
///   g_ab = gamma^2 Re(<psi_a|psi_b> - <psi_a|psi><psi|psi_b>).
MetricTensor2 metric_tensor_numeric(HalfInt s, HalfInt m, double theta, double phi,
                                    double gamma);

/// Closed form: g_tt = (gamma^2/2)(s + s^2 - m^2), g_pp = g_tt sin^2(theta),
/// g_tp = 0. The metric of a sphere.
MetricTensor2 metric_tensor_closed(HalfInt s, HalfInt m, double theta, double gamma);

/// Sphere radius R = (gamma/sqrt(2)) sqrt(s + s^2 - m^2) of the rotational
/// manifold of |m>. Even in m.
double manifold_radius(HalfInt s, HalfInt m, double gamma);

/// Overlap <psi_0(theta, phi)|psi_0(theta2, phi2)> on the spin-1 m=0
/// manifold; equals the dot product of the two direction vectors, so it is
/// real and vanishes exactly for perpendicular directions.
double m0_overlap(double theta, double phi, double theta2, double phi2);

}  // namespace spinbrach

#endif  // SPINBRACH_FUBINI_STUDY_HPP
