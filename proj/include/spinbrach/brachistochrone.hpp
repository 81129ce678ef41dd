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

#ifndef SPINBRACH_BRACHISTOCHRONE_HPP
#define SPINBRACH_BRACHISTOCHRONE_HPP

#include <vector>

#include "spinbrach/evolution.hpp"
#include "spinbrach/half_int.hpp"
#include "spinbrach/types.hpp"

namespace spinbrach {

/// State transfer task on the rotational manifold of |m>: reach the rotated
/// eigenstate at (theta_f, phi_f) from |m> under a static field of strength
/// omega, with metric scale gamma.
struct TransferProblem {
  HalfInt s;
  HalfInt m;
  double theta_f = 0.0;
  double phi_f = 0.0;
  double omega = 1.0;
  double gamma = 1.0;
};

/// A transfer realized by one static field. The trajectory is the circle of
/// radius circle_radius = R sin(theta') around the field axis; arc_angle is
/// the arc swept, so path_length = arc_angle * circle_radius and
/// time = path_length / speed.
struct TransferSolution {
  FieldSpec field;
  double time = 0.0;
  double path_length = 0.0;
  double speed = 0.0;
  double arc_angle = 0.0;
  double circle_radius = 0.0;
};

/// Arc length 2 R sin(theta') asin(sin(theta_f/2)/sin(theta')) traversed
/// between |m> and the target at separation theta_f, for a field tilted at
/// theta'. Throws std::domain_error ("target outside rotation circle") when
/// sin(theta') < sin(theta_f/2).
double path_length(double radius, double theta_prime, double theta_f);

/// Evolution speed v = omega R sin(theta') on the manifold of |m>.
double evolution_speed(HalfInt s, HalfInt m, const FieldSpec& field, double gamma);

/// Anandan-Aharonov speed v = gamma sqrt(<psi|(dH)^2|psi>) for a normalized
/// state; constant along the evolution generated by H.
double speed_from_variance(const StateVector& state, const OperatorMatrix& hamiltonian,
                           double gamma);

/// Transfer duration t = (2/omega) asin(sin(theta_f/2)/sin(theta')).
/// Equals path_length / speed with the manifold radius cancelled, so it is
/// the same on every manifold. Same reachability error as path_length.
double transfer_time(double omega, double theta_prime, double theta_f);

/// Field azimuth phi' that puts the target on the rotation circle of a field
/// tilted at theta': cos(phi' - phi_f) = cos(theta')(1 - cos(theta_f)) /
/// (sin(theta') sin(theta_f)). Returns the positive branch
/// phi_f + acos(...); the mirror phi_f - acos(...) is equally valid. For the
/// antipodal target theta_f = pi only theta' = pi/2 works and phi' = phi_f +
/// pi/2 is returned. Throws std::domain_error when no azimuth exists.
double compatible_azimuth(double theta_prime, double theta_f, double phi_f);

/// Time-optimal transfer: field tilt theta' = pi/2 perpendicular to initial
/// and final states, time = theta_f/omega, path R*theta_f (the geodesic),
/// speed omega*R. theta_f = 0 yields the zero-time trivial solution.
TransferSolution optimal_transfer(const TransferProblem& problem);

/// Transfer with the field tilt held at theta'; azimuth from
/// compatible_azimuth. Reduces to optimal_transfer at theta' = pi/2.
TransferSolution constrained_transfer(const TransferProblem& problem,
                                      double theta_prime);

struct TiltSample {
  double theta_prime = 0.0;
  double time = 0.0;
  double speed = 0.0;
  double path_length = 0.0;
};

/// Grid scan of the field tilt over the reachable interval
/// [asin(sin(theta_f/2)) + eps, pi/2]; the transfer time decreases strictly
/// along the rows and the final row is the optimum. Verification aid, not an
/// optimizer: the optimum theta' = pi/2 is analytic.
std::vector<TiltSample> sweep_tilt(const TransferProblem& problem, int grid_points);

}  // namespace spinbrach

#endif  // SPINBRACH_BRACHISTOCHRONE_HPP
