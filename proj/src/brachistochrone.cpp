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

#include "spinbrach/brachistochrone.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "spinbrach/fubini_study.hpp"
#include "spinbrach/spin_algebra.hpp"

namespace spinbrach {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = std::numbers::pi / 2.0;
// Slack for reachability right at the cone boundary (theta' = pi/2, theta_f = pi).
constexpr double kBoundarySlack = 1e-12;
constexpr double kSweepEdgeOffset = 1e-6;

void validate_polar(double angle, const char* name) {
  if (!(angle >= 0.0) || angle > kPi + 1e-9) {
    throw std::invalid_argument(std::string(name) + " must lie in [0, pi]");
  }
}

// asin(sin(theta_f/2)/sin(theta')) with the reachability guard shared by
// path_length and transfer_time.
double arc_half_angle(double theta_prime, double theta_f) {
  const double target = std::sin(0.5 * theta_f);
  const double cone = std::sin(theta_prime);
  if (cone <= 0.0 || target > cone * (1.0 + kBoundarySlack)) {
    throw std::domain_error("target outside rotation circle");
  }
  return std::asin(std::min(1.0, target / cone));
}

void validate_problem(const TransferProblem& problem) {
  validate_projection(problem.s, problem.m);
  validate_polar(problem.theta_f, "theta_f");
  if (!(problem.omega > 0.0)) {
    throw std::invalid_argument("omega must be positive");
  }
  if (!(problem.gamma > 0.0)) {
    throw std::invalid_argument("gamma must be positive");
  }
}

}  // namespace

double path_length(double radius, double theta_prime, double theta_f) {
  if (!(radius > 0.0)) {
    throw std::invalid_argument("manifold radius must be positive");
  }
  validate_polar(theta_prime, "theta_prime");
  validate_polar(theta_f, "theta_f");
  if (theta_f == 0.0) return 0.0;
  return 2.0 * radius * std::sin(theta_prime) * arc_half_angle(theta_prime, theta_f);
}

double evolution_speed(HalfInt s, HalfInt m, const FieldSpec& field, double gamma) {
  validate_field(field);
  return field.omega * manifold_radius(s, m, gamma) * std::sin(field.direction.theta);
}

double speed_from_variance(const StateVector& state, const OperatorMatrix& hamiltonian,
                           double gamma) {
  if (!(gamma > 0.0)) {
    throw std::invalid_argument("gamma must be positive");
  }
  if (hamiltonian.rows() != state.size() || hamiltonian.cols() != state.size()) {
    throw std::invalid_argument("Hamiltonian dimension does not match the state");
  }
  const StateVector h_psi = hamiltonian * state;
  const double mean = state.dot(h_psi).real();
  const double mean_sq = h_psi.squaredNorm();
  return gamma * std::sqrt(std::max(0.0, mean_sq - mean * mean));
}

double transfer_time(double omega, double theta_prime, double theta_f) {
  if (!(omega > 0.0)) {
    throw std::invalid_argument("omega must be positive");
  }
  validate_polar(theta_prime, "theta_prime");
  validate_polar(theta_f, "theta_f");
  if (theta_f == 0.0) return 0.0;
  return 2.0 / omega * arc_half_angle(theta_prime, theta_f);
}

double compatible_azimuth(double theta_prime, double theta_f, double phi_f) {
  validate_polar(theta_prime, "theta_prime");
  if (!(theta_f > 0.0) || theta_f > kPi + 1e-9) {
    throw std::invalid_argument("theta_f must lie in (0, pi]");
  }
  if (theta_f >= kPi - 1e-9) {
    // Antipodal target: reachable only from the equatorial tilt, where every
    // azimuth works; pick the same one the optimal field uses.
    if (std::abs(std::cos(theta_prime)) <= 1e-9) {
      return phi_f + kHalfPi;
    }
    throw std::domain_error("no field at this tilt reaches the target");
  }
  const double denom = std::sin(theta_prime) * std::sin(theta_f);
  if (denom <= 0.0) {
    throw std::domain_error("no field at this tilt reaches the target");
  }
  const double rhs = std::cos(theta_prime) * (1.0 - std::cos(theta_f)) / denom;
  if (std::abs(rhs) > 1.0 + kBoundarySlack) {
    throw std::domain_error("no field at this tilt reaches the target");
  }
  return phi_f + std::acos(std::clamp(rhs, -1.0, 1.0));
}

TransferSolution optimal_transfer(const TransferProblem& problem) {
  validate_problem(problem);
  const double radius = manifold_radius(problem.s, problem.m, problem.gamma);

  TransferSolution solution;
  solution.field.omega = problem.omega;
  solution.field.direction.theta = kHalfPi;
  solution.speed = problem.omega * radius;
  solution.circle_radius = radius;
  if (problem.theta_f == 0.0) {
    solution.field.direction.phi = problem.phi_f + kHalfPi;
    return solution;  // already there
  }
  solution.field.direction.phi =
      compatible_azimuth(kHalfPi, problem.theta_f, problem.phi_f);
  solution.time = problem.theta_f / problem.omega;
  solution.path_length = radius * problem.theta_f;  // geodesic arc
  solution.arc_angle = problem.theta_f;
  return solution;
}

TransferSolution constrained_transfer(const TransferProblem& problem,
                                      double theta_prime) {
  validate_problem(problem);
  validate_polar(theta_prime, "theta_prime");
  const double radius = manifold_radius(problem.s, problem.m, problem.gamma);

  TransferSolution solution;
  solution.field.omega = problem.omega;
  solution.field.direction.theta = theta_prime;
  solution.speed = problem.omega * radius * std::sin(theta_prime);
  solution.circle_radius = radius * std::sin(theta_prime);
  if (problem.theta_f == 0.0) {
    solution.field.direction.phi = problem.phi_f + kHalfPi;
    return solution;
  }
  // Reachability first, so an unreachable tilt reports "target outside
  // rotation circle" rather than the azimuth variant of the same condition.
  solution.arc_angle = 2.0 * arc_half_angle(theta_prime, problem.theta_f);
  solution.path_length = solution.arc_angle * solution.circle_radius;
  solution.time = solution.arc_angle / problem.omega;
  solution.field.direction.phi =
      compatible_azimuth(theta_prime, problem.theta_f, problem.phi_f);
  return solution;
}

std::vector<TiltSample> sweep_tilt(const TransferProblem& problem, int grid_points) {
  validate_problem(problem);
  if (grid_points < 3) {
    throw std::invalid_argument("sweep needs at least 3 grid points");
  }
  const double lo = std::asin(std::sin(0.5 * problem.theta_f)) + kSweepEdgeOffset;
  const double hi = kHalfPi;
  if (lo >= hi) {
    throw std::domain_error("empty reachable tilt interval");
  }
  const double radius = manifold_radius(problem.s, problem.m, problem.gamma);
  const double step = (hi - lo) / (grid_points - 1);

  std::vector<TiltSample> rows;
  rows.reserve(grid_points);
  for (int i = 0; i < grid_points; ++i) {
    const double tilt = (i == grid_points - 1) ? hi : lo + i * step;
    TiltSample row;
    row.theta_prime = tilt;
    row.speed = problem.omega * radius * std::sin(tilt);
    if (problem.theta_f == 0.0) {
      row.time = 0.0;
      row.path_length = 0.0;
    } else {
      const double half_angle = arc_half_angle(tilt, problem.theta_f);
      row.time = 2.0 / problem.omega * half_angle;
      row.path_length = 2.0 * radius * std::sin(tilt) * half_angle;
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace spinbrach
