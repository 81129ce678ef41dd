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

#ifndef SPINBRACH_TYPES_HPP
#define SPINBRACH_TYPES_HPP

#include <Eigen/Dense>
#include <complex>

namespace spinbrach {

using Complex = std::complex<double>;
using OperatorMatrix = Eigen::MatrixXcd;
using StateVector = Eigen::VectorXcd;

/// Spherical direction: polar angle theta in [0, pi], azimuth phi in radians.
struct Direction {
  double theta = 0.0;
  double phi = 0.0;
};

}  // namespace spinbrach

#endif  // SPINBRACH_TYPES_HPP
