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

#include "spinbrach/rotor.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

namespace spinbrach {

namespace {

void validate_spectrum(const OperatorMatrix& generator,
                       std::span<const HalfInt> eigenvalues) {
  const Eigen::Index n = generator.rows();
  if (generator.cols() != n) {
    throw std::invalid_argument("generator must be square");
  }
  if (static_cast<Eigen::Index>(eigenvalues.size()) != n) {
    throw std::invalid_argument("eigenvalue count must match the matrix dimension");
  }
  std::unordered_set<int> seen;
  for (const HalfInt& ev : eigenvalues) {
    if (!seen.insert(ev.twice()).second) {
      throw std::invalid_argument("repeated eigenvalue " + ev.str() +
                                  " makes the Lagrange denominators vanish");
    }
  }
}

// Factor order for the projector product of eigenvalue m: farthest nodes
// first. Components belonging to distant eigenvalues are annihilated before
// the small denominators near l_m enter, which keeps every intermediate
// partial product O(1) instead of combinatorially large on the equispaced
// spin ladder.
std::vector<Eigen::Index> factor_order(std::span<const HalfInt> eigenvalues,
                                       Eigen::Index m) {
  std::vector<Eigen::Index> order;
  order.reserve(eigenvalues.size() - 1);
  for (Eigen::Index k = 0; k < static_cast<Eigen::Index>(eigenvalues.size()); ++k) {
    if (k != m) order.push_back(k);
  }
  std::sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
    const int da = std::abs(eigenvalues[m].twice() - eigenvalues[a].twice());
    const int db = std::abs(eigenvalues[m].twice() - eigenvalues[b].twice());
    return da != db ? da > db : a < b;
  });
  return order;
}

}  // namespace

OperatorMatrix spectral_exponential(const OperatorMatrix& generator,
                                    std::span<const HalfInt> eigenvalues,
                                    Complex scale) {
  validate_spectrum(generator, eigenvalues);
  const Eigen::Index n = generator.rows();
  const OperatorMatrix identity = OperatorMatrix::Identity(n, n);
  OperatorMatrix result = OperatorMatrix::Zero(n, n);
  for (Eigen::Index m = 0; m < n; ++m) {
    OperatorMatrix projector = identity;
    for (Eigen::Index k : factor_order(eigenvalues, m)) {
      // Exact integer difference of doubled eigenvalues, converted once.
      const double denom = (eigenvalues[m].twice() - eigenvalues[k].twice()) / 2.0;
      projector = projector * ((generator - eigenvalues[k].value() * identity) / denom);
    }
    result += std::exp(scale * eigenvalues[m].value()) * projector;
  }
  return result;
}

StateVector spectral_exponential_apply(const OperatorMatrix& generator,
                                       std::span<const HalfInt> eigenvalues,
                                       Complex scale, const StateVector& vector) {
  validate_spectrum(generator, eigenvalues);
  const Eigen::Index n = generator.rows();
  if (vector.size() != n) {
    throw std::invalid_argument("vector dimension does not match the generator");
  }
  StateVector result = StateVector::Zero(n);
  for (Eigen::Index m = 0; m < n; ++m) {
    StateVector projected = vector;
    for (Eigen::Index k : factor_order(eigenvalues, m)) {
      const double denom = (eigenvalues[m].twice() - eigenvalues[k].twice()) / 2.0;
      projected = (generator * projected - eigenvalues[k].value() * projected) / denom;
    }
    result += std::exp(scale * eigenvalues[m].value()) * projected;
  }
  return result;
}

OperatorMatrix rotation_operator(HalfInt s, const Eigen::Vector3d& axis, double chi) {
  const OperatorMatrix generator = projection_operator(s, axis);
  const std::vector<HalfInt> spectrum = descending_projections(s);
  return spectral_exponential(generator, spectrum, Complex(0.0, -chi));
}

StateVector rotate_eigenstate(HalfInt s, HalfInt m, double theta, double phi) {
  const SpinOperators ops = spin_operators(s);
  const std::vector<HalfInt> spectrum = descending_projections(s);

  StateVector state = spectral_exponential_apply(ops.sy, spectrum, Complex(0.0, -theta),
                                                 basis_eigenstate(s, m));

  // exp(-i phi S_z) is diagonal in this basis: phases e^{-i phi m_i}.
  for (int i = 0; i < state.size(); ++i) {
    const double mi = HalfInt::from_twice(s.twice() - 2 * i).value();
    state(i) *= std::exp(Complex(0.0, -phi * mi));
  }
  return state;
}

}  // namespace spinbrach
