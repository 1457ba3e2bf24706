// Copyright 2026 the stategeom authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "stategeom/errors.hpp"

namespace stategeom {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

// Tolerances are absolute for quantities of order one; callers rescale by the
// largest entry when matrices exceed unit norm.
inline constexpr double kDefaultTol = 1e-10;
inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kCoefficientTol = 1e-12;

inline double tolerance_scale(double max_abs) { return max_abs > 1.0 ? max_abs : 1.0; }

/// Dense rank-3 array of doubles with equal extents, (i, j, k) row-major.
class Tensor3 {
 public:
  Tensor3() = default;
  explicit Tensor3(Eigen::Index extent)
      : extent_(extent), data_(static_cast<std::size_t>(extent * extent * extent), 0.0) {}

  Eigen::Index extent() const { return extent_; }

  double& operator()(Eigen::Index i, Eigen::Index j, Eigen::Index k) {
    return data_[index(i, j, k)];
  }
  double operator()(Eigen::Index i, Eigen::Index j, Eigen::Index k) const {
    return data_[index(i, j, k)];
  }

  const std::vector<double>& data() const { return data_; }
  std::vector<double>& data() { return data_; }

  double max_abs() const {
    double m = 0.0;
    for (double v : data_) m = std::max(m, std::abs(v));
    return m;
  }

 private:
  std::size_t index(Eigen::Index i, Eigen::Index j, Eigen::Index k) const {
    return static_cast<std::size_t>((i * extent_ + j) * extent_ + k);
  }

  Eigen::Index extent_ = 0;
  std::vector<double> data_;
};

}  // namespace stategeom
