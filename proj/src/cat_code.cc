// Copyright 2026 The catghz Authors
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

#include "catghz/cat_code.h"

#include <cmath>
#include <stdexcept>
#include <string>

namespace catghz {

namespace {

constexpr double kMaxTailMass = 1e-6;

void check_alpha(double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw std::invalid_argument("cat amplitude alpha must be finite and > 0 (logical states are not orthogonal at alpha = 0), got " +
                                std::to_string(alpha));
  }
}

void check_bit(int bit) {
  if (bit != 0 && bit != 1) throw std::invalid_argument("logical bit must be 0 or 1");
}

// Kronecker product of three single-cavity vectors with the qutrit in |g>.
Eigen::VectorXcd product_state(const SpaceLayout& layout, const Eigen::VectorXd& c1, const Eigen::VectorXd& c2,
                               const Eigen::VectorXd& c3) {
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(layout.total_dim()));
  for (int n1 = 0; n1 < c1.size(); ++n1) {
    for (int n2 = 0; n2 < c2.size(); ++n2) {
      for (int n3 = 0; n3 < c3.size(); ++n3) {
        out[static_cast<Eigen::Index>(layout.index(Level::g, n1, n2, n3))] = c1[n1] * c2[n2] * c3[n3];
      }
    }
  }
  return out;
}

}  // namespace

double cat_normalization(double alpha, CatSign sign) {
  check_alpha(alpha);
  const double overlap = std::exp(-2.0 * alpha * alpha);
  return 1.0 / std::sqrt(2.0 * (sign == CatSign::plus ? 1.0 + overlap : 1.0 - overlap));
}

CatCode::CatCode(double alpha, int n_max)
    : alpha_(alpha),
      n_max_(n_max),
      norm_plus_(cat_normalization(alpha, CatSign::plus)),
      norm_minus_(cat_normalization(alpha, CatSign::minus)) {
  if (n_max < 1) throw std::invalid_argument("cat code truncation must be >= 1");
  logical0_.resize(n_max + 1);
  logical1_.resize(n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    logical0_[n] = coefficient(0, n);
    logical1_[n] = coefficient(1, n);
  }
}

double CatCode::coefficient(int bit, int n) const {
  check_bit(bit);
  if (n < 0 || n % 2 != bit) return 0.0;
  const double norm = bit == 0 ? norm_plus_ : norm_minus_;
  // 2 N e^{-alpha^2/2} alpha^n / sqrt(n!)
  const double log_mag = -0.5 * alpha_ * alpha_ + n * std::log(alpha_) - 0.5 * std::lgamma(n + 1.0);
  return 2.0 * norm * std::exp(log_mag);
}

double CatCode::tail_mass(int bit, int truncation) const {
  double kept = 0.0;
  for (int n = 0; n <= truncation; ++n) {
    const double c = coefficient(bit, n);
    kept += c * c;
  }
  return std::max(0.0, 1.0 - kept);
}

const Eigen::VectorXd& logical_state(const CatCode& code, int bit) {
  check_bit(bit);
  return bit == 0 ? code.logical0() : code.logical1();
}

std::array<Eigen::VectorXd, 2> truncated_logical_basis(const CatCode& code, int truncation) {
  std::array<Eigen::VectorXd, 2> basis;
  for (int bit = 0; bit < 2; ++bit) {
    const double tail = code.tail_mass(bit, truncation);
    if (tail > kMaxTailMass) {
      throw std::invalid_argument("Fock truncation " + std::to_string(truncation) + " too small for alpha = " +
                                  std::to_string(code.alpha()) + ": logical " + std::to_string(bit) +
                                  " loses tail mass " + std::to_string(tail));
    }
    Eigen::VectorXd v(truncation + 1);
    for (int n = 0; n <= truncation; ++n) v[n] = code.coefficient(bit, n);
    basis[bit] = v / v.norm();
  }
  return basis;
}

StateVector logical_product(const CatCode& code, const SpaceLayout& layout, std::array<int, 3> bits) {
  std::array<Eigen::VectorXd, 3> factors;
  for (int l = 0; l < 3; ++l) {
    check_bit(bits[l]);
    factors[l] = truncated_logical_basis(code, layout.truncation(l + 1))[bits[l]];
  }
  return StateVector(product_state(layout, factors[0], factors[1], factors[2]));
}

StateVector prepare_initial(const CatCode& code, const SpaceLayout& layout) {
  std::array<Eigen::VectorXd, 3> plus;
  for (int l = 0; l < 3; ++l) {
    const auto basis = truncated_logical_basis(code, layout.truncation(l + 1));
    plus[l] = (basis[0] + basis[1]) / std::sqrt(2.0);
  }
  return StateVector(product_state(layout, plus[0], plus[1], plus[2])).normalized();
}

SparseOperator code_hadamard(const SpaceLayout& layout, const CatCode& code, int cavity) {
  const int n = layout.truncation(cavity);
  const auto basis = truncated_logical_basis(code, n);
  const Eigen::VectorXd& zero = basis[0];
  const Eigen::VectorXd& one = basis[1];
  const double s = 1.0 / std::sqrt(2.0);
  const Eigen::MatrixXd projector = zero * zero.transpose() + one * one.transpose();
  const Eigen::MatrixXd rotation =
      s * (zero * zero.transpose() + zero * one.transpose() + one * zero.transpose() - one * one.transpose());
  const Eigen::MatrixXd local = Eigen::MatrixXd::Identity(n + 1, n + 1) - projector + rotation;
  const auto op = SparseOperator::from_dense(local.cast<cd>(), 1e-15);
  return embed_cavity(layout, cavity, op);
}

StateVector ghz_target(const CatCode& code, const SpaceLayout& layout) {
  const auto a = logical_product(code, layout, {0, 0, 0});
  const auto b = logical_product(code, layout, {1, 1, 1});
  return StateVector((a.amplitudes() + b.amplitudes()) / std::sqrt(2.0));
}

StateVector pre_rotation_target(const CatCode& code, const SpaceLayout& layout) {
  std::array<std::array<Eigen::VectorXd, 2>, 3> b;
  for (int l = 0; l < 3; ++l) b[l] = truncated_logical_basis(code, layout.truncation(l + 1));
  const Eigen::VectorXd p2 = b[1][0] + b[1][1];
  const Eigen::VectorXd m2 = b[1][0] - b[1][1];
  const Eigen::VectorXd p3 = b[2][0] + b[2][1];
  const Eigen::VectorXd m3 = b[2][0] - b[2][1];
  const Eigen::VectorXcd v = product_state(layout, b[0][0], p2, p3) + product_state(layout, b[0][1], m2, m3);
  return StateVector(v / (2.0 * std::sqrt(2.0)));
}

}  // namespace catghz
