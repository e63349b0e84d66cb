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

#pragma once

// Dense-row kernels behind MasterEquation. Complex data is interleaved
// (re, im) doubles.

#include <cstddef>
#include <cstring>

namespace catghz::kernels {

// Complex entries per column block of the sparse-times-dense product.
constexpr std::size_t kBlock = 32;

#if defined(__GNUC__)
typedef double v4d __attribute__((vector_size(32)));
typedef long long v4i __attribute__((vector_size(32)));

inline v4d load(const double* p) {
  v4d v;
  std::memcpy(&v, p, sizeof v);
  return v;
}
inline void store(double* p, v4d v) { std::memcpy(p, &v, sizeof v); }
inline v4d swap_pairs(v4d v) {
#if defined(__clang__)
  return __builtin_shufflevector(v, v, 1, 0, 3, 2);
#else
  return __builtin_shuffle(v, v4i{1, 0, 3, 2});
#endif
}

// y[0:2*kBlock] = sum_p v_p * x_p[0:2*kBlock]
inline void accumulate_block(const double* values, const std::size_t* cols, std::size_t count, const double* x,
                             std::size_t stride, double* y) {
  v4d acc[kBlock / 2] = {};
  for (std::size_t p = 0; p < count; ++p) {
    const double vr = values[2 * p];
    const double vi = values[2 * p + 1];
    const v4d re = {vr, vr, vr, vr};
    const v4d im = {-vi, vi, -vi, vi};
    const double* src = x + cols[p] * stride;
    for (std::size_t k = 0; k < kBlock / 2; ++k) {
      const v4d xv = load(src + 4 * k);
      acc[k] += re * xv + im * swap_pairs(xv);
    }
  }
  for (std::size_t k = 0; k < kBlock / 2; ++k) store(y + 4 * k, acc[k]);
}
#else
inline void accumulate_block(const double* values, const std::size_t* cols, std::size_t count, const double* x,
                             std::size_t stride, double* y) {
  double acc[2 * kBlock] = {};
  for (std::size_t p = 0; p < count; ++p) {
    const double vr = values[2 * p];
    const double vi = values[2 * p + 1];
    const double* src = x + cols[p] * stride;
    for (std::size_t k = 0; k < 2 * kBlock; k += 2) {
      acc[k] += vr * src[k] - vi * src[k + 1];
      acc[k + 1] += vr * src[k + 1] + vi * src[k];
    }
  }
  std::memcpy(y, acc, sizeof acc);
}
#endif

// Same as accumulate_block for a partial block of `width` complex entries.
inline void accumulate_partial(const double* values, const std::size_t* cols, std::size_t count, const double* x,
                               std::size_t stride, double* y, std::size_t width) {
  double acc[2 * kBlock] = {};
  for (std::size_t p = 0; p < count; ++p) {
    const double vr = values[2 * p];
    const double vi = values[2 * p + 1];
    const double* src = x + cols[p] * stride;
    for (std::size_t k = 0; k < 2 * width; k += 2) {
      acc[k] += vr * src[k] - vi * src[k + 1];
      acc[k + 1] += vr * src[k + 1] + vi * src[k];
    }
  }
  std::memcpy(y, acc, 2 * width * sizeof(double));
}

// y[k] += w * c[k] * x[k] for k < len, all complex.
inline void weighted_axpy(double wr, double wi, const double* c, const double* x, double* y, std::size_t len) {
  for (std::size_t k = 0; k < len; ++k) {
    const double s_re = wr * c[2 * k] - wi * c[2 * k + 1];
    const double s_im = wr * c[2 * k + 1] + wi * c[2 * k];
    const double xr = x[2 * k];
    const double xi = x[2 * k + 1];
    y[2 * k] += s_re * xr - s_im * xi;
    y[2 * k + 1] += s_re * xi + s_im * xr;
  }
}

}  // namespace catghz::kernels
