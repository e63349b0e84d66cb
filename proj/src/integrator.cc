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

#include "catghz/integrator.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

namespace catghz {

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784, b6 = 11.0 / 84;
// b - b* (difference to the embedded 4th-order weights)
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                 e6 = 22.0 / 525, e7 = -1.0 / 40;

std::vector<double> checkpoints(const IntegrationConfig& config) {
  if (!(config.t_final > 0.0) || !std::isfinite(config.t_final)) {
    throw std::invalid_argument("integration requires t_final > 0");
  }
  std::vector<double> times;
  for (double t : config.sample_times) {
    if (t < 0.0 || t > config.t_final) throw std::invalid_argument("sample time outside [0, t_final]");
    if (t > 0.0 && t < config.t_final) times.push_back(t);
  }
  times.push_back(config.t_final);
  std::sort(times.begin(), times.end());
  times.erase(std::unique(times.begin(), times.end()), times.end());
  return times;
}

void check_tolerance(const IntegrationConfig& config) {
  if (config.method == Method::adaptive && !(config.tolerance > 0.0 && config.tolerance <= 1e-3)) {
    throw std::invalid_argument("adaptive tolerance must lie in (0, 1e-3]");
  }
}

// Operations that differ between density-matrix and state-vector evolution.
struct DensityOps {
  using State = RowMatrix;
  const MasterEquation& eq;
  void deriv(const State& y, double t, State& out) const { eq.derivative(y, t, out); }
};

struct PureOps {
  using State = Eigen::VectorXcd;
  const MasterEquation& eq;
  void deriv(const State& y, double t, State& out) const { eq.schrodinger(y, t, out); }
};

// One pass of an RK4 stage: acc (+)= a k and tmp = y + b k.
template <typename State>
void rk4_stage(const State& y, const State& k, double a, double b, bool first, State& acc, State& tmp) {
  const cd* py = y.data();
  const cd* pk = k.data();
  cd* pa = acc.data();
  cd* pt = tmp.data();
  const auto size = y.size();
  if (first) {
    for (Eigen::Index i = 0; i < size; ++i) {
      pa[i] = py[i] + a * pk[i];
      pt[i] = py[i] + b * pk[i];
    }
  } else {
    for (Eigen::Index i = 0; i < size; ++i) {
      pa[i] += a * pk[i];
      pt[i] = py[i] + b * pk[i];
    }
  }
}

// Runs the chosen method through all checkpoints. `after_step(y)` may
// modify the state; `sample(t, y)` records observables.
template <typename Ops, typename AfterStep, typename SampleFn>
std::size_t integrate(const Ops& ops, typename Ops::State& y, const IntegrationConfig& config, double dt_fixed,
                      AfterStep after_step, SampleFn sample) {
  using State = typename Ops::State;
  const auto stops = checkpoints(config);
  std::size_t steps = 0;
  double t = 0.0;
  sample(0.0, y);

  if (config.method == Method::rk4) {
    State k(y.rows(), y.cols()), acc(y.rows(), y.cols()), tmp(y.rows(), y.cols());
    for (double stop : stops) {
      const double span = stop - t;
      const auto n = static_cast<std::size_t>(std::ceil(span / dt_fixed - 1e-9));
      const double h = span / static_cast<double>(std::max<std::size_t>(n, 1));
      for (std::size_t s = 0; s < std::max<std::size_t>(n, 1); ++s) {
        const double t0 = t + static_cast<double>(s) * h;
        ops.deriv(y, t0, k);
        rk4_stage(y, k, h / 6.0, 0.5 * h, true, acc, tmp);
        ops.deriv(tmp, t0 + 0.5 * h, k);
        rk4_stage(y, k, h / 3.0, 0.5 * h, false, acc, tmp);
        ops.deriv(tmp, t0 + 0.5 * h, k);
        rk4_stage(y, k, h / 3.0, h, false, acc, tmp);
        ops.deriv(tmp, t0 + h, k);
        y = acc + (h / 6.0) * k;
        after_step(y);
        if (++steps > config.max_steps) throw IntegrationError("step limit exceeded");
      }
      t = stop;
      sample(t, y);
    }
    return steps;
  }

  // Adaptive Dormand-Prince with first-same-as-last reuse.
  const auto rows = y.rows(), cols = y.cols();
  State k1(rows, cols), k2(rows, cols), k3(rows, cols), k4(rows, cols), k5(rows, cols), k6(rows, cols),
      k7(rows, cols), tmp(rows, cols), y_new(rows, cols);
  const double tol = config.tolerance;
  double h = std::min(dt_fixed > 0.0 ? 10.0 * dt_fixed : config.t_final / 100.0, config.t_final);
  ops.deriv(y, t, k1);
  std::size_t rejected = 0;
  for (double stop : stops) {
    while (t < stop) {
      const bool last = t + h >= stop * (1.0 - 1e-14);
      const double step = last ? stop - t : h;
      tmp = y + (step * a21) * k1;
      ops.deriv(tmp, t + c2 * step, k2);
      tmp = y + step * (a31 * k1 + a32 * k2);
      ops.deriv(tmp, t + c3 * step, k3);
      tmp = y + step * (a41 * k1 + a42 * k2 + a43 * k3);
      ops.deriv(tmp, t + c4 * step, k4);
      tmp = y + step * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4);
      ops.deriv(tmp, t + c5 * step, k5);
      tmp = y + step * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5);
      ops.deriv(tmp, t + step, k6);
      y_new = y + step * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
      ops.deriv(y_new, t + step, k7);
      tmp = step * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);

      const auto scale = (tol + tol * y.cwiseAbs().cwiseMax(y_new.cwiseAbs()).array()).eval();
      const double err = std::sqrt((tmp.cwiseAbs().array() / scale).square().mean());
      if (!std::isfinite(err)) throw IntegrationError("adaptive step produced a non-finite error estimate");

      if (err <= 1.0) {
        t = last ? stop : t + step;
        y = y_new;
        after_step(y);
        std::swap(k1, k7);
        // after_step may have changed y; keep k1 consistent with it
        if constexpr (std::is_same_v<State, RowMatrix>) ops.deriv(y, t, k1);
        if (++steps > config.max_steps) throw IntegrationError("step limit exceeded");
      } else if (++rejected > config.max_steps) {
        throw IntegrationError("too many rejected steps");
      }
      const double factor = err == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(err, -0.2), 0.2, 5.0);
      if (!last || err > 1.0) h = step * factor;
      if (h < 1e-14 * config.t_final) throw IntegrationError("adaptive step size underflow");
    }
    sample(t, y);
  }
  return steps;
}

double trace_of(const RowMatrix& m) { return m.trace().real(); }

}  // namespace

Method parse_method(const std::string& name) {
  if (name == "rk4") return Method::rk4;
  if (name == "adaptive") return Method::adaptive;
  throw std::invalid_argument("unknown integration method '" + name + "' (expected rk4 or adaptive)");
}

std::string method_name(Method method) { return method == Method::rk4 ? "rk4" : "adaptive"; }

double fixed_step(const MasterEquation& eq, const IntegrationConfig& config) {
  if (!(config.steps_per_period > 0.0)) throw std::invalid_argument("steps_per_period must be > 0");
  const double fastest = std::max(eq.max_frequency(), eq.rate_bound()) / kTwoPi;  // cycles per us
  const double limit = fastest > 0.0 ? 1.0 / (config.steps_per_period * fastest) : config.t_final;
  if (config.dt < 0.0) throw std::invalid_argument("dt must be > 0");
  if (config.dt == 0.0) return std::min(limit, config.t_final);
  if (config.method == Method::rk4 && config.dt > limit * (1.0 + 1e-12)) {
    std::ostringstream os;
    os << "fixed step dt = " << config.dt << " us does not resolve the fastest phase; need dt <= " << limit << " us";
    throw IntegrationError(os.str());
  }
  return config.dt;
}

SimulationResult evolve(const Generator& h, const DissipatorSet& d, const DensityMatrix& rho0,
                        const IntegrationConfig& config) {
  if (h.dim() != rho0.dim()) throw std::invalid_argument("evolve: generator and rho0 dimensions differ");
  if (config.layout && config.layout->total_dim() != rho0.dim()) {
    throw std::invalid_argument("evolve: layout does not match rho0");
  }
  check_tolerance(config);
  if (rho0.dim() <= 1000) {
    rho0.validate();
  } else if (rho0.trace_drift() > 1e-8 || rho0.hermiticity_error() > 1e-10) {
    throw std::domain_error("evolve: rho0 is not a normalized Hermitian matrix");
  }
  const auto start = std::chrono::steady_clock::now();
  const MasterEquation eq(h, d);
  const double dt = fixed_step(eq, config);

  SimulationResult result;
  std::vector<BasisState> basis;
  if (config.layout) {
    basis.reserve(rho0.dim());
    for (std::size_t i = 0; i < rho0.dim(); ++i) basis.push_back(config.layout->state(i));
  }

  DensityMatrix rho = rho0;
  auto after_step = [&](RowMatrix& y) {
    DensityMatrix view(std::move(y));
    view.symmetrize();
    y = std::move(view.matrix());
    const double drift = std::abs(trace_of(y) - 1.0);
    result.max_trace_drift = std::max(result.max_trace_drift, drift);
    if (drift > config.max_trace_drift) {
      std::ostringstream os;
      os << "trace drift " << drift << " exceeds " << config.max_trace_drift << " after " << result.step_count
         << " steps";
      throw IntegrationError(os.str());
    }
  };
  auto sample = [&](double t, const RowMatrix& y) {
    Sample s;
    s.t = t;
    s.trace = trace_of(y);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const double p = y(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)).real();
      s.qutrit_population[static_cast<int>(basis[i].qutrit)] += p;
      for (int l = 0; l < 3; ++l) s.mean_photons[l] += p * basis[i].photons[l];
    }
    if (config.fidelity_target) {
      const auto& v = config.fidelity_target->amplitudes();
      s.fidelity = std::sqrt(std::max(0.0, v.dot(y * v).real()));
    }
    const double herm = (y - y.adjoint()).cwiseAbs().maxCoeff();
    result.max_hermiticity_error = std::max(result.max_hermiticity_error, herm);
    result.samples.push_back(s);
  };

  RowMatrix y = rho.matrix();
  result.step_count = integrate(DensityOps{eq}, y, config, dt, after_step, sample);
  result.final_rho = DensityMatrix(std::move(y));
  result.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

SimulationResult evolve_pure(const Generator& h, const StateVector& psi0, const IntegrationConfig& config) {
  if (h.dim() != psi0.dim()) throw std::invalid_argument("evolve_pure: generator and state dimensions differ");
  check_tolerance(config);
  if (std::abs(psi0.norm() - 1.0) > 1e-10) throw std::domain_error("evolve_pure: initial state is not normalized");
  const auto start = std::chrono::steady_clock::now();
  const MasterEquation eq(h, DissipatorSet{});
  const double dt = fixed_step(eq, config);

  SimulationResult result;
  std::vector<BasisState> basis;
  if (config.layout) {
    for (std::size_t i = 0; i < psi0.dim(); ++i) basis.push_back(config.layout->state(i));
  }
  auto after_step = [&](Eigen::VectorXcd& y) {
    const double drift = std::abs(y.squaredNorm() - 1.0);
    result.max_trace_drift = std::max(result.max_trace_drift, drift);
    if (drift > config.max_trace_drift) throw IntegrationError("norm drift exceeds limit");
  };
  auto sample = [&](double t, const Eigen::VectorXcd& y) {
    Sample s;
    s.t = t;
    s.trace = y.squaredNorm();
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const double p = std::norm(y[static_cast<Eigen::Index>(i)]);
      s.qutrit_population[static_cast<int>(basis[i].qutrit)] += p;
      for (int l = 0; l < 3; ++l) s.mean_photons[l] += p * basis[i].photons[l];
    }
    if (config.fidelity_target) s.fidelity = std::abs(config.fidelity_target->amplitudes().dot(y));
    result.samples.push_back(s);
  };
  Eigen::VectorXcd y = psi0.amplitudes();
  result.step_count = integrate(PureOps{eq}, y, config, dt, after_step, sample);
  result.final_state = StateVector(std::move(y));
  result.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace catghz
