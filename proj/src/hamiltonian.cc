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

#include "catghz/hamiltonian.h"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "catghz/log.h"

namespace catghz {

namespace {

constexpr double kDispersiveWarnRatio = 0.15;

struct Ops {
  std::array<SparseOperator, 3> a;
  std::array<SparseOperator, 3> ad;
  std::array<SparseOperator, 3> n;
  SparseOperator pg, pe, pf;
  SparseOperator s_eg, s_fe, s_fg;  // lowering operators

  explicit Ops(const SpaceLayout& layout)
      : pg(qutrit_projector(layout, Level::g)),
        pe(qutrit_projector(layout, Level::e)),
        pf(qutrit_projector(layout, Level::f)),
        s_eg(qutrit_sigma(layout, Level::g, Level::e)),
        s_fe(qutrit_sigma(layout, Level::e, Level::f)),
        s_fg(qutrit_sigma(layout, Level::g, Level::f)) {
    for (int l = 1; l <= 3; ++l) {
      a[l - 1] = annihilation(layout, l);
      ad[l - 1] = a[l - 1].adjoint();
      n[l - 1] = number_operator(layout, l);
    }
  }
};

void check_dispersive(const SystemParams& p, const Detunings& d) {
  for (int l = 1; l <= 3; ++l) {
    const double ratio = p.g_mhz[l - 1] / (1e3 * d.delta(l));
    if (ratio >= kDispersiveWarnRatio) {
      std::ostringstream os;
      os << "large-detuning condition weak for cavity " << l << ": g/|d| = " << ratio;
      warn(os.str());
    }
  }
}

}  // namespace

void Generator::add_paired(SparseOperator op, double omega, std::string label) {
  if (op.dim() != dim_) throw std::invalid_argument("Generator: term dimension mismatch");
  terms_.push_back({std::move(op), omega, true, std::move(label)});
}

void Generator::add_static(SparseOperator op, std::string label) {
  if (op.dim() != dim_) throw std::invalid_argument("Generator: term dimension mismatch");
  if (op.hermiticity_error() > 1e-12) throw std::invalid_argument("Generator: static term must be Hermitian");
  terms_.push_back({std::move(op), 0.0, false, std::move(label)});
}

SparseOperator Generator::at(double t) const {
  SparseOperator h(dim_);
  for (const auto& term : terms_) {
    if (term.paired) {
      const SparseOperator x = term.op.scaled(std::polar(1.0, term.omega * t));
      h = h + x + x.adjoint();
    } else {
      h = h + term.op;
    }
  }
  return h;
}

double Generator::max_frequency() const {
  double w = 0.0;
  for (const auto& term : terms_) w = std::max(w, std::abs(term.omega));
  return w;
}

void add_crosstalk(Generator& h, const SystemParams& p, const SpaceLayout& layout, const Detunings& d) {
  const double g = angular_from_mhz(p.crosstalk_mhz());
  if (g == 0.0) return;
  static constexpr std::array<std::array<int, 2>, 3> kPairs{{{1, 2}, {1, 3}, {2, 3}}};
  for (const auto& [k, l] : kPairs) {
    if (p.crosstalk_pairs == CrosstalkPairs::pair23 && !(k == 2 && l == 3)) continue;
    const SparseOperator op = annihilation(layout, k) * creation(layout, l);
    h.add_paired(op.scaled(g), -angular_from_ghz(d.Deltat(k, l)),
                 "crosstalk a" + std::to_string(k) + " a" + std::to_string(l) + "+");
  }
}

Generator hamiltonian_full(const SystemParams& p, const SpaceLayout& layout, bool include_errors) {
  const Detunings d = derive_detunings(p);
  const Ops o(layout);
  Generator h(layout.total_dim());
  const auto& g = p.g_mhz;
  h.add_paired((o.ad[0] * o.s_eg).scaled(angular_from_mhz(g[0])), angular_from_ghz(d.delta1), "g1 a1+ s_eg-");
  for (int l = 2; l <= 3; ++l) {
    h.add_paired((o.ad[l - 1] * o.s_fe).scaled(angular_from_mhz(g[l - 1])), -angular_from_ghz(d.delta(l)),
                 "g" + std::to_string(l) + " a" + std::to_string(l) + "+ s_fe-");
  }
  if (include_errors) {
    const auto& gt = p.gt_mhz;
    h.add_paired((o.a[0] * o.s_fe.adjoint()).scaled(angular_from_mhz(gt[0])), -angular_from_ghz(d.deltat1),
                 "gt1 a1 s_fe+");
    for (int l = 2; l <= 3; ++l) {
      h.add_paired((o.a[l - 1] * o.s_eg.adjoint()).scaled(angular_from_mhz(gt[l - 1])),
                   angular_from_ghz(d.deltat(l)), "gt" + std::to_string(l) + " a" + std::to_string(l) + " s_eg+");
    }
    add_crosstalk(h, p, layout, d);
  }
  return h;
}

EffectiveLevel parse_effective_level(const std::string& tag) {
  if (tag == "stark") return EffectiveLevel::stark;
  if (tag == "kerr") return EffectiveLevel::kerr;
  if (tag == "diagonal") return EffectiveLevel::diagonal;
  throw std::invalid_argument("unknown effective Hamiltonian level '" + tag + "' (expected stark, kerr or diagonal)");
}

Generator hamiltonian_effective(const SystemParams& p, const SpaceLayout& layout, EffectiveLevel level,
                                bool include_crosstalk) {
  const Detunings d = derive_detunings(p);
  check_dispersive(p, d);
  const EffectiveRates r = effective_rates(p);
  const Ops o(layout);
  Generator h(layout.total_dim());
  const double lam1 = angular_from_mhz(r.lambda1);
  const std::array<double, 2> chi{angular_from_mhz(r.chi12), angular_from_mhz(r.chi13)};

  if (level == EffectiveLevel::diagonal) {
    SparseOperator diag = (o.n[0] * o.pg).scaled(lam1);
    for (int l = 2; l <= 3; ++l) diag = diag - (o.n[0] * o.n[l - 1] * o.pg).scaled(chi[l - 2]);
    h.add_static(std::move(diag), "lambda1 n1 Pg - sum chi_1l n1 n_l Pg");
  } else {
    const std::array<double, 2> lam_l{angular_from_mhz(r.lambda2), angular_from_mhz(r.lambda3)};
    SparseOperator stark = (o.n[0] * o.pg - o.a[0] * o.ad[0] * o.pe).scaled(lam1);
    for (int l = 2; l <= 3; ++l) {
      stark = stark - (o.n[l - 1] * o.pe - o.a[l - 1] * o.ad[l - 1] * o.pf).scaled(lam_l[l - 2]);
    }
    h.add_static(std::move(stark), "Stark shifts");

    const double delta23 = angular_from_ghz(d.delta3 - d.delta2);
    h.add_paired((o.ad[1] * o.a[2] * (o.pf - o.pe)).scaled(angular_from_mhz(r.lambda23)), delta23,
                 "lambda23 a2+ a3 (Pf - Pe)");

    for (int l = 2; l <= 3; ++l) {
      if (level == EffectiveLevel::stark) {
        h.add_paired((o.ad[0] * o.ad[l - 1] * o.s_fg).scaled(angular_from_mhz(r.lambda1l(l))),
                     -angular_from_ghz(d.Delta1(l)), "lambda1" + std::to_string(l) + " a1+ al+ s_fg-");
      } else {
        const SparseOperator kerr = o.a[0] * o.ad[0] * o.a[l - 1] * o.ad[l - 1] * o.pf - o.n[0] * o.n[l - 1] * o.pg;
        h.add_static(kerr.scaled(chi[l - 2]), "chi1" + std::to_string(l) + " cross-Kerr");
      }
    }
  }
  if (include_crosstalk) add_crosstalk(h, p, layout, d);
  return h;
}

SparseOperator analytic_unitary(const EffectiveRates& rates, const SpaceLayout& layout, double t) {
  const double lam1 = angular_from_mhz(rates.lambda1);
  const double chi12 = angular_from_mhz(rates.chi12);
  const double chi13 = angular_from_mhz(rates.chi13);
  std::vector<cd> diag(layout.total_dim(), cd{1.0});
  for (std::size_t i = 0; i < diag.size(); ++i) {
    const BasisState s = layout.state(i);
    if (s.qutrit != Level::g) continue;
    const double n1 = s.photons[0], n2 = s.photons[1], n3 = s.photons[2];
    diag[i] = std::polar(1.0, (-lam1 * n1 + chi12 * n1 * n2 + chi13 * n1 * n3) * t);
  }
  return SparseOperator::diagonal(diag);
}

}  // namespace catghz
