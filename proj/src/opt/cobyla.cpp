// Copyright 2026 The QVC Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qvc/opt/cobyla.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>

#include "qvc/error.hpp"
#include "qvc/random.hpp"

namespace qvc::opt {

using Eigen::MatrixXd;
using Eigen::VectorXd;

void OptimizerConfig::validate() const {
  if (max_iterations < 1) throw ConfigError("max_iterations must be >= 1");
  if (!(rho_end > 0.0) || !(rho_begin > rho_end) || !std::isfinite(rho_begin)) {
    throw ConfigError("trust region radii must satisfy 0 < rho_end < rho_begin");
  }
}

std::string_view to_string(StopReason reason) noexcept {
  switch (reason) {
    case StopReason::Converged:
      return "converged";
    case StopReason::BudgetExhausted:
      return "budget_exhausted";
    case StopReason::NonFinite:
      return "non_finite";
    case StopReason::Degenerate:
      return "degenerate";
  }
  return "?";
}

namespace detail {

std::vector<double> nnls(std::span<const double> E_data, int rows, int cols, std::span<const double> f_data) {
  const Eigen::Map<const MatrixXd> E(E_data.data(), rows, cols);
  const Eigen::Map<const VectorXd> f(f_data.data(), rows);
  VectorXd x = VectorXd::Zero(cols);
  std::vector<bool> passive(static_cast<std::size_t>(cols), false);
  const double tol = 1e-13 * std::max(1.0, E.cwiseAbs().maxCoeff()) * std::max(1.0, f.cwiseAbs().maxCoeff()) *
                     static_cast<double>(std::max(rows, cols));

  auto solve_passive = [&](VectorXd& z) {
    std::vector<int> idx;
    for (int j = 0; j < cols; ++j) {
      if (passive[static_cast<std::size_t>(j)]) idx.push_back(j);
    }
    MatrixXd Ep(rows, static_cast<Eigen::Index>(idx.size()));
    for (std::size_t k = 0; k < idx.size(); ++k) Ep.col(static_cast<Eigen::Index>(k)) = E.col(idx[k]);
    const VectorXd zp = Ep.colPivHouseholderQr().solve(f);
    z.setZero(cols);
    for (std::size_t k = 0; k < idx.size(); ++k) z(idx[k]) = zp(static_cast<Eigen::Index>(k));
  };

  for (int outer = 0; outer < 3 * cols + 3; ++outer) {
    const VectorXd w = E.transpose() * (f - E * x);
    int best = -1;
    double wmax = tol;
    for (int j = 0; j < cols; ++j) {
      if (!passive[static_cast<std::size_t>(j)] && w(j) > wmax) {
        wmax = w(j);
        best = j;
      }
    }
    if (best < 0) break;
    passive[static_cast<std::size_t>(best)] = true;

    VectorXd z;
    for (int inner = 0; inner < 3 * cols + 3; ++inner) {
      solve_passive(z);
      bool all_positive = true;
      for (int j = 0; j < cols; ++j) {
        if (passive[static_cast<std::size_t>(j)] && z(j) <= 0.0) all_positive = false;
      }
      if (all_positive) break;
      double alpha = 1.0;
      for (int j = 0; j < cols; ++j) {
        if (passive[static_cast<std::size_t>(j)] && z(j) <= 0.0) {
          alpha = std::min(alpha, x(j) / (x(j) - z(j)));
        }
      }
      x += alpha * (z - x);
      for (int j = 0; j < cols; ++j) {
        if (passive[static_cast<std::size_t>(j)] && x(j) <= tol) {
          passive[static_cast<std::size_t>(j)] = false;
          x(j) = 0.0;
        }
      }
    }
    for (int j = 0; j < cols; ++j) x(j) = passive[static_cast<std::size_t>(j)] ? std::max(z(j), 0.0) : 0.0;
  }
  return {x.data(), x.data() + cols};
}

namespace {

// Minimises q.z subject to C^T z >= beta and |z[0:n]| <= rho, starting from
// a feasible z. Moves along the projection of -q onto the cone allowed by
// the active constraints until the optimum or the ball boundary is reached.
bool follow_path(VectorXd& z, const VectorXd& q, const MatrixXd& C, const VectorXd& beta, int n, double rho) {
  const Eigen::Index r = C.cols();
  const double qnorm = q.norm();
  if (qnorm == 0.0) return false;
  VectorXd cnorm(r);
  for (Eigen::Index k = 0; k < r; ++k) cnorm(k) = C.col(k).norm();

  const int max_steps = 4 * static_cast<int>(z.size() + r) + 10;
  for (int step = 0; step < max_steps; ++step) {
    std::vector<Eigen::Index> active;
    for (Eigen::Index k = 0; k < r; ++k) {
      const double slack = C.col(k).dot(z) - beta(k);
      if (slack <= 1e-12 * (std::abs(beta(k)) + rho * cnorm(k) + 1e-300)) active.push_back(k);
    }
    VectorXd s = -q;
    if (!active.empty()) {
      MatrixXd E(z.size(), static_cast<Eigen::Index>(active.size()));
      for (std::size_t k = 0; k < active.size(); ++k) E.col(static_cast<Eigen::Index>(k)) = C.col(active[k]);
      const auto lambda = nnls({E.data(), static_cast<std::size_t>(E.size())}, static_cast<int>(E.rows()),
                               static_cast<int>(E.cols()), {q.data(), static_cast<std::size_t>(q.size())});
      for (std::size_t k = 0; k < active.size(); ++k) s += lambda[k] * E.col(static_cast<Eigen::Index>(k));
    }
    if (s.norm() <= 1e-12 * qnorm) return false;

    double alpha = std::numeric_limits<double>::infinity();
    bool hits_ball = false;
    const auto sd = s.head(n);
    const auto zd = z.head(n);
    const double ss = sd.squaredNorm();
    if (ss > 0.0) {
      const double zs = zd.dot(sd);
      const double room = std::max(0.0, rho * rho - zd.squaredNorm());
      alpha = room / (zs + std::sqrt(zs * zs + ss * room));
      if (!(alpha >= 0.0)) alpha = 0.0;
      hits_ball = true;
    }
    for (Eigen::Index k = 0; k < r; ++k) {
      const double rate = C.col(k).dot(s);
      if (rate >= 0.0 || std::find(active.begin(), active.end(), k) != active.end()) continue;
      const double limit = std::max(0.0, C.col(k).dot(z) - beta(k)) / -rate;
      if (limit < alpha) {
        alpha = limit;
        hits_ball = false;
      }
    }
    if (!std::isfinite(alpha)) return false;
    z += alpha * s;
    if (hits_ball) return true;
  }
  return false;
}

}  // namespace

SubproblemStep solve_trust_region_lp(std::span<const double> g_data, std::span<const double> G_data,
                                     std::span<const double> c_data, double rho) {
  const auto n = static_cast<Eigen::Index>(g_data.size());
  const auto m = static_cast<Eigen::Index>(c_data.size());
  const Eigen::Map<const VectorXd> g(g_data.data(), n);
  const Eigen::Map<const MatrixXd> G(G_data.data(), n, m);
  const Eigen::Map<const VectorXd> c(c_data.data(), m);

  SubproblemStep out;
  VectorXd d = VectorXd::Zero(n);
  double level = 0.0;
  const double worst = m > 0 ? (-c).maxCoeff() : 0.0;
  if (worst > 0.0) {
    // Stage one over (d, t): minimise t with G^T d + t >= -c and t >= 0.
    MatrixXd C = MatrixXd::Zero(n + 1, m + 1);
    C.topLeftCorner(n, m) = G;
    C.row(n).setOnes();
    VectorXd beta(m + 1);
    beta.head(m) = -c;
    beta(m) = 0.0;
    VectorXd z = VectorXd::Zero(n + 1);
    z(n) = worst;
    VectorXd q = VectorXd::Zero(n + 1);
    q(n) = 1.0;
    const bool boundary = follow_path(z, q, C, beta, static_cast<int>(n), rho);
    d = z.head(n);
    level = std::max(0.0, z(n));
    if (boundary && level > 0.0) {
      out.step.assign(d.data(), d.data() + n);
      out.on_boundary = true;
      return out;
    }
  }
  VectorXd beta = -c - VectorXd::Constant(m, level);
  // Stage one may leave a constraint marginally below its level through
  // rounding; relax to the realised value.
  for (Eigen::Index k = 0; k < m; ++k) beta(k) = std::min(beta(k), G.col(k).dot(d));
  out.on_boundary = follow_path(d, g, G, beta, static_cast<int>(n), rho);
  out.step.assign(d.data(), d.data() + n);
  return out;
}

}  // namespace detail

namespace {

constexpr double kAlpha = 0.25;
constexpr double kBeta = 2.1;
constexpr double kGamma = 0.5;
constexpr double kDelta = 1.1;

class Cobyla {
 public:
  Cobyla(const Objective& objective, const Constraints* constraints, int m, std::span<const double> initial,
         const OptimizerConfig& config)
      : objective_(objective),
        constraints_(constraints),
        n_(static_cast<Eigen::Index>(initial.size())),
        m_(m),
        config_(config),
        x_(Eigen::Map<const VectorXd>(initial.data(), n_)),
        con_(m + 2),
        sim_(MatrixXd::Zero(n_, n_ + 1)),
        simi_(MatrixXd::Zero(n_, n_)),
        datmat_(MatrixXd::Zero(m + 2, n_ + 1)),
        a_(n_, m + 1),
        vsig_(n_),
        veta_(n_) {}

  OptimizationResult run();

 private:
  enum class Eval { Ok, Budget, NonFinite };

  Eval evaluate();
  void record_best();
  int select_best_vertex() const;
  void switch_pole(int nbest);
  bool check_inverse();
  void build_linear_models();
  bool simplex_acceptable();
  void replace_vertex(int jdrop, const VectorXd& dx);
  bool better_than_best(double f, double viol) const;

  double merit(Eigen::Index j) const { return datmat_(m_, j) + parmu_ * datmat_(m_ + 1, j); }

  const Objective& objective_;
  const Constraints* constraints_;
  Eigen::Index n_;
  int m_;
  OptimizerConfig config_;

  VectorXd x_;
  VectorXd con_;
  MatrixXd sim_;
  MatrixXd simi_;
  MatrixXd datmat_;
  MatrixXd a_;
  VectorXd vsig_;
  VectorXd veta_;
  double rho_ = 0.0;
  double parmu_ = 0.0;
  int nfvals_ = 0;

  OptimizationResult result_;
  bool have_best_ = false;
};

bool Cobyla::better_than_best(double f, double viol) const {
  if (!have_best_) return true;
  const bool feasible = viol <= 0.0;
  const bool best_feasible = result_.max_violation <= 0.0;
  if (feasible != best_feasible) return feasible;
  if (!feasible) return viol < result_.max_violation || (viol == result_.max_violation && f < result_.best_value);
  return f < result_.best_value;
}

Cobyla::Eval Cobyla::evaluate() {
  if (nfvals_ >= config_.max_iterations) return Eval::Budget;
  ++nfvals_;
  const std::span<const double> xs(x_.data(), static_cast<std::size_t>(n_));
  const double f = objective_(xs);
  double resmax = 0.0;
  bool finite = std::isfinite(f);
  if (m_ > 0) {
    std::vector<double> c(static_cast<std::size_t>(m_));
    (*constraints_)(xs, c);
    for (int k = 0; k < m_; ++k) {
      con_(k) = c[static_cast<std::size_t>(k)];
      finite = finite && std::isfinite(c[static_cast<std::size_t>(k)]);
      resmax = std::max(resmax, -c[static_cast<std::size_t>(k)]);
    }
  }
  con_(m_) = f;
  con_(m_ + 1) = resmax;
  if (!finite) {
    result_.diagnostic = "non-finite objective or constraint value at evaluation " + std::to_string(nfvals_);
    if (!have_best_) {
      result_.best_theta.assign(x_.data(), x_.data() + n_);
      result_.best_value = f;
      result_.max_violation = resmax;
    }
    return Eval::NonFinite;
  }
  if (better_than_best(f, resmax)) {
    have_best_ = true;
    result_.best_theta.assign(x_.data(), x_.data() + n_);
    result_.best_value = f;
    result_.max_violation = resmax;
  }
  result_.trace.push_back({nfvals_, rho_, result_.best_value});
  return Eval::Ok;
}

int Cobyla::select_best_vertex() const {
  int nbest = static_cast<int>(n_);
  double phimin = merit(n_);
  for (Eigen::Index j = 0; j < n_; ++j) {
    const double temp = merit(j);
    if (temp < phimin) {
      nbest = static_cast<int>(j);
      phimin = temp;
    } else if (temp == phimin && parmu_ == 0.0 && datmat_(m_ + 1, j) < datmat_(m_ + 1, nbest)) {
      nbest = static_cast<int>(j);
    }
  }
  return nbest;
}

void Cobyla::switch_pole(int nbest) {
  if (nbest == n_) return;
  datmat_.col(n_).swap(datmat_.col(nbest));
  const VectorXd shift = sim_.col(nbest);
  sim_.col(nbest).setZero();
  sim_.col(n_) += shift;
  for (Eigen::Index k = 0; k < n_; ++k) sim_.col(k) -= shift;
  simi_.row(nbest) = -simi_.colwise().sum();
}

bool Cobyla::check_inverse() {
  const MatrixXd residual = simi_ * sim_.leftCols(n_) - MatrixXd::Identity(n_, n_);
  if (residual.cwiseAbs().maxCoeff() <= 0.1) return true;
  // Rounding has damaged the stored inverse; recompute it directly.
  Eigen::FullPivLU<MatrixXd> lu(sim_.leftCols(n_));
  if (!lu.isInvertible()) return false;
  simi_ = lu.inverse();
  return simi_.allFinite();
}

void Cobyla::build_linear_models() {
  for (int k = 0; k <= m_; ++k) {
    const double base = datmat_(k, n_);
    VectorXd w = datmat_.row(k).head(n_).transpose() - VectorXd::Constant(n_, base);
    VectorXd grad = simi_.transpose() * w;
    a_.col(k) = k == m_ ? VectorXd(-grad) : grad;
  }
}

bool Cobyla::simplex_acceptable() {
  const double parsig = kAlpha * rho_;
  const double pareta = kBeta * rho_;
  bool ok = true;
  for (Eigen::Index j = 0; j < n_; ++j) {
    vsig_(j) = 1.0 / simi_.row(j).norm();
    veta_(j) = sim_.col(j).norm();
    if (vsig_(j) < parsig || veta_(j) > pareta) ok = false;
  }
  return ok;
}

void Cobyla::replace_vertex(int jdrop, const VectorXd& dx) {
  sim_.col(jdrop) = dx;
  const double temp = simi_.row(jdrop).dot(dx);
  simi_.row(jdrop) /= temp;
  for (Eigen::Index j = 0; j < n_; ++j) {
    if (j == jdrop) continue;
    const double t = simi_.row(j).dot(dx);
    simi_.row(j) -= t * simi_.row(jdrop);
  }
}

OptimizationResult Cobyla::run() {
  rho_ = config_.rho_begin;
  const double rhoend = config_.rho_end;
  for (Eigen::Index i = 0; i < n_; ++i) {
    sim_(i, i) = rho_;
    simi_(i, i) = 1.0 / rho_;
  }
  sim_.col(n_) = x_;

  auto finish = [&](StopReason reason) {
    result_.reason = reason;
    result_.converged = reason == StopReason::Converged;
    result_.evaluations_used = nfvals_;
    return std::move(result_);
  };
  auto eval_status = [&](Eval e) {
    return e == Eval::Budget ? StopReason::BudgetExhausted : StopReason::NonFinite;
  };

  // Initial simplex: the base point, then one step of rho along each axis,
  // keeping the best vertex in pole position.
  for (Eigen::Index jdrop = n_; ; ) {
    if (const Eval e = evaluate(); e != Eval::Ok) return finish(eval_status(e));
    datmat_.col(jdrop) = con_;
    if (jdrop < n_) {
      if (datmat_(m_, n_) <= con_(m_)) {
        x_(jdrop) = sim_(jdrop, n_);
      } else {
        sim_(jdrop, n_) = x_(jdrop);
        datmat_.col(jdrop) = datmat_.col(n_);
        datmat_.col(n_) = con_;
        for (Eigen::Index k = 0; k <= jdrop; ++k) {
          sim_(jdrop, k) = -rho_;
          double temp = 0.0;
          for (Eigen::Index i = k; i <= jdrop; ++i) temp -= simi_(i, k);
          simi_(jdrop, k) = temp;
        }
      }
    }
    if (nfvals_ > n_) break;
    jdrop = nfvals_ - 1;
    x_(jdrop) += rho_;
  }

  bool trust_branch = true;
  bool acceptable = true;
  VectorXd dx(n_);
  double prerec = 0.0, prerem = 0.0;

  while (true) {
    switch_pole(select_best_vertex());
    if (!check_inverse()) {
      result_.diagnostic = "simplex became degenerate and could not be repaired";
      return finish(StopReason::Degenerate);
    }
    build_linear_models();
    acceptable = simplex_acceptable();

    bool reduce_step = false;
    if (!trust_branch && !acceptable) {
      // Geometry step: replace the vertex that most damages acceptability.
      const double pareta = kBeta * rho_;
      Eigen::Index jdrop = -1;
      double temp = pareta;
      for (Eigen::Index j = 0; j < n_; ++j) {
        if (veta_(j) > temp) {
          jdrop = j;
          temp = veta_(j);
        }
      }
      if (jdrop < 0) {
        for (Eigen::Index j = 0; j < n_; ++j) {
          if (vsig_(j) < temp) {
            jdrop = j;
            temp = vsig_(j);
          }
        }
      }
      dx = (kGamma * rho_ * vsig_(jdrop)) * simi_.row(jdrop).transpose();
      double cvmaxp = 0.0, cvmaxm = 0.0, sum = 0.0;
      for (int k = 0; k <= m_; ++k) {
        sum = a_.col(k).dot(dx);
        if (k < m_) {
          const double t = datmat_(k, n_);
          cvmaxp = std::max(cvmaxp, -sum - t);
          cvmaxm = std::max(cvmaxm, sum - t);
        }
      }
      if (parmu_ * (cvmaxp - cvmaxm) > sum + sum) dx = -dx;
      replace_vertex(static_cast<int>(jdrop), dx);
      x_ = sim_.col(n_) + dx;
      if (const Eval e = evaluate(); e != Eval::Ok) return finish(eval_status(e));
      datmat_.col(jdrop) = con_;
      trust_branch = true;
      continue;
    }

    // Trust-region step from the linear models.
    std::vector<double> gvec(static_cast<std::size_t>(n_));
    for (Eigen::Index i = 0; i < n_; ++i) gvec[static_cast<std::size_t>(i)] = -a_(i, m_);
    MatrixXd Gc = a_.leftCols(m_);
    VectorXd cvals(m_);
    for (int k = 0; k < m_; ++k) cvals(k) = datmat_(k, n_);
    const auto sub = detail::solve_trust_region_lp(
        gvec, {Gc.data(), static_cast<std::size_t>(Gc.size())}, {cvals.data(), static_cast<std::size_t>(m_)}, rho_);
    dx = Eigen::Map<const VectorXd>(sub.step.data(), n_);

    if (!sub.on_boundary && dx.squaredNorm() < 0.25 * rho_ * rho_) {
      trust_branch = true;
      reduce_step = true;
    } else {
      double resnew = 0.0;
      double sum = 0.0;
      for (int k = 0; k < m_; ++k) resnew = std::max(resnew, -datmat_(k, n_) - a_.col(k).dot(dx));
      sum = -a_.col(m_).dot(dx);
      double barmu = 0.0;
      prerec = datmat_(m_ + 1, n_) - resnew;
      if (prerec > 0.0) barmu = sum / prerec;
      if (parmu_ < 1.5 * barmu) {
        parmu_ = 2.0 * barmu;
        const double phi = merit(n_);
        bool moved = false;
        for (Eigen::Index j = 0; j < n_ && !moved; ++j) {
          const double temp = merit(j);
          if (temp < phi) moved = true;
          if (temp == phi && parmu_ == 0.0 && datmat_(m_ + 1, j) < datmat_(m_ + 1, n_)) moved = true;
        }
        if (moved) continue;
      }
      prerem = parmu_ * prerec - sum;

      x_ = sim_.col(n_) + dx;
      trust_branch = true;
      if (const Eval e = evaluate(); e != Eval::Ok) return finish(eval_status(e));

      const double vmold = merit(n_);
      const double vmnew = con_(m_) + parmu_ * con_(m_ + 1);
      double trured = vmold - vmnew;
      if (parmu_ == 0.0 && con_(m_) == datmat_(m_, n_)) {
        prerem = prerec;
        trured = datmat_(m_ + 1, n_) - con_(m_ + 1);
      }

      double ratio = trured <= 0.0 ? 1.0 : 0.0;
      Eigen::Index jdrop = -1;
      VectorXd sigbar(n_);
      for (Eigen::Index j = 0; j < n_; ++j) {
        const double temp = std::abs(simi_.row(j).dot(dx));
        if (temp > ratio) {
          jdrop = j;
          ratio = temp;
        }
        sigbar(j) = temp * vsig_(j);
      }
      const double parsig = kAlpha * rho_;
      double edgmax = kDelta * rho_;
      Eigen::Index ell = -1;
      for (Eigen::Index j = 0; j < n_; ++j) {
        if (sigbar(j) >= parsig || sigbar(j) >= vsig_(j)) {
          double temp = veta_(j);
          if (trured > 0.0) temp = (dx - sim_.col(j)).norm();
          if (temp > edgmax) {
            ell = j;
            edgmax = temp;
          }
        }
      }
      if (ell >= 0) jdrop = ell;
      if (jdrop < 0) {
        reduce_step = true;
      } else {
        replace_vertex(static_cast<int>(jdrop), dx);
        datmat_.col(jdrop) = con_;
        if (trured > 0.0 && trured >= 0.1 * prerem) continue;
        reduce_step = true;
      }
    }

    if (reduce_step) {
      if (!acceptable) {
        trust_branch = false;
        continue;
      }
      if (rho_ <= rhoend) return finish(StopReason::Converged);
      rho_ *= 0.5;
      if (rho_ <= 1.5 * rhoend) rho_ = rhoend;
      if (parmu_ > 0.0) {
        double denom = 0.0;
        double cmin = 0.0, cmax = 0.0;
        for (int k = 0; k <= m_; ++k) {
          cmin = datmat_(k, n_);
          cmax = cmin;
          for (Eigen::Index i = 0; i < n_; ++i) {
            cmin = std::min(cmin, datmat_(k, i));
            cmax = std::max(cmax, datmat_(k, i));
          }
          if (k < m_ && cmin < 0.5 * cmax) {
            const double temp = std::max(cmax, 0.0) - cmin;
            denom = denom <= 0.0 ? temp : std::min(denom, temp);
          }
        }
        if (denom == 0.0) {
          parmu_ = 0.0;
        } else if (cmax - cmin < parmu_ * denom) {
          parmu_ = (cmax - cmin) / denom;
        }
      }
    }
  }
}

OptimizationResult run_cobyla(const Objective& objective, const Constraints* constraints, int m,
                              std::span<const double> initial, const OptimizerConfig& config) {
  config.validate();
  if (initial.empty()) throw UsageError("COBYLA needs at least one variable");
  if (m < 0) throw UsageError("negative constraint count");
  Cobyla solver(objective, constraints, m, initial, config);
  OptimizationResult result = solver.run();
  if (config.trace_path) write_trace_csv(result.trace, *config.trace_path);
  return result;
}

}  // namespace

OptimizationResult minimize(const Objective& objective, std::span<const double> initial,
                            const OptimizerConfig& config) {
  return run_cobyla(objective, nullptr, 0, initial, config);
}

OptimizationResult minimize_constrained(const Objective& objective, const Constraints& constraints,
                                        int num_constraints, std::span<const double> initial,
                                        const OptimizerConfig& config) {
  return run_cobyla(objective, &constraints, num_constraints, initial, config);
}

std::vector<double> initial_theta(int num_params, std::uint64_t seed) {
  if (num_params < 1) throw UsageError("initial_theta needs num_params >= 1");
  Rng rng(seed);
  std::vector<double> theta(static_cast<std::size_t>(num_params));
  for (auto& t : theta) t = uniform(rng, -std::numbers::pi, std::numbers::pi);
  return theta;
}

void write_trace_csv(const std::vector<TraceEntry>& trace, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write trace " + path.string());
  out.precision(17);
  out << "iteration,rho,best_value\n";
  for (const auto& e : trace) out << e.iteration << ',' << e.rho << ',' << e.best_value << '\n';
}

}  // namespace qvc::opt
