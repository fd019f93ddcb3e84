// Copyright 2026 The Natset Authors
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

#include "natset/qp_solver.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include "natset/errors.h"

namespace natset {
namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

constexpr int kRuizIterations = 25;
constexpr double kMinScaling = 1e-4;
constexpr double kMaxScaling = 1e4;
constexpr double kMinRho = 1e-6;
constexpr double kMaxRho = 1e6;
constexpr double kRhoUpdateRatio = 5.0;
constexpr int kCheckEvery = 5;
constexpr int kRhoUpdateEvery = 25;
constexpr double kInfeasibilityTol = 1e-5;
constexpr double kPolishRegularization = 1e-10;
constexpr int kPolishRefinements = 5;
constexpr int kActiveSetPasses = 25;

double InfNorm(const VectorXd& v) {
  return v.size() == 0 ? 0.0 : v.lpNorm<Eigen::Infinity>();
}

double ClampScale(double norm) {
  if (norm < kMinScaling) return 1.0;
  return std::min(norm, kMaxScaling);
}

// Equilibrated copy of a problem: Pbar = c D P D, qbar = c D q,
// Abar = E A D, bbar = E b, with z = D zbar and lambda = E ybar / c.
struct ScaledProblem {
  MatrixXd P;
  VectorXd q;
  MatrixXd A;
  VectorXd b;
  VectorXd D;
  VectorXd E;
  double c = 1.0;

  VectorXd UnscaleZ(const VectorXd& xbar) const { return D.cwiseProduct(xbar); }
  VectorXd UnscaleDual(const VectorXd& ybar) const {
    return E.cwiseProduct(ybar) / c;
  }
};

ScaledProblem Equilibrate(const QuadraticProgram& qp) {
  const int n = qp.num_variables();
  const int k = qp.num_constraints();
  ScaledProblem s{qp.P, qp.q, qp.A, qp.b, VectorXd::Ones(n), VectorXd::Ones(k),
                  1.0};
  for (int iter = 0; iter < kRuizIterations; ++iter) {
    VectorXd delta(n), eps(k);
    for (int j = 0; j < n; ++j) {
      double norm = s.P.col(j).lpNorm<Eigen::Infinity>();
      if (k > 0) norm = std::max(norm, s.A.col(j).lpNorm<Eigen::Infinity>());
      delta(j) = 1.0 / std::sqrt(ClampScale(norm));
    }
    for (int i = 0; i < k; ++i) {
      eps(i) = 1.0 / std::sqrt(ClampScale(s.A.row(i).lpNorm<Eigen::Infinity>()));
    }
    s.P = delta.asDiagonal() * s.P * delta.asDiagonal();
    s.q = delta.cwiseProduct(s.q);
    if (k > 0) {
      s.A = eps.asDiagonal() * s.A * delta.asDiagonal();
      s.b = eps.cwiseProduct(s.b);
    }
    s.D = s.D.cwiseProduct(delta);
    s.E = s.E.cwiseProduct(eps);

    double mean_col = 0.0;
    for (int j = 0; j < n; ++j) mean_col += s.P.col(j).lpNorm<Eigen::Infinity>();
    mean_col = n > 0 ? mean_col / n : 0.0;
    const double cost = 1.0 / ClampScale(std::max(mean_col, InfNorm(s.q)));
    s.P *= cost;
    s.q *= cost;
    s.c *= cost;
  }
  return s;
}

// Cholesky of Pbar + sigma I + rho Abar'Abar, jittered on failure.
Eigen::LLT<MatrixXd> FactorAdmmMatrix(const ScaledProblem& s,
                                      const MatrixXd& ata, double sigma,
                                      double rho) {
  const int n = static_cast<int>(s.q.size());
  MatrixXd K = s.P + rho * ata;
  K.diagonal().array() += sigma;
  Eigen::LLT<MatrixXd> llt(K);
  double jitter = 1e-10;
  while (llt.info() != Eigen::Success && jitter < 1.0) {
    MatrixXd Kj = K + jitter * MatrixXd::Identity(n, n);
    llt.compute(Kj);
    jitter *= 100.0;
  }
  if (llt.info() != Eigen::Success) {
    throw SolverFailure("ADMM system matrix could not be factorized");
  }
  return llt;
}

struct Candidate {
  VectorXd z;
  VectorXd dual;
};

// Solves the equality-constrained KKT system for a guessed active set in the
// scaled space and refines the guess by dropping negative multipliers and
// adding violated rows until the certificate holds or the set stops moving.
std::optional<Candidate> Polish(const QuadraticProgram& qp,
                                const ScaledProblem& s,
                                std::vector<bool> active, double eps_abs) {
  const int n = static_cast<int>(s.q.size());
  const int k = static_cast<int>(s.b.size());
  for (int pass = 0; pass < kActiveSetPasses; ++pass) {
    std::vector<int> rows;
    for (int i = 0; i < k; ++i) {
      if (active[i]) rows.push_back(i);
    }
    const int m = static_cast<int>(rows.size());
    MatrixXd kkt = MatrixXd::Zero(n + m, n + m);
    VectorXd rhs(n + m);
    kkt.topLeftCorner(n, n) = s.P;
    rhs.head(n) = -s.q;
    for (int r = 0; r < m; ++r) {
      kkt.block(n + r, 0, 1, n) = s.A.row(rows[r]);
      kkt.block(0, n + r, n, 1) = s.A.row(rows[r]).transpose();
      rhs(n + r) = s.b(rows[r]);
    }
    MatrixXd regularized = kkt;
    regularized.diagonal().head(n).array() += kPolishRegularization;
    regularized.diagonal().tail(m).array() -= kPolishRegularization;
    const Eigen::PartialPivLU<MatrixXd> lu(regularized);
    VectorXd sol = lu.solve(rhs);
    for (int it = 0; it < kPolishRefinements; ++it) {
      sol += lu.solve(rhs - kkt * sol);
    }
    if (!sol.allFinite()) return std::nullopt;

    VectorXd ybar = VectorXd::Zero(k);
    for (int r = 0; r < m; ++r) ybar(rows[r]) = sol(n + r);
    Candidate cand{s.UnscaleZ(sol.head(n)), s.UnscaleDual(ybar)};
    if (CheckKkt(qp, cand.z, cand.dual, eps_abs).satisfied) return cand;

    const VectorXd slack = qp.A * cand.z - qp.b;
    bool changed = false;
    for (int i = 0; i < k; ++i) {
      if (active[i] && cand.dual(i) < -kDualSignTol) {
        active[i] = false;
        changed = true;
      } else if (!active[i] && slack(i) > 0.1 * eps_abs) {
        active[i] = true;
        changed = true;
      }
    }
    if (!changed) return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

std::string_view ToString(QPStatus status) {
  switch (status) {
    case QPStatus::kOptimal:
      return "Optimal";
    case QPStatus::kMaxIter:
      return "MaxIter";
    case QPStatus::kInfeasible:
      return "Infeasible";
  }
  return "Unknown";
}

KktReport CheckKkt(const QuadraticProgram& qp, const VectorXd& z,
                   const VectorXd& dual, double eps_abs) {
  KktReport r;
  const int k = qp.num_constraints();
  VectorXd grad = qp.P * z + qp.q;
  if (k > 0) grad += qp.A.transpose() * dual;
  r.stationarity = InfNorm(grad);
  if (k > 0) {
    const VectorXd slack = qp.A * z - qp.b;
    r.primal_violation = slack.maxCoeff();
    r.complementarity = dual.cwiseProduct(slack).cwiseAbs().maxCoeff();
    r.min_dual = dual.minCoeff();
  } else {
    r.primal_violation = -std::numeric_limits<double>::infinity();
    r.complementarity = 0.0;
    r.min_dual = std::numeric_limits<double>::infinity();
  }
  r.satisfied = std::isfinite(r.stationarity) &&
                r.stationarity <= eps_abs * (1.0 + InfNorm(qp.q)) &&
                r.primal_violation <= eps_abs &&
                r.complementarity <= kComplementarityTol &&
                r.min_dual >= -kDualSignTol;
  return r;
}

void ValidateProblem(const QuadraticProgram& qp) {
  const auto n = qp.q.size();
  const auto k = qp.b.size();
  if (qp.P.rows() != n || qp.P.cols() != n) {
    throw DimensionMismatch("P must be " + std::to_string(n) + " x " +
                            std::to_string(n));
  }
  if (qp.A.rows() != k || (k > 0 && qp.A.cols() != n)) {
    throw DimensionMismatch("A must be " + std::to_string(k) + " x " +
                            std::to_string(n));
  }
  if (!qp.P.allFinite() || !qp.q.allFinite() || !qp.A.allFinite() ||
      !qp.b.allFinite()) {
    throw InvalidArgument("QP data must be finite");
  }
  if (n == 0) return;
  if ((qp.P - qp.P.transpose()).cwiseAbs().maxCoeff() > 1e-10) {
    throw InvalidArgument("P is not symmetric");
  }
  const Eigen::SelfAdjointEigenSolver<MatrixXd> eig(qp.P,
                                                    Eigen::EigenvaluesOnly);
  if (eig.eigenvalues().minCoeff() < -1e-8) {
    throw InvalidArgument("P is not positive semidefinite");
  }
}

void ValidateSettings(const SolverSettings& settings) {
  if (!(settings.rho > 0.0) || settings.max_iter <= 0 ||
      !(settings.eps_abs > 0.0) || !(settings.eps_rel > 0.0) ||
      !(settings.sigma > 0.0)) {
    throw InvalidArgument("solver settings must be positive");
  }
  if (!(settings.alpha > 0.0 && settings.alpha < 2.0)) {
    throw InvalidArgument("over-relaxation alpha must lie in (0, 2)");
  }
}

QPSolution Solve(const QuadraticProgram& qp, const SolverSettings& settings,
                 const std::optional<WarmStart>& warm_start) {
  ValidateProblem(qp);
  ValidateSettings(settings);
  const int n = qp.num_variables();
  const int k = qp.num_constraints();

  auto finish = [&](VectorXd z, VectorXd dual, QPStatus status, int iters,
                    double prim, double dual_res) {
    QPSolution sol;
    sol.objective = qp.Objective(z);
    sol.z = std::move(z);
    sol.dual = std::move(dual);
    sol.status = status;
    sol.iterations = iters;
    sol.primal_residual = prim;
    sol.dual_residual = dual_res;
    return sol;
  };

  if (warm_start) {
    if (warm_start->z.size() != n || warm_start->dual.size() != k) {
      throw DimensionMismatch("warm start does not match the problem size");
    }
    const KktReport r =
        CheckKkt(qp, warm_start->z, warm_start->dual, settings.eps_abs);
    if (r.satisfied) {
      return finish(warm_start->z, warm_start->dual, QPStatus::kOptimal, 0,
                    std::max(r.primal_violation, 0.0), r.stationarity);
    }
  }

  const ScaledProblem s = Equilibrate(qp);
  const MatrixXd ata = s.A.transpose() * s.A;
  double rho = settings.rho;
  Eigen::LLT<MatrixXd> llt = FactorAdmmMatrix(s, ata, settings.sigma, rho);

  VectorXd x = VectorXd::Zero(n);
  VectorXd y = VectorXd::Zero(k);
  if (warm_start) {
    x = warm_start->z.cwiseQuotient(s.D);
    y = s.c * warm_start->dual.cwiseQuotient(s.E);
  }
  VectorXd z = (s.A * x).cwiseMin(s.b);

  const VectorXd d_inv = s.D.cwiseInverse();
  const VectorXd e_inv = s.E.cwiseInverse();
  const double alpha = settings.alpha;
  const double sigma = settings.sigma;

  double polish_factor = 100.0;
  int next_polish_iter = 0;
  double tighten = 1.0;
  double prim_res = std::numeric_limits<double>::infinity();
  double dual_res = std::numeric_limits<double>::infinity();

  for (int iter = 1; iter <= settings.max_iter; ++iter) {
    const VectorXd y_prev = y;
    const VectorXd rhs = sigma * x - s.q + s.A.transpose() * (rho * z - y);
    const VectorXd x_tilde = llt.solve(rhs);
    const VectorXd z_tilde = s.A * x_tilde;
    x = alpha * x_tilde + (1.0 - alpha) * x;
    const VectorXd z_relaxed = alpha * z_tilde + (1.0 - alpha) * z;
    z = (z_relaxed + y / rho).cwiseMin(s.b);
    y += rho * (z_relaxed - z);

    if (iter % kCheckEvery != 0 && iter != settings.max_iter) continue;

    const VectorXd ax = s.A * x;
    const VectorXd px = s.P * x;
    const VectorXd aty = s.A.transpose() * y;
    prim_res = k > 0 ? InfNorm(e_inv.cwiseProduct(ax - z)) : 0.0;
    dual_res = InfNorm(d_inv.cwiseProduct(px + s.q + aty)) / s.c;
    const double prim_scale = k > 0 ? std::max(InfNorm(e_inv.cwiseProduct(ax)),
                                               InfNorm(e_inv.cwiseProduct(z)))
                                    : 0.0;
    const double dual_scale =
        std::max({InfNorm(d_inv.cwiseProduct(px)),
                  InfNorm(d_inv.cwiseProduct(aty)),
                  InfNorm(d_inv.cwiseProduct(s.q))}) /
        s.c;
    const double eps_prim = settings.eps_abs + settings.eps_rel * prim_scale;
    const double eps_dual = settings.eps_abs + settings.eps_rel * dual_scale;
    auto converged = [&](double factor) {
      return prim_res <= factor * eps_prim && dual_res <= factor * eps_dual;
    };

    // Primal infeasibility certificate from the dual iterate difference.
    if (k > 0) {
      const VectorXd dy = s.E.cwiseProduct(y - y_prev);
      const double dy_norm = InfNorm(dy);
      if (dy_norm > 1e-12) {
        const VectorXd at_dy =
            d_inv.cwiseProduct(s.A.transpose() * (y - y_prev));
        const double support = qp.b.dot(dy.cwiseMax(0.0));
        if (InfNorm(at_dy) <= kInfeasibilityTol * dy_norm &&
            support < -kInfeasibilityTol * dy_norm) {
          return finish(s.UnscaleZ(x), s.UnscaleDual(y), QPStatus::kInfeasible,
                        iter, prim_res, dual_res);
        }
      }
    }

    if (settings.polish && iter >= next_polish_iter &&
        converged(polish_factor)) {
      std::vector<bool> active(k);
      for (int i = 0; i < k; ++i) active[i] = s.b(i) - z(i) < y(i);
      if (auto cand = Polish(qp, s, std::move(active), settings.eps_abs)) {
        const KktReport r = CheckKkt(qp, cand->z, cand->dual, settings.eps_abs);
        return finish(std::move(cand->z), std::move(cand->dual),
                      QPStatus::kOptimal, iter, std::max(r.primal_violation, 0.0),
                      r.stationarity);
      }
      if (polish_factor > 1.0) {
        polish_factor /= 10.0;
      } else {
        next_polish_iter = iter + 200;
      }
    }

    if (converged(tighten)) {
      VectorXd z_out = s.UnscaleZ(x);
      VectorXd dual_out = s.UnscaleDual(y);
      if (CheckKkt(qp, z_out, dual_out, settings.eps_abs).satisfied) {
        return finish(std::move(z_out), std::move(dual_out), QPStatus::kOptimal,
                      iter, prim_res, dual_res);
      }
      tighten = std::max(tighten * 0.1, 1e-6);
    }

    if (iter % kRhoUpdateEvery == 0 && k > 0) {
      const double prim_norm = std::max(InfNorm(ax), InfNorm(z));
      const double dual_norm =
          std::max({InfNorm(px), InfNorm(aty), InfNorm(s.q)});
      const double prim_ratio = InfNorm(ax - z) / std::max(prim_norm, 1e-30);
      const double dual_ratio =
          InfNorm(px + s.q + aty) / std::max(dual_norm, 1e-30);
      if (dual_ratio > 1e-30 && prim_ratio > 1e-30) {
        const double rho_new = std::clamp(
            rho * std::sqrt(prim_ratio / dual_ratio), kMinRho, kMaxRho);
        if (rho_new > kRhoUpdateRatio * rho || rho_new < rho / kRhoUpdateRatio) {
          rho = rho_new;
          llt = FactorAdmmMatrix(s, ata, sigma, rho);
        }
      }
    }
  }
  return finish(s.UnscaleZ(x), s.UnscaleDual(y), QPStatus::kMaxIter,
                settings.max_iter, prim_res, dual_res);
}

}  // namespace natset
