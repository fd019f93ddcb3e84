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

// Dense convex QP solver for
//
//   minimize    1/2 z' P z + q' z
//   subject to  A z <= b
//
// using ADMM in the operator-splitting form with one cached Cholesky
// factorization of (P + sigma I + rho A'A), Ruiz equilibration and adaptive
// rho. Once the ADMM residuals are small, the active set is guessed from the
// iterates and refined by solving the equality-constrained KKT system, so an
// Optimal return carries a tight KKT certificate.

#ifndef NATSET_QP_SOLVER_H_
#define NATSET_QP_SOLVER_H_

#include <optional>
#include <string_view>

#include <Eigen/Core>

namespace natset {

struct QuadraticProgram {
  Eigen::MatrixXd P;  // n x n, symmetric positive semidefinite
  Eigen::VectorXd q;  // n
  Eigen::MatrixXd A;  // k x n
  Eigen::VectorXd b;  // k

  int num_variables() const { return static_cast<int>(q.size()); }
  int num_constraints() const { return static_cast<int>(b.size()); }
  double Objective(const Eigen::VectorXd& z) const {
    return 0.5 * z.dot(P * z) + q.dot(z);
  }
};

struct SolverSettings {
  double rho = 1.0;
  int max_iter = 20000;
  double eps_abs = 1e-7;
  double eps_rel = 1e-7;
  // Over-relaxation, in (0, 2).
  double alpha = 1.6;
  // Proximal regularization on the primal variable.
  double sigma = 1e-6;
  bool polish = true;
};

enum class QPStatus { kOptimal, kMaxIter, kInfeasible };

std::string_view ToString(QPStatus status);

struct QPSolution {
  Eigen::VectorXd z;
  // Multipliers of A z <= b; non-negative at an optimum.
  Eigen::VectorXd dual;
  double objective = 0.0;
  QPStatus status = QPStatus::kMaxIter;
  int iterations = 0;
  double primal_residual = 0.0;
  double dual_residual = 0.0;
};

struct WarmStart {
  Eigen::VectorXd z;
  Eigen::VectorXd dual;
};

// Complementary slackness and dual sign tolerances of the certificate.
inline constexpr double kComplementarityTol = 1e-6;
inline constexpr double kDualSignTol = 1e-9;

struct KktReport {
  double stationarity = 0.0;      // ||P z + q + A' lambda||_inf
  double primal_violation = 0.0;  // max(A z - b), or -inf without rows
  double complementarity = 0.0;   // max |lambda_i (A_i z - b_i)|
  double min_dual = 0.0;          // min lambda_i, or +inf without rows
  bool satisfied = false;
};

// Evaluates the optimality certificate:
//   stationarity    <= eps_abs (1 + ||q||_inf)
//   primal_violation <= eps_abs
//   complementarity <= kComplementarityTol
//   min_dual        >= -kDualSignTol
KktReport CheckKkt(const QuadraticProgram& qp, const Eigen::VectorXd& z,
                   const Eigen::VectorXd& dual, double eps_abs);

// Throws DimensionMismatch on inconsistent shapes and InvalidArgument when P
// is not symmetric (1e-10) or has an eigenvalue below -1e-8.
void ValidateProblem(const QuadraticProgram& qp);

// Throws InvalidArgument for settings outside their domains.
void ValidateSettings(const SolverSettings& settings);

QPSolution Solve(const QuadraticProgram& qp,
                 const SolverSettings& settings = {},
                 const std::optional<WarmStart>& warm_start = std::nullopt);

}  // namespace natset

#endif  // NATSET_QP_SOLVER_H_
