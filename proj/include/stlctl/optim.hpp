#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "stlctl/formula.hpp"
#include "stlctl/robustness.hpp"
#include "stlctl/systems.hpp"

namespace stlctl {

/* Generic constrained program: minimize objective over the box subject to
 * every inequality constraint being strictly positive.
 */
struct NlpProblem {
  std::function<double(const Vec&)> objective;
  std::vector<std::function<double(const Vec&)>> inequality_constraints;
  Vec lower;
  Vec upper;
  int dim = 0;
};

struct OptimizerSettings {
  int max_iters = 200;
  double grad_step = 1e-5;
  double tol = 1e-6;
  int restarts = 5;
  uint64_t seed = 0;
};

struct MinimizeResult {
  Vec x;
  double value = 0.0;
  bool feasible = false;
};

/* Projected-gradient descent with an exterior quadratic penalty escalated
 * over three rounds and a final feasibility polish. Always returns the best
 * point found; when x0 is feasible the returned objective never exceeds
 * objective(x0).
 */
MinimizeResult minimize(const NlpProblem& p, const Vec& x0, const OptimizerSettings& s);

/* Central finite differences, falling back to one-sided steps at the box
 * boundary when bounds are supplied.
 */
Vec finite_diff_gradient(const std::function<double(const Vec&)>& f, const Vec& x, double h,
                         const Vec* lower = nullptr, const Vec* upper = nullptr);

Vec flatten_controls(const std::vector<Vec>& seq);
std::vector<Vec> unflatten_controls(const Vec& x, int control_dim);

/* Robustness-maximizing reference control over the remaining full horizon:
 * at time k, given the recorded history q_0..q_{k-1} and current state q_k,
 * find u_{k:K-1} maximizing the AGM robustness of the concatenated
 * trajectory minus lambda times the summed control cost 0.5*||u||^2.
 */
struct ReferenceProblem {
  SystemModel model;
  Formula formula = Formula::truth();
  double lambda = 0.0;
  Trace history;      // absolute times 0..k-1; empty when k = 0
  Vec current_state;  // q_k
  int k = 0;
  int K = 0;  // final horizon, >= horizon(formula)
};

std::vector<Vec> solve_reference_control(const ReferenceProblem& rp, const OptimizerSettings& s,
                                         const std::vector<Vec>* warm_start = nullptr);

/* Receding-horizon reference control for formulas G_[0,k1] phi: maximizes
 * the robustness of G over the prediction window while constraining the
 * h_phi - 1 previous overlapping phi-windows to stay strictly positive
 * (recursive feasibility). Window lengths shrink near the start and end of
 * the task per the boundary handling described in the implementation.
 */
struct MpcProblem {
  SystemModel model;
  Formula phi = Formula::truth();  // inner formula; h_phi = horizon(phi)
  int k1 = 0;
  int h_p = 0;
  double lambda = 0.0;
  std::vector<Vec> history_window;  // states at times k-h_phi+1 .. k-1 (clipped at 0)
  Vec current_state;                // q_k
  int k = 0;
  double constraint_margin = 1e-6;  // required robustness floor for kept windows
};

struct MpcSolution {
  std::vector<Vec> controls;  // length H = min(h_p + h_phi, K - k)
  bool feasible = true;       // all recursive-feasibility constraints strictly positive
};

MpcSolution solve_reference_control_mpc(const MpcProblem& mp, const OptimizerSettings& s,
                                        const std::vector<Vec>* warm_start = nullptr);

}  // namespace stlctl
