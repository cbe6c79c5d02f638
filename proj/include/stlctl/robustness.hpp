#pragma once

#include "stlctl/formula.hpp"
#include "stlctl/trace.hpp"

namespace stlctl {

enum class Semantics { Traditional, Agm };

struct RobustnessValue {
  double value = 0.0;
  Semantics semantics = Semantics::Agm;
};

/* Thrown when a trace does not cover the samples a formula needs. */
class TraceTooShort : public std::runtime_error {
 public:
  TraceTooShort(int required_end, int available_end)
      : std::runtime_error("trace too short: evaluation needs samples up to time " +
                           std::to_string(required_end) + " but trace ends at " +
                           std::to_string(available_end)),
        required_end(required_end),
        available_end(available_end) {}
  int required_end;
  int available_end;
};

/* Qualitative satisfaction of f over tr at absolute time k. Ground-truth
 * oracle for the quantitative semantics' soundness.
 */
bool eval_boolean(const Formula& f, const Trace& tr, int k);

/* Traditional min/max robustness: predicate value l(s_k) raw (unscaled),
 * negation negates, And/G take the window minimum, Or/F the maximum.
 * True evaluates to +infinity (neutral element of min).
 */
RobustnessValue eval_robustness_traditional(const Formula& f, const Trace& tr, int k);

/* Arithmetic-geometric-mean robustness, valued in [-1, 1]:
 *   predicate      clamp(l(s_k)/scale, -1, 1)
 *   negation       -eta(child)
 *   conjunction    all children > 0 : (prod(1 + eta_i))^(1/m) - 1
 *                  otherwise        : (1/m) * sum of the eta_i <= 0
 *   disjunction    all children <= 0: 1 - (prod(1 - eta_i))^(1/m)
 *                  otherwise        : (1/m) * sum of the eta_i > 0
 *   G_[a,b] / F_[a,b]  conjunction / disjunction over the window samples
 *   True           1
 */
RobustnessValue eval_robustness_agm(const Formula& f, const Trace& tr, int k);

/* AGM robustness of the concatenation history||tail evaluated at time 0.
 * history must start at 0 and tail must start where the history ends.
 */
RobustnessValue eval_robustness_with_history(const Formula& f, const Trace& history,
                                             const Trace& tail);

}  // namespace stlctl
