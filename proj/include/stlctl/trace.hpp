#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>
#include <vector>

namespace stlctl {

using Vec = Eigen::VectorXd;

/* A finite discrete-time signal: a sequence of equal-dimension state
 * vectors. start_index is the absolute time of the first sample (0 for
 * full traces, k for optimizer tails that continue a history).
 */
struct Trace {
  std::vector<Vec> states;
  int start_index = 0;

  Trace() = default;
  explicit Trace(std::vector<Vec> s, int start = 0)
      : states(std::move(s)), start_index(start) {}

  int size() const { return static_cast<int>(states.size()); }
  bool empty() const { return states.empty(); }

  int dim() const { return states.empty() ? 0 : static_cast<int>(states.front().size()); }

  // absolute time of the last sample; meaningless for empty traces
  int end_index() const { return start_index + size() - 1; }

  bool covers(int abs_time) const {
    return abs_time >= start_index && abs_time <= end_index();
  }

  const Vec& at_time(int abs_time) const {
    if (!covers(abs_time)) {
      throw std::out_of_range("trace does not cover time " + std::to_string(abs_time) +
                              " (covers [" + std::to_string(start_index) + ", " +
                              std::to_string(end_index()) + "])");
    }
    return states[static_cast<size_t>(abs_time - start_index)];
  }
};

/* Concatenates a history prefix (absolute times 0..|history|-1) with a tail
 * that must start where the history ends. Throws on index mismatch.
 */
Trace concat(const Trace& history, const Trace& tail);

/* Reads a trace from CSV: one row per time step, columns are the state
 * components. An optional header row `x0,x1,...` is skipped.
 */
Trace read_trace_csv(const std::string& path);

}  // namespace stlctl
