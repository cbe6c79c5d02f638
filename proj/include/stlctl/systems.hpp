#pragma once

#include <cstdint>

#include "stlctl/trace.hpp"

namespace stlctl {

struct ControlBounds {
  Vec lower;
  Vec upper;

  int dim() const { return static_cast<int>(lower.size()); }
  bool contains(const Vec& u) const {
    return u.size() == lower.size() && (u.array() >= lower.array()).all() &&
           (u.array() <= upper.array()).all();
  }
  Vec clamp(const Vec& u) const {
    return u.cwiseMax(lower).cwiseMin(upper);
  }
  Vec midpoint() const { return 0.5 * (lower + upper); }
  Vec half_width() const { return 0.5 * (upper - lower); }
};

enum class ModelKind { Unicycle, Integrator };

/* Discrete-time control system: unicycle (n=3, m=2, exact arc integration)
 * or single integrator (n=2, m=2, additive map).
 */
struct SystemModel {
  ModelKind kind = ModelKind::Integrator;
  ControlBounds bounds;

  int state_dim() const { return kind == ModelKind::Unicycle ? 3 : 2; }
  int control_dim() const { return 2; }
};

SystemModel make_unicycle(const ControlBounds& bounds);
SystemModel make_integrator(const ControlBounds& bounds);

enum class DisturbanceKind { None, UniformBox };

/* Additive state disturbance applied after each plant step, sampled i.i.d.
 * uniform in [-half_width, half_width] componentwise.
 */
struct DisturbanceSpec {
  DisturbanceKind kind = DisturbanceKind::None;
  Vec half_width;
  uint64_t seed = 0;
};

/* One exact step of the model map. Does not clamp: callers enforce bounds. */
Vec step(const SystemModel& model, const Vec& q, const Vec& u);

/* Applies the control sequence from q0, disturbing each step per `dist`;
 * result has length |controls| + 1 and start_index 0. Controls outside the
 * bounds are reported with their index.
 */
Trace rollout(const SystemModel& model, const Vec& q0, const std::vector<Vec>& controls,
              const DisturbanceSpec& dist);

/* Allocation-free rollout used by optimizer objective loops; no bounds or
 * disturbance handling (nominal model only).
 */
void rollout_nominal_into(const SystemModel& model, const Vec& q0,
                          const std::vector<Vec>& controls, std::vector<Vec>& states_out);

}  // namespace stlctl
