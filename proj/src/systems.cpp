#include "stlctl/systems.hpp"

#include <cmath>
#include <random>

namespace stlctl {

SystemModel make_unicycle(const ControlBounds& bounds) {
  if (bounds.dim() != 2) throw std::invalid_argument("unicycle needs 2-d control bounds");
  return SystemModel{ModelKind::Unicycle, bounds};
}

SystemModel make_integrator(const ControlBounds& bounds) {
  if (bounds.dim() != 2) throw std::invalid_argument("integrator needs 2-d control bounds");
  return SystemModel{ModelKind::Integrator, bounds};
}

Vec step(const SystemModel& model, const Vec& q, const Vec& u) {
  if (q.size() != model.state_dim() || u.size() != model.control_dim()) {
    throw std::invalid_argument("step: state/control dimension mismatch");
  }
  Vec next(q.size());
  switch (model.kind) {
    case ModelKind::Integrator:
      next = q + u;
      break;
    case ModelKind::Unicycle: {
      const double theta = q[2];
      const double v = u[0];
      const double omega = u[1];
      if (std::abs(omega) < 1e-6) {
        // limit form; the arc map divides by omega
        next[0] = q[0] + v * std::cos(theta);
        next[1] = q[1] + v * std::sin(theta);
      } else {
        next[0] = q[0] + v / omega * (std::sin(theta + omega) - std::sin(theta));
        next[1] = q[1] + v / omega * (std::cos(theta) - std::cos(theta + omega));
      }
      next[2] = theta + omega;
      break;
    }
  }
  return next;
}

Trace rollout(const SystemModel& model, const Vec& q0, const std::vector<Vec>& controls,
              const DisturbanceSpec& dist) {
  if (q0.size() != model.state_dim()) {
    throw std::invalid_argument("rollout: initial state dimension mismatch");
  }
  std::mt19937_64 rng(dist.seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);

  Trace tr;
  tr.start_index = 0;
  tr.states.reserve(controls.size() + 1);
  tr.states.push_back(q0);
  for (size_t i = 0; i < controls.size(); ++i) {
    if (!model.bounds.contains(controls[i])) {
      throw std::invalid_argument("rollout: control at index " + std::to_string(i) +
                                  " outside bounds");
    }
    Vec next = step(model, tr.states.back(), controls[i]);
    if (dist.kind == DisturbanceKind::UniformBox) {
      if (dist.half_width.size() != model.state_dim()) {
        throw std::invalid_argument("rollout: disturbance half_width dimension mismatch");
      }
      for (int c = 0; c < next.size(); ++c) {
        next[c] += dist.half_width[c] * unit(rng);
      }
    }
    tr.states.push_back(std::move(next));
  }
  return tr;
}

void rollout_nominal_into(const SystemModel& model, const Vec& q0,
                          const std::vector<Vec>& controls, std::vector<Vec>& states_out) {
  states_out.resize(controls.size() + 1);
  states_out[0] = q0;
  for (size_t i = 0; i < controls.size(); ++i) {
    states_out[i + 1] = step(model, states_out[i], controls[i]);
  }
}

}  // namespace stlctl
