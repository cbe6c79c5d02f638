#include "stlctl/robustness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace stlctl {

namespace {

void check_coverage(const Formula& f, const Trace& tr, int k) {
  const int required_end = k + horizon(f);
  if (tr.empty() || k < tr.start_index || required_end > tr.end_index()) {
    throw TraceTooShort(required_end, tr.empty() ? tr.start_index - 1 : tr.end_index());
  }
}

bool eval_bool_rec(const Formula& f, const Trace& tr, int k) {
  switch (f.kind()) {
    case FormulaKind::True:
      return true;
    case FormulaKind::Atom:
      return f.predicate().value(tr.at_time(k)) >= 0.0;
    case FormulaKind::Not:
      return !eval_bool_rec(f.child(), tr, k);
    case FormulaKind::And:
      return std::all_of(f.children().begin(), f.children().end(),
                         [&](const Formula& c) { return eval_bool_rec(c, tr, k); });
    case FormulaKind::Or:
      return std::any_of(f.children().begin(), f.children().end(),
                         [&](const Formula& c) { return eval_bool_rec(c, tr, k); });
    case FormulaKind::Eventually: {
      for (int i = f.window().a; i <= f.window().b; ++i) {
        if (eval_bool_rec(f.child(), tr, k + i)) return true;
      }
      return false;
    }
    case FormulaKind::Always: {
      for (int i = f.window().a; i <= f.window().b; ++i) {
        if (!eval_bool_rec(f.child(), tr, k + i)) return false;
      }
      return true;
    }
  }
  return false;
}

double eval_trad_rec(const Formula& f, const Trace& tr, int k) {
  switch (f.kind()) {
    case FormulaKind::True:
      return std::numeric_limits<double>::infinity();
    case FormulaKind::Atom:
      return f.predicate().value(tr.at_time(k));
    case FormulaKind::Not:
      return -eval_trad_rec(f.child(), tr, k);
    case FormulaKind::And: {
      double v = std::numeric_limits<double>::infinity();
      for (const Formula& c : f.children()) v = std::min(v, eval_trad_rec(c, tr, k));
      return v;
    }
    case FormulaKind::Or: {
      double v = -std::numeric_limits<double>::infinity();
      for (const Formula& c : f.children()) v = std::max(v, eval_trad_rec(c, tr, k));
      return v;
    }
    case FormulaKind::Eventually: {
      double v = -std::numeric_limits<double>::infinity();
      for (int i = f.window().a; i <= f.window().b; ++i) {
        v = std::max(v, eval_trad_rec(f.child(), tr, k + i));
      }
      return v;
    }
    case FormulaKind::Always: {
      double v = std::numeric_limits<double>::infinity();
      for (int i = f.window().a; i <= f.window().b; ++i) {
        v = std::min(v, eval_trad_rec(f.child(), tr, k + i));
      }
      return v;
    }
  }
  return 0.0;
}

// AGM aggregation over child values. Conjunction takes the geometric-mean
// branch only when every child is strictly positive; disjunction is dual.
double agm_conjunction(const std::vector<double>& vals) {
  const double m = static_cast<double>(vals.size());
  bool all_positive = std::all_of(vals.begin(), vals.end(), [](double v) { return v > 0.0; });
  if (all_positive) {
    double log_prod = 0.0;
    for (double v : vals) log_prod += std::log1p(v);
    return std::expm1(log_prod / m);
  }
  double sum = 0.0;
  for (double v : vals) {
    if (v <= 0.0) sum += v;
  }
  return sum / m;
}

double agm_disjunction(const std::vector<double>& vals) {
  const double m = static_cast<double>(vals.size());
  bool all_nonpositive =
      std::all_of(vals.begin(), vals.end(), [](double v) { return v <= 0.0; });
  if (all_nonpositive) {
    double log_prod = 0.0;
    for (double v : vals) log_prod += std::log1p(-v);
    return -std::expm1(log_prod / m);
  }
  double sum = 0.0;
  for (double v : vals) {
    if (v > 0.0) sum += v;
  }
  return sum / m;
}

double eval_agm_rec(const Formula& f, const Trace& tr, int k) {
  switch (f.kind()) {
    case FormulaKind::True:
      return 1.0;
    case FormulaKind::Atom: {
      const double raw = f.predicate().value(tr.at_time(k)) / f.predicate().scale;
      return std::clamp(raw, -1.0, 1.0);
    }
    case FormulaKind::Not:
      return -eval_agm_rec(f.child(), tr, k);
    case FormulaKind::And: {
      std::vector<double> vals;
      vals.reserve(f.children().size());
      for (const Formula& c : f.children()) vals.push_back(eval_agm_rec(c, tr, k));
      return agm_conjunction(vals);
    }
    case FormulaKind::Or: {
      std::vector<double> vals;
      vals.reserve(f.children().size());
      for (const Formula& c : f.children()) vals.push_back(eval_agm_rec(c, tr, k));
      return agm_disjunction(vals);
    }
    case FormulaKind::Eventually: {
      std::vector<double> vals;
      vals.reserve(static_cast<size_t>(f.window().length()));
      for (int i = f.window().a; i <= f.window().b; ++i) {
        vals.push_back(eval_agm_rec(f.child(), tr, k + i));
      }
      return agm_disjunction(vals);
    }
    case FormulaKind::Always: {
      std::vector<double> vals;
      vals.reserve(static_cast<size_t>(f.window().length()));
      for (int i = f.window().a; i <= f.window().b; ++i) {
        vals.push_back(eval_agm_rec(f.child(), tr, k + i));
      }
      return agm_conjunction(vals);
    }
  }
  return 0.0;
}

}  // namespace

bool eval_boolean(const Formula& f, const Trace& tr, int k) {
  check_coverage(f, tr, k);
  return eval_bool_rec(f, tr, k);
}

RobustnessValue eval_robustness_traditional(const Formula& f, const Trace& tr, int k) {
  check_coverage(f, tr, k);
  return {eval_trad_rec(f, tr, k), Semantics::Traditional};
}

RobustnessValue eval_robustness_agm(const Formula& f, const Trace& tr, int k) {
  check_coverage(f, tr, k);
  return {eval_agm_rec(f, tr, k), Semantics::Agm};
}

RobustnessValue eval_robustness_with_history(const Formula& f, const Trace& history,
                                             const Trace& tail) {
  if (history.empty()) {
    Trace full = tail;
    if (full.start_index != 0) {
      throw std::invalid_argument("with empty history the tail must start at time 0");
    }
    return eval_robustness_agm(f, full, 0);
  }
  return eval_robustness_agm(f, concat(history, tail), 0);
}

}  // namespace stlctl
