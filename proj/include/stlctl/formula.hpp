#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "stlctl/trace.hpp"

namespace stlctl {

/* Bounded discrete time interval [a, b], 0 <= a <= b. */
struct Interval {
  int a = 0;
  int b = 0;

  Interval() = default;
  Interval(int a_, int b_) : a(a_), b(b_) {
    if (a < 0 || b < a) {
      throw std::invalid_argument("malformed interval [" + std::to_string(a_) + "," +
                                  std::to_string(b_) + "] (need 0 <= a <= b)");
    }
  }
  int length() const { return b - a + 1; }
  bool operator==(const Interval&) const = default;
};

/* Atomic predicate l(s) >= 0 over a single state sample, with a positive
 * normalization constant used by the AGM semantics (values are divided by
 * `scale` and clamped into [-1, 1]). The function handle comes from a
 * closed catalog: affine halfplanes and disk membership; boxes are
 * desugared by the parser into conjunctions of four halfplanes.
 */
struct Predicate {
  std::string name;
  std::function<double(const Vec&)> fn;
  double scale = 1.0;

  double value(const Vec& state) const { return fn(state); }
};

Predicate make_halfplane(std::string name, const Vec& coeffs, double offset, double scale);
Predicate make_disk(std::string name, double cx, double cy, double radius, double scale);

enum class FormulaKind { True, Atom, Not, And, Or, Eventually, Always };

/* Immutable STL formula tree. Cheap to copy (shared nodes); safe for
 * concurrent evaluation.
 */
class Formula {
 public:
  static Formula truth();
  static Formula atom(Predicate p);
  static Formula negation(Formula f);
  static Formula conjunction(std::vector<Formula> children);  // length >= 2
  static Formula disjunction(std::vector<Formula> children);  // length >= 2
  static Formula eventually(Interval window, Formula f);
  static Formula always(Interval window, Formula f);

  FormulaKind kind() const { return node_->kind; }
  const Predicate& predicate() const { return node_->pred; }
  const Interval& window() const { return node_->window; }
  const std::vector<Formula>& children() const { return node_->children; }
  const Formula& child() const { return node_->children.front(); }

  /* Structural equality; predicates compare by name and scale. */
  bool equals(const Formula& other) const;

 private:
  struct Node {
    FormulaKind kind;
    Predicate pred;
    Interval window;
    std::vector<Formula> children;
  };
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/* Smallest number of future steps whose samples can influence the formula's
 * value at the current time: hrz(mu) = 0, hrz(!f) = hrz(f), hrz over
 * And/Or children is the max, hrz(F_[a,b] f) = hrz(G_[a,b] f) = b + hrz(f).
 */
int horizon(const Formula& f);

/* Concrete-syntax rendering; parse_formula(to_string(f), table) rebuilds an
 * equal tree whenever every atom name is registered in the table.
 */
std::string to_string(const Formula& f);

}  // namespace stlctl
