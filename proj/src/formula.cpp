#include "stlctl/formula.hpp"

#include <algorithm>
#include <cmath>

namespace stlctl {

Predicate make_halfplane(std::string name, const Vec& coeffs, double offset, double scale) {
  if (scale <= 0.0) throw std::invalid_argument("predicate scale must be positive");
  Predicate p;
  p.name = std::move(name);
  p.scale = scale;
  Vec c = coeffs;
  p.fn = [c, offset](const Vec& q) {
    if (q.size() < c.size()) {
      throw std::invalid_argument("state dimension too small for halfplane predicate");
    }
    return c.dot(q.head(c.size())) + offset;
  };
  return p;
}

Predicate make_disk(std::string name, double cx, double cy, double radius, double scale) {
  if (scale <= 0.0) throw std::invalid_argument("predicate scale must be positive");
  if (radius <= 0.0) throw std::invalid_argument("disk radius must be positive");
  Predicate p;
  p.name = std::move(name);
  p.scale = scale;
  p.fn = [cx, cy, radius](const Vec& q) {
    if (q.size() < 2) {
      throw std::invalid_argument("state dimension too small for disk predicate");
    }
    const double dx = q[0] - cx;
    const double dy = q[1] - cy;
    return radius * radius - dx * dx - dy * dy;
  };
  return p;
}

Formula Formula::truth() {
  auto n = std::make_shared<Node>();
  n->kind = FormulaKind::True;
  return Formula(std::move(n));
}

Formula Formula::atom(Predicate p) {
  auto n = std::make_shared<Node>();
  n->kind = FormulaKind::Atom;
  n->pred = std::move(p);
  return Formula(std::move(n));
}

Formula Formula::negation(Formula f) {
  auto n = std::make_shared<Node>();
  n->kind = FormulaKind::Not;
  n->children.push_back(std::move(f));
  return Formula(std::move(n));
}

Formula Formula::conjunction(std::vector<Formula> children) {
  if (children.size() < 2) throw std::invalid_argument("conjunction needs >= 2 children");
  auto n = std::make_shared<Node>();
  n->kind = FormulaKind::And;
  n->children = std::move(children);
  return Formula(std::move(n));
}

Formula Formula::disjunction(std::vector<Formula> children) {
  if (children.size() < 2) throw std::invalid_argument("disjunction needs >= 2 children");
  auto n = std::make_shared<Node>();
  n->kind = FormulaKind::Or;
  n->children = std::move(children);
  return Formula(std::move(n));
}

Formula Formula::eventually(Interval window, Formula f) {
  auto n = std::make_shared<Node>();
  n->kind = FormulaKind::Eventually;
  n->window = window;
  n->children.push_back(std::move(f));
  return Formula(std::move(n));
}

Formula Formula::always(Interval window, Formula f) {
  auto n = std::make_shared<Node>();
  n->kind = FormulaKind::Always;
  n->window = window;
  n->children.push_back(std::move(f));
  return Formula(std::move(n));
}

bool Formula::equals(const Formula& other) const {
  if (kind() != other.kind()) return false;
  switch (kind()) {
    case FormulaKind::True:
      return true;
    case FormulaKind::Atom:
      return predicate().name == other.predicate().name &&
             predicate().scale == other.predicate().scale;
    case FormulaKind::Not:
      return child().equals(other.child());
    case FormulaKind::And:
    case FormulaKind::Or: {
      if (children().size() != other.children().size()) return false;
      for (size_t i = 0; i < children().size(); ++i) {
        if (!children()[i].equals(other.children()[i])) return false;
      }
      return true;
    }
    case FormulaKind::Eventually:
    case FormulaKind::Always:
      return window() == other.window() && child().equals(other.child());
  }
  return false;
}

int horizon(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::True:
    case FormulaKind::Atom:
      return 0;
    case FormulaKind::Not:
      return horizon(f.child());
    case FormulaKind::And:
    case FormulaKind::Or: {
      int h = 0;
      for (const Formula& c : f.children()) h = std::max(h, horizon(c));
      return h;
    }
    case FormulaKind::Eventually:
    case FormulaKind::Always:
      return f.window().b + horizon(f.child());
  }
  return 0;
}

namespace {

// Children of n-ary and unary operators are parenthesized whenever they are
// themselves And/Or, so nesting survives a print/parse round trip.
bool needs_parens(const Formula& child) {
  return child.kind() == FormulaKind::And || child.kind() == FormulaKind::Or;
}

void print(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case FormulaKind::True:
      out += "T";
      return;
    case FormulaKind::Atom:
      out += f.predicate().name;
      return;
    case FormulaKind::Not:
      out += "!";
      break;
    case FormulaKind::Eventually:
      out += "F[" + std::to_string(f.window().a) + "," + std::to_string(f.window().b) + "]";
      break;
    case FormulaKind::Always:
      out += "G[" + std::to_string(f.window().a) + "," + std::to_string(f.window().b) + "]";
      break;
    case FormulaKind::And:
    case FormulaKind::Or: {
      const char* sep = f.kind() == FormulaKind::And ? " & " : " | ";
      for (size_t i = 0; i < f.children().size(); ++i) {
        if (i > 0) out += sep;
        const Formula& c = f.children()[i];
        bool parens = needs_parens(c) ||
                      (f.kind() == FormulaKind::And && c.kind() == FormulaKind::Or);
        if (parens) out += "(";
        print(c, out);
        if (parens) out += ")";
      }
      return;
    }
  }
  // unary operators fall through to here
  const Formula& c = f.child();
  if (needs_parens(c)) {
    out += "(";
    print(c, out);
    out += ")";
  } else {
    print(c, out);
  }
}

}  // namespace

std::string to_string(const Formula& f) {
  std::string out;
  print(f, out);
  return out;
}

}  // namespace stlctl
