#pragma once

#include <map>
#include <string>

#include "stlctl/formula.hpp"

namespace stlctl {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, size_t position)
      : std::runtime_error(message + " at position " + std::to_string(position)),
        position(position) {}
  size_t position;
};

/* Maps formula identifiers to the (sub)formulas they denote. Plain
 * predicates map to single atoms; axis-aligned boxes register as the
 * conjunction of four halfplanes (and each side is registered under
 * "<name>_<side>" so printed formulas stay parseable).
 */
class PredicateTable {
 public:
  void add_predicate(const Predicate& p);
  void add_halfplane(const std::string& name, const Vec& coeffs, double offset, double scale);
  void add_disk(const std::string& name, double cx, double cy, double radius, double scale);
  void add_box(const std::string& name, const Vec& lo, const Vec& hi, double scale);

  bool contains(const std::string& name) const { return entries_.count(name) > 0; }
  const Formula& lookup(const std::string& name) const;

 private:
  std::map<std::string, Formula> entries_;
};

/* Parses the concrete syntax
 *   phi := "T" | ident | "!" phi | phi "&" phi | phi "|" phi
 *        | "F[" int "," int "]" phi | "G[" int "," int "]" phi | "(" phi ")"
 * with precedence ! > & > |. Identifiers resolve against the table.
 * Throws ParseError with position on syntax errors, unknown identifiers,
 * and malformed intervals (a > b).
 */
Formula parse_formula(const std::string& text, const PredicateTable& table);

}  // namespace stlctl
