#include "stlctl/parser.hpp"

#include <cctype>

namespace stlctl {

void PredicateTable::add_predicate(const Predicate& p) {
  entries_.insert_or_assign(p.name, Formula::atom(p));
}

void PredicateTable::add_halfplane(const std::string& name, const Vec& coeffs, double offset,
                                   double scale) {
  add_predicate(make_halfplane(name, coeffs, offset, scale));
}

void PredicateTable::add_disk(const std::string& name, double cx, double cy, double radius,
                              double scale) {
  add_predicate(make_disk(name, cx, cy, radius, scale));
}

void PredicateTable::add_box(const std::string& name, const Vec& lo, const Vec& hi,
                             double scale) {
  if (lo.size() != 2 || hi.size() != 2 || lo[0] >= hi[0] || lo[1] >= hi[1]) {
    throw std::invalid_argument("box region '" + name + "' needs 2-d corners with lo < hi");
  }
  // x - x_lo >= 0, x_hi - x >= 0, y - y_lo >= 0, y_hi - y >= 0
  Vec ex(2), ey(2);
  ex << 1.0, 0.0;
  ey << 0.0, 1.0;
  Predicate left = make_halfplane(name + "_left", ex, -lo[0], scale);
  Predicate right = make_halfplane(name + "_right", -ex, hi[0], scale);
  Predicate bottom = make_halfplane(name + "_bottom", ey, -lo[1], scale);
  Predicate top = make_halfplane(name + "_top", -ey, hi[1], scale);
  for (const Predicate& p : {left, right, bottom, top}) add_predicate(p);
  entries_.insert_or_assign(
      name, Formula::conjunction({Formula::atom(left), Formula::atom(right),
                                  Formula::atom(bottom), Formula::atom(top)}));
}

const Formula& PredicateTable::lookup(const std::string& name) const {
  auto it = entries_.find(name);
  if (it == entries_.end()) {
    throw std::out_of_range("unknown predicate name: " + name);
  }
  return it->second;
}

namespace {

class Parser {
 public:
  Parser(const std::string& text, const PredicateTable& table) : text_(text), table_(table) {}

  Formula parse() {
    Formula f = parse_or();
    skip_ws();
    if (pos_ != text_.size()) {
      throw ParseError("unexpected trailing input", pos_);
    }
    return f;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek_is(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c) {
      throw ParseError(std::string("expected '") + c + "'", pos_);
    }
    ++pos_;
  }

  Formula parse_or() {
    std::vector<Formula> terms;
    terms.push_back(parse_and());
    while (peek_is('|')) {
      ++pos_;
      terms.push_back(parse_and());
    }
    if (terms.size() == 1) return terms.front();
    return Formula::disjunction(std::move(terms));
  }

  Formula parse_and() {
    std::vector<Formula> terms;
    terms.push_back(parse_unary());
    while (peek_is('&')) {
      ++pos_;
      terms.push_back(parse_unary());
    }
    if (terms.size() == 1) return terms.front();
    return Formula::conjunction(std::move(terms));
  }

  Formula parse_unary() {
    skip_ws();
    if (pos_ >= text_.size()) {
      throw ParseError("unexpected end of input", pos_);
    }
    const char c = text_[pos_];
    if (c == '!') {
      ++pos_;
      return Formula::negation(parse_unary());
    }
    // F and G are temporal only when immediately followed by '['; otherwise
    // they start an identifier.
    if ((c == 'F' || c == 'G') && pos_ + 1 < text_.size() && text_[pos_ + 1] == '[') {
      ++pos_;
      Interval window = parse_interval();
      Formula sub = parse_unary();
      return c == 'F' ? Formula::eventually(window, std::move(sub))
                      : Formula::always(window, std::move(sub));
    }
    if (c == '(') {
      ++pos_;
      Formula f = parse_or();
      expect(')');
      return f;
    }
    return parse_ident();
  }

  Interval parse_interval() {
    expect('[');
    const size_t at = pos_;
    int a = parse_int();
    expect(',');
    int b = parse_int();
    expect(']');
    if (a < 0 || b < a) {
      throw ParseError("malformed interval [" + std::to_string(a) + "," + std::to_string(b) +
                           "] (need 0 <= a <= b)",
                       at);
    }
    return Interval(a, b);
  }

  int parse_int() {
    skip_ws();
    const size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) {
      throw ParseError("expected integer", pos_);
    }
    return std::stoi(text_.substr(start, pos_ - start));
  }

  Formula parse_ident() {
    skip_ws();
    const size_t start = pos_;
    if (pos_ >= text_.size() || !(std::isalpha(static_cast<unsigned char>(text_[pos_])) ||
                                  text_[pos_] == '_')) {
      throw ParseError("expected formula", pos_);
    }
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                   text_[pos_] == '_')) {
      ++pos_;
    }
    const std::string name = text_.substr(start, pos_ - start);
    if (name == "T") return Formula::truth();
    if (!table_.contains(name)) {
      throw ParseError("unknown predicate name '" + name + "'", start);
    }
    return table_.lookup(name);
  }

  const std::string& text_;
  const PredicateTable& table_;
  size_t pos_ = 0;
};

}  // namespace

Formula parse_formula(const std::string& text, const PredicateTable& table) {
  return Parser(text, table).parse();
}

}  // namespace stlctl
