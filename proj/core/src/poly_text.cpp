#include "qsphere/poly_text.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace qsphere {

std::vector<std::string> default_variable_names(int arity) {
  switch (arity) {
    case 2: return {"x", "y"};
    case 3: return {"x", "y", "z"};
    case 4: return {"x0", "x1", "x2", "x3"};
    default: throw ArityError("no default variable names for arity " + std::to_string(arity));
  }
}

std::string to_string(const MultiPoly& f) { return to_string(f, default_variable_names(f.arity())); }

std::string to_string(const MultiPoly& f, const std::vector<std::string>& names) {
  if (f.is_zero()) return "0";
  std::vector<std::pair<Exponents, Rational>> terms(f.terms().begin(), f.terms().end());
  const auto degree = [](const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); };
  std::stable_sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) {
    const int da = degree(a.first);
    const int db = degree(b.first);
    return da != db ? da > db : a.first > b.first;
  });

  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms) {
    const bool negative = c < 0;
    const Rational magnitude = abs(c);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;

    std::string monomial;
    for (int v = 0; v < f.arity(); ++v) {
      if (e[v] == 0) continue;
      if (!monomial.empty()) monomial += "*";
      monomial += names.at(static_cast<std::size_t>(v));
      if (e[v] > 1) monomial += "^" + std::to_string(e[v]);
    }
    if (monomial.empty()) {
      out += magnitude.get_str();
    } else if (magnitude == 1) {
      out += monomial;
    } else {
      out += magnitude.get_str() + "*" + monomial;
    }
  }
  return out;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& names)
      : text_(text), names_(names), arity_(static_cast<int>(names.size())) {}

  MultiPoly parse() {
    MultiPoly result = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return result;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial '" + std::string(text_) + "' at offset " + std::to_string(pos_) + ": " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool starts_primary() {
    const char c = peek();
    return std::isalnum(static_cast<unsigned char>(c)) || c == '(' || c == '.';
  }

  MultiPoly expression() {
    MultiPoly acc(arity_);
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = text_[pos_] == '-';
      ++pos_;
    }
    MultiPoly t = term();
    acc += negate ? -t : t;
    while (peek() == '+' || peek() == '-') {
      const bool minus = text_[pos_] == '-';
      ++pos_;
      MultiPoly next = term();
      acc += minus ? -next : next;
    }
    return acc;
  }

  MultiPoly term() {
    MultiPoly acc = power();
    for (;;) {
      const char c = peek();
      if (c == '*') {
        ++pos_;
        acc *= power();
      } else if (c == '/') {
        ++pos_;
        const MultiPoly divisor = power();
        if (!divisor.is_constant() || divisor.is_zero()) fail("division only by nonzero constants");
        acc *= Rational(1) / divisor.coefficient(Exponents{});
      } else if (starts_primary()) {
        acc *= power();
      } else {
        return acc;
      }
    }
  }

  MultiPoly power() {
    if (peek() == '-') {
      ++pos_;
      return -power();
    }
    MultiPoly base = primary();
    if (peek() == '^') {
      ++pos_;
      skip_space();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected a non-negative integer exponent");
      const int k = std::stoi(std::string(text_.substr(start, pos_ - start)));
      return pow(base, k);
    }
    return base;
  }

  MultiPoly primary() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      MultiPoly inner = expression();
      if (peek() != ')') fail("missing ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.')) {
        ++pos_;
      }
      return MultiPoly::constant(arity_, parse_rational(text_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_++;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      const auto it = std::find(names_.begin(), names_.end(), name);
      if (it == names_.end()) fail("unknown variable '" + name + "'");
      return MultiPoly::variable(arity_, static_cast<int>(it - names_.begin()));
    }
    fail(c == '\0' ? "unexpected end of input" : "unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const std::vector<std::string>& names_;
  int arity_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_polynomial(std::string_view text, int arity) {
  return parse_polynomial(text, default_variable_names(arity));
}

MultiPoly parse_polynomial(std::string_view text, const std::vector<std::string>& names) {
  return Parser(text, names).parse();
}

}  // namespace qsphere
