#pragma once

#include <cctype>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "lgv/polynomial.hpp"

namespace lgv {

namespace detail {

// Recursive-descent parser for the polynomial interchange syntax:
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := atom ['^' integer]
//   atom   := integer | identifier | '(' expr ')'
template <CoefficientField F>
class PolyParser {
 public:
  PolyParser(std::string_view text, RingPtr<F> ring) : text_(text), ring_(std::move(ring)) {}

  Polynomial<F> parse() {
    auto p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char ch) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial '" + std::string(text_) + "' at column " + std::to_string(pos_ + 1) +
                     ": " + what);
  }

  Polynomial<F> expr() {
    Polynomial<F> acc(ring_);
    bool negate = false;
    if (accept('-'))
      negate = true;
    else
      accept('+');
    acc = negate ? -term() : term();
    for (;;) {
      if (accept('+'))
        acc = acc + term();
      else if (accept('-'))
        acc = acc - term();
      else
        return acc;
    }
  }

  Polynomial<F> term() {
    auto acc = factor();
    for (;;) {
      if (accept('*')) {
        acc = acc * factor();
      } else if (accept('/')) {
        auto d = factor();
        if (!d.is_constant() || d.is_zero()) fail("division is only allowed by a nonzero constant");
        acc = acc.scale(ring_->field.inv(d.leading_coeff()));
      } else {
        return acc;
      }
    }
  }

  Polynomial<F> factor() {
    auto base = atom();
    if (accept('^')) {
      skip_ws();
      auto digits = read_digits();
      if (digits.empty()) fail("expected an exponent");
      if (digits.size() > 4) fail("exponent too large");
      int e = std::stoi(digits);
      auto r = Polynomial<F>::one(ring_);
      for (int i = 0; i < e; ++i) r = r * base;
      return r;
    }
    return base;
  }

  Polynomial<F> atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char ch = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      mpz_class n(read_digits());
      return Polynomial<F>::constant(ring_, ring_->field.from_integer(n));
    }
    if (std::isalpha(static_cast<unsigned char>(ch))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      auto idx = ring_->vars.find(name);
      if (!idx) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      return Polynomial<F>::variable(ring_, *idx);
    }
    if (accept('(')) {
      auto p = expr();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    fail("unexpected '" + std::string(1, ch) + "'");
  }

  std::string read_digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string_view text_;
  RingPtr<F> ring_;
  std::size_t pos_ = 0;
};

inline std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

inline std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

}  // namespace detail

template <CoefficientField F>
Polynomial<F> parse_polynomial(std::string_view text, const RingPtr<F>& ring) {
  return detail::PolyParser<F>(text, ring).parse();
}

/// Raw content of an ideal file: `vars:` header, optional `weights:`,
/// `#` comments, then one generator per line.
struct IdealText {
  VarTable vars;
  std::vector<std::string> generators;
};

inline IdealText read_ideal_text(std::istream& in) {
  std::vector<std::string> names;
  std::vector<int> weights;
  std::vector<std::string> gens;
  bool have_vars = false;
  std::string line;
  for (int lineno = 1; std::getline(in, line); ++lineno) {
    auto t = detail::trim(line);
    if (t.empty() || t[0] == '#') continue;
    if (!have_vars) {
      if (t.rfind("vars:", 0) != 0)
        throw ParseError("line " + std::to_string(lineno) + ": expected 'vars:' header");
      names = detail::split_ws(t.substr(5));
      have_vars = true;
      continue;
    }
    if (t.rfind("weights:", 0) == 0) {
      if (!gens.empty() || !weights.empty())
        throw ParseError("line " + std::to_string(lineno) + ": 'weights:' must directly follow 'vars:'");
      for (const auto& w : detail::split_ws(t.substr(8))) {
        try {
          weights.push_back(std::stoi(w));
        } catch (const std::exception&) {
          throw ParseError("line " + std::to_string(lineno) + ": bad weight '" + w + "'");
        }
      }
      continue;
    }
    gens.push_back(t);
  }
  if (!have_vars) throw ParseError("missing 'vars:' header");
  return {VarTable(std::move(names), std::move(weights)), std::move(gens)};
}

inline IdealText read_ideal_text(const std::string& text) {
  std::istringstream in(text);
  return read_ideal_text(in);
}

template <CoefficientField F>
std::string format_ideal_text(const VarTable& vars, const std::vector<Polynomial<F>>& gens) {
  std::string out = "vars:";
  for (const auto& n : vars.names()) out += " " + n;
  out += "\n";
  if (!vars.has_unit_weights()) {
    out += "weights:";
    for (int w : vars.weights()) out += " " + std::to_string(w);
    out += "\n";
  }
  for (const auto& g : gens) out += g.to_string() + "\n";
  return out;
}

}  // namespace lgv
