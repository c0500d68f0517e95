#pragma once

#include <algorithm>
#include <cassert>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lgv/field.hpp"
#include "lgv/monomial.hpp"

namespace lgv {

/// Coefficient field, variables and active term order. Shared and immutable.
template <CoefficientField F>
struct PolyRing {
  F field;
  VarTable vars;
  MonomialOrder order;

  std::size_t nvars() const noexcept { return vars.size(); }
};

template <CoefficientField F>
using RingPtr = std::shared_ptr<const PolyRing<F>>;

template <CoefficientField F>
RingPtr<F> make_ring(F field, VarTable vars, std::optional<MonomialOrder> order = std::nullopt) {
  auto ord = order ? std::move(*order) : MonomialOrder::grevlex(vars.size());
  if (ord.nvars() != vars.size()) throw StructuralError("order does not match variable count");
  return std::make_shared<const PolyRing<F>>(PolyRing<F>{std::move(field), std::move(vars), std::move(ord)});
}

template <CoefficientField F>
RingPtr<F> with_order(const RingPtr<F>& ring, MonomialOrder order) {
  if (ring->order == order) return ring;
  return make_ring(ring->field, ring->vars, std::move(order));
}

/// Same field and variable table (orders may differ).
template <CoefficientField F>
bool same_space(const PolyRing<F>& a, const PolyRing<F>& b) {
  return &a == &b || (a.field == b.field && a.vars == b.vars);
}

/// Sparse polynomial with exact coefficients. Terms are stored strictly
/// descending in the ring's order; zero coefficients are never stored.
template <CoefficientField F>
class Polynomial {
 public:
  using Coeff = typename F::Element;

  Polynomial() = default;
  explicit Polynomial(RingPtr<F> ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr<F> ring, const Coeff& c) {
    Polynomial p(std::move(ring));
    if (!p.field().is_zero(c)) p.push_term(c, Monomial(p.nvars(), 0));
    return p;
  }
  static Polynomial from_int(RingPtr<F> ring, long long c) {
    auto e = ring->field.from_integer(c);
    return constant(std::move(ring), e);
  }
  static Polynomial one(RingPtr<F> ring) {
    auto e = ring->field.one();
    return constant(std::move(ring), e);
  }
  static Polynomial variable(RingPtr<F> ring, std::size_t index) {
    Polynomial p(std::move(ring));
    Monomial m(p.nvars(), 0);
    m.at(index) = 1;
    p.push_term(p.field().one(), m);
    return p;
  }
  static Polynomial variable(RingPtr<F> ring, const std::string& name) {
    auto i = ring->vars.index(name);
    return variable(std::move(ring), i);
  }
  static Polynomial term(RingPtr<F> ring, const Coeff& c, ExponentSpan m) {
    Polynomial p(std::move(ring));
    if (m.size() != p.nvars()) throw StructuralError("monomial length does not match ring");
    if (!p.field().is_zero(c)) p.push_term(c, m);
    return p;
  }
  /// Builds from unsorted terms, combining duplicates.
  static Polynomial from_terms(RingPtr<F> ring, std::vector<std::pair<Monomial, Coeff>> terms) {
    const auto& ord = ring->order;
    std::sort(terms.begin(), terms.end(),
              [&](const auto& a, const auto& b) { return ord.compare(a.first, b.first) > 0; });
    Polynomial p(std::move(ring));
    const auto& k = p.field();
    for (std::size_t i = 0; i < terms.size();) {
      if (terms[i].first.size() != p.nvars()) throw StructuralError("monomial length does not match ring");
      Coeff c = terms[i].second;
      std::size_t j = i + 1;
      for (; j < terms.size() && terms[j].first == terms[i].first; ++j) c = k.add(c, terms[j].second);
      if (!k.is_zero(c)) p.push_term(c, terms[i].first);
      i = j;
    }
    return p;
  }

  const RingPtr<F>& ring() const noexcept { return ring_; }
  const F& field() const { return ring_->field; }
  const VarTable& vars() const { return ring_->vars; }
  const MonomialOrder& order() const { return ring_->order; }
  std::size_t nvars() const { return ring_->nvars(); }

  std::size_t size() const noexcept { return coeffs_.size(); }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const { return is_zero() || (size() == 1 && total_degree(exponents(0)) == 0); }

  ExponentSpan exponents(std::size_t i) const { return {exps_.data() + i * nvars(), nvars()}; }
  const Coeff& coeff(std::size_t i) const { return coeffs_[i]; }
  ExponentSpan leading_monomial() const {
    if (is_zero()) throw UndefinedDegreeError("leading monomial of the zero polynomial");
    return exponents(0);
  }
  const Coeff& leading_coeff() const {
    if (is_zero()) throw UndefinedDegreeError("leading coefficient of the zero polynomial");
    return coeffs_[0];
  }

  /// Maximum total (unweighted) degree over the terms.
  long degree() const {
    long d = -1;
    for (std::size_t i = 0; i < size(); ++i) d = std::max(d, lgv::total_degree(exponents(i)));
    return d;
  }
  long degree_in(std::size_t var) const {
    long d = 0;
    for (std::size_t i = 0; i < size(); ++i) d = std::max<long>(d, exponents(i)[var]);
    return d;
  }
  bool uses_variable(std::size_t var) const { return degree_in(var) > 0; }

  /// Common weighted degree of all terms, or nullopt when the terms disagree.
  std::optional<long> weighted_degree() const {
    if (is_zero()) throw UndefinedDegreeError("weighted degree of the zero polynomial");
    const auto& w = vars().weights();
    long d = lgv::weighted_degree(exponents(0), w);
    for (std::size_t i = 1; i < size(); ++i)
      if (lgv::weighted_degree(exponents(i), w) != d) return std::nullopt;
    return d;
  }

  Polynomial operator-() const {
    Polynomial r(*this);
    for (auto& c : r.coeffs_) c = field().neg(c);
    return r;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    a.check_compatible(b);
    return merge(a, b, a.field().one(), nullptr);
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    a.check_compatible(b);
    return merge(a, b, a.field().neg(a.field().one()), nullptr);
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_compatible(b);
    const Polynomial& small = a.size() <= b.size() ? a : b;
    const Polynomial& big = a.size() <= b.size() ? b : a;
    Polynomial r(a.ring_);
    for (std::size_t i = 0; i < small.size(); ++i)
      r = merge(r, big, small.coeff(i), &small.exps_[i * small.nvars()]);
    return r;
  }
  Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
  Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }
  Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }

  Polynomial scale(const Coeff& c) const {
    Polynomial r(ring_);
    if (field().is_zero(c)) return r;
    r.coeffs_.reserve(size());
    for (const auto& a : coeffs_) r.coeffs_.push_back(field().mul(a, c));
    r.exps_ = exps_;
    return r;
  }

  /// this * c * x^m
  Polynomial mul_term(const Coeff& c, ExponentSpan m) const {
    Polynomial r(ring_);
    if (field().is_zero(c)) return r;
    r.coeffs_.reserve(size());
    r.exps_.reserve(exps_.size());
    for (std::size_t i = 0; i < size(); ++i) {
      r.coeffs_.push_back(field().mul(coeffs_[i], c));
      auto e = exponents(i);
      for (std::size_t v = 0; v < nvars(); ++v) {
        unsigned x = unsigned(e[v]) + m[v];
        if (x > 0xFFFFu) throw ResourceError("max_degree", "exponent overflow");
        r.exps_.push_back(static_cast<Exponent>(x));
      }
    }
    return r;
  }

  /// this - c * x^m * q, in one merge pass.
  Polynomial sub_mul(const Coeff& c, ExponentSpan m, const Polynomial& q) const {
    return merge(*this, q, field().neg(c), m.data());
  }

  Polynomial monic() const {
    if (is_zero() || field().is_one(leading_coeff())) return *this;
    return scale(field().inv(leading_coeff()));
  }

  /// The same polynomial over another ring with identical field and variables.
  Polynomial in_ring(const RingPtr<F>& target) const {
    if (target == ring_) return *this;
    if (!same_space(*ring_, *target)) throw StructuralError("in_ring: incompatible variable tables");
    if (target->order == ring_->order) {
      Polynomial r(*this);
      r.ring_ = target;
      return r;
    }
    std::vector<std::size_t> idx(size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    const auto& ord = target->order;
    std::sort(idx.begin(), idx.end(),
              [&](auto a, auto b) { return ord.compare(exponents(a), exponents(b)) > 0; });
    Polynomial r(target);
    r.coeffs_.reserve(size());
    r.exps_.reserve(exps_.size());
    for (auto i : idx) r.push_term(coeffs_[i], exponents(i));
    return r;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.ring_ && b.ring_ && !same_space(*a.ring_, *b.ring_)) return false;
    if (a.ring_ && b.ring_ && !(a.ring_->order == b.ring_->order)) {
      return a == b.in_ring(a.ring_);
    }
    return a.coeffs_ == b.coeffs_ && a.exps_ == b.exps_;
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < size(); ++i) {
      std::string c = field().to_string(coeffs_[i]);
      bool negative = !c.empty() && c[0] == '-';
      if (negative) c.erase(0, 1);
      if (i == 0)
        out += negative ? "-" : "";
      else
        out += negative ? " - " : " + ";
      std::string mono;
      auto e = exponents(i);
      for (std::size_t v = 0; v < nvars(); ++v) {
        if (!e[v]) continue;
        if (!mono.empty()) mono += '*';
        mono += vars().name(v);
        if (e[v] > 1) mono += "^" + std::to_string(e[v]);
      }
      if (mono.empty())
        out += c;
      else if (c == "1")
        out += mono;
      else
        out += c + "*" + mono;
    }
    return out;
  }

  /// Appends a term that must be strictly smaller than the current last term.
  void push_term(const Coeff& c, ExponentSpan m) {
    assert(is_zero() || order().compare(exponents(size() - 1), m) > 0);
    coeffs_.push_back(c);
    exps_.insert(exps_.end(), m.begin(), m.end());
  }

 private:
  void check_compatible(const Polynomial& b) const {
    if (!ring_ || !b.ring_) throw StructuralError("polynomial without a ring");
    if (ring_ != b.ring_ && !(same_space(*ring_, *b.ring_) && ring_->order == b.ring_->order))
      throw StructuralError("polynomials over different rings");
  }

  // a + c * x^shift * b (shift == nullptr means x^0).
  static Polynomial merge(const Polynomial& a, const Polynomial& b, const Coeff& c, const Exponent* shift) {
    const auto& k = a.field();
    const auto& ord = a.order();
    const std::size_t n = a.nvars();
    Polynomial r(a.ring_);
    r.coeffs_.reserve(a.size() + b.size());
    r.exps_.reserve((a.size() + b.size()) * n);
    Monomial tmp(n);
    std::size_t i = 0, j = 0;
    auto shifted = [&](std::size_t jj) -> ExponentSpan {
      if (!shift) return b.exponents(jj);
      auto e = b.exponents(jj);
      for (std::size_t v = 0; v < n; ++v) {
        unsigned x = unsigned(e[v]) + shift[v];
        if (x > 0xFFFFu) throw ResourceError("max_degree", "exponent overflow");
        tmp[v] = static_cast<Exponent>(x);
      }
      return tmp;
    };
    while (i < a.size() || j < b.size()) {
      if (j == b.size()) {
        r.push_raw(a.coeffs_[i], a.exponents(i));
        ++i;
        continue;
      }
      auto bj = shifted(j);
      if (i == a.size()) {
        r.push_raw(k.mul(c, b.coeffs_[j]), bj);
        ++j;
        continue;
      }
      auto cmp = ord.compare(a.exponents(i), bj);
      if (cmp > 0) {
        r.push_raw(a.coeffs_[i], a.exponents(i));
        ++i;
      } else if (cmp < 0) {
        r.push_raw(k.mul(c, b.coeffs_[j]), bj);
        ++j;
      } else {
        auto s = k.add(a.coeffs_[i], k.mul(c, b.coeffs_[j]));
        if (!k.is_zero(s)) r.push_raw(s, bj);
        ++i;
        ++j;
      }
    }
    return r;
  }

  void push_raw(const Coeff& c, ExponentSpan m) {
    if (field().is_zero(c)) return;
    coeffs_.push_back(c);
    exps_.insert(exps_.end(), m.begin(), m.end());
  }

  RingPtr<F> ring_;
  std::vector<Coeff> coeffs_;
  std::vector<Exponent> exps_;
};

template <CoefficientField F>
std::ostream& operator<<(std::ostream& os, const Polynomial<F>& p) {
  return os << p.to_string();
}

/// Three-way comparison of exponent vectors under `ord` (must agree on length).
inline std::strong_ordering compare_monomials(ExponentSpan a, ExponentSpan b, const MonomialOrder& ord) {
  return ord.compare(a, b);
}

}  // namespace lgv
