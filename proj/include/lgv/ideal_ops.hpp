#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lgv/groebner.hpp"

namespace lgv {

// ---------------------------------------------------------------------------
// Ring maps

/// Image of `p` under the ring map sending variable i to images[i].
template <CoefficientField F>
Polynomial<F> map_polynomial(const Polynomial<F>& p, const RingPtr<F>& target,
                             const std::vector<Polynomial<F>>& images) {
  if (images.size() != p.nvars()) throw StructuralError("ring map needs one image per variable");
  // powers[v][e] = images[v]^e, grown on demand
  std::vector<std::vector<Polynomial<F>>> powers(p.nvars());
  auto power = [&](std::size_t v, Exponent e) -> const Polynomial<F>& {
    auto& pw = powers[v];
    if (pw.empty()) pw.push_back(Polynomial<F>::one(target));
    while (pw.size() <= e) pw.push_back(pw.back() * images[v]);
    return pw[e];
  };
  Polynomial<F> out(target);
  for (std::size_t i = 0; i < p.size(); ++i) {
    auto t = Polynomial<F>::constant(target, p.coeff(i));
    auto e = p.exponents(i);
    for (std::size_t v = 0; v < e.size(); ++v)
      if (e[v]) t = t * power(v, e[v]);
    out += t;
  }
  return out;
}

/// Re-expresses `p` in `target`, matching variables by name. Every variable
/// used by `p` must exist in `target`.
template <CoefficientField F>
Polynomial<F> embed(const Polynomial<F>& p, const RingPtr<F>& target) {
  if (p.ring() == target) return p;
  std::vector<Polynomial<F>> images;
  for (std::size_t v = 0; v < p.nvars(); ++v) {
    const auto& name = p.vars().name(v);
    if (auto j = target->vars.find(name))
      images.push_back(Polynomial<F>::variable(target, *j));
    else if (p.uses_variable(v))
      throw StructuralError("embed: variable '" + name + "' missing from target ring");
    else
      images.push_back(Polynomial<F>(target));
  }
  return map_polynomial(p, target, images);
}

template <CoefficientField F>
Ideal<F> embed(const Ideal<F>& I, const RingPtr<F>& target) {
  std::vector<Polynomial<F>> gens;
  for (const auto& g : I.generators()) gens.push_back(embed(g, target));
  return Ideal<F>(target, std::move(gens));
}

template <CoefficientField F>
Ideal<F> map_ideal(const Ideal<F>& I, const RingPtr<F>& target, const std::vector<Polynomial<F>>& images) {
  std::vector<Polynomial<F>> gens;
  for (const auto& g : I.generators()) gens.push_back(map_polynomial(g, target, images));
  return Ideal<F>(target, std::move(gens));
}

/// Renames variables; `renaming` maps old names to new names, others keep theirs.
template <CoefficientField F>
Ideal<F> rename_variables(const Ideal<F>& I, const std::map<std::string, std::string>& renaming,
                          const RingPtr<F>& target) {
  std::vector<Polynomial<F>> images;
  for (const auto& name : I.vars().names()) {
    auto it = renaming.find(name);
    images.push_back(Polynomial<F>::variable(target, it == renaming.end() ? name : it->second));
  }
  return map_ideal(I, target, images);
}

template <CoefficientField F>
Ideal<F> ideal_sum(const Ideal<F>& I, const Ideal<F>& J) {
  if (!same_space(*I.ring(), *J.ring())) throw StructuralError("ideal_sum: ideals over different rings");
  auto gens = I.generators();
  for (const auto& g : J.generators()) gens.push_back(g.in_ring(I.ring()));
  return Ideal<F>(I.ring(), std::move(gens));
}

template <CoefficientField F>
Ideal<F> with_generators(const Ideal<F>& I, const std::vector<Polynomial<F>>& extra) {
  auto gens = I.generators();
  for (const auto& g : extra) gens.push_back(g.in_ring(I.ring()));
  return Ideal<F>(I.ring(), std::move(gens));
}

template <CoefficientField F>
Polynomial<F> derivative(const Polynomial<F>& p, std::size_t var) {
  std::vector<std::pair<Monomial, typename F::Element>> terms;
  const auto& k = p.field();
  for (std::size_t i = 0; i < p.size(); ++i) {
    auto e = p.exponents(i);
    if (!e[var]) continue;
    Monomial m(e.begin(), e.end());
    auto c = k.mul(p.coeff(i), k.from_integer(static_cast<long long>(m[var])));
    --m[var];
    terms.emplace_back(std::move(m), c);
  }
  return Polynomial<F>::from_terms(p.ring(), std::move(terms));
}

template <CoefficientField F>
typename F::Element evaluate(const Polynomial<F>& p, const std::vector<typename F::Element>& point) {
  if (point.size() != p.nvars()) throw StructuralError("evaluate: point has the wrong length");
  const auto& k = p.field();
  auto sum = k.zero();
  for (std::size_t i = 0; i < p.size(); ++i) {
    auto t = p.coeff(i);
    auto e = p.exponents(i);
    for (std::size_t v = 0; v < e.size(); ++v)
      for (Exponent j = 0; j < e[v]; ++j) t = k.mul(t, point[v]);
    sum = k.add(sum, t);
  }
  return sum;
}

/// Exact quotient h / f; throws ConsistencyError if f does not divide h.
template <CoefficientField F>
Polynomial<F> divide_exact(const Polynomial<F>& h, const Polynomial<F>& f) {
  if (f.is_zero()) throw ConsistencyError("division by the zero polynomial");
  const auto& k = h.field();
  auto fr = f.in_ring(h.ring());
  Polynomial<F> q(h.ring()), r = h;
  while (!r.is_zero()) {
    auto lm = r.leading_monomial();
    if (!divides(fr.leading_monomial(), lm))
      throw ConsistencyError("exact division failed: " + f.to_string() + " does not divide " + h.to_string());
    auto c = k.div(r.leading_coeff(), fr.leading_coeff());
    auto m = quotient(lm, fr.leading_monomial());
    q.push_term(c, m);
    r = r.sub_mul(c, m, fr);
  }
  return q;
}

namespace detail {

inline std::string fresh_name(const VarTable& vars, std::string base) {
  while (vars.find(base)) base += "_";
  return base;
}

/// Variables of `vars` with `extra` prepended (weight 1).
inline VarTable prepend_variable(const VarTable& vars, const std::string& extra) {
  std::vector<std::string> names{extra};
  std::vector<int> weights{1};
  names.insert(names.end(), vars.names().begin(), vars.names().end());
  weights.insert(weights.end(), vars.weights().begin(), vars.weights().end());
  return VarTable(std::move(names), std::move(weights));
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Elimination, quotient, saturation, radical membership

/// I ∩ k[remaining variables], computed with a block order whose first block
/// holds `drop_vars`. The result lives in the ring of the remaining variables.
template <CoefficientField F>
Ideal<F> eliminate(const Ideal<F>& I, const std::vector<std::string>& drop_vars, const GbOptions& opt = {}) {
  const auto& vars = I.vars();
  std::vector<bool> dominant(vars.size(), false);
  for (const auto& name : drop_vars) dominant[vars.index(name)] = true;
  auto ord = MonomialOrder::elimination(vars.size(), dominant);
  auto basis = I.groebner_basis(ord, opt);

  std::vector<std::string> names;
  std::vector<int> weights;
  for (std::size_t v = 0; v < vars.size(); ++v)
    if (!dominant[v]) {
      names.push_back(vars.name(v));
      weights.push_back(vars.weight(v));
    }
  auto target = make_ring(I.field(), VarTable(names, weights));
  std::vector<Polynomial<F>> kept;
  for (const auto& g : basis) {
    bool uses_dropped = false;
    for (std::size_t v = 0; v < vars.size() && !uses_dropped; ++v)
      uses_dropped = dominant[v] && g.uses_variable(v);
    if (!uses_dropped) kept.push_back(embed(g, target));
  }
  return Ideal<F>(target, std::move(kept));
}

/// I ∩ J by eliminating t from t·I + (1 − t)·J.
template <CoefficientField F>
Ideal<F> ideal_intersection(const Ideal<F>& I, const Ideal<F>& J, const GbOptions& opt = {}) {
  if (!same_space(*I.ring(), *J.ring())) throw StructuralError("intersection: ideals over different rings");
  auto t = detail::fresh_name(I.vars(), "t");
  auto ext = make_ring(I.field(), detail::prepend_variable(I.vars(), t));
  auto tv = Polynomial<F>::variable(ext, t);
  auto one_minus_t = Polynomial<F>::one(ext) - tv;
  std::vector<Polynomial<F>> gens;
  for (const auto& g : I.generators()) gens.push_back(tv * embed(g, ext));
  for (const auto& g : J.generators()) gens.push_back(one_minus_t * embed(g, ext));
  auto cap = eliminate(Ideal<F>(ext, std::move(gens)), {t}, opt);
  return embed(cap, I.ring());
}

/// (I : f) = { g : g·f ∈ I }, via I ∩ (f) divided by f.
template <CoefficientField F>
Ideal<F> ideal_quotient(const Ideal<F>& I, const Polynomial<F>& f, const GbOptions& opt = {}) {
  if (f.is_zero()) throw PreconditionError("ideal_quotient: f must be nonzero");
  auto fr = f.in_ring(I.ring());
  auto cap = ideal_intersection(I, Ideal<F>(I.ring(), {fr}), opt);
  std::vector<Polynomial<F>> gens;
  for (const auto& h : cap.generators()) gens.push_back(divide_exact(h, fr));
  return Ideal<F>(I.ring(), std::move(gens));
}

/// (I : f^∞), eliminating t from I + (1 − t·f).
template <CoefficientField F>
Ideal<F> saturate(const Ideal<F>& I, const Polynomial<F>& f, const GbOptions& opt = {}) {
  if (f.is_zero()) throw PreconditionError("saturate: f must be nonzero");
  auto t = detail::fresh_name(I.vars(), "t");
  auto ext = make_ring(I.field(), detail::prepend_variable(I.vars(), t));
  std::vector<Polynomial<F>> gens;
  for (const auto& g : I.generators()) gens.push_back(embed(g, ext));
  gens.push_back(Polynomial<F>::one(ext) - Polynomial<F>::variable(ext, t) * embed(f, ext));
  return embed(eliminate(Ideal<F>(ext, std::move(gens)), {t}, opt), I.ring());
}

/// f ∈ √I, decided by 1 ∈ I + (1 − t·f) (Rabinowitsch).
template <CoefficientField F>
bool radical_member(const Polynomial<F>& f, const Ideal<F>& I, const GbOptions& opt = {}) {
  auto t = detail::fresh_name(I.vars(), "t");
  auto ext = make_ring(I.field(), detail::prepend_variable(I.vars(), t));
  std::vector<Polynomial<F>> gens;
  for (const auto& g : I.generators()) gens.push_back(embed(g, ext));
  gens.push_back(Polynomial<F>::one(ext) - Polynomial<F>::variable(ext, t) * embed(f, ext));
  return Ideal<F>(ext, std::move(gens)).is_unit_ideal(opt);
}

// ---------------------------------------------------------------------------
// Dimension and Hilbert functions

struct DimensionResult {
  std::size_t dim = 0;
  std::vector<std::string> witness_independent_set;
};

template <CoefficientField F>
std::vector<Monomial> leading_monomials(const std::vector<Polynomial<F>>& basis) {
  std::vector<Monomial> out;
  for (const auto& g : basis) {
    auto lm = g.leading_monomial();
    out.emplace_back(lm.begin(), lm.end());
  }
  return out;
}

namespace detail {

// Largest variable subset containing the support of no monomial in `masks`.
// Depth-first, trying inclusion before exclusion, so the witness is the
// lexicographically first maximum set.
class IndependentSetSearch {
 public:
  IndependentSetSearch(std::size_t nvars, std::vector<std::uint64_t> masks)
      : n_(nvars), masks_(std::move(masks)) {}

  std::uint64_t run() {
    dfs(0, 0, 0);
    return best_;
  }

 private:
  bool independent(std::uint64_t set) const {
    return std::none_of(masks_.begin(), masks_.end(), [&](auto m) { return (m & ~set) == 0; });
  }
  void dfs(std::size_t v, std::uint64_t set, std::size_t size) {
    if (size + (n_ - v) <= best_size_ && found_) return;
    if (v == n_) {
      if (!found_ || size > best_size_) {
        best_ = set;
        best_size_ = size;
        found_ = true;
      }
      return;
    }
    auto with = set | (std::uint64_t{1} << v);
    if (independent(with)) dfs(v + 1, with, size + 1);
    dfs(v + 1, set, size);
  }

  std::size_t n_;
  std::vector<std::uint64_t> masks_;
  std::uint64_t best_ = 0;
  std::size_t best_size_ = 0;
  bool found_ = false;
};

}  // namespace detail

/// Dimension of V(I) from a maximum independent set modulo the leading-term ideal.
template <CoefficientField F>
DimensionResult krull_dimension(const Ideal<F>& I, const GbOptions& opt = {}) {
  const auto& vars = I.vars();
  if (vars.size() > 63) throw ResourceError("max_dimension_vars", "independent-set search limited to 63 variables");
  auto basis = I.groebner_basis(MonomialOrder::grevlex(vars.size()), opt);
  if (basis.size() == 1 && basis[0].is_constant()) throw EmptySchemeError("krull_dimension of the unit ideal");
  std::vector<std::uint64_t> masks;
  for (const auto& m : leading_monomials(basis)) masks.push_back(support_mask(m));
  auto best = detail::IndependentSetSearch(vars.size(), std::move(masks)).run();
  DimensionResult r;
  for (std::size_t v = 0; v < vars.size(); ++v)
    if (best & (std::uint64_t{1} << v)) r.witness_independent_set.push_back(vars.name(v));
  r.dim = r.witness_independent_set.size();
  return r;
}

/// Numerator K(t) of the Hilbert series of k[x]/M, where the series is
/// K(t) / prod_i (1 − t^{w_i}). Coefficients indexed by degree.
class HilbertNumerator {
 public:
  static std::vector<std::int64_t> compute(std::vector<Monomial> gens, const std::vector<int>& weights) {
    return numerator(minimalize(std::move(gens)), weights);
  }

 private:
  using Poly = std::vector<std::int64_t>;

  static Poly add(Poly a, const Poly& b) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    return a;
  }
  static Poly shift(const Poly& a, long by) {
    Poly r(by, 0);
    r.insert(r.end(), a.begin(), a.end());
    return r;
  }
  static Poly times_one_minus(const Poly& a, long deg) {
    Poly r = a;
    r.resize(a.size() + deg, 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i + deg] -= a[i];
    return r;
  }

  static std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(),
              [](const Monomial& a, const Monomial& b) { return total_degree(a) < total_degree(b) || (total_degree(a) == total_degree(b) && a < b); });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> out;
    for (const auto& g : gens)
      if (std::none_of(out.begin(), out.end(), [&](const Monomial& o) { return divides(o, g); }))
        out.push_back(g);
    return out;
  }

  static Poly numerator(const std::vector<Monomial>& gens, const std::vector<int>& w) {
    if (gens.empty()) return {1};
    // Pairwise coprime generators: K = prod (1 − t^{deg m}).
    std::vector<int> count(w.size(), 0);
    for (const auto& g : gens)
      for (std::size_t v = 0; v < w.size(); ++v)
        if (g[v]) ++count[v];
    std::size_t pivot = w.size();
    for (std::size_t v = 0; v < w.size(); ++v)
      if (count[v] >= 2 && (pivot == w.size() || count[v] > count[pivot])) pivot = v;
    if (pivot == w.size()) {
      Poly k{1};
      for (const auto& g : gens) k = times_one_minus(k, weighted_degree(g, w));
      return k;
    }
    // K(M) = K(M + (x)) + t^{w_x} K(M : x)
    Monomial x(w.size(), 0);
    x[pivot] = 1;
    std::vector<Monomial> plus{x}, colon;
    for (const auto& g : gens) {
      if (!g[pivot]) plus.push_back(g);
      Monomial c = g;
      if (c[pivot]) --c[pivot];
      colon.push_back(std::move(c));
    }
    return add(numerator(minimalize(std::move(plus)), w), shift(numerator(minimalize(std::move(colon)), w), w[pivot]));
  }
};

/// dim_k (k[x]/M)_d for d = 0..up_to, graded by `weights`.
inline std::vector<std::int64_t> hilbert_function(const std::vector<Monomial>& monomial_gens,
                                                  const std::vector<int>& weights, long up_to) {
  auto series = HilbertNumerator::compute(monomial_gens, weights);
  series.resize(up_to + 1, 0);
  for (int w : weights)
    for (long d = w; d <= up_to; ++d) series[d] += series[d - w];
  return series;
}

/// Order of the pole of the Hilbert series at t = 1, i.e. the Krull dimension
/// of k[x]/M read off from polynomial growth of the Hilbert function.
inline std::size_t hilbert_growth_dimension(const std::vector<Monomial>& monomial_gens,
                                            const std::vector<int>& weights) {
  auto k = HilbertNumerator::compute(monomial_gens, weights);
  if (std::all_of(k.begin(), k.end(), [](auto c) { return c == 0; }))
    throw EmptySchemeError("hilbert_growth_dimension of the unit ideal");
  // Factor 1 − t^w = (1 − t)(1 + ... + t^{w-1}): each variable contributes one pole.
  std::size_t zeros = 0;
  for (;;) {
    std::int64_t at_one = 0;
    for (auto c : k) at_one += c;
    if (at_one != 0 || k.empty()) break;
    // divide by (1 − t): q_i = sum_{j<=i} k_j
    std::vector<std::int64_t> q(k.size() - 1);
    std::int64_t run = 0;
    for (std::size_t i = 0; i + 1 < k.size(); ++i) q[i] = (run += k[i]);
    k = std::move(q);
    ++zeros;
  }
  return weights.size() - zeros;
}

template <CoefficientField F>
std::vector<std::int64_t> hilbert_function(const Ideal<F>& I, long up_to, const GbOptions& opt = {}) {
  const auto& vars = I.vars();
  auto ord = vars.has_unit_weights() ? MonomialOrder::grevlex(vars.size())
                                     : MonomialOrder::weighted_grevlex(vars.weights());
  return hilbert_function(leading_monomials(I.groebner_basis(ord, opt)), vars.weights(), up_to);
}

// ---------------------------------------------------------------------------
// Specialization, solve-and-substitute, Jacobian rank

/// Substitutes constants for the assigned variables; the result lives in the
/// ring of the unassigned variables.
template <CoefficientField F>
Ideal<F> specialize(const Ideal<F>& I, const std::map<std::string, typename F::Element>& assignments) {
  const auto& vars = I.vars();
  std::vector<std::string> names;
  std::vector<int> weights;
  for (const auto& [name, value] : assignments) (void)vars.index(name);
  for (std::size_t v = 0; v < vars.size(); ++v)
    if (!assignments.count(vars.name(v))) {
      names.push_back(vars.name(v));
      weights.push_back(vars.weight(v));
    }
  auto target = make_ring(I.field(), VarTable(names, weights));
  std::vector<Polynomial<F>> images;
  for (std::size_t v = 0; v < vars.size(); ++v) {
    auto it = assignments.find(vars.name(v));
    images.push_back(it == assignments.end() ? Polynomial<F>::variable(target, vars.name(v))
                                             : Polynomial<F>::constant(target, it->second));
  }
  return map_ideal(I, target, images);
}

template <CoefficientField F>
struct ScheduleStep {
  std::string variable;
  Polynomial<F> expression;  // variable = expression
};

/// Applies the schedule in order: each variable must occur in a current
/// generator as a unit multiple of (variable − expression), with the expression
/// free of the variable. Substituted variables are dropped from the ring.
template <CoefficientField F>
Ideal<F> substitute_solved(const Ideal<F>& I, const std::vector<ScheduleStep<F>>& schedule) {
  const auto& vars = I.vars();
  auto ring = I.ring();
  auto gens = I.generators();
  std::vector<bool> solved(vars.size(), false);
  for (const auto& step : schedule) {
    auto v = vars.find(step.variable);
    if (!v) throw ScheduleError(step.variable, "not a variable of the ideal");
    if (solved[*v]) throw ScheduleError(step.variable, "scheduled twice");
    auto expr = embed(step.expression, ring);
    if (expr.uses_variable(*v)) throw ScheduleError(step.variable, "expression contains the variable itself");
    auto relation = Polynomial<F>::variable(ring, *v) - expr;
    bool found = std::any_of(gens.begin(), gens.end(), [&](const Polynomial<F>& g) {
      return !g.is_zero() && g.degree_in(*v) == 1 && g.monic() == relation.monic();
    });
    if (!found)
      throw ScheduleError(step.variable, "no generator of the form unit * (" + relation.to_string() + ")");
    std::vector<Polynomial<F>> images;
    for (std::size_t u = 0; u < vars.size(); ++u)
      images.push_back(u == *v ? expr : Polynomial<F>::variable(ring, u));
    for (auto& g : gens) g = map_polynomial(g, ring, images);
    solved[*v] = true;
  }
  std::vector<std::string> names;
  std::vector<int> weights;
  for (std::size_t u = 0; u < vars.size(); ++u)
    if (!solved[u]) {
      names.push_back(vars.name(u));
      weights.push_back(vars.weight(u));
    }
  auto target = make_ring(I.field(), VarTable(names, weights));
  std::vector<Polynomial<F>> out;
  for (const auto& g : gens) {
    auto h = embed(g, target);
    if (std::find(out.begin(), out.end(), h) == out.end()) out.push_back(std::move(h));
  }
  return Ideal<F>(target, std::move(out));
}

/// Rank over the coefficient field of a matrix, by Gaussian elimination.
template <CoefficientField F>
std::size_t matrix_rank(const F& k, std::vector<std::vector<typename F::Element>> m) {
  std::size_t rank = 0;
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && k.is_zero(m[piv][c])) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    auto inv = k.inv(m[rank][c]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (k.is_zero(m[r][c])) continue;
      auto factor = k.mul(m[r][c], inv);
      for (std::size_t j = c; j < cols; ++j) m[r][j] = k.sub(m[r][j], k.mul(factor, m[rank][j]));
    }
    ++rank;
  }
  return rank;
}

/// Rank of the Jacobian matrix of the generators at a point of V(I).
template <CoefficientField F>
std::size_t jacobian_rank_at_point(const Ideal<F>& I, const std::vector<typename F::Element>& point) {
  const auto& k = I.field();
  for (const auto& g : I.generators())
    if (!k.is_zero(evaluate(g, point)))
      throw PreconditionError("jacobian_rank_at_point: point does not satisfy " + g.to_string());
  std::vector<std::vector<typename F::Element>> jac;
  for (const auto& g : I.generators()) {
    std::vector<typename F::Element> row;
    for (std::size_t v = 0; v < I.vars().size(); ++v) row.push_back(evaluate(derivative(g, v), point));
    jac.push_back(std::move(row));
  }
  return matrix_rank(k, std::move(jac));
}

}  // namespace lgv
