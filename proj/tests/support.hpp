#pragma once

#include <random>
#include <string>
#include <vector>

#include "lgv/lgv.hpp"

namespace lgv::testing {

inline PrimeField fp() { return PrimeField(); }

template <CoefficientField F>
Polynomial<F> P(const RingPtr<F>& ring, const std::string& text) {
  return parse_polynomial(text, ring);
}

template <CoefficientField F>
Ideal<F> ideal(const F& field, const std::string& text) {
  return Ideal<F>::from_text(read_ideal_text(text), field);
}

template <CoefficientField F>
Ideal<F> ideal_in(const RingPtr<F>& ring, const std::vector<std::string>& gens) {
  std::vector<Polynomial<F>> ps;
  for (const auto& g : gens) ps.push_back(parse_polynomial(g, ring));
  return Ideal<F>(ring, std::move(ps));
}

inline Monomial random_monomial(std::mt19937_64& rng, std::size_t nvars, int max_exp) {
  Monomial m(nvars);
  std::uniform_int_distribution<int> e(0, max_exp);
  for (auto& x : m) x = static_cast<Exponent>(e(rng));
  return m;
}

/// Random polynomial with up to `terms` terms of exponents <= max_exp.
template <CoefficientField F>
Polynomial<F> random_polynomial(std::mt19937_64& rng, const RingPtr<F>& ring, int terms, int max_exp) {
  std::vector<std::pair<Monomial, typename F::Element>> ts;
  std::uniform_int_distribution<int> count(1, terms);
  for (int i = count(rng); i > 0; --i)
    ts.emplace_back(random_monomial(rng, ring->nvars(), max_exp), ring->field.random(rng));
  return Polynomial<F>::from_terms(ring, std::move(ts));
}

/// Small random ideal: `ngens` generators, each with few low-degree terms.
template <CoefficientField F>
Ideal<F> random_ideal(std::mt19937_64& rng, const RingPtr<F>& ring, int ngens, int terms, int max_exp) {
  std::vector<Polynomial<F>> gens;
  for (int i = 0; i < ngens; ++i) gens.push_back(random_polynomial(rng, ring, terms, max_exp));
  return Ideal<F>(ring, std::move(gens));
}

inline bool divides_any(const std::vector<Monomial>& gens, const Monomial& m) {
  for (const auto& g : gens)
    if (divides(g, m)) return true;
  return false;
}

/// Hilbert function by enumerating every monomial of each degree (standard
/// grading) and counting those outside the monomial ideal.
inline std::vector<std::int64_t> brute_force_hilbert(const std::vector<Monomial>& gens, std::size_t nvars, int up_to) {
  std::vector<std::int64_t> out(up_to + 1, 0);
  Monomial m(nvars, 0);
  auto rec = [&](auto&& self, std::size_t v, int remaining, int degree) -> void {
    if (v + 1 == nvars) {
      m[v] = static_cast<Exponent>(remaining);
      if (!divides_any(gens, m)) ++out[degree];
      return;
    }
    for (int e = 0; e <= remaining; ++e) {
      m[v] = static_cast<Exponent>(e);
      self(self, v + 1, remaining - e, degree);
    }
  };
  for (int d = 0; d <= up_to; ++d) rec(rec, 0, d, d);
  return out;
}

}  // namespace lgv::testing
