#pragma once

#include <algorithm>
#include <chrono>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "lgv/parse.hpp"
#include "lgv/polynomial.hpp"

namespace lgv {

enum class PairStrategy {
  normal,  // smallest lcm degree first, ties by lex comparison of lcms
  fifo,    // oldest pair first
};

/// Computation guards. Exceeding any of them raises ResourceError naming the guard.
struct GbOptions {
  std::size_t max_basis = 5000;
  long max_degree = 64;
  double timeout_seconds = 600.0;
  PairStrategy strategy = PairStrategy::normal;
  bool check_closure = true;  // re-verify that all S-polynomials reduce to zero
};

/// Remainder of `p` on division by `divisors` (leading terms taken in the ring
/// order of `p`). Deterministic: the first divisor in list order is used.
template <CoefficientField F>
Polynomial<F> normal_form(const Polynomial<F>& p, const std::vector<Polynomial<F>>& divisors) {
  const auto& k = p.field();
  std::vector<std::uint64_t> masks;
  masks.reserve(divisors.size());
  for (const auto& g : divisors) {
    if (!same_space(*g.ring(), *p.ring()) || !(g.order() == p.order()))
      throw StructuralError("normal_form: divisor over a different ring");
    masks.push_back(g.is_zero() ? 0 : support_mask(g.leading_monomial()));
  }
  Polynomial<F> r = p;
  std::size_t pos = 0;
  while (pos < r.size()) {
    auto m = r.exponents(pos);
    auto mmask = support_mask(m);
    bool reduced = false;
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      const auto& g = divisors[i];
      if (g.is_zero() || (masks[i] & ~mmask) != 0) continue;
      auto lm = g.leading_monomial();
      if (!divides(lm, m)) continue;
      auto c = k.div(r.coeff(pos), g.leading_coeff());
      auto q = quotient(m, lm);
      r = r.sub_mul(c, q, g);
      reduced = true;
      break;
    }
    if (!reduced) ++pos;
  }
  return r;
}

template <CoefficientField F>
Polynomial<F> normal_form(const Polynomial<F>& p, const std::vector<Polynomial<F>>& divisors,
                          const MonomialOrder& ord) {
  auto ring = with_order(p.ring(), ord);
  std::vector<Polynomial<F>> g;
  g.reserve(divisors.size());
  for (const auto& d : divisors) g.push_back(d.in_ring(ring));
  return normal_form(p.in_ring(ring), g);
}

template <CoefficientField F>
Polynomial<F> s_polynomial(const Polynomial<F>& f, const Polynomial<F>& g) {
  auto l = lcm(f.leading_monomial(), g.leading_monomial());
  const auto& k = f.field();
  auto a = f.mul_term(k.inv(f.leading_coeff()), quotient(l, f.leading_monomial()));
  return a.sub_mul(k.inv(g.leading_coeff()), quotient(l, g.leading_monomial()), g);
}

namespace detail {

template <CoefficientField F>
class Buchberger {
 public:
  Buchberger(RingPtr<F> ring, const GbOptions& opt)
      : ring_(std::move(ring)), opt_(opt), start_(std::chrono::steady_clock::now()) {}

  std::vector<Polynomial<F>> run(const std::vector<Polynomial<F>>& input) {
    for (const auto& f0 : input) {
      auto f = f0.in_ring(ring_);
      if (f.is_zero()) continue;
      if (f.is_constant()) return {Polynomial<F>::one(ring_)};
      update(f.monic());
    }
    while (!pairs_.empty()) {
      check_time();
      auto it = select();
      Pair pr = *it;
      pairs_.erase(it);
      auto h = normal_form(s_polynomial(polys_[pr.i], polys_[pr.j]), active_polys_);
      if (h.is_zero()) continue;
      if (h.is_constant()) return {Polynomial<F>::one(ring_)};
      if (h.degree() > opt_.max_degree)
        throw ResourceError("max_degree", "intermediate polynomial of degree " + std::to_string(h.degree()));
      update(h.monic());
      if (active_.size() > opt_.max_basis)
        throw ResourceError("max_basis", "basis grew beyond " + std::to_string(opt_.max_basis) + " elements");
    }
    return reduce();
  }

 private:
  struct Pair {
    std::size_t i, j;
    Monomial lcm;
    long degree;
    std::size_t seq;
  };

  void check_time() const {
    auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    if (elapsed > opt_.timeout_seconds)
      throw ResourceError("timeout_seconds", "Groebner basis computation ran longer than " +
                                                 std::to_string(opt_.timeout_seconds) + " s");
  }


  typename std::vector<Pair>::iterator select() {
    if (opt_.strategy == PairStrategy::fifo)
      return std::min_element(pairs_.begin(), pairs_.end(),
                              [](const Pair& a, const Pair& b) { return a.seq < b.seq; });
    return std::min_element(pairs_.begin(), pairs_.end(), [](const Pair& a, const Pair& b) {
      if (a.degree != b.degree) return a.degree < b.degree;
      if (a.lcm != b.lcm) return a.lcm < b.lcm;
      return a.seq < b.seq;
    });
  }

  // Gebauer-Moeller update: Buchberger's product criterion plus the chain criterion.
  void update(Polynomial<F> h) {
    const std::size_t hi = polys_.size();
    polys_.push_back(std::move(h));
    auto lt_h = polys_[hi].leading_monomial();

    std::vector<Pair> c;
    for (auto g : active_) {
      auto l = lcm(lt_h, polys_[g].leading_monomial());
      long deg = total_degree(l);
      c.push_back({g, hi, std::move(l), deg, 0});
    }
    auto is_coprime = [&](const Pair& p) {
      return coprime(polys_[p.i].leading_monomial(), polys_[p.j].leading_monomial());
    };
    std::vector<Pair> d;
    for (std::size_t k = 0; k < c.size(); ++k) {
      const auto& p = c[k];
      bool keep = is_coprime(p);
      if (!keep) {
        keep = true;
        for (std::size_t m = k + 1; m < c.size() && keep; ++m)
          if (divides(c[m].lcm, p.lcm)) keep = false;
        for (std::size_t m = 0; m < d.size() && keep; ++m)
          if (divides(d[m].lcm, p.lcm)) keep = false;
      }
      if (keep) d.push_back(p);
    }
    std::vector<Pair> next;
    for (auto& p : pairs_) {
      bool drop = divides(lt_h, p.lcm) && lcm(polys_[p.i].leading_monomial(), lt_h) != p.lcm &&
                  lcm(lt_h, polys_[p.j].leading_monomial()) != p.lcm;
      if (!drop) next.push_back(std::move(p));
    }
    for (auto& p : d) {
      if (is_coprime(p)) continue;
      p.seq = seq_++;
      next.push_back(std::move(p));
    }
    pairs_ = std::move(next);

    std::vector<std::size_t> still;
    for (auto g : active_)
      if (!divides(lt_h, polys_[g].leading_monomial())) still.push_back(g);
    still.push_back(hi);
    active_ = std::move(still);
    active_polys_.clear();
    for (auto i : active_) active_polys_.push_back(polys_[i]);
  }

  std::vector<Polynomial<F>> reduce() const {
    std::vector<Polynomial<F>> minimal;
    for (auto g : active_) {
      bool redundant = false;
      for (auto o : active_)
        if (o != g && divides(polys_[o].leading_monomial(), polys_[g].leading_monomial()) &&
            (!std::ranges::equal(polys_[o].leading_monomial(), polys_[g].leading_monomial()) || o < g)) {
          redundant = true;
          break;
        }
      if (!redundant) minimal.push_back(polys_[g]);
    }
    std::vector<Polynomial<F>> out;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      std::vector<Polynomial<F>> others;
      for (std::size_t j = 0; j < minimal.size(); ++j)
        if (j != i) others.push_back(minimal[j]);
      out.push_back(normal_form(minimal[i], others).monic());
    }
    const auto& ord = ring_->order;
    std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
      return ord.compare(a.leading_monomial(), b.leading_monomial()) > 0;
    });
    return out;
  }

  RingPtr<F> ring_;
  GbOptions opt_;
  std::chrono::steady_clock::time_point start_;
  std::vector<Polynomial<F>> polys_;
  std::vector<std::size_t> active_;
  std::vector<Polynomial<F>> active_polys_;
  std::vector<Pair> pairs_;
  std::size_t seq_ = 0;
};

}  // namespace detail

/// True iff every S-polynomial of `g` reduces to zero modulo `g`.
template <CoefficientField F>
bool is_groebner_basis(const std::vector<Polynomial<F>>& g) {
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      if (coprime(g[i].leading_monomial(), g[j].leading_monomial())) continue;
      if (!normal_form(s_polynomial(g[i], g[j]), g).is_zero()) return false;
    }
  return true;
}

/// Reduced Groebner basis of the ideal generated by `gens` under `ord`.
/// The result is monic, inter-reduced and sorted by descending leading term.
template <CoefficientField F>
std::vector<Polynomial<F>> reduced_groebner_basis(const std::vector<Polynomial<F>>& gens,
                                                  const RingPtr<F>& ring, const MonomialOrder& ord,
                                                  const GbOptions& opt = {}) {
  auto r = with_order(ring, ord);
  auto basis = detail::Buchberger<F>(r, opt).run(gens);
  if (opt.check_closure && !is_groebner_basis(basis))
    throw ConsistencyError("emitted basis fails the S-polynomial closure check");
  return basis;
}

/// An ideal given by generators in a fixed polynomial ring, with a per-order
/// cache of reduced Groebner bases. Copies share the cache.
template <CoefficientField F>
class Ideal {
 public:
  Ideal() = default;
  Ideal(RingPtr<F> ring, std::vector<Polynomial<F>> gens)
      : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
    for (auto& g : gens) {
      if (g.ring() && !same_space(*g.ring(), *ring_)) throw StructuralError("generator over a different ring");
      if (!g.is_zero()) gens_.push_back(g.in_ring(ring_));
    }
  }

  static Ideal from_text(const IdealText& text, const F& field) {
    auto ring = make_ring(field, text.vars);
    std::vector<Polynomial<F>> gens;
    for (const auto& g : text.generators) gens.push_back(parse_polynomial(g, ring));
    return Ideal(ring, std::move(gens));
  }

  const RingPtr<F>& ring() const noexcept { return ring_; }
  const VarTable& vars() const { return ring_->vars; }
  const F& field() const { return ring_->field; }
  const std::vector<Polynomial<F>>& generators() const noexcept { return gens_; }
  bool is_zero_ideal() const noexcept { return gens_.empty(); }

  /// Reduced Groebner basis for `ord`; computed once per order and cached.
  std::vector<Polynomial<F>> groebner_basis(const MonomialOrder& ord, const GbOptions& opt = {}) const {
    auto key = ord.key();
    {
      std::lock_guard lock(cache_->mutex);
      if (auto it = cache_->bases.find(key); it != cache_->bases.end()) return it->second;
    }
    auto basis = reduced_groebner_basis(gens_, ring_, ord, opt);
    std::lock_guard lock(cache_->mutex);
    return cache_->bases.emplace(key, std::move(basis)).first->second;
  }
  std::vector<Polynomial<F>> groebner_basis(const GbOptions& opt = {}) const {
    return groebner_basis(ring_->order, opt);
  }

  bool is_unit_ideal(const GbOptions& opt = {}) const {
    auto g = groebner_basis(opt);
    return g.size() == 1 && g[0].is_constant();
  }

  std::string to_text() const { return format_ideal_text(ring_->vars, gens_); }

 private:
  struct Cache {
    std::mutex mutex;
    std::map<std::string, std::vector<Polynomial<F>>> bases;
  };

  RingPtr<F> ring_;
  std::vector<Polynomial<F>> gens_;
  std::shared_ptr<Cache> cache_;
};

template <CoefficientField F>
bool ideal_member(const Polynomial<F>& p, const Ideal<F>& I, const MonomialOrder& ord, const GbOptions& opt = {}) {
  auto g = I.groebner_basis(ord, opt);
  auto ring = with_order(I.ring(), ord);
  return normal_form(p.in_ring(ring), g).is_zero();
}

template <CoefficientField F>
bool ideal_member(const Polynomial<F>& p, const Ideal<F>& I, const GbOptions& opt = {}) {
  return ideal_member(p, I, I.ring()->order, opt);
}

/// Equality of ideals, decided by comparing reduced Groebner bases.
template <CoefficientField F>
bool ideal_equal(const Ideal<F>& I, const Ideal<F>& J, const MonomialOrder& ord, const GbOptions& opt = {}) {
  if (!same_space(*I.ring(), *J.ring())) throw StructuralError("ideal_equal: ideals over different rings");
  return I.groebner_basis(ord, opt) == J.groebner_basis(ord, opt);
}

template <CoefficientField F>
bool ideal_equal(const Ideal<F>& I, const Ideal<F>& J, const GbOptions& opt = {}) {
  return ideal_equal(I, J, I.ring()->order, opt);
}

}  // namespace lgv
