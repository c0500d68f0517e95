#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lgv/poly_matrix.hpp"
#include "lgv/report.hpp"

namespace lgv {

/// Local data of a point for one adjacent pair: d1 = dim f(V1), d2 = dim g(V2),
/// c = dim ker f on the special fiber.
struct PointData {
  int d1 = 0;
  int d2 = 0;
  int c = 0;

  friend bool operator==(const PointData&, const PointData&) = default;
  std::string to_string() const {
    return "(" + std::to_string(d1) + "," + std::to_string(d2) + "," + std::to_string(c) + ")";
  }
};

/// Extents of the six diagonal blocks of the standard (f, g):
/// (d1, ell, d2, ell, p, q) with ell = r-d1-d2, p = d-r-c+d2, q = d1+c-r.
struct BlockSizes {
  int d1, ell, d2, p, q;

  std::array<int, 6> extents() const { return {d1, ell, d2, ell, p, q}; }
  // Row blocks of a chart matrix A are (ell, p, q); column blocks (d1, ell, d2).
  std::array<int, 3> row_offsets() const { return {0, ell, ell + p}; }
  std::array<int, 3> col_offsets() const { return {0, d1, d1 + ell}; }
  std::array<int, 3> row_extents() const { return {ell, p, q}; }
  std::array<int, 3> col_extents() const { return {d1, ell, d2}; }
};

inline BlockSizes block_sizes(int d, int r, const PointData& pd) {
  if (!(0 < r && r < d)) throw SpecError("need 0 < r < d, got d=" + std::to_string(d) + " r=" + std::to_string(r));
  BlockSizes b{pd.d1, r - pd.d1 - pd.d2, pd.d2, d - r - pd.c + pd.d2, pd.d1 + pd.c - r};
  if (pd.d1 < 0 || pd.d2 < 0 || pd.c < 0 || b.ell < 0 || b.p < 0 || b.q < 0)
    throw SpecError("negative block size for d=" + std::to_string(d) + " r=" + std::to_string(r) +
                    " point data " + pd.to_string());
  return b;
}

/// All point data with nonnegative block sizes, ordered by (d1, d2, c).
inline std::vector<PointData> valid_point_data(int d, int r) {
  std::vector<PointData> out;
  if (!(0 < r && r < d)) return out;
  for (int d1 = 0; d1 <= r; ++d1)
    for (int d2 = 0; d1 + d2 <= r; ++d2)
      for (int c = std::max(0, r - d1); c <= d - r + d2; ++c) out.push_back({d1, d2, c});
  return out;
}

/// Chain parameters: bundle rank d, subbundle rank r, length n, and the point
/// data of each of the n-1 adjacent pairs.
struct ChartSpec {
  int d = 0;
  int r = 0;
  int n = 2;
  std::vector<PointData> pairs;

  void validate() const {
    if (!(0 < r && r < d)) throw SpecError("need 0 < r < d");
    if (n < 2) throw SpecError("need chain length n >= 2");
    if (static_cast<int>(pairs.size()) != n - 1)
      throw SpecError("need one point datum per adjacent pair (" + std::to_string(n - 1) + ")");
    for (const auto& p : pairs) (void)block_sizes(d, r, p);
  }
  int ell(std::size_t pair = 0) const { return r - pairs.at(pair).d1 - pairs.at(pair).d2; }
  int cell_dimension() const { return r * (d - r); }
};

template <CoefficientField F>
RingPtr<F> deformation_ring(const F& field) {
  return make_ring(field, VarTable({"s"}));
}

/// The block-form maps f, g for one pair, over any ring containing `s`.
template <CoefficientField F>
std::pair<PolyMatrix<F>, PolyMatrix<F>> standard_fg_matrices(const RingPtr<F>& ring, int d, int r,
                                                             const PointData& pd) {
  auto b = block_sizes(d, r, pd);
  auto ext = b.extents();
  std::array<int, 7> off{};
  for (int i = 0; i < 6; ++i) off[i + 1] = off[i] + ext[i];
  auto s = Polynomial<F>::variable(ring, "s");
  auto one = Polynomial<F>::one(ring);
  PolyMatrix<F> f(ring, d, d), g(ring, d, d);
  auto put = [&](PolyMatrix<F>& m, int row_blk, int col_blk, const Polynomial<F>& v) {
    for (int i = 0; i < ext[row_blk]; ++i) m(off[row_blk] + i, off[col_blk] + i) = v;
  };
  put(f, 0, 0, one);
  put(f, 1, 3, one);
  put(f, 2, 2, s);
  put(f, 3, 1, s);
  put(f, 4, 4, one);
  put(f, 5, 5, s);
  put(g, 0, 0, s);
  put(g, 1, 3, one);
  put(g, 2, 2, one);
  put(g, 3, 1, s);
  put(g, 4, 4, s);
  put(g, 5, 5, one);
  return {std::move(f), std::move(g)};
}

inline std::string commuting_var(char which, int i, int j, int ell) {
  if (ell >= 10) return std::string(1, which) + std::to_string(i) + "_" + std::to_string(j);
  return std::string(1, which) + std::to_string(i) + std::to_string(j);
}

/// Pairs of ell x ell matrices M = (x_ij), N = (y_ij) with MN = NM = s·Id, in
/// k[s, x.., y..]. Repeated generators (ell = 1) are listed once.
template <CoefficientField F>
Ideal<F> commuting_pair_ideal(const F& field, int ell) {
  if (ell < 0) throw SpecError("ell must be nonnegative");
  std::vector<std::string> names{"s"};
  for (char which : {'x', 'y'})
    for (int i = 1; i <= ell; ++i)
      for (int j = 1; j <= ell; ++j) names.push_back(commuting_var(which, i, j, ell));
  auto ring = make_ring(field, VarTable(names));
  PolyMatrix<F> m(ring, ell, ell), n(ring, ell, ell);
  for (int i = 0; i < ell; ++i)
    for (int j = 0; j < ell; ++j) {
      m(i, j) = Polynomial<F>::variable(ring, commuting_var('x', i + 1, j + 1, ell));
      n(i, j) = Polynomial<F>::variable(ring, commuting_var('y', i + 1, j + 1, ell));
    }
  auto sid = PolyMatrix<F>::scalar(ring, ell, Polynomial<F>::variable(ring, "s"));
  std::vector<Polynomial<F>> gens;
  for (const auto& prod : {m * n - sid, n * m - sid})
    for (const auto& e : prod.entries())
      if (std::find(gens.begin(), gens.end(), e) == gens.end()) gens.push_back(e);
  return Ideal<F>(ring, std::move(gens));
}

/// Name of chart variable A^node_{row,col} (1-based).
inline std::string chart_var(int node, int row, int col) {
  return "A" + std::to_string(node) + "_" + std::to_string(row) + "_" + std::to_string(col);
}

/// Chart coordinates of nodes first..first+n-1, then s.
template <CoefficientField F>
RingPtr<F> chart_ring(const F& field, int d, int r, int n, int first_node = 1) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i)
    for (int j = 1; j <= d - r; ++j)
      for (int k = 1; k <= r; ++k) names.push_back(chart_var(first_node + i, j, k));
  names.push_back("s");
  return make_ring(field, VarTable(names));
}

/// Defining equations of a linked Grassmannian inside the chart where each V_i
/// is the column span of [Id_r; A^i].
template <CoefficientField F>
struct ChartIdeal {
  int d = 0;
  int r = 0;
  int n = 0;
  int first_node = 1;
  std::vector<PointData> point_data;  // set for standard-form charts
  std::vector<std::pair<PolyMatrix<F>, PolyMatrix<F>>> maps;  // over the chart ring
  std::vector<Polynomial<F>> equations;  // entries of both containment identities, per pair
  Ideal<F> ideal;
  std::vector<ScheduleStep<F>> schedule;  // length-2 standard form only

  const RingPtr<F>& ring() const { return ideal.ring(); }
  std::string node_var(int node, int row, int col) const { return chart_var(first_node + node - 1, row, col); }
};

template <CoefficientField F>
bool satisfies_condition_one(const PolyMatrix<F>& f, const PolyMatrix<F>& g) {
  if (f.rows() != f.cols() || g.rows() != g.cols() || f.rows() != g.rows()) return false;
  auto sid = PolyMatrix<F>::scalar(f.ring(), f.rows(), Polynomial<F>::variable(f.ring(), "s"));
  return f * g == sid && g * f == sid;
}

/// Chart ideal for arbitrary maps (f_i, g_i) over k[s]: for each adjacent pair,
/// f_i(V_i) ⊆ V_{i+1} and g_i(V_{i+1}) ⊆ V_i written as A^{i+1}·top = bottom.
template <CoefficientField F>
ChartIdeal<F> linked_chart_ideal(const F& field, int d, int r,
                                 const std::vector<std::pair<PolyMatrix<F>, PolyMatrix<F>>>& maps,
                                 int first_node = 1) {
  if (!(0 < r && r < d)) throw SpecError("need 0 < r < d");
  if (maps.empty()) throw SpecError("need at least one pair of maps");
  const int n = static_cast<int>(maps.size()) + 1;
  auto ring = chart_ring(field, d, r, n, first_node);
  ChartIdeal<F> chart;
  chart.d = d;
  chart.r = r;
  chart.n = n;
  chart.first_node = first_node;
  for (const auto& [f, g] : maps) {
    if (f.rows() != std::size_t(d) || f.cols() != std::size_t(d) || g.rows() != std::size_t(d) ||
        g.cols() != std::size_t(d))
      throw SpecError("maps must be d x d");
    auto fe = f.embedded(ring), ge = g.embedded(ring);
    if (!satisfies_condition_one(fe, ge)) throw ConditionError("maps violate f*g = g*f = s*Id");
    chart.maps.emplace_back(std::move(fe), std::move(ge));
  }
  std::vector<PolyMatrix<F>> frames;  // [Id_r; A^i]
  std::vector<PolyMatrix<F>> coords;
  for (int i = 0; i < n; ++i) {
    coords.push_back(PolyMatrix<F>::variables(ring, "A" + std::to_string(first_node + i), d - r, r));
    frames.push_back(PolyMatrix<F>::vstack(PolyMatrix<F>::identity(ring, r), coords.back()));
  }
  auto containment = [&](const PolyMatrix<F>& image, const PolyMatrix<F>& target_coords) {
    return target_coords * image.block(0, 0, r, r) - image.block(r, 0, d - r, r);
  };
  for (int i = 0; i + 1 < n; ++i) {
    const auto& [f, g] = chart.maps[i];
    auto forward = containment(f * frames[i], coords[i + 1]);
    auto backward = containment(g * frames[i + 1], coords[i]);
    for (const auto* m : {&forward, &backward})
      chart.equations.insert(chart.equations.end(), m->entries().begin(), m->entries().end());
  }
  std::vector<Polynomial<F>> gens;
  for (const auto& e : chart.equations)
    if (!e.is_zero() && std::find(gens.begin(), gens.end(), e) == gens.end()) gens.push_back(e);
  chart.ideal = Ideal<F>(ring, std::move(gens));
  return chart;
}

/// If some generator is c·v + h with c a nonzero constant and h free of v,
/// returns v = -h/c.
template <CoefficientField F>
std::optional<Polynomial<F>> solve_for(const std::vector<Polynomial<F>>& gens, std::size_t v) {
  for (const auto& g : gens) {
    if (g.degree_in(v) != 1) continue;
    std::optional<typename F::Element> coeff;
    bool linear = true;
    std::vector<std::pair<Monomial, typename F::Element>> rest;
    for (std::size_t i = 0; i < g.size() && linear; ++i) {
      auto e = g.exponents(i);
      if (!e[v]) {
        rest.emplace_back(Monomial(e.begin(), e.end()), g.coeff(i));
        continue;
      }
      linear = total_degree(e) == 1;
      if (linear) coeff = g.coeff(i);
    }
    if (!linear || !coeff) continue;
    auto h = Polynomial<F>::from_terms(g.ring(), std::move(rest));
    return h.scale(g.field().neg(g.field().inv(*coeff)));
  }
  return std::nullopt;
}

/// Greedy solve-and-substitute schedule over `candidates` (in order); variables
/// without a unit-coefficient linear relation are skipped unless `require_all`.
template <CoefficientField F>
std::vector<ScheduleStep<F>> discover_schedule(const Ideal<F>& I, const std::vector<std::string>& candidates,
                                               bool require_all = false) {
  auto ring = I.ring();
  auto gens = I.generators();
  std::vector<ScheduleStep<F>> steps;
  for (const auto& name : candidates) {
    auto v = I.vars().index(name);
    auto expr = solve_for(gens, v);
    if (!expr) {
      if (require_all) throw ScheduleError(name, "no generator is linear in it with a unit coefficient");
      continue;
    }
    std::vector<Polynomial<F>> images;
    for (std::size_t u = 0; u < I.vars().size(); ++u)
      images.push_back(u == v ? *expr : Polynomial<F>::variable(ring, u));
    for (auto& g : gens) g = map_polynomial(g, ring, images);
    steps.push_back({name, *expr});
  }
  return steps;
}

/// Variables solved for in the length-2 standard chart, block by block:
/// A1_13, A1_23, A2_31, A2_32, A2_33, A2_11, A2_21, A1_22 (entries row-major).
inline std::vector<std::string> standard_schedule_variables(int d, int r, const PointData& pd) {
  auto b = block_sizes(d, r, pd);
  struct Blk {
    int node, row_blk, col_blk;
  };
  const Blk order[] = {{1, 0, 2}, {1, 1, 2}, {2, 2, 0}, {2, 2, 1}, {2, 2, 2}, {2, 0, 0}, {2, 1, 0}, {1, 1, 1}};
  auto ro = b.row_offsets(), co = b.col_offsets(), re = b.row_extents(), ce = b.col_extents();
  std::vector<std::string> names;
  for (const auto& blk : order)
    for (int i = 0; i < re[blk.row_blk]; ++i)
      for (int j = 0; j < ce[blk.col_blk]; ++j)
        names.push_back(chart_var(blk.node, ro[blk.row_blk] + i + 1, co[blk.col_blk] + j + 1));
  return names;
}

/// Names of the entries of the residual ell x ell block A^node_12.
inline std::vector<std::string> residual_block_variables(int d, int r, const PointData& pd, int node) {
  auto b = block_sizes(d, r, pd);
  std::vector<std::string> names;
  for (int i = 0; i < b.ell; ++i)
    for (int j = 0; j < b.ell; ++j) names.push_back(chart_var(node, i + 1, b.d1 + j + 1));
  return names;
}

/// Chart ideal of the chain of standard-form pairs described by `spec`.
/// For n = 2 the solve-and-substitute schedule is attached.
template <CoefficientField F>
ChartIdeal<F> standard_chart(const F& field, const ChartSpec& spec, int first_node = 1) {
  spec.validate();
  auto ks = deformation_ring(field);
  std::vector<std::pair<PolyMatrix<F>, PolyMatrix<F>>> maps;
  for (const auto& pd : spec.pairs) maps.push_back(standard_fg_matrices(ks, spec.d, spec.r, pd));
  auto chart = linked_chart_ideal(field, spec.d, spec.r, maps, first_node);
  chart.point_data = spec.pairs;
  if (spec.n == 2 && first_node == 1)
    chart.schedule = discover_schedule(chart.ideal, standard_schedule_variables(spec.d, spec.r, spec.pairs[0]), true);
  return chart;
}

enum class ChartCentre {
  singular,  // a point of the special fiber with the largest local commuting block
  generic,   // a point where s is invertible (f = Id, g = s·Id)
};

namespace detail {

// Rank conditions of im f_i ∩ ker f_{i+1} = 0 and im g_{i+1} ∩ ker g_i = 0 on
// the special fiber, where the standard maps are 0/1 matrices.
inline bool chain_compatible(int d, int r, const PointData& a, const PointData& b) {
  PrimeField k;
  auto ks = deformation_ring(k);
  auto [fa, ga] = standard_fg_matrices(ks, d, r, a);
  auto [fb, gb] = standard_fg_matrices(ks, d, r, b);
  auto at_zero = [&](const PolyMatrix<PrimeField>& m) {
    std::vector<std::vector<PrimeField::Element>> out(m.rows(), std::vector<PrimeField::Element>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = evaluate(m(i, j), {0u});
    return out;
  };
  auto rank = [&](const PolyMatrix<PrimeField>& m) { return matrix_rank(k, at_zero(m)); };
  return rank(fb * fa) == rank(fa) && rank(ga * gb) == rank(gb);
}

}  // namespace detail

/// Default chain for (d, r, n). Singular centre: maximise the total residual
/// block extent over chains whose neighbouring pairs are compatible; ties go to
/// the first chain in (d1, d2, c) order. Generic centre: f = Id, g = s·Id.
inline ChartSpec default_chart_spec(int d, int r, int n, ChartCentre centre = ChartCentre::singular) {
  ChartSpec spec{d, r, n, {}};
  if (!(0 < r && r < d) || n < 2) throw SpecError("need 0 < r < d and n >= 2");
  if (centre == ChartCentre::generic) {
    spec.pairs.assign(n - 1, PointData{r, 0, 0});
    return spec;
  }
  auto options = valid_point_data(d, r);
  const std::size_t m = options.size();
  auto ell = [&](std::size_t i) { return r - options[i].d1 - options[i].d2; };
  // best[k][i]: best total over pairs k..n-2 when pair k uses option i
  std::vector<std::vector<int>> best(n - 1, std::vector<int>(m, -1));
  std::vector<std::vector<int>> next(n - 1, std::vector<int>(m, -1));
  for (std::size_t i = 0; i < m; ++i) best[n - 2][i] = ell(i);
  for (int k = n - 3; k >= 0; --k)
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        if (best[k + 1][j] < 0 || !detail::chain_compatible(d, r, options[i], options[j])) continue;
        int total = ell(i) + best[k + 1][j];
        if (total > best[k][i]) {
          best[k][i] = total;
          next[k][i] = static_cast<int>(j);
        }
      }
  int start = -1;
  for (std::size_t i = 0; i < m; ++i)
    if (best[0][i] >= 0 && (start < 0 || best[0][i] > best[0][start])) start = static_cast<int>(i);
  if (start < 0) throw SpecError("no compatible chain of standard forms for the requested (d, r, n)");
  for (int k = 0, i = start; k < n - 1; i = next[k][i], ++k) spec.pairs.push_back(options[i]);
  return spec;
}

// ---------------------------------------------------------------------------
// Linked-Grassmannian conditions on the maps

template <CoefficientField F>
std::vector<Polynomial<F>> nonzero(std::vector<Polynomial<F>> v) {
  std::erase_if(v, [](const auto& p) { return p.is_zero(); });
  return v;
}

/// Conditions (I)-(III) of a linked Grassmannian for maps over k[s]:
/// (I) f·g = g·f = s·Id; (II) no point of the base where rank f <= r1 and
/// rank g <= r2 with r1 + r2 < d; (III) rank f_i = r1 forces rank f_{i+1}f_i = r1,
/// and likewise for g, encoded as radical containment of minor ideals.
template <CoefficientField F>
std::vector<ReportEntry> check_lg_conditions(int d, int r,
                                             const std::vector<std::pair<PolyMatrix<F>, PolyMatrix<F>>>& maps,
                                             const GbOptions& opt = {}) {
  std::vector<ReportEntry> out;
  if (maps.empty()) return out;
  const F field = maps.front().first.ring()->field;
  auto ks = deformation_ring(field);
  std::vector<std::pair<PolyMatrix<F>, PolyMatrix<F>>> m;
  for (const auto& [f, g] : maps) m.emplace_back(f.embedded(ks), g.embedded(ks));

  auto params = [&](std::size_t i) { return Json{{"d", d}, {"r", r}, {"pair", i + 1}}; };
  auto unit = [&](std::vector<Polynomial<F>> gens) { return Ideal<F>(ks, std::move(gens)).is_unit_ideal(opt); };

  for (std::size_t i = 0; i < m.size(); ++i) {
    ReportEntry e{"condition_I", params(i)};
    if (!satisfies_condition_one(m[i].first, m[i].second)) {
      e.status = Status::fail;
      e.witness = "f*g = " + (m[i].first * m[i].second).to_string() + ", g*f = " + (m[i].second * m[i].first).to_string();
    }
    out.push_back(std::move(e));
  }

  for (std::size_t i = 0; i < m.size(); ++i) {
    ReportEntry e{"condition_II", params(i)};
    const auto& [f, g] = m[i];
    int checked = 0;
    for (int r1 = 0; r1 < d && e.status == Status::pass; ++r1)
      for (int r2 = 0; r1 + r2 < d; ++r2) {
        auto gens = nonzero(f.minors(r1 + 1));
        auto more = nonzero(g.minors(r2 + 1));
        gens.insert(gens.end(), more.begin(), more.end());
        ++checked;
        if (!unit(std::move(gens))) {
          e.status = Status::fail;
          e.witness = "locus rank(f) <= " + std::to_string(r1) + ", rank(g) <= " + std::to_string(r2) + " is nonempty";
          break;
        }
      }
    e.details["rank_pairs_checked"] = checked;
    out.push_back(std::move(e));
  }

  if (m.size() == 1) {
    ReportEntry e{"condition_III", params(0)};
    e.details["note"] = "vacuous for a single pair";
    out.push_back(std::move(e));
    return out;
  }
  // minors_k(first) ⊆ √(minors_{k+1}(first) + minors_k(composite))
  auto contained = [&](const PolyMatrix<F>& first, const PolyMatrix<F>& composite, std::string& witness) {
    for (int k = 1; k <= d; ++k) {
      auto lower = nonzero(first.minors(k));
      if (lower.empty()) continue;
      auto gens = nonzero(first.minors(k + 1));
      auto more = nonzero(composite.minors(k));
      gens.insert(gens.end(), more.begin(), more.end());
      Ideal<F> locus(ks, gens);
      if (locus.is_unit_ideal(opt)) continue;
      for (const auto& minor : lower)
        if (!radical_member(minor, locus, opt)) {
          witness = "rank exactly " + std::to_string(k) + " locus meets the drop locus of the composite (minor " +
                    minor.to_string() + ")";
          return false;
        }
    }
    return true;
  };
  for (std::size_t i = 0; i + 1 < m.size(); ++i) {
    ReportEntry e{"condition_III", params(i)};
    std::string witness;
    if (!contained(m[i].first, m[i + 1].first * m[i].first, witness) ||
        !contained(m[i + 1].second, m[i].second * m[i + 1].second, witness)) {
      e.status = Status::fail;
      e.witness = witness;
    }
    out.push_back(std::move(e));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Truncation and the diagonal

/// Splits a length-n chart (n >= 3) into the length-(n-1) head and the
/// length-2 tail on nodes n-1, n. In the glue ring the tail's copy of node
/// n-1 is renamed B{n-1}_j_k; the diagonal identifies the two copies.
template <CoefficientField F>
struct TruncationGlue {
  ChartIdeal<F> head;
  ChartIdeal<F> tail;
  RingPtr<F> glue_ring;
  Ideal<F> head_ideal;  // in the glue ring
  Ideal<F> tail_ideal;  // in the glue ring
  std::vector<Polynomial<F>> diagonal_gens;
  Ideal<F> full_ideal;  // full chart ideal in the glue ring, plus the diagonal

  Ideal<F> product_ideal() const { return ideal_sum(head_ideal, tail_ideal); }
  Ideal<F> reassembled() const { return with_generators(product_ideal(), diagonal_gens); }
};

inline std::string doubled_var(int node, int row, int col) {
  return "B" + std::to_string(node) + "_" + std::to_string(row) + "_" + std::to_string(col);
}

template <CoefficientField F>
TruncationGlue<F> truncation_glue_ideal(const ChartIdeal<F>& full) {
  if (full.n < 3) throw SpecError("truncation needs chain length n >= 3");
  const int d = full.d, r = full.r, n = full.n;
  const F field = full.ring()->field;
  std::vector<std::pair<PolyMatrix<F>, PolyMatrix<F>>> head_maps(full.maps.begin(), full.maps.end() - 1);
  std::vector<std::pair<PolyMatrix<F>, PolyMatrix<F>>> tail_maps(full.maps.end() - 1, full.maps.end());
  TruncationGlue<F> glue;
  glue.head = linked_chart_ideal(field, d, r, head_maps, full.first_node);
  glue.tail = linked_chart_ideal(field, d, r, tail_maps, full.first_node + n - 2);
  if (!full.point_data.empty()) {
    glue.head.point_data.assign(full.point_data.begin(), full.point_data.end() - 1);
    glue.tail.point_data.assign(full.point_data.end() - 1, full.point_data.end());
  }

  const int shared = full.first_node + n - 2;
  std::vector<std::string> names;
  for (const auto& name : full.ring()->vars.names()) {
    if (name == "s") continue;
    names.push_back(name);
  }
  std::map<std::string, std::string> renaming;
  for (int j = 1; j <= d - r; ++j)
    for (int k = 1; k <= r; ++k) {
      names.push_back(doubled_var(shared, j, k));
      renaming[chart_var(shared, j, k)] = doubled_var(shared, j, k);
    }
  names.push_back("s");
  glue.glue_ring = make_ring(field, VarTable(names));

  glue.head_ideal = embed(glue.head.ideal, glue.glue_ring);
  glue.tail_ideal = rename_variables(glue.tail.ideal, renaming, glue.glue_ring);
  for (int j = 1; j <= d - r; ++j)
    for (int k = 1; k <= r; ++k)
      glue.diagonal_gens.push_back(Polynomial<F>::variable(glue.glue_ring, chart_var(shared, j, k)) -
                                   Polynomial<F>::variable(glue.glue_ring, doubled_var(shared, j, k)));
  glue.full_ideal = with_generators(embed(full.ideal, glue.glue_ring), glue.diagonal_gens);
  return glue;
}

}  // namespace lgv
