#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "lgv/schemes.hpp"

namespace lgv {

namespace detail {

inline Json point_params(int d, int r, const PointData& pd) {
  return Json{{"d", d}, {"r", r}, {"n", 2}, {"point_data", {pd.d1, pd.d2, pd.c}}};
}

inline Json chain_params(const ChartSpec& spec) {
  Json pts = Json::array();
  for (const auto& p : spec.pairs) pts.push_back({p.d1, p.d2, p.c});
  return Json{{"d", spec.d}, {"r", spec.r}, {"n", spec.n}, {"point_data", pts}};
}

template <CoefficientField F>
Polynomial<F> var(const RingPtr<F>& ring, const std::string& name) {
  return Polynomial<F>::variable(ring, name);
}

template <CoefficientField F>
typename F::Element value(const F& k, long long v) {
  return k.from_integer(v);
}

// First element of `a` that is not in `b`, if any.
template <CoefficientField F>
std::optional<Polynomial<F>> not_contained(const Ideal<F>& a, const Ideal<F>& b, const GbOptions& opt) {
  for (const auto& g : a.groebner_basis(opt))
    if (!ideal_member(g, b, opt)) return g;
  return std::nullopt;
}

inline std::string dims(long measured, long expected) {
  return "(" + std::to_string(measured) + ", expected " + std::to_string(expected) + ")";
}

}  // namespace detail

/// Local normal form of a length-2 chart: after the solve-and-substitute
/// schedule the residual must be the commuting-pair ideal on the A^1_12, A^2_12
/// blocks, the other remaining variables free, and the origin on the residual.
template <CoefficientField F>
ReportEntry verify_local_structure(const F& field, const ChartSpec& spec, const GbOptions& opt = {}) {
  ReportEntry e{"local_structure", detail::point_params(spec.d, spec.r, spec.pairs.at(0))};
  if (spec.n != 2) throw SpecError("local structure is checked for chains of length 2");
  const auto& pd = spec.pairs[0];
  const int ell_spec = spec.ell();
  ChartIdeal<F> chart;
  Ideal<F> residual;
  try {
    chart = standard_chart(field, spec);
    residual = substitute_solved(chart.ideal, chart.schedule);
  } catch (const ScheduleError& err) {
    e.status = Status::fail;
    e.witness = std::string("schedule failed at ") + err.variable() + ": " + err.what();
    return e;
  }
  const auto& vars = residual.vars();
  const auto s = vars.index("s");
  std::set<std::size_t> constrained;
  for (const auto& g : residual.groebner_basis(opt))
    for (std::size_t v = 0; v < vars.size(); ++v)
      if (v != s && g.uses_variable(v)) constrained.insert(v);

  const int n_con = static_cast<int>(constrained.size());
  const int ell = static_cast<int>(std::lround(std::sqrt(n_con / 2.0)));
  const int m = static_cast<int>(vars.size()) - 1 - n_con;
  e.details["ell"] = ell;
  e.details["m"] = m;
  e.details["schedule_length"] = chart.schedule.size();
  e.details["residual_basis_size"] = residual.groebner_basis(opt).size();

  auto fail = [&](std::string w) {
    e.status = Status::fail;
    e.witness = std::move(w);
    return e;
  };
  if (2 * ell * ell != n_con)
    return fail("constrained variable count " + std::to_string(n_con) + " is not 2*ell^2");
  if (ell != ell_spec) return fail("residual block extent " + detail::dims(ell, ell_spec));
  if (m + ell * ell != spec.cell_dimension())
    return fail("m + ell^2 " + detail::dims(m + ell * ell, spec.cell_dimension()));

  std::set<std::string> expected;
  for (int node : {1, 2})
    for (const auto& name : residual_block_variables(spec.d, spec.r, pd, node)) expected.insert(name);
  for (auto v : constrained)
    if (!expected.count(vars.name(v))) return fail("unexpected constrained variable " + vars.name(v));

  auto model = commuting_pair_ideal(field, ell);
  std::vector<Polynomial<F>> images{detail::var(residual.ring(), "s")};
  for (int node : {1, 2})
    for (int i = 1; i <= ell; ++i)
      for (int j = 1; j <= ell; ++j) images.push_back(detail::var(residual.ring(), chart_var(node, i, pd.d1 + j)));
  auto renamed = map_ideal(model, residual.ring(), images);
  if (auto g = detail::not_contained(residual, renamed, opt))
    return fail("residual element not in the commuting-pair ideal: " + g->to_string());
  if (auto g = detail::not_contained(renamed, residual, opt))
    return fail("commuting-pair relation not in the residual: " + g->to_string());

  std::vector<typename F::Element> origin(vars.size(), field.zero());
  for (const auto& g : residual.generators())
    if (!field.is_zero(evaluate(g, origin))) return fail("origin does not satisfy " + g.to_string());
  return e;
}

/// Flatness over k[s]: s is a nonzerodivisor, i.e. (I : s) = I.
template <CoefficientField F>
ReportEntry verify_flatness(const Ideal<F>& I, Json params = Json::object(), const GbOptions& opt = {}) {
  ReportEntry e{"flatness", std::move(params)};
  if (!I.vars().find("s")) throw PreconditionError("flatness needs the variable s");
  auto q = ideal_quotient(I, detail::var(I.ring(), "s"), opt);
  e.details["quotient_basis_size"] = q.groebner_basis(opt).size();
  if (auto g = detail::not_contained(q, I, opt)) {
    e.status = Status::fail;
    e.witness = g->to_string();
  }
  return e;
}

/// Dimensions of the special fiber, the s = 1 fiber and the total space of the
/// default (singular-centre) chart.
template <CoefficientField F>
ReportEntry verify_dimensions(const F& field, int d, int r, int n, const GbOptions& opt = {}) {
  auto spec = default_chart_spec(d, r, n);
  ReportEntry e{"dimensions", detail::chain_params(spec)};
  auto chart = standard_chart(field, spec);
  const long cell = spec.cell_dimension();
  const long ambient = static_cast<long>(n) * cell;
  auto fiber_dim = [&](long long s_value) -> long {
    try {
      return static_cast<long>(
          krull_dimension(specialize(chart.ideal, {{"s", detail::value(field, s_value)}}), opt).dim);
    } catch (const EmptySchemeError&) {
      return -1;
    }
  };
  long d0 = fiber_dim(0), d1 = fiber_dim(1);
  long total = static_cast<long>(krull_dimension(chart.ideal, opt).dim);
  e.details["ambient"] = ambient;
  e.details["fiber_dim_s0"] = d0;
  e.details["fiber_dim_s1"] = d1;
  e.details["total_dim"] = total;
  e.details["codimension_s0"] = ambient - d0;
  std::string witness;
  if (d0 != cell) witness += "s=0 fiber " + detail::dims(d0, cell) + "; ";
  if (d1 != cell) witness += "s=1 fiber " + detail::dims(d1, cell) + "; ";
  if (total != cell + 1) witness += "total space " + detail::dims(total, cell + 1) + "; ";
  if (!witness.empty()) {
    e.status = Status::fail;
    e.witness = witness.substr(0, witness.size() - 2);
  }
  return e;
}

/// At s = 1 the chart centred at a point with s invertible must become affine
/// space of dimension r(d-r) once nodes 2..n are solved for.
template <CoefficientField F>
ReportEntry verify_unit_fiber(const F& field, int d, int r, int n, const GbOptions& opt = {}) {
  auto spec = default_chart_spec(d, r, n, ChartCentre::generic);
  ReportEntry e{"unit_fiber_affine", detail::chain_params(spec)};
  auto chart = standard_chart(field, spec);
  auto fiber = specialize(chart.ideal, {{"s", field.one()}});
  std::vector<std::string> later;
  for (int node = 2; node <= n; ++node)
    for (int j = 1; j <= d - r; ++j)
      for (int k = 1; k <= r; ++k) later.push_back(chart_var(node, j, k));
  auto schedule = discover_schedule(fiber, later);
  auto residual = substitute_solved(fiber, schedule);
  const long cell = spec.cell_dimension();
  const long dim = static_cast<long>(krull_dimension(fiber, opt).dim);
  const auto residual_gb = residual.groebner_basis(opt);
  e.details["schedule_length"] = schedule.size();
  e.details["remaining_variables"] = residual.vars().size();
  e.details["dimension"] = dim;
  if (!residual_gb.empty()) {
    e.status = Status::fail;
    e.witness = "nonzero residual " + residual_gb.front().to_string();
  } else if (static_cast<long>(residual.vars().size()) != cell || dim != cell) {
    e.status = Status::fail;
    e.witness = "dimension " + detail::dims(dim, cell) + ", remaining variables " +
                detail::dims(static_cast<long>(residual.vars().size()), cell);
  }
  return e;
}

/// Cohen-Macaulay test for a homogeneous ideal: dim I generic linear forms must
/// form a regular sequence with Artinian quotient. Up to three draws.
template <CoefficientField F>
ReportEntry verify_cm_ideal(const Ideal<F>& I, std::uint64_t seed, Json params = Json::object(),
                            const GbOptions& opt = {}) {
  ReportEntry e{"cohen_macaulay", std::move(params)};
  const auto& k = I.field();
  const auto ring = I.ring();
  const std::size_t nv = I.vars().size();
  const std::size_t delta = krull_dimension(I, opt).dim;
  e.details["dimension"] = delta;
  std::mt19937_64 rng(seed);
  std::string witness;
  std::size_t failed_step = 0;
  constexpr int kAttempts = 3;
  for (int attempt = 1; attempt <= kAttempts; ++attempt) {
    Ideal<F> J = I;
    failed_step = 0;
    for (std::size_t step = 1; step <= delta && !failed_step; ++step) {
      Polynomial<F> form(ring);
      for (std::size_t v = 0; v < nv; ++v)
        form += Polynomial<F>::variable(ring, v).scale(k.random_nonzero(rng));
      auto q = ideal_quotient(J, form, opt);
      if (auto g = detail::not_contained(q, J, opt)) {
        failed_step = step;
        witness = "step " + std::to_string(step) + ": g = " + g->to_string() + " with g*(" + form.to_string() +
                  ") in J, g not in J";
        break;
      }
      J = with_generators(J, {form});
    }
    if (!failed_step) {
      std::vector<bool> pure(nv, false);
      for (const auto& m : leading_monomials(J.groebner_basis(opt))) {
        std::size_t nz = 0, last = 0;
        for (std::size_t v = 0; v < nv; ++v)
          if (m[v]) ++nz, last = v;
        if (nz == 1) pure[last] = true;
      }
      auto missing = std::find(pure.begin(), pure.end(), false);
      if (missing == pure.end()) {
        e.details["attempts"] = attempt;
        return e;
      }
      failed_step = delta + 1;
      witness = "quotient after " + std::to_string(delta) + " sections is not Artinian (no pure power of " +
                I.vars().name(static_cast<std::size_t>(missing - pure.begin())) + ")";
    }
  }
  e.status = Status::fail;
  e.witness = witness;
  e.details["attempts"] = kAttempts;
  e.details["failed_step"] = failed_step;
  return e;
}

/// CM of the special fiber of the commuting-pair scheme; the total space is
/// reported CM by composition when the fiber is CM and s is a nonzerodivisor.
template <CoefficientField F>
ReportEntry verify_cm(const F& field, int ell, std::uint64_t seed, const GbOptions& opt = {}) {
  if (ell < 1) throw PreconditionError("verify_cm needs ell >= 1");
  auto total = commuting_pair_ideal(field, ell);
  auto fiber = specialize(total, {{"s", field.zero()}});
  auto e = verify_cm_ideal(fiber, seed, Json{{"ell", ell}}, opt);
  bool flat = verify_flatness(total, {}, opt).passed();
  e.details["total_space"] = e.passed() && flat ? "PASS-by-composition" : "not established";
  return e;
}

/// One-sided reducedness certificate: a squarefree initial ideal under grevlex,
/// lex, or one of eight seeded variable permutations under grevlex.
template <CoefficientField F>
ReportEntry verify_reduced_fiber(const Ideal<F>& I, std::uint64_t seed, Json params = Json::object(),
                                 const GbOptions& opt = {}) {
  ReportEntry e{"reduced_fiber", std::move(params)};
  if (I.is_unit_ideal(opt)) throw PreconditionError("reducedness needs a proper ideal");
  const std::size_t nv = I.vars().size();
  std::vector<std::pair<std::string, MonomialOrder>> menu{{"grevlex", MonomialOrder::grevlex(nv)},
                                                          {"lex", MonomialOrder::lex(nv)}};
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> perm(nv);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  for (int i = 0; i < 8; ++i) {
    std::shuffle(perm.begin(), perm.end(), rng);
    std::string name = "grevlex[";
    for (std::size_t j = 0; j < nv; ++j) name += (j ? " " : "") + I.vars().name(perm[j]);
    menu.emplace_back(name + "]", MonomialOrder::permuted_grevlex(perm));
  }
  Json skipped = Json::array();
  int tried = 0;
  for (const auto& [name, ord] : menu) {
    std::vector<Polynomial<F>> gb;
    try {
      gb = I.groebner_basis(ord, opt);
    } catch (const ResourceError& err) {
      skipped.push_back(name + " (" + err.guard() + ")");
      continue;
    }
    ++tried;
    bool squarefree = std::all_of(gb.begin(), gb.end(), [](const auto& g) { return is_squarefree(g.leading_monomial()); });
    if (squarefree) {
      e.details["order"] = name;
      if (!skipped.empty()) e.details["skipped"] = skipped;
      return e;
    }
  }
  e.status = Status::inconclusive;
  e.details["orders_tried"] = tried;
  if (!skipped.empty()) e.details["skipped"] = skipped;
  return e;
}

/// Length induction: the chain of length n is the product of the length n-1
/// chain and the last pair, cut by the r(d-r) diagonal equations.
template <CoefficientField F>
ReportEntry verify_induction_step(const F& field, int d, int r, int n, const GbOptions& opt = {}) {
  if (n < 3) throw SpecError("induction step needs n >= 3");
  auto spec = default_chart_spec(d, r, n);
  ReportEntry e{"induction_step", detail::chain_params(spec)};
  auto full = standard_chart(field, spec);
  auto glue = truncation_glue_ideal(full);
  const long cell = spec.cell_dimension();
  auto zero = std::map<std::string, typename F::Element>{{"s", field.zero()}};
  const long dim_product = static_cast<long>(krull_dimension(specialize(glue.product_ideal(), zero), opt).dim);
  const long dim_full = static_cast<long>(krull_dimension(specialize(full.ideal, zero), opt).dim);
  const bool reassembled = ideal_equal(glue.reassembled(), glue.full_ideal, opt);
  const long ndiag = static_cast<long>(glue.diagonal_gens.size());
  e.details["diagonal_generators"] = ndiag;
  e.details["dim_product_s0"] = dim_product;
  e.details["dim_full_s0"] = dim_full;
  e.details["drop"] = dim_product - dim_full;
  e.details["reassembly"] = reassembled;
  std::string witness;
  if (ndiag != cell) witness += "diagonal generators " + detail::dims(ndiag, cell) + "; ";
  if (dim_product - dim_full != cell) witness += "dimension drop " + detail::dims(dim_product - dim_full, cell) + "; ";
  if (!reassembled) {
    auto g = detail::not_contained(glue.full_ideal, glue.reassembled(), opt);
    witness += "reassembly differs" + (g ? " at " + g->to_string() : std::string()) + "; ";
  }
  if (!witness.empty()) {
    e.status = Status::fail;
    e.witness = witness.substr(0, witness.size() - 2);
  }
  return e;
}

// ---------------------------------------------------------------------------
// Suite

struct SuiteInstance {
  enum class Kind { chart, commuting, zero_maps_control, non_cm_control };
  Kind kind = Kind::chart;
  int d = 0, r = 0, n = 2;
  std::vector<PointData> point_data;  // n = 2: specs to check (empty: all valid); n >= 3: the chain
  int ell = 0;

  static SuiteInstance chart(int d, int r, int n, std::vector<PointData> pts = {}) {
    return {Kind::chart, d, r, n, std::move(pts), 0};
  }
  static SuiteInstance commuting(int ell) { return {Kind::commuting, 0, 0, 2, {}, ell}; }
  static SuiteInstance control(Kind k) { return {k, 0, 0, 2, {}, 0}; }
};

struct SuiteConfig {
  std::vector<SuiteInstance> instances;
  FieldChoice field;
  std::uint64_t seed = 42;
  GbOptions guards;
  bool record_timings = true;

  /// Every length-2 chart with d <= 4, the chains (2,1,3) and (3,1,3), and the
  /// commuting-pair schemes with ell = 1, 2.
  static SuiteConfig defaults() {
    SuiteConfig c;
    for (int d = 2; d <= 4; ++d)
      for (int r = 1; r < d; ++r) c.instances.push_back(SuiteInstance::chart(d, r, 2));
    c.instances.push_back(SuiteInstance::chart(2, 1, 3));
    c.instances.push_back(SuiteInstance::chart(3, 1, 3));
    c.instances.push_back(SuiteInstance::commuting(1));
    c.instances.push_back(SuiteInstance::commuting(2));
    return c;
  }
};

/// JSON config: {"field", "seed", "record_timings", "guards": {max_degree,
/// max_basis, timeout_seconds}, "instances": [{"d","r","n","point_data"} |
/// {"ell"} | {"control": "zero_maps" | "non_cm"}]}. Missing keys keep defaults;
/// a missing instance list means the default list.
inline SuiteConfig suite_config_from_json(const Json& j) {
  SuiteConfig c = SuiteConfig::defaults();
  try {
    if (j.contains("field")) c.field = parse_field_descriptor(j.at("field").get<std::string>());
    if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("record_timings")) c.record_timings = j.at("record_timings").get<bool>();
    if (j.contains("guards")) {
      const auto& g = j.at("guards");
      if (g.contains("max_degree")) c.guards.max_degree = g.at("max_degree").get<long>();
      if (g.contains("max_basis")) c.guards.max_basis = g.at("max_basis").get<std::size_t>();
      if (g.contains("timeout_seconds")) c.guards.timeout_seconds = g.at("timeout_seconds").get<double>();
    }
    if (j.contains("instances")) {
      c.instances.clear();
      for (const auto& item : j.at("instances")) {
        if (item.contains("control")) {
          auto name = item.at("control").get<std::string>();
          if (name == "zero_maps")
            c.instances.push_back(SuiteInstance::control(SuiteInstance::Kind::zero_maps_control));
          else if (name == "non_cm")
            c.instances.push_back(SuiteInstance::control(SuiteInstance::Kind::non_cm_control));
          else
            throw SpecError("unknown control '" + name + "'");
        } else if (item.contains("ell")) {
          c.instances.push_back(SuiteInstance::commuting(item.at("ell").get<int>()));
        } else {
          std::vector<PointData> pts;
          if (item.contains("point_data"))
            for (const auto& p : item.at("point_data")) pts.push_back({p.at(0).get<int>(), p.at(1).get<int>(), p.at(2).get<int>()});
          c.instances.push_back(
              SuiteInstance::chart(item.at("d").get<int>(), item.at("r").get<int>(), item.value("n", 2), std::move(pts)));
        }
      }
    }
  } catch (const Json::exception& err) {
    throw ParseError(std::string("suite config: ") + err.what());
  }
  if (c.guards.max_degree <= 0 || c.guards.max_basis == 0 || c.guards.timeout_seconds <= 0)
    throw SpecError("guards must be positive");
  return c;
}

namespace detail {

template <class Fn>
ReportEntry guarded(const std::string& check, const Json& params, bool timings, Fn&& fn) {
  Stopwatch sw;
  ReportEntry e;
  try {
    e = fn();
  } catch (const ResourceError& err) {
    e = ReportEntry{check, params, Status::fail, "resource guard " + err.guard() + " exceeded"};
  } catch (const Error& err) {
    e = ReportEntry{check, params, Status::fail, err.what()};
  }
  e.millis = timings ? sw.millis() : 0;
  return e;
}

template <class Fn>
void guarded_many(std::vector<ReportEntry>& out, const std::string& check, const Json& params, bool timings,
                  Fn&& fn) {
  Stopwatch sw;
  std::vector<ReportEntry> entries;
  try {
    entries = fn();
  } catch (const ResourceError& err) {
    entries = {ReportEntry{check, params, Status::fail, "resource guard " + err.guard() + " exceeded"}};
  } catch (const Error& err) {
    entries = {ReportEntry{check, params, Status::fail, err.what()}};
  }
  const auto ms = timings ? sw.millis() / std::max<std::int64_t>(1, static_cast<std::int64_t>(entries.size())) : 0;
  for (auto& e : entries) {
    e.millis = ms;
    out.push_back(std::move(e));
  }
}

inline std::uint64_t entry_seed(std::uint64_t seed, std::size_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index)};
  std::uint32_t words[2];
  seq.generate(words, words + 2);
  return (std::uint64_t(words[0]) << 32) | words[1];
}

template <CoefficientField F>
void run_chart_instance(const F& field, const SuiteConfig& cfg, const SuiteInstance& inst, std::uint64_t seed,
                        std::vector<ReportEntry>& out) {
  const auto& opt = cfg.guards;
  const bool t = cfg.record_timings;
  const Json base{{"d", inst.d}, {"r", inst.r}, {"n", inst.n}};
  ChartSpec spec;
  try {
    spec = default_chart_spec(inst.d, inst.r, inst.n);
    if (inst.n >= 3 && !inst.point_data.empty()) spec.pairs = inst.point_data;
    if (inst.n == 2 && inst.point_data.size() == 1) spec.pairs = inst.point_data;
    spec.validate();
  } catch (const Error& err) {
    out.push_back(ReportEntry{"chart_spec", base, Status::fail, err.what()});
    return;
  }

  if (inst.n == 2) {
    auto pts = inst.point_data.empty() ? valid_point_data(inst.d, inst.r) : inst.point_data;
    for (const auto& pd : pts) {
      ChartSpec one{inst.d, inst.r, 2, {pd}};
      auto params = point_params(inst.d, inst.r, pd);
      out.push_back(guarded("local_structure", params, t, [&] { return verify_local_structure(field, one, opt); }));
      guarded_many(out, "conditions", params, t, [&] {
        auto ks = deformation_ring(field);
        auto entries = check_lg_conditions<F>(inst.d, inst.r, {standard_fg_matrices(ks, inst.d, inst.r, pd)}, opt);
        for (auto& e : entries) e.params["point_data"] = params["point_data"];
        return entries;
      });
    }
  } else {
    guarded_many(out, "conditions", chain_params(spec), t, [&] {
      auto ks = deformation_ring(field);
      std::vector<std::pair<PolyMatrix<F>, PolyMatrix<F>>> maps;
      for (const auto& pd : spec.pairs) maps.push_back(standard_fg_matrices(ks, inst.d, inst.r, pd));
      return check_lg_conditions<F>(inst.d, inst.r, maps, opt);
    });
  }

  out.push_back(guarded("dimensions", base, t, [&] { return verify_dimensions(field, inst.d, inst.r, inst.n, opt); }));
  out.push_back(guarded("flatness", chain_params(spec), t, [&] {
    return verify_flatness(standard_chart(field, spec).ideal, chain_params(spec), opt);
  }));
  out.push_back(guarded("unit_fiber_affine", base, t, [&] { return verify_unit_fiber(field, inst.d, inst.r, inst.n, opt); }));
  out.push_back(guarded("reduced_fiber", chain_params(spec), t, [&] {
    auto fiber = specialize(standard_chart(field, spec).ideal, {{"s", field.zero()}});
    return verify_reduced_fiber(fiber, seed, chain_params(spec), opt);
  }));
  if (inst.n >= 3)
    out.push_back(guarded("induction_step", base, t, [&] { return verify_induction_step(field, inst.d, inst.r, inst.n, opt); }));
}

template <CoefficientField F>
void run_instance(const F& field, const SuiteConfig& cfg, const SuiteInstance& inst, std::uint64_t seed,
                  std::vector<ReportEntry>& out) {
  const auto& opt = cfg.guards;
  const bool t = cfg.record_timings;
  using Kind = SuiteInstance::Kind;
  switch (inst.kind) {
    case Kind::chart:
      run_chart_instance(field, cfg, inst, seed, out);
      return;
    case Kind::commuting: {
      const Json params{{"ell", inst.ell}};
      out.push_back(guarded("flatness", params, t, [&] {
        return verify_flatness(commuting_pair_ideal(field, inst.ell), params, opt);
      }));
      out.push_back(guarded("cohen_macaulay", params, t, [&] { return verify_cm(field, inst.ell, seed, opt); }));
      out.push_back(guarded("reduced_fiber", params, t, [&] {
        auto fiber = specialize(commuting_pair_ideal(field, inst.ell), {{"s", field.zero()}});
        return verify_reduced_fiber(fiber, seed, params, opt);
      }));
      return;
    }
    case Kind::zero_maps_control: {
      const Json params{{"control", "zero_maps"}, {"d", 2}, {"r", 1}};
      guarded_many(out, "conditions", params, t, [&] {
        auto ks = deformation_ring(field);
        PolyMatrix<F> zero(ks, 2, 2);
        auto entries = check_lg_conditions<F>(2, 1, {{zero, zero}}, opt);
        for (auto& e : entries) e.params["control"] = "zero_maps";
        return entries;
      });
      return;
    }
    case Kind::non_cm_control: {
      const Json params{{"control", "non_cm"}};
      out.push_back(guarded("cohen_macaulay", params, t, [&] {
        return verify_cm_ideal(Ideal<F>::from_text(read_ideal_text("vars: x y z w\nx*z\nx*w\ny*z\ny*w\n"), field),
                               seed, params, opt);
      }));
      return;
    }
  }
}

}  // namespace detail

template <CoefficientField F>
VerificationReport run_full_suite(const F& field, const SuiteConfig& cfg) {
  VerificationReport report;
  report.seed = cfg.seed;
  report.field = field.descriptor();
  for (std::size_t i = 0; i < cfg.instances.size(); ++i)
    detail::run_instance(field, cfg, cfg.instances[i], detail::entry_seed(cfg.seed, i), report.entries);
  return report;
}

inline VerificationReport run_full_suite(const SuiteConfig& cfg) {
  if (cfg.field.rational) return run_full_suite(RationalField{}, cfg);
  return run_full_suite(PrimeField(cfg.field.prime), cfg);
}

}  // namespace lgv
