// lgv: command-line front end for chart ideals, commuting-pair schemes,
// Groebner bases, dimensions and the verification suite.
//
// Exit status: 0 success, 1 a suite check failed, 2 usage or input error,
// 3 a resource guard was exceeded.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "lgv/lgv.hpp"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct Common {
  std::string field = "fp:32003";
  std::uint64_t seed = 42;
  lgv::GbOptions guards;
  std::string out;
};

void add_field(CLI::App* cmd, Common& c) {
  cmd->add_option("--field", c.field, "Coefficient field: rat or fp:<prime>")->capture_default_str();
}

void add_guards(CLI::App* cmd, Common& c) {
  cmd->add_option("--max-degree", c.guards.max_degree, "Abort when a basis element exceeds this degree")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd->add_option("--max-basis", c.guards.max_basis, "Abort when the basis grows beyond this size")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd->add_option("--timeout", c.guards.timeout_seconds,
                  "Wall-clock limit per basis computation in seconds (env LGV_TIMEOUT_SECONDS)")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
}

template <class Fn>
auto with_field(const std::string& descriptor, Fn&& fn) {
  auto choice = lgv::parse_field_descriptor(descriptor);
  if (choice.rational) return fn(lgv::RationalField{});
  return fn(lgv::PrimeField(choice.prime));
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw lgv::PreconditionError("cannot write " + path);
  f << text;
}

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream s;
    s << std::cin.rdbuf();
    return s.str();
  }
  std::ifstream f(path);
  if (!f) throw lgv::PreconditionError("cannot read " + path);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

lgv::PointData parse_point_data(const std::string& text) {
  lgv::PointData p;
  char c1 = 0, c2 = 0;
  std::istringstream in(text);
  if (!(in >> p.d1 >> c1 >> p.d2 >> c2 >> p.c) || c1 != ',' || c2 != ',' || !(in >> std::ws).eof())
    throw lgv::ParseError("point data must look like d1,d2,c (got '" + text + "')");
  return p;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Linked-Grassmannian chart ideals and structural checks"};
  app.require_subcommand(1);
  Common c;
  if (const char* env = std::getenv("LGV_TIMEOUT_SECONDS")) {
    try {
      c.guards.timeout_seconds = std::stod(env);
    } catch (const std::exception&) {
      std::cerr << "ignoring malformed LGV_TIMEOUT_SECONDS='" << env << "'\n";
    }
  }

  // suite
  auto* suite = app.add_subcommand("suite", "Run the verification suite");
  std::string config_path;
  int d = 0, r = 0, n = 2;
  std::vector<std::string> specs;
  std::vector<int> ells;
  std::vector<std::string> controls;
  bool no_timings = false, json_stdout = false;
  suite->add_option("--config", config_path, "JSON suite configuration");
  suite->add_option("--d", d, "Bundle rank")->check(CLI::PositiveNumber);
  suite->add_option("--r", r, "Subbundle rank")->check(CLI::PositiveNumber);
  suite->add_option("--n", n, "Chain length")->capture_default_str()->check(CLI::Range(2, 64));
  suite->add_option("--spec", specs, "Point data d1,d2,c (repeatable)");
  suite->add_option("--ell", ells, "Commuting-pair extent to check (repeatable)")->check(CLI::Range(1, 9));
  suite->add_option("--control", controls, "Negative control: zero_maps or non_cm")
      ->check(CLI::IsMember({"zero_maps", "non_cm"}));
  suite->add_option("--seed", c.seed, "Seed for random sections and order permutations")->capture_default_str();
  suite->add_option("--out", c.out, "Write PREFIX.txt and PREFIX.json");
  suite->add_flag("--no-timings", no_timings, "Record 0 ms for every entry (byte-stable reports)");
  suite->add_flag("--json", json_stdout, "Print the JSON report instead of text");
  add_field(suite, c);
  add_guards(suite, c);

  // chart
  auto* chart = app.add_subcommand("chart", "Emit a linked-Grassmannian chart ideal");
  std::string centre = "singular";
  bool residual = false;
  chart->add_option("--d", d, "Bundle rank")->required()->check(CLI::PositiveNumber);
  chart->add_option("--r", r, "Subbundle rank")->required()->check(CLI::PositiveNumber);
  chart->add_option("--n", n, "Chain length")->capture_default_str()->check(CLI::Range(2, 64));
  chart->add_option("--spec", specs, "Point data d1,d2,c per adjacent pair");
  chart->add_option("--centre", centre, "Default point data: singular or generic")
      ->capture_default_str()
      ->check(CLI::IsMember({"singular", "generic"}));
  chart->add_flag("--residual", residual, "Apply the solve-and-substitute schedule (n = 2)");
  chart->add_option("--out", c.out, "Output file (default stdout)");
  add_field(chart, c);
  add_guards(chart, c);

  // matrix
  auto* matrix = app.add_subcommand("matrix", "Emit the commuting-pair ideal MN = NM = s*Id");
  int ell = 1;
  bool fiber = false;
  matrix->add_option("--ell", ell, "Matrix extent")->capture_default_str()->check(CLI::Range(0, 9));
  matrix->add_flag("--fiber", fiber, "Specialize s to 0");
  matrix->add_option("--out", c.out, "Output file (default stdout)");
  add_field(matrix, c);
  add_guards(matrix, c);

  // gb
  auto* gb = app.add_subcommand("gb", "Reduced Groebner basis of an ideal file");
  std::string in_path, order = "grevlex", strategy = "normal";
  gb->add_option("--in", in_path, "Ideal file ('-' for stdin)")->required();
  gb->add_option("--order", order, "lex, grevlex or wgrevlex")
      ->capture_default_str()
      ->check(CLI::IsMember({"lex", "grevlex", "wgrevlex"}));
  gb->add_option("--strategy", strategy, "Pair selection: normal or fifo")
      ->capture_default_str()
      ->check(CLI::IsMember({"normal", "fifo"}));
  gb->add_option("--out", c.out, "Output file (default stdout)");
  add_field(gb, c);
  add_guards(gb, c);

  // dim
  auto* dim = app.add_subcommand("dim", "Krull dimension of an ideal file");
  dim->add_option("--in", in_path, "Ideal file ('-' for stdin)")->required();
  dim->add_option("--out", c.out, "Output file (default stdout)");
  add_field(dim, c);
  add_guards(dim, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*suite) {
      lgv::SuiteConfig cfg = lgv::SuiteConfig::defaults();
      if (!config_path.empty()) cfg = lgv::suite_config_from_json(lgv::Json::parse(slurp(config_path)));
      const bool adhoc = d || r || !ells.empty() || !controls.empty();
      if (adhoc) {
        if (!config_path.empty()) throw lgv::SpecError("--config cannot be combined with --d/--r/--ell/--control");
        cfg.instances.clear();
        if (d || r) {
          if (!d || !r) throw lgv::SpecError("--d and --r go together");
          std::vector<lgv::PointData> pts;
          for (const auto& s : specs) pts.push_back(parse_point_data(s));
          cfg.instances.push_back(lgv::SuiteInstance::chart(d, r, n, std::move(pts)));
        }
        for (int e : ells) cfg.instances.push_back(lgv::SuiteInstance::commuting(e));
        for (const auto& k : controls)
          cfg.instances.push_back(lgv::SuiteInstance::control(k == "zero_maps"
                                                                  ? lgv::SuiteInstance::Kind::zero_maps_control
                                                                  : lgv::SuiteInstance::Kind::non_cm_control));
      }
      // flags beat the environment, which beats the config file
      if (suite->count("--field")) cfg.field = lgv::parse_field_descriptor(c.field);
      if (suite->count("--seed")) cfg.seed = c.seed;
      if (suite->count("--max-degree")) cfg.guards.max_degree = c.guards.max_degree;
      if (suite->count("--max-basis")) cfg.guards.max_basis = c.guards.max_basis;
      if (suite->count("--timeout") || std::getenv("LGV_TIMEOUT_SECONDS"))
        cfg.guards.timeout_seconds = c.guards.timeout_seconds;
      if (no_timings) cfg.record_timings = false;

      auto report = lgv::run_full_suite(cfg);
      const auto json = report.to_json().dump(2) + "\n";
      const auto text = report.to_text();
      std::cout << (json_stdout ? json : text);
      if (!c.out.empty()) {
        emit(text, c.out + ".txt");
        emit(json, c.out + ".json");
      }
      return report.has_failure() ? kExitFail : 0;
    }

    if (*chart) {
      return with_field(c.field, [&](auto field) {
        if (!(0 < r && r < d)) throw lgv::SpecError("need 0 < r < d");
        auto spec = lgv::default_chart_spec(
            d, r, n, centre == "generic" ? lgv::ChartCentre::generic : lgv::ChartCentre::singular);
        if (!specs.empty()) {
          spec.pairs.clear();
          for (const auto& s : specs) spec.pairs.push_back(parse_point_data(s));
        }
        auto ch = lgv::standard_chart(field, spec);
        std::string header = "# chart d=" + std::to_string(d) + " r=" + std::to_string(r) + " n=" + std::to_string(n) +
                             " point data";
        for (const auto& p : spec.pairs) header += " " + p.to_string();
        header += "\n";
        if (residual) {
          if (n != 2) throw lgv::SpecError("--residual needs n = 2");
          auto res = lgv::substitute_solved(ch.ideal, ch.schedule);
          emit(header + res.to_text(), c.out);
        } else {
          emit(header + ch.ideal.to_text(), c.out);
        }
        return 0;
      });
    }

    if (*matrix) {
      return with_field(c.field, [&](auto field) {
        auto I = lgv::commuting_pair_ideal(field, ell);
        if (fiber) I = lgv::specialize(I, {{"s", field.zero()}});
        emit(I.to_text(), c.out);
        return 0;
      });
    }

    if (*gb) {
      return with_field(c.field, [&](auto field) {
        auto I = lgv::Ideal<decltype(field)>::from_text(lgv::read_ideal_text(slurp(in_path)), field);
        c.guards.strategy = strategy == "fifo" ? lgv::PairStrategy::fifo : lgv::PairStrategy::normal;
        auto basis = I.groebner_basis(lgv::order_by_name(order, I.vars()), c.guards);
        emit(lgv::format_ideal_text(I.vars(), basis), c.out);
        return 0;
      });
    }

    if (*dim) {
      return with_field(c.field, [&](auto field) {
        auto I = lgv::Ideal<decltype(field)>::from_text(lgv::read_ideal_text(slurp(in_path)), field);
        auto res = lgv::krull_dimension(I, c.guards);
        std::string text = "dimension: " + std::to_string(res.dim) + "\nindependent:";
        for (const auto& v : res.witness_independent_set) text += " " + v;
        emit(text + "\n", c.out);
        return 0;
      });
    }
  } catch (const lgv::ResourceError& e) {
    std::cerr << e.what() << "\n";
    return kExitResource;
  } catch (const lgv::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const lgv::Json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
