// Command-line front end: runs syntheses, writes certificates, coefficient
// and curve dumps, verification reports, and the acceptance suite.  All
// outputs are plain CSV/JSON so any external tool can plot them.  With a
// fixed seed every output file is byte-identical across runs.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include <nlohmann/json.hpp>

#include "trigsynth/acceptance.hpp"
#include "trigsynth/errors.hpp"
#include "trigsynth/gadgets.hpp"
#include "trigsynth/index_set.hpp"
#include "trigsynth/kernels.hpp"
#include "trigsynth/serialization.hpp"
#include "trigsynth/sup_norm.hpp"
#include "trigsynth/synthesizer.hpp"
#include "trigsynth/verify.hpp"

namespace fs = std::filesystem;
using namespace trigsynth;

namespace {

std::map<std::string, std::string> default_config() {
  return {
      {"seed", "717"},
      {"out", "."},
      {"grid", "1024"},
      {"n_min", "0"},
      {"n_cap", "100000"},
      {"filter", "all"},
      {"eps", "1"},
      {"points", "0;2.0943951023931953;4.1887902047863905"},
      {"values", "0.4 0;-0.35 0.1;0 0.45"},
      {"sizes", "1;2;3"},
      {"tolerances", ""},
      {"norm_budget", "1"},
      {"n_list", "0;1;2"},
      {"indices", "16;64;256;1024"},
      {"thresholds", ""},
      {"g_coeffs", ""},
      {"f_coeffs", ""},
      {"report_grid", "4096"},
      {"report_n_max", "0"},
      {"set_a", "0"},
      {"set_b", "3.141592653589793"},
  };
}

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (const char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  std::vector<std::string> trimmed;
  for (const std::string& item : out) {
    const std::string t = trim(item);
    if (!t.empty()) trimmed.push_back(t);
  }
  return trimmed;
}

double parse_double(const std::string& key, const std::string& s) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("config key '" + key + "': cannot parse '" +
                                s + "' as a number");
  }
}

int parse_int(const std::string& key, const std::string& s) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("config key '" + key + "': cannot parse '" +
                                s + "' as an integer");
  }
}

std::vector<double> parse_double_list(const std::string& key,
                                      const std::string& s) {
  std::vector<double> out;
  for (const std::string& item : split(s, ';'))
    out.push_back(parse_double(key, item));
  return out;
}

std::vector<int> parse_int_list(const std::string& key, const std::string& s) {
  std::vector<int> out;
  for (const std::string& item : split(s, ';')) out.push_back(parse_int(key, item));
  return out;
}

// Complex entries are "re im" pairs separated by semicolons.
std::vector<cplx> parse_complex_list(const std::string& key,
                                     const std::string& s) {
  std::vector<cplx> out;
  for (const std::string& item : split(s, ';')) {
    std::istringstream iss(item);
    double re = 0.0, im = 0.0;
    if (!(iss >> re))
      throw std::invalid_argument("config key '" + key + "': bad entry '" +
                                  item + "'");
    iss >> im;
    std::string rest;
    if (iss >> rest)
      throw std::invalid_argument("config key '" + key + "': bad entry '" +
                                  item + "'");
    out.push_back(cplx(re, im));
  }
  return out;
}

const std::string& get(const std::map<std::string, std::string>& cfg,
                       const std::string& key) {
  const auto it = cfg.find(key);
  if (it == cfg.end())
    throw std::invalid_argument("unknown config key '" + key + "'");
  return it->second;
}

IndexSetSpec parse_index_set(const std::map<std::string, std::string>& cfg) {
  const int n_min = parse_int("n_min", get(cfg, "n_min"));
  const int n_cap = parse_int("n_cap", get(cfg, "n_cap"));
  const std::string filter = get(cfg, "filter");
  if (filter == "all") return IndexSetSpec::all(n_min, n_cap);
  if (filter.rfind("progression:", 0) == 0) {
    const std::vector<std::string> parts = split(filter.substr(12), ':');
    if (parts.size() != 2)
      throw std::invalid_argument("filter progression needs the form progression:a:b");
    return IndexSetSpec::progression(n_min, n_cap, parse_int("filter", parts[0]),
                                     parse_int("filter", parts[1]));
  }
  if (filter.rfind("list:", 0) == 0)
    return IndexSetSpec::explicit_list(parse_int_list("filter", filter.substr(5)));
  throw std::invalid_argument("filter must be all, progression:a:b, or list:v1;v2");
}

TrigPoly load_poly_or_zero(const std::string& path) {
  if (path.empty()) return TrigPoly::zero();
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open coefficient file " + path);
  return read_coeff_csv(in);
}

TargetSpec parse_target(const std::map<std::string, std::string>& cfg) {
  TargetSpec spec;
  for (const double a : parse_double_list("points", get(cfg, "points")))
    spec.points.push_back(CirclePoint(a));
  spec.values = parse_complex_list("values", get(cfg, "values"));
  spec.validate();
  return spec;
}

fs::path out_dir(const std::map<std::string, std::string>& cfg) {
  const fs::path dir(get(cfg, "out"));
  fs::create_directories(dir);
  return dir;
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
}

void write_poly_files(const fs::path& dir, const TrigPoly& f, std::size_t grid) {
  std::ofstream coeffs(dir / "f_coeffs.csv", std::ios::binary);
  write_coeff_csv(coeffs, f);
  std::ofstream curve(dir / "f_curve.csv", std::ios::binary);
  write_curve_csv(curve, f, grid);
}

// Same generator contract as the acceptance suite: raw mt19937_64 bits
// mapped to [0,1), so demo inputs are portable across platforms.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  double unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }
  double range(double lo, double hi) { return lo + (hi - lo) * unit(); }

private:
  std::mt19937_64 eng_;
};

TrigPoly random_poly(Rng& rng, int degree) {
  std::vector<cplx> coeffs(2 * static_cast<std::size_t>(degree) + 1);
  for (cplx& c : coeffs) c = cplx(rng.range(-1.0, 1.0), rng.range(-1.0, 1.0));
  return TrigPoly::from_coeffs(degree, std::move(coeffs));
}

int cmd_kernels(const std::map<std::string, std::string>& cfg) {
  const fs::path dir = out_dir(cfg);
  const std::string list = get(cfg, "n_list");
  const std::vector<int> n_list =
      list.empty() ? std::vector<int>{} : parse_int_list("n_list", list);
  const auto grid = static_cast<std::size_t>(parse_int("grid", get(cfg, "grid")));

  std::string table = "n,lebesgue_constant\n";
  for (const int n : n_list) {
    if (n < 0) throw std::invalid_argument("n_list entries must be >= 0");
    table += std::to_string(n) + "," + format_double(lebesgue_constant(n)) + "\n";
    std::ofstream curve(dir / ("kernel_" + std::to_string(n) + ".csv"),
                        std::ios::binary);
    write_curve_csv(curve, dirichlet_kernel(n), grid);
  }
  write_file(dir / "kernels.csv", table);
  std::cout << "wrote " << (dir / "kernels.csv").string() << " ("
            << n_list.size() << " rows)\n";
  return 0;
}

int cmd_synth(const std::map<std::string, std::string>& cfg) {
  const fs::path dir = out_dir(cfg);
  const TrigPoly g = load_poly_or_zero(get(cfg, "g_coeffs"));
  const TargetSpec target = parse_target(cfg);
  const double eps = parse_double("eps", get(cfg, "eps"));
  const IndexSetSpec lambda = parse_index_set(cfg);
  const auto grid = static_cast<std::size_t>(parse_int("grid", get(cfg, "grid")));

  const SynthesisResult result = multi_point_target(g, target, eps, lambda);
  write_file(dir / "cert.json", certificate_to_json(result.cert));
  write_poly_files(dir, result.f, grid);
  std::cout << "n = " << result.n
            << "; certificate: " << (result.cert.pass() ? "pass" : "fail")
            << "; wrote cert.json, f_coeffs.csv, f_curve.csv in "
            << dir.string() << "\n";
  return result.cert.pass() ? 0 : 2;
}

int cmd_universal(const std::map<std::string, std::string>& cfg) {
  const fs::path dir = out_dir(cfg);
  const TrigPoly g = load_poly_or_zero(get(cfg, "g_coeffs"));
  const TargetSpec final_stage = parse_target(cfg);
  const std::vector<int> sizes = parse_int_list("sizes", get(cfg, "sizes"));
  const double budget = parse_double("norm_budget", get(cfg, "norm_budget"));
  const auto grid = static_cast<std::size_t>(parse_int("grid", get(cfg, "grid")));

  ExhaustionSchedule schedule = ExhaustionSchedule::prefixes(final_stage, sizes);
  const std::string tols = get(cfg, "tolerances");
  if (!tols.empty()) {
    schedule.tolerances = parse_double_list("tolerances", tols);
    schedule.validate();
  }

  const UniversalResult result = universal_function(g, final_stage, schedule, budget);

  std::string log;
  bool all_pass = true;
  for (const StageRecord& rec : result.stages) {
    nlohmann::ordered_json line;
    line["stage"] = rec.stage;
    line["n"] = rec.n;
    line["norm_added"] = rec.norm_added;
    line["pass"] = rec.cert.pass();
    log += line.dump() + "\n";
    write_file(dir / ("cert_stage" + std::to_string(rec.stage) + ".json"),
               certificate_to_json(rec.cert));
    if (!rec.cert.pass()) all_pass = false;
  }
  write_file(dir / "stage_log.jsonl", log);
  write_poly_files(dir, result.f, grid);
  std::cout << "stages: " << result.stages.size()
            << "; all certificates pass: " << (all_pass ? "yes" : "no")
            << "; wrote stage_log.jsonl, per-stage certs, f_coeffs.csv, "
               "f_curve.csv in "
            << dir.string() << "\n";
  return all_pass ? 0 : 2;
}

int cmd_verify(const std::map<std::string, std::string>& cfg,
               const std::string& report) {
  const fs::path dir = out_dir(cfg);
  const std::uint64_t seed =
      static_cast<std::uint64_t>(std::stoull(get(cfg, "seed")));

  if (report == "hausdorff") {
    std::vector<CirclePoint> a, b;
    for (const double t : parse_double_list("set_a", get(cfg, "set_a")))
      a.push_back(CirclePoint(t));
    for (const double t : parse_double_list("set_b", get(cfg, "set_b")))
      b.push_back(CirclePoint(t));
    const double d = hausdorff_distance(FiniteCompactum(std::move(a)),
                                        FiniteCompactum(std::move(b)));
    nlohmann::ordered_json j;
    j["distance"] = d;
    write_file(dir / "hausdorff.json", j.dump(2) + "\n");
    std::cout << "hausdorff distance " << format_double(d) << "; wrote "
              << (dir / "hausdorff.json").string() << "\n";
    return 0;
  }

  if (report == "localization") {
    Rng rng(seed);
    const TrigPoly u = random_poly(rng, 20);
    const std::vector<double> set_angles = {two_pi / 4, two_pi / 2,
                                            3 * two_pi / 4};
    std::vector<CirclePoint> pts;
    BumpSpec bs;
    constexpr double radius = 0.3;
    for (const double t : set_angles) {
      pts.push_back(CirclePoint(t));
      bs.ones_region.push_back(Arc(CirclePoint(t - radius), 2 * radius));
    }
    bs.zeros_region.push_back(Arc(CirclePoint(-radius), 2 * radius));
    bs.flatness = 1e-3;
    const BumpResult bump_result = bump(bs);
    const std::vector<int> n_list = parse_int_list("indices", get(cfg, "indices"));
    const auto rows = localization_report(u, bump_result.phi,
                                          FiniteCompactum(std::move(pts)),
                                          CirclePoint(0.0), n_list);
    write_file(dir / "localization.csv", localization_csv(rows));
    std::cout << "wrote " << (dir / "localization.csv").string() << " ("
              << rows.size() << " rows)\n";
    return 0;
  }

  if (report == "return") {
    TrigPoly f;
    std::vector<int> indices;
    const std::string f_path = get(cfg, "f_coeffs");
    if (f_path.empty()) {
      // Built-in demo: the staged 7-point construction.
      const TargetSpec final_stage = parse_target(cfg);
      const std::vector<int> sizes = parse_int_list("sizes", get(cfg, "sizes"));
      const double budget = parse_double("norm_budget", get(cfg, "norm_budget"));
      const UniversalResult ur = universal_function(
          TrigPoly::zero(), final_stage,
          ExhaustionSchedule::prefixes(final_stage, sizes), budget);
      f = ur.f;
      indices = ur.indices;
    } else {
      f = load_poly_or_zero(f_path);
      indices = parse_int_list("indices", get(cfg, "indices"));
    }
    const int grid = parse_int("report_grid", get(cfg, "report_grid"));
    const std::string thr = get(cfg, "thresholds");
    const std::vector<double> thresholds =
        thr.empty() ? default_return_thresholds()
                    : parse_double_list("thresholds", thr);
    const ReturnReport report_data =
        carleson_return_report(f, indices, grid, thresholds);
    write_file(dir / "return_points.csv", return_report_csv(report_data));
    write_file(dir / "return_summary.json",
               return_report_summary_json(report_data));
    std::cout << "wrote " << (dir / "return_points.csv").string() << " and "
              << (dir / "return_summary.json").string() << "\n";
    return 0;
  }

  if (report == "universality") {
    const TargetSpec target = parse_target(cfg);
    std::vector<TrigPoly> dictionary;
    dictionary.push_back(TrigPoly::constant(target.values[0]));
    dictionary.push_back(TrigPoly::harmonic(1, cplx(0.2, 0.0)));
    dictionary.push_back(TrigPoly::harmonic(-2, cplx(0.1, 0.1)));

    TrigPoly f;
    const std::string f_path = get(cfg, "f_coeffs");
    if (f_path.empty()) {
      // Built-in demo: synthesize toward the first dictionary entry.
      TargetSpec demo;
      demo.points = target.points;
      for (const CirclePoint p : target.points)
        demo.values.push_back(dictionary[0].eval(p));
      const double eps = parse_double("eps", get(cfg, "eps"));
      f = multi_point_target(TrigPoly::zero(), demo, eps, parse_index_set(cfg))
              .f;
    } else {
      f = load_poly_or_zero(f_path);
    }
    int n_max = parse_int("report_n_max", get(cfg, "report_n_max"));
    if (n_max <= 0) n_max = 2 * f.degree() + 64;
    std::vector<CirclePoint> pts = target.points;
    const auto rows = uniform_universality_report(
        f, FiniteCompactum(std::move(pts)), dictionary, n_max);
    write_file(dir / "universality.csv", universality_csv(rows));
    std::cout << "wrote " << (dir / "universality.csv").string() << " ("
              << rows.size() << " rows)\n";
    return 0;
  }

  throw std::invalid_argument("unknown subreport '" + report +
                              "' (expected return, localization, "
                              "universality, or hausdorff)");
}

int cmd_defaults() {
  for (const auto& [key, value] : default_config())
    std::cout << key << "=" << value << "\n";
  return 0;
}

int cmd_acceptance(const std::map<std::string, std::string>& cfg) {
  const fs::path dir = out_dir(cfg);
  const std::uint64_t seed =
      static_cast<std::uint64_t>(std::stoull(get(cfg, "seed")));
  const std::vector<CriterionResult> results = run_acceptance(seed);
  write_file(dir / "acceptance.txt", render_acceptance(results, false));
  std::cout << render_acceptance(results, true);
  return acceptance_pass(results) ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"trigonometric partial-sum synthesis toolkit"};
  app.require_subcommand(1);

  std::string config_path;
  std::string seed_flag, out_flag, n_cap_flag, eps_flag, grid_flag;
  app.add_option("--config", config_path, "flat key=value config file");
  app.add_option("--seed", seed_flag, "random seed override");
  app.add_option("--out", out_flag, "output directory override");
  app.add_option("--n-cap", n_cap_flag, "index search cap override");
  app.add_option("--eps", eps_flag, "tolerance override");
  app.add_option("--grid", grid_flag, "curve sample grid override");

  CLI::App* kernels = app.add_subcommand("kernels", "kernel samples and Lebesgue constants");
  std::string n_list_flag;
  kernels->add_option("--n-list", n_list_flag, "semicolon-separated kernel orders");
  CLI::App* synth = app.add_subcommand("synth", "finite-target synthesis with certificate");
  CLI::App* universal = app.add_subcommand("universal", "staged schedule synthesis");
  CLI::App* verify_cmd = app.add_subcommand("verify", "numerical verification reports");
  std::string report;
  verify_cmd->add_option("report", report, "return | localization | universality | hausdorff")
      ->required();
  CLI::App* defaults_cmd = app.add_subcommand("defaults", "print every config default");
  CLI::App* acceptance_cmd = app.add_subcommand("acceptance", "run the gate criteria");
  for (CLI::App* sub : {kernels, synth, universal, verify_cmd, defaults_cmd, acceptance_cmd})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 3;
  }

  try {
    std::map<std::string, std::string> cfg = default_config();
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw std::invalid_argument("cannot open config " + config_path);
      for (const auto& [key, value] : parse_config(in)) {
        if (cfg.find(key) == cfg.end())
          throw std::invalid_argument("unknown config key '" + key + "'");
        cfg[key] = value;
      }
    }
    if (!seed_flag.empty()) cfg["seed"] = seed_flag;
    if (!out_flag.empty()) cfg["out"] = out_flag;
    if (!n_cap_flag.empty()) cfg["n_cap"] = n_cap_flag;
    if (!eps_flag.empty()) cfg["eps"] = eps_flag;
    if (!grid_flag.empty()) cfg["grid"] = grid_flag;
    if (!n_list_flag.empty()) cfg["n_list"] = n_list_flag;

    if (app.got_subcommand(kernels)) return cmd_kernels(cfg);
    if (app.got_subcommand(synth)) return cmd_synth(cfg);
    if (app.got_subcommand(universal)) return cmd_universal(cfg);
    if (app.got_subcommand(verify_cmd)) return cmd_verify(cfg, report);
    if (app.got_subcommand(defaults_cmd)) return cmd_defaults();
    if (app.got_subcommand(acceptance_cmd)) return cmd_acceptance(cfg);
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 3;
  } catch (const SearchExhausted& e) {
    std::cerr << "search exhausted: " << e.what() << "\n";
    return 2;
  } catch (const StageConflict& e) {
    std::cerr << "stage " << e.stage << " conflict: " << e.what() << "\n";
    return 2;
  } catch (const GapTooSmall& e) {
    std::cerr << "gap too small: " << e.what() << "\n";
    return 2;
  } catch (const BudgetTooSmall& e) {
    std::cerr << "degree budget too small: " << e.what() << "\n";
    return 2;
  } catch (const DegenerateGadget& e) {
    std::cerr << "degenerate gadget: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
