#include "gromov/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <istream>
#include <set>
#include <sstream>

#include "gromov/errors.hpp"
#include "gromov/geodesy.hpp"
#include "gromov/gh_solver.hpp"
#include "gromov/lattice.hpp"
#include "gromov/limits.hpp"
#include "gromov/rng.hpp"
#include "gromov/textio.hpp"

namespace gromov {

const char* to_string(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::ScalingGeodesic: return "ScalingGeodesic";
    case ExperimentKind::ProductUpper: return "ProductUpper";
    case ExperimentKind::TruncationLower: return "TruncationLower";
    case ExperimentKind::LatticeRatio: return "LatticeRatio";
    case ExperimentKind::LatticeWitness: return "LatticeWitness";
    case ExperimentKind::IsometryExample: return "IsometryExample";
  }
  return "?";
}

namespace {

const char* snake_name(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::ScalingGeodesic: return "scaling_geodesic";
    case ExperimentKind::ProductUpper: return "product_upper";
    case ExperimentKind::TruncationLower: return "truncation_lower";
    case ExperimentKind::LatticeRatio: return "lattice_ratio";
    case ExperimentKind::LatticeWitness: return "lattice_witness";
    case ExperimentKind::IsometryExample: return "isometry_example";
  }
  return "experiment";
}

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

}  // namespace

ExperimentKind parse_experiment_kind(const std::string& name) {
  for (ExperimentKind kind :
       {ExperimentKind::ScalingGeodesic, ExperimentKind::ProductUpper,
        ExperimentKind::TruncationLower, ExperimentKind::LatticeRatio,
        ExperimentKind::LatticeWitness, ExperimentKind::IsometryExample}) {
    if (name == to_string(kind) || name == snake_name(kind)) return kind;
  }
  throw ConfigError("kind", "unknown experiment kind '" + name + "'");
}

ExperimentConfig ExperimentConfig::parse(std::istream& in) {
  std::map<std::string, std::string> raw;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    const std::string stripped = trim(line);
    if (stripped.empty()) continue;
    const std::size_t eq = stripped.find('=');
    if (eq == std::string::npos) {
      throw ParseError("ParseError config line " + std::to_string(line_no) +
                       " is not 'key = value'");
    }
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    if (key.empty()) throw ParseError("ParseError empty key at line " + std::to_string(line_no));
    if (raw.count(key)) throw ConfigError(key, "duplicate key");
    raw[key] = value;
  }

  ExperimentConfig config;
  auto take = [&](const char* key) -> std::optional<std::string> {
    auto it = raw.find(key);
    if (it == raw.end()) return std::nullopt;
    std::string v = it->second;
    raw.erase(it);
    return v;
  };

  auto kind = take("kind");
  if (!kind) throw ConfigError("kind", "required");
  config.kind = parse_experiment_kind(*kind);
  config.name = take("name").value_or(snake_name(config.kind));
  if (auto seed = take("seed")) config.seed = static_cast<std::uint64_t>(parse_integer(*seed));
  if (auto threads = take("threads")) {
    config.threads = static_cast<int>(parse_integer(*threads));
    if (config.threads < 0) throw ConfigError("threads", "must be >= 0");
  }
  if (auto budget = take("budget")) {
    config.node_budget = parse_integer(*budget);
    if (config.node_budget < 0) throw ConfigError("budget", "must be >= 0");
  }
  if (auto out_dir = take("out_dir")) config.out_dir = *out_dir;
  config.params = std::move(raw);
  return config;
}

ExperimentConfig ExperimentConfig::load(const std::filesystem::path& path) {
  std::istringstream in(read_text_file(path));
  return parse(in);
}

// --- pipeline helpers ---------------------------------------------------------

namespace {

struct PipelineOutput {
  std::string csv;
  bool budget_hit = false;
  std::string note;  // extra manifest/summary detail
};

class Params {
 public:
  Params(const std::map<std::string, std::string>& params, std::set<std::string> allowed)
      : params_(params) {
    for (const auto& [key, value] : params_) {
      if (!allowed.count(key)) throw ConfigError(key, "unknown key for this experiment kind");
    }
  }

  std::optional<std::string> get(const std::string& key) const {
    auto it = params_.find(key);
    if (it == params_.end()) return std::nullopt;
    return it->second;
  }

  std::string require(const std::string& key) const {
    auto v = get(key);
    if (!v) throw ConfigError(key, "required");
    return *v;
  }

  double real(const std::string& key, std::optional<double> fallback = std::nullopt) const {
    auto v = get(key);
    if (!v) {
      if (fallback) return *fallback;
      throw ConfigError(key, "required");
    }
    return parse_real(*v);
  }

  long long integer(const std::string& key, std::optional<long long> fallback = std::nullopt) const {
    auto v = get(key);
    if (!v) {
      if (fallback) return *fallback;
      throw ConfigError(key, "required");
    }
    return parse_integer(*v);
  }

  std::vector<double> real_list(const std::string& key,
                                std::optional<std::string> fallback = std::nullopt) const {
    auto v = get(key);
    std::string text = v ? *v : (fallback ? *fallback : throw ConfigError(key, "required"));
    std::vector<double> out;
    for (const std::string& token : split_whitespace(text)) out.push_back(parse_real(token));
    if (out.empty()) throw ConfigError(key, "empty list");
    return out;
  }

  std::vector<Rational> rational_list(const std::string& key) const {
    std::vector<Rational> out;
    for (const std::string& token : split_whitespace(require(key))) {
      out.push_back(Rational::parse(token));
    }
    if (out.empty()) throw ConfigError(key, "empty list");
    return out;
  }

 private:
  const std::map<std::string, std::string>& params_;
};

FiniteMetricSpace space_from_reals_list(const std::vector<double>& values) {
  return from_reals(PointSet1D::from(values));
}

PipelineOutput run_scaling_geodesic(const ExperimentConfig& config) {
  Params p(config.params, {"mode", "ts", "space", "points", "random_n", "a_points", "a_space"});

  FiniteMetricSpace x = [&]() -> FiniteMetricSpace {
    int sources = 0;
    sources += p.get("space").has_value();
    sources += p.get("points").has_value();
    sources += p.get("random_n").has_value();
    if (sources != 1) {
      throw ConfigError("space", "exactly one of space / points / random_n is required");
    }
    if (auto path = p.get("space")) return read_matrix_file(*path);
    if (p.get("points")) return space_from_reals_list(p.real_list("points"));
    Lcg64 rng(config.seed);
    return random_space(rng, static_cast<int>(p.integer("random_n")));
  }();

  std::optional<FiniteMetricSpace> a;
  if (auto path = p.get("a_space")) {
    a = read_matrix_file(*path);
  } else if (p.get("a_points")) {
    a = space_from_reals_list(p.real_list("a_points"));
  }

  const std::vector<double> ts = p.real_list("ts");
  const std::string mode_name = p.get("mode").value_or("exact");
  DeviationMode mode;
  if (mode_name == "exact") {
    mode = DeviationMode::Exact;
  } else if (mode_name == "sandwich") {
    mode = DeviationMode::Sandwich;
  } else {
    throw ConfigError("mode", "expected exact or sandwich");
  }

  CurveFamily family = a ? CurveFamily::product_scale_family(std::move(*a), std::move(x))
                         : CurveFamily::scale_family(std::move(x));
  const double speed = family.x.diameter() / 2.0;
  std::vector<FiniteMetricSpace> samples = sample_curve(family, ts);

  DeviationOptions opts;
  opts.threads = config.threads;
  opts.solve.node_budget = config.node_budget;
  opts.fallback_to_sandwich = family.kind == CurveFamily::Kind::ProductScale;
  DeviationReport report = geodesic_deviation(samples, ts, speed, mode, opts);

  PipelineOutput out;
  out.csv = deviation_report_csv(report);
  out.budget_hit = report.budget_exhausted;
  out.note = "speed = " + format_real(report.speed) +
             "\nmax_deviation = " + format_real(report.max_deviation) +
             (report.exact_fallback ? "\nexact_fallback = true" : "");
  return out;
}

PipelineOutput run_product_upper(const ExperimentConfig& config) {
  Params p(config.params, {"trials", "na", "nb", "perturb_1024"});
  const int trials = static_cast<int>(p.integer("trials", 20));
  const int na = static_cast<int>(p.integer("na", 2));
  const int nb = static_cast<int>(p.integer("nb", 2));
  const int amp = static_cast<int>(p.integer("perturb_1024", 64));
  if (trials < 1) throw ConfigError("trials", "must be >= 1");
  if (na < 1 || nb < 1 || static_cast<long long>(na) * nb > 8) {
    throw ConfigError("na", "factor sizes must satisfy na*nb <= 8");
  }

  SolveOptions solve{config.node_budget};
  Lcg64 rng(config.seed);
  PipelineOutput out;
  out.csv = "trial,gh_a,gh_b,gh_product,bound,ok\n";
  for (int trial = 0; trial < trials; ++trial) {
    // Base entries sit in [1.5, 2] so the +-amp/1024 perturbation keeps the
    // triangle inequality.
    const FiniteMetricSpace a1 = random_space(rng, na, 1536, 2048);
    const FiniteMetricSpace a2 = perturb_space(rng, a1, amp);
    const FiniteMetricSpace b1 = random_space(rng, nb);
    const FiniteMetricSpace b2 = random_space(rng, nb);

    const GHCertificate gh_a = gh_exact(a1, a2, solve);
    const GHCertificate gh_b = gh_exact(b1, b2, solve);
    const GHCertificate gh_prod = gh_exact(l1_product(a1, b1), l1_product(a2, b2), solve);
    out.budget_hit |= gh_a.lower_proof == LowerProof::CallerBudgetExceeded ||
                      gh_b.lower_proof == LowerProof::CallerBudgetExceeded ||
                      gh_prod.lower_proof == LowerProof::CallerBudgetExceeded;

    const double bound = gh_a.value + gh_b.value;
    const bool ok = gh_prod.value <= bound + kEps;
    out.csv += std::to_string(trial) + ',' + format_real(gh_a.value) + ',' +
               format_real(gh_b.value) + ',' + format_real(gh_prod.value) + ',' +
               format_real(bound) + ',' + (ok ? "1" : "0") + '\n';
  }
  return out;
}

PipelineOutput run_truncation_lower(const ExperimentConfig& config) {
  Params p(config.params, {"gap", "ks", "x_points", "y_points"});
  const double gap = p.real("gap");
  std::vector<int> ks;
  for (double v : p.real_list("ks")) ks.push_back(static_cast<int>(v));
  const FiniteMetricSpace x = space_from_reals_list(p.real_list("x_points", "0 1"));
  const FiniteMetricSpace y = space_from_reals_list(p.real_list("y_points", "0"));

  SolveOptions solve{config.node_budget};
  const std::vector<TruncationPoint> series = truncation_lower_series(gap, ks, x, y, solve);
  // Product upper bound with the identity on A_k: gh(X, Y).
  const double upper = gh_exact(x, y, solve).value;

  PipelineOutput out;
  out.csv = "k,value,upper,proof\n";
  for (const TruncationPoint& point : series) {
    out.budget_hit |= point.cert.lower_proof == LowerProof::CallerBudgetExceeded;
    out.csv += std::to_string(point.k) + ',' + format_real(point.cert.value) + ',' +
               format_real(upper) + ',' + to_string(point.cert.lower_proof) + '\n';
  }
  return out;
}

PipelineOutput run_lattice_ratio(const ExperimentConfig& config) {
  Params p(config.params, {"n", "lambda", "c", "ts"});
  const int n = static_cast<int>(p.integer("n"));
  const Rational lambda = Rational::parse(p.require("lambda"));
  const Rational c = p.get("c") ? Rational::parse(*p.get("c")) : Rational{0, 1};
  const LatticeReport report = ratio_series(n, lambda, c, p.rational_list("ts"), config.threads);
  return PipelineOutput{lattice_report_csv(report), false, ""};
}

PipelineOutput run_lattice_witness(const ExperimentConfig& config) {
  Params p(config.params, {"n", "lambda", "c", "tmax", "ts"});
  const int n = static_cast<int>(p.integer("n"));
  const Rational lambda = Rational::parse(p.require("lambda"));
  const Rational c = p.get("c") ? Rational::parse(*p.get("c")) : Rational{0, 1};

  std::vector<Rational> grid;
  if (p.get("ts")) {
    grid = p.rational_list("ts");
  } else {
    const long long tmax = p.integer("tmax");
    if (tmax < 1) throw ConfigError("tmax", "must be >= 1");
    for (long long t = 1; t <= tmax; ++t) grid.push_back(Rational{t, 1});
  }

  const LatticeReport report = witness_report(n, lambda, c, grid, config.threads);
  PipelineOutput out{lattice_report_csv(report), false, ""};
  out.note = report.witness_t ? ("witness_t = " + format_real(report.witness_t->to_double()))
                              : "witness_t = none";
  return out;
}

PipelineOutput run_isometry_example(const ExperimentConfig& config) {
  Params p(config.params, {"c", "a_points", "x_points"});
  const double c = p.real("c", 1.0);
  const FiniteMetricSpace a = space_from_reals_list(p.real_list("a_points", "0 1 2"));
  const FiniteMetricSpace x = space_from_reals_list(p.real_list("x_points", "0 0.5 1"));

  const FiniteMetricSpace p_space = l1_product(add_constant(a, c), x);
  const FiniteMetricSpace q_space = l1_product(a, add_constant(x, c));
  std::vector<int> identity(static_cast<std::size_t>(p_space.size()));
  for (int i = 0; i < p_space.size(); ++i) identity[static_cast<std::size_t>(i)] = i;

  const IsometryCheck check = check_isometry(p_space, q_space, identity);
  PipelineOutput out;
  out.csv = "isometric,i,j,d_p,d_q\n";
  if (check.isometric) {
    out.csv += "true,,,,\n";
    out.note = "identity is an isometry";
  } else {
    out.csv += std::string("false,") + std::to_string(check.i) + ',' + std::to_string(check.j) +
               ',' + format_real(check.dist_x) + ',' + format_real(check.dist_y) + '\n';
    out.note = "identity is not an isometry; first violation (" + std::to_string(check.i) + "," +
               std::to_string(check.j) + "): " + format_real(check.dist_x) + " vs " +
               format_real(check.dist_y);
  }
  return out;
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& config) {
  const auto started = std::chrono::steady_clock::now();
  ExperimentResult result;
  PipelineOutput output;
  try {
    switch (config.kind) {
      case ExperimentKind::ScalingGeodesic: output = run_scaling_geodesic(config); break;
      case ExperimentKind::ProductUpper: output = run_product_upper(config); break;
      case ExperimentKind::TruncationLower: output = run_truncation_lower(config); break;
      case ExperimentKind::LatticeRatio: output = run_lattice_ratio(config); break;
      case ExperimentKind::LatticeWitness: output = run_lattice_witness(config); break;
      case ExperimentKind::IsometryExample: output = run_isometry_example(config); break;
    }
  } catch (const CapExceededError& e) {
    result.exit_code = 3;
    result.summary = e.what();
    return result;
  } catch (const DimensionCapExceededError& e) {
    result.exit_code = 3;
    result.summary = e.what();
    return result;
  } catch (const Error& e) {
    result.exit_code = 2;
    result.summary = e.what();
    return result;
  }

  std::filesystem::create_directories(config.out_dir);
  const std::filesystem::path csv_path = config.out_dir / (config.name + ".csv");
  const std::filesystem::path manifest_path = config.out_dir / (config.name + "_manifest.txt");
  write_text_file_atomic(csv_path, output.csv);

  const auto wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - started)
                           .count();
  std::string manifest;
  manifest += "tool = " + std::string(kToolName) + " " + kToolVersion + "\n";
  manifest += "kind = " + std::string(to_string(config.kind)) + "\n";
  manifest += "name = " + config.name + "\n";
  manifest += "seed = " + std::to_string(config.seed) + "\n";
  manifest += "threads = " + std::to_string(config.threads) + "\n";
  if (config.node_budget >= 0) manifest += "budget = " + std::to_string(config.node_budget) + "\n";
  for (const auto& [key, value] : config.params) manifest += key + " = " + value + "\n";
  manifest += "output = " + csv_path.string() + "\n";
  if (!output.note.empty()) manifest += output.note + "\n";
  manifest += "wall_ms = " + std::to_string(wall_ms) + "\n";
  write_text_file_atomic(manifest_path, manifest);

  result.outputs = {csv_path, manifest_path};
  result.exit_code = output.budget_hit ? 3 : 0;
  result.summary = output.budget_hit ? "partial (budget exhausted)" : "ok";
  return result;
}

}  // namespace gromov
