#include "gromov/cli.hpp"

#include <ostream>

#include "gromov/errors.hpp"
#include "gromov/experiment.hpp"
#include "gromov/gh_solver.hpp"
#include "gromov/lattice.hpp"
#include "gromov/limits.hpp"
#include "gromov/textio.hpp"

namespace gromov {

void print_usage(std::ostream& err) {
  err << "usage: " << kToolName << " <command> [args]\n"
      << "commands:\n"
      << "  validate <matrix-file>\n"
      << "  gh <file1> <file2> [--budget N] [--cert PATH]\n"
      << "  product <file1> <file2> -o OUT\n"
      << "  scale <file> <t> -o OUT\n"
      << "  hausdorff <file> --i A,B,... --j C,D,...\n"
      << "  lattice count <n> <radius p/q>\n"
      << "  lattice witness <n> <lambda> <c> <tmax>\n"
      << "  run <config-file>\n";
}

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<int> parse_index_list(const std::string& text) {
  std::vector<int> out;
  std::string token;
  for (char ch : text + ",") {
    if (ch == ',') {
      if (!token.empty()) {
        out.push_back(static_cast<int>(parse_integer(token)));
        token.clear();
      }
    } else {
      token += ch;
    }
  }
  return out;
}

int cmd_validate(const std::vector<std::string>& args, std::ostream& out) {
  if (args.size() != 1) throw UsageError("validate takes one file");
  const FiniteMetricSpace space = read_matrix_file(args[0]);
  out << "valid n=" << space.size() << " diameter=" << format_real(space.diameter()) << "\n";
  return 0;
}

int cmd_gh(const std::vector<std::string>& args, std::ostream& out) {
  std::vector<std::string> positional;
  SolveOptions opts;
  std::string cert_path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--budget") {
      if (++i == args.size()) throw UsageError("--budget needs a value");
      opts.node_budget = parse_integer(args[i]);
    } else if (args[i] == "--cert") {
      if (++i == args.size()) throw UsageError("--cert needs a path");
      cert_path = args[i];
    } else {
      positional.push_back(args[i]);
    }
  }
  if (positional.size() != 2) throw UsageError("gh takes two files");
  const FiniteMetricSpace x = read_matrix_file(positional[0]);
  const FiniteMetricSpace y = read_matrix_file(positional[1]);
  const GHCertificate cert = gh_exact(x, y, opts);
  if (!cert_path.empty()) write_text_file_atomic(cert_path, format_certificate(cert));
  out << format_real(cert.value) << "\n";
  return cert.lower_proof == LowerProof::CallerBudgetExceeded ? 3 : 0;
}

int cmd_product(const std::vector<std::string>& args, std::ostream& out) {
  if (args.size() != 4 || args[2] != "-o") throw UsageError("product <f1> <f2> -o OUT");
  const FiniteMetricSpace x = read_matrix_file(args[0]);
  const FiniteMetricSpace y = read_matrix_file(args[1]);
  const FiniteMetricSpace product = l1_product(x, y);
  write_matrix_file(args[3], product);
  out << "wrote " << args[3] << " n=" << product.size() << "\n";
  return 0;
}

int cmd_scale(const std::vector<std::string>& args, std::ostream& out) {
  if (args.size() != 4 || args[2] != "-o") throw UsageError("scale <file> <t> -o OUT");
  const FiniteMetricSpace x = read_matrix_file(args[0]);
  const FiniteMetricSpace scaled = scale(x, parse_real(args[1]));
  write_matrix_file(args[3], scaled);
  out << "wrote " << args[3] << " n=" << scaled.size() << "\n";
  return 0;
}

int cmd_hausdorff(const std::vector<std::string>& args, std::ostream& out) {
  std::string file;
  std::vector<int> subset_i, subset_j;
  bool have_i = false, have_j = false;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--i") {
      if (++i == args.size()) throw UsageError("--i needs indices");
      subset_i = parse_index_list(args[i]);
      have_i = true;
    } else if (args[i] == "--j") {
      if (++i == args.size()) throw UsageError("--j needs indices");
      subset_j = parse_index_list(args[i]);
      have_j = true;
    } else if (file.empty()) {
      file = args[i];
    } else {
      throw UsageError("hausdorff takes one file");
    }
  }
  if (file.empty() || !have_i || !have_j) throw UsageError("hausdorff <file> --i A,B --j C,D");
  const FiniteMetricSpace z = read_matrix_file(file);
  out << format_real(hausdorff_distance(subset_i, subset_j, z)) << "\n";
  return 0;
}

int cmd_lattice(const std::vector<std::string>& args, std::ostream& out) {
  if (args.empty()) throw UsageError("lattice needs a subcommand");
  if (args[0] == "count") {
    if (args.size() != 3) throw UsageError("lattice count <n> <radius>");
    const int n = static_cast<int>(parse_integer(args[1]));
    out << ball_count(n, Rational::parse(args[2])) << "\n";
    return 0;
  }
  if (args[0] == "witness") {
    if (args.size() != 5) throw UsageError("lattice witness <n> <lambda> <c> <tmax>");
    const int n = static_cast<int>(parse_integer(args[1]));
    const Rational lambda = Rational::parse(args[2]);
    const Rational c = Rational::parse(args[3]);
    const long long tmax = parse_integer(args[4]);
    if (tmax < 1) throw ParameterError("ParameterError tmax must be >= 1");
    std::vector<Rational> grid;
    grid.reserve(static_cast<std::size_t>(tmax));
    for (long long t = 1; t <= tmax; ++t) grid.push_back(Rational{t, 1});
    const auto witness = witness_radius(n, lambda, c, grid);
    if (witness) {
      out << "witness_t=" << format_real(witness->to_double()) << "\n";
    } else {
      out << "witness_t=none\n";
    }
    return 0;
  }
  throw UsageError("unknown lattice subcommand '" + args[0] + "'");
}

int cmd_run(const std::vector<std::string>& args, std::ostream& out) {
  if (args.size() != 1) throw UsageError("run takes one config file");
  const ExperimentConfig config = ExperimentConfig::load(args[0]);
  const ExperimentResult result = run_experiment(config);
  if (result.exit_code == 2) {
    out << result.summary << "\n";
    return 2;
  }
  out << (result.exit_code == 0 ? "ok" : "partial");
  for (const auto& path : result.outputs) out << " " << path.string();
  out << "\n";
  return result.exit_code;
}

}  // namespace

int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  if (args.empty()) {
    print_usage(err);
    return 64;
  }
  const std::string& command = args[0];
  const std::vector<std::string> rest(args.begin() + 1, args.end());
  try {
    if (command == "validate") return cmd_validate(rest, out);
    if (command == "gh") return cmd_gh(rest, out);
    if (command == "product") return cmd_product(rest, out);
    if (command == "scale") return cmd_scale(rest, out);
    if (command == "hausdorff") return cmd_hausdorff(rest, out);
    if (command == "lattice") return cmd_lattice(rest, out);
    if (command == "run") return cmd_run(rest, out);
    err << "unknown command '" << command << "'\n";
    print_usage(err);
    return 64;
  } catch (const UsageError& e) {
    err << e.what() << "\n";
    print_usage(err);
    return 64;
  } catch (const CapExceededError& e) {
    out << e.what() << "\n";
    return 3;
  } catch (const DimensionCapExceededError& e) {
    out << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    out << e.what() << "\n";
    return 2;
  }
}

}  // namespace gromov
