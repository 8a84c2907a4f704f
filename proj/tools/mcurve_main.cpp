#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "mcurve/cli_io/commands.hpp"

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path, std::ios::binary);
  if (!in) throw mcurve::Error(mcurve::ErrorKind::InvalidArgument, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certify and analyze conic-line arrangements"};
  app.require_subcommand(1);
  app.fallthrough();

  bool json = false, exact = false, modular = false;
  std::uint64_t seed = mcurve::kDefaultSeed;
  app.add_flag("--json", json, "Print the JSON report");
  auto* exact_opt = app.add_flag("--exact", exact, "Fraction-free exact ranks");
  auto* modular_opt = app.add_flag("--modular", modular, "Modular ranks with certified critical ranks (default)");
  exact_opt->excludes(modular_opt);
  app.add_option("--seed", seed, "Seed for rank primes and shears")->capture_default_str();

  std::string file, wc;
  int conic = 1, lines = 0;
  auto* certify = app.add_subcommand("certify", "Decide whether an arrangement is an M-arrangement");
  certify->add_option("file", file, "Arrangement file, or - for stdin")->required();
  auto* combinatorics = app.add_subcommand("combinatorics", "Singular points and weak combinatorics");
  combinatorics->add_option("file", file, "Arrangement file, or - for stdin")->required();
  auto* del = app.add_subcommand("delete-conic", "Delete a conic and compare Poincare polynomials");
  del->add_option("file", file, "Arrangement file, or - for stdin")->required();
  del->add_option("--conic", conic, "1-based conic index")->capture_default_str();
  auto* check = app.add_subcommand("check", "Constraint verdicts for weak combinatorics d,k;n2,n3,...");
  check->add_option("--wc,wc", wc, "Weak combinatorics string")->required();
  auto* enumerate = app.add_subcommand("enumerate", "Admissible combinatorics of d lines and one conic");
  enumerate->add_option("--lines", lines, "Number of lines d")->required();
  enumerate->add_flag("--one-conic", "One-conic family (the only family enumerated)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return mcurve::exit_code(mcurve::ErrorKind::ParseError);
  }

  mcurve::RunOptions opts;
  opts.mode = exact ? mcurve::RankMode::Exact : mcurve::RankMode::ModularCertified;
  opts.seed = seed;
  const std::string command = app.get_subcommands().front()->get_name();
  try {
    mcurve::CommandOutcome out;
    if (command == "check") {
      out = mcurve::cmd_check(wc, opts);
    } else if (command == "enumerate") {
      out = mcurve::cmd_enumerate(lines, opts);
    } else {
      opts.input_name = file;
      const auto doc = mcurve::parse_arrangement(read_input(file));
      if (command == "certify") out = mcurve::cmd_certify(doc, opts);
      if (command == "combinatorics") out = mcurve::cmd_combinatorics(doc, opts);
      if (command == "delete-conic") out = mcurve::cmd_delete_conic(doc, conic, opts);
    }
    std::cout << (json ? out.report.dump(2) + "\n" : mcurve::render_text(out.report));
    return out.exit_code;
  } catch (const mcurve::Error& e) {
    if (json) {
      std::cout << mcurve::error_report(command, e).dump(2) << "\n";
    } else {
      std::cerr << "mcurve " << command << ": " << e.what() << "\n";
    }
    return mcurve::exit_code(e.kind());
  }
}
