#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "genform/dsl.hpp"
#include "genform/error.hpp"
#include "genform/harness/runner.hpp"

namespace genform::cli {

namespace {

void diagnose(std::ostream& err, const char* code, const std::string& message) {
  err << dsl::Diagnostic{0, 0, code, message}.render() << "\n";
}

// Reads and parses a session file; prints the diagnostic and returns nullopt on failure.
std::optional<dsl::Session> load(const std::string& path, std::ostream& err) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    diagnose(err, dsl::code::usage, "cannot read '" + path + "'");
    return std::nullopt;
  }
  std::ostringstream text;
  text << in.rdbuf();
  try {
    return dsl::parse_session(text.str());
  } catch (const dsl::ParseError& e) {
    err << e.diagnostic().render() << "\n";
    return std::nullopt;
  }
}

int cmd_eval(const std::string& path, const std::string& name, const std::string& at, std::ostream& out,
             std::ostream& err) {
  const auto session = load(path, err);
  if (!session) return exit_usage;
  const Value* value = session->find(name);
  if (!value) {
    diagnose(err, dsl::code::unknown_name, "'" + name + "' is not defined in '" + path + "'");
    return exit_usage;
  }
  std::vector<Rational> point;
  if (!at.empty()) {
    try {
      point = dsl::parse_point(*session->chart, at);
    } catch (const dsl::ParseError& e) {
      err << e.diagnostic().render() << "\n";
      return exit_usage;
    }
  }
  out << format(*value) << "\n";
  if (!at.empty()) out << format(evaluate_at(*value, point)) << "\n";
  return exit_ok;
}

int cmd_show(const std::string& path, std::ostream& out, std::ostream& err) {
  const auto session = load(path, err);
  if (!session) return exit_usage;
  out << dsl::format_session(*session);
  return exit_ok;
}

void print_failure(std::ostream& out, const harness::Failure& f, const std::string& id) {
  // Metadata is commented out so the block is itself a valid session file.
  out << "# FAIL " << id << " " << f.config << "\n";
  out << "# check: " << f.check << "\n";
  out << "# lhs: " << f.lhs << "\n";
  out << "# rhs: " << f.rhs << "\n";
  out << f.inputs;
}

int cmd_check(const std::string& id, const std::vector<int>& dims, std::uint64_t trials, std::uint64_t seed,
              const std::string& k_text, std::ostream& out, std::ostream& err) {
  const auto k = harness::KChoice::parse(k_text);
  if (!k) {
    diagnose(err, dsl::code::usage, "--k must be 'zero', 'random' or a rational, got '" + k_text + "'");
    return exit_usage;
  }
  std::vector<std::string> ids;
  if (id == "all") {
    for (const auto& identity : harness::identities()) ids.emplace_back(identity.id);
  } else {
    try {
      harness::find_identity(id);
    } catch (const Error&) {
      diagnose(err, dsl::code::usage, "unknown identity '" + id + "'");
      return exit_usage;
    }
    ids.push_back(id);
  }
  for (int n : dims) {
    if (n < 1) {
      diagnose(err, dsl::code::usage, "--dim must be at least 1");
      return exit_usage;
    }
  }

  bool all_passed = true;
  for (const auto& name : ids) {
    for (int n : dims) {
      harness::GenConfig config;
      config.seed = seed;
      config.dimension = n;
      config.k = *k;
      const auto report = harness::run_identity(name, config, trials);
      all_passed = all_passed && report.passed();
      out << name << " dim=" << n << " trials=" << report.trials_run << " nonzero=" << report.nonzero_trials << " "
          << (report.passed() ? "pass" : "FAIL (" + std::to_string(report.failures.size()) + " failures)") << "\n";
      for (const auto& f : report.failures) print_failure(out, f, name);
    }
  }
  return all_passed ? exit_ok : exit_identity_failure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact generalized exterior calculus: evaluate sessions and check identities", "genform"};
  app.require_subcommand(1);

  std::string file, name, at;
  auto* eval = app.add_subcommand("eval", "Evaluate a definition from a session file");
  eval->add_option("FILE", file, "Session file (.gf)")->required();
  eval->add_option("NAME", name, "Definition to print")->required();
  eval->add_option("--at", at, "Also evaluate at a point, e.g. x=2,y=1/2");

  auto* show = app.add_subcommand("show", "Print a session in canonical form");
  show->add_option("FILE", file, "Session file (.gf)")->required();

  std::string id;
  std::vector<int> dims;
  std::uint64_t trials = 100;
  std::uint64_t seed = 0;
  std::string k_text = "random";
  auto* check = app.add_subcommand("check", "Run randomized exact identity checks");
  check->add_option("ID", id, "Identity id (P1..P17) or 'all'")->required();
  check->add_option("--dim", dims, "Chart dimension (default: 1 2 3 4)");
  check->add_option("--trials", trials, "Trials per identity and dimension")->check(CLI::PositiveNumber);
  check->add_option("--seed", seed, "Generator seed");
  check->add_option("--k", k_text, "k: zero, random or a rational");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    diagnose(err, dsl::code::usage, e.what());
    return exit_usage;
  }

  if (*eval) return cmd_eval(file, name, at, out, err);
  if (*show) return cmd_show(file, out, err);
  if (dims.empty()) dims = {1, 2, 3, 4};
  return cmd_check(id, dims, trials, seed, k_text, out, err);
}

}  // namespace genform::cli
