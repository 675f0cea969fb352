// Command-line front end: bound checks on sample files, exponent-pair
// classification, region maps, counterexample search and self-check suites.
//
// Exit codes: 0 ok, 1 usage/input error, 2 violation found (or failed
// verification), 3 search exhausted without a certificate.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "powermean/classify.hpp"
#include "powermean/functionals.hpp"
#include "powermean/means.hpp"
#include "powermean/search.hpp"
#include "powermean/serialize.hpp"
#include "powermean/suites.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitViolation = 2;
constexpr int kExitNoCertificate = 3;

int run_check(const std::string& input, double r, double s,
              const std::string& format, double tol) {
  const powermean::WeightedSample sample = powermean::parse_sample_file(input);
  const powermean::ExponentPair exps(r, s);
  const powermean::BoundCheck bc = powermean::cf_check(sample, exps);
  const bool lhs_ok = !powermean::violates(bc.lhs_residual, bc.gap, tol);
  const bool rhs_ok =
      !bc.upper_defined || !powermean::violates(bc.rhs_residual, bc.gap, tol);
  if (format == "json")
    std::cout << powermean::bound_check_json(bc, lhs_ok, rhs_ok) << "\n";
  else
    std::cout << powermean::bound_check_text(bc, lhs_ok, rhs_ok);
  return (lhs_ok && rhs_ok) ? kExitOk : kExitViolation;
}

int run_classify(double r, double s) {
  const powermean::ExponentPair exps(r, s);
  std::cout << powermean::classification_json(exps, powermean::classify_rhs(exps),
                                              powermean::classify_lhs(exps))
            << "\n";
  return kExitOk;
}

int run_region_map(const powermean::RegionMapSpec& spec,
                   const std::string& out_path) {
  const std::string csv =
      powermean::region_map_csv(spec, powermean::region_map(spec));
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error(out_path + ": cannot open for writing");
  out << csv;
  if (!out.good()) throw std::runtime_error(out_path + ": write failed");
  std::cout << "wrote " << spec.grid_n * spec.grid_n << " cells to "
            << out_path << "\n";
  return kExitOk;
}

int run_search(double r, double s, const std::string& side_name,
               const powermean::SearchConfig& config) {
  const powermean::ExponentPair exps(r, s);
  const powermean::Side side =
      (side_name == "rhs") ? powermean::Side::RHS : powermean::Side::LHS;
  const auto cert = powermean::search_counterexample(exps, side, config);
  if (!cert) {
    std::cout << "none\n";
    return kExitNoCertificate;
  }
  std::cout << powermean::certificate_json(*cert) << "\n";
  return kExitOk;
}

int run_verify(const std::string& suite, const powermean::SearchConfig& config) {
  powermean::SuiteReport report;
  if (suite == "means")
    report = powermean::run_means_suite();
  else if (suite == "lemmas")
    report = powermean::run_lemmas_suite();
  else if (suite == "regions")
    report = powermean::run_regions_suite();
  else if (suite == "search")
    report = powermean::run_search_suite(config);
  else
    throw std::runtime_error("unknown suite '" + suite +
                             "' (expected means, lemmas, regions or search)");
  std::cout << "suite: " << report.suite << "\n";
  for (const auto& c : report.checks) {
    std::cout << (c.ok ? "[ok]   " : "[FAIL] ") << c.name << ": " << c.passed
              << "/" << c.total;
    if (!c.note.empty()) std::cout << " (" << c.note << ")";
    std::cout << "\n";
  }
  std::cout << (report.ok() ? "result: pass" : "result: fail") << "\n";
  return report.ok() ? kExitOk : kExitViolation;
}

int run_verify_certificate(const std::string& input, double tol) {
  std::string text;
  if (input.empty() || input == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    text = buf.str();
  } else {
    std::ifstream in(input);
    if (!in) throw std::runtime_error(input + ": cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  const powermean::Certificate cert = powermean::certificate_from_json(text);
  const bool ok = powermean::verify_certificate(cert, tol);
  std::cout << (ok ? "true" : "false") << "\n";
  return ok ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bounds on differences of weighted power means: check, "
               "classify, map, search, verify"};
  app.require_subcommand(1);

  double tol = powermean::kDefaultTolerance;
  if (const char* env = std::getenv("POWERMEAN_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v > 0.0)) {
      std::cerr << "POWERMEAN_TOL must be a positive number, got '" << env
                << "'\n";
      return kExitUsage;
    }
    tol = v;
  }

  std::string input, out_path, side, suite, format = "text";
  double r = 0.0, s = 0.0;
  powermean::RegionMapSpec spec{0.0, 1.0, 0.0, 1.0, 2};
  long budget = 100000;
  std::uint64_t seed = 0;

  CLI::App* check = app.add_subcommand("check", "bound check on a sample file");
  check->add_option("--input", input, "sample file, one 'value,weight' per line")
      ->required();
  check->add_option("--r", r, "exponent r")->required();
  check->add_option("--s", s, "exponent s")->required();
  check->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* classify = app.add_subcommand("classify", "verdict per side");
  classify->add_option("--r", r, "exponent r")->required();
  classify->add_option("--s", s, "exponent s")->required();

  CLI::App* rmap = app.add_subcommand("region-map", "CSV verdict map");
  rmap->add_option("--r-min", spec.r_min)->required();
  rmap->add_option("--r-max", spec.r_max)->required();
  rmap->add_option("--s-min", spec.s_min)->required();
  rmap->add_option("--s-max", spec.s_max)->required();
  rmap->add_option("--grid", spec.grid_n, "points per axis")
      ->required()
      ->check(CLI::Range(2, 100000));
  rmap->add_option("--out", out_path, "output CSV path")->required();

  CLI::App* search = app.add_subcommand("search", "counterexample search");
  search->add_option("--r", r, "exponent r")->required();
  search->add_option("--s", s, "exponent s")->required();
  search->add_option("--side", side, "which side to attack")
      ->required()
      ->check(CLI::IsMember({"lhs", "rhs"}));
  search->add_option("--budget", budget, "evaluation budget")
      ->check(CLI::PositiveNumber);
  search->add_option("--seed", seed, "probe seed");

  CLI::App* verify = app.add_subcommand("verify", "run a self-check suite");
  verify->add_option("--suite", suite, "means, lemmas, regions or search")
      ->required();
  verify->add_option("--budget", budget, "search budget for the search suite")
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed, "probe seed");

  CLI::App* vcert =
      app.add_subcommand("verify-certificate", "re-check a certificate JSON");
  vcert->add_option("--input", input, "certificate file ('-' for stdin)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    const powermean::SearchConfig config{budget, seed, tol};
    if (app.got_subcommand(check)) return run_check(input, r, s, format, tol);
    if (app.got_subcommand(classify)) return run_classify(r, s);
    if (app.got_subcommand(rmap)) return run_region_map(spec, out_path);
    if (app.got_subcommand(search)) return run_search(r, s, side, config);
    if (app.got_subcommand(verify)) return run_verify(suite, config);
    if (app.got_subcommand(vcert)) return run_verify_certificate(input, tol);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
