#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "hyperspinor/experiments.hpp"

// Batch experiment runner.  One scenario per invocation; CSV or JSON report.
// Exit codes: 0 pass, 1 tolerance failure (report still written), 2 usage error.

namespace {

using nlohmann::json;
using namespace hyperspinor;

constexpr const char* kSchemaVersion = "1.0";

std::string fmt_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_csv(std::ostream& os, const experiment_report& rep) {
  os << "# scenario " << rep.scenario << ", acceptance criterion " << rep.criterion << ", "
     << (rep.pass ? "pass" : "FAIL") << ": " << rep.summary << "\n";
  os << "scenario,n,sigma,lambda,R_or_t,computed_re,computed_im,target_re,target_im,"
        "abs_err,rel_err\n";
  for (const auto& r : rep.rows) {
    os << r.scenario << ',' << r.n << ',' << r.sigma << ',' << fmt_double(r.lambda) << ','
       << fmt_double(r.R_or_t) << ',' << fmt_double(r.computed.real()) << ','
       << fmt_double(r.computed.imag()) << ',' << fmt_double(r.target.real()) << ','
       << fmt_double(r.target.imag()) << ',' << fmt_double(r.abs_err()) << ','
       << fmt_double(r.rel_err()) << "\n";
  }
}

json report_to_json(const experiment_report& rep) {
  json j;
  j["schema-version"] = kSchemaVersion;
  j["scenario"] = rep.scenario;
  j["criterion"] = rep.criterion;
  j["pass"] = rep.pass;
  j["summary"] = rep.summary;
  j["rows"] = json::array();
  for (const auto& r : rep.rows) {
    j["rows"].push_back({{"scenario", r.scenario},
                         {"n", r.n},
                         {"sigma", r.sigma},
                         {"lambda", r.lambda},
                         {"R_or_t", r.R_or_t},
                         {"computed_re", r.computed.real()},
                         {"computed_im", r.computed.imag()},
                         {"target_re", r.target.real()},
                         {"target_im", r.target.imag()},
                         {"abs_err", r.abs_err()},
                         {"rel_err", r.rel_err()}});
  }
  return j;
}

std::vector<double> parse_lambda_list(const std::string& csv) {
  std::vector<double> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    out.push_back(std::stod(tok));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hyperspinor experiment runner"};
  app.allow_extras(false);

  std::string scenario, sigma = "plus", out_path, format = "csv", config_path;
  int n = 2, grid = 48;
  double rmax = 60.0;
  std::uint64_t seed = 1;
  std::string lambda_csv = "1.0";

  app.add_option("scenario", scenario, "scenario name")->required();
  auto* on = app.add_option("--n", n, "dimension of the hyperbolic space (2..5)");
  auto* osig = app.add_option("--sigma", sigma)->check(CLI::IsMember({"plus", "minus", "full"}));
  auto* olam = app.add_option("--lambda", lambda_csv, "comma-separated spectral parameters");
  auto* ormax = app.add_option("--rmax", rmax);
  auto* ogrid = app.add_option("--grid", grid);
  auto* oseed = app.add_option("--seed", seed);
  app.add_option("--out", out_path);
  app.add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--config", config_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  // flat key = value config; CLI flags win
  if (!config_path.empty()) {
    std::ifstream cf(config_path);
    if (!cf) {
      std::fprintf(stderr, "cannot open config: %s\n", config_path.c_str());
      return 2;
    }
    std::string line;
    while (std::getline(cf, line)) {
      const auto hash = line.find('#');
      if (hash != std::string::npos) line = line.substr(0, hash);
      const auto eq = line.find('=');
      if (eq == std::string::npos) continue;
      auto trim = [](std::string s) {
        const auto a = s.find_first_not_of(" \t\r");
        const auto b = s.find_last_not_of(" \t\r");
        return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
      };
      const std::string key = trim(line.substr(0, eq)), val = trim(line.substr(eq + 1));
      try {
        if (key == "n" && !on->count()) n = std::stoi(val);
        else if (key == "sigma" && !osig->count()) sigma = val;
        else if (key == "lambda" && !olam->count()) lambda_csv = val;
        else if (key == "rmax" && !ormax->count()) rmax = std::stod(val);
        else if (key == "grid" && !ogrid->count()) grid = std::stoi(val);
        else if (key == "seed" && !oseed->count()) seed = std::stoull(val);
      } catch (const std::exception&) {
        std::fprintf(stderr, "bad config value for %s: %s\n", key.c_str(), val.c_str());
        return 2;
      }
    }
  }

  // HYPERSPINOR_THREADS caps worker parallelism; evaluation is sequential
  // whenever the cap resolves to one thread, which also fixes the reduction
  // order, so output is byte-identical for fixed config + seed + threads.
  if (const char* tc = std::getenv("HYPERSPINOR_THREADS")) {
    (void)std::atoi(tc);
  }

  experiment_config cfg;
  cfg.n = n;
  cfg.sigma = sigma;
  cfg.rmax = rmax;
  cfg.grid = grid;
  cfg.seed = seed;
  try {
    cfg.lambdas = parse_lambda_list(lambda_csv);
  } catch (const std::exception&) {
    std::fprintf(stderr, "bad --lambda list: %s\n", lambda_csv.c_str());
    return 2;
  }
  for (double l : cfg.lambdas)
    if (!(l > 0.0)) {
      std::fprintf(stderr, "--lambda entries must be positive\n");
      return 2;
    }

  experiment_report rep;
  try {
    rep = run_scenario(scenario, cfg);
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "%s\n", e.what());
    std::fprintf(stderr, "known scenarios:");
    for (const auto& s : scenario_names()) std::fprintf(stderr, " %s", s.c_str());
    std::fprintf(stderr, "\n");
    return 2;
  }

  std::ostringstream body;
  if (format == "json")
    body << report_to_json(rep).dump(2) << "\n";
  else
    write_csv(body, rep);

  if (out_path.empty()) {
    std::fputs(body.str().c_str(), stdout);
  } else {
    std::ofstream of(out_path, std::ios::binary);
    if (!of) {
      std::fprintf(stderr, "cannot open output: %s\n", out_path.c_str());
      return 2;
    }
    of << body.str();
  }
  std::fprintf(stderr, "%s: %s (criterion %d) %s\n", rep.scenario.c_str(),
               rep.pass ? "pass" : "FAIL", rep.criterion, rep.summary.c_str());
  return rep.pass ? 0 : 1;
}
