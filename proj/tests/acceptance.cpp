#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "hyperspinor/experiments.hpp"

// Acceptance runner: one line per criterion.  With arguments, runs only the
// listed criterion numbers; exits nonzero if any executed criterion fails.

int main(int argc, char** argv) {
  using namespace hyperspinor;
  std::vector<int> wanted;
  for (int i = 1; i < argc; ++i) wanted.push_back(std::atoi(argv[i]));
  const std::vector<std::string> names = scenario_names();
  experiment_config cfg;
  bool all_ok = true;
  for (std::size_t idx = 0; idx < names.size(); ++idx) {
    const std::string& name = names[idx];
    const int criterion = int(idx) + 1;
    if (!wanted.empty()) {
      bool listed = false;
      for (int w : wanted) listed = listed || (w == criterion);
      if (!listed) continue;
    }
    const auto t0 = std::chrono::steady_clock::now();
    experiment_report rep = run_scenario(name, cfg);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("criterion %2d [%s]: %s (%.1f s) -- %s\n", rep.criterion, name.c_str(),
                rep.pass ? "pass" : "FAIL", secs, rep.summary.c_str());
    std::fflush(stdout);
    all_ok = all_ok && rep.pass;
  }
  return all_ok ? 0 : 1;
}
