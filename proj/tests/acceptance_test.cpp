// One line per acceptance criterion. Exit status is nonzero if any line fails.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <iomanip>
#include <iostream>
#include <map>
#include <string>

#include "flopwin/verify.hpp"

using namespace flopwin;

namespace {

// seconds; criteria without an entry have no separate limit
const std::map<int, double> kLimit = {{1, 1}, {2, 1}, {5, 30}, {6, 60}, {10, 60}, {11, 180}};

bool report(int criterion, const std::string& name, bool pass, double seconds, const std::string& details) {
  auto it = kLimit.find(criterion);
  const bool in_time = it == kLimit.end() || seconds < it->second;
  const bool ok = pass && in_time;
  std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << std::setw(2) << criterion << "  " << name << "  ["
            << std::fixed << std::setprecision(3) << seconds << " s";
  if (it != kLimit.end()) std::cout << " < " << it->second << " s";
  std::cout << "]  " << details;
  if (!in_time) std::cout << "  (too slow)";
  std::cout << std::endl;
  return ok;
}

}  // namespace

int main() {
  bool all = true;
  const auto cut = verify::Cutoffs{};  // the stated cutoffs, ignoring the environment
  auto rep = verify::run_suite("all", cut);
  for (const auto& c : rep.checks) all = report(c.criterion, c.name, c.pass, c.seconds, c.details) && all;

  const auto t0 = std::chrono::steady_clock::now();
  const std::string cmd = std::string(FLOPWIN_BIN) + " verify --suite all > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  all = report(11, "flopwin verify --suite all", code == 0, secs, "exit code " + std::to_string(code)) && all;
  return all ? 0 : 1;
}
