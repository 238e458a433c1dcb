// Acceptance suite: one PASS/FAIL/INFO line per criterion, exit status 1 if any
// gating criterion fails. Optional arguments: criterion ids to run.
#include "sortnet/harness/parallel.hpp"
#include "sortnet/harness/verify.hpp"

#include <cstdlib>
#include <iostream>
#include <string>

int main(int argc, char** argv) {
  using namespace sortnet::harness;
  VerifyOptions opt;
  opt.threads = default_threads();
  if (const char* seed = std::getenv("SORTNET_SEED")) opt.seed = std::stoull(seed);
  for (int a = 1; a < argc; ++a) opt.only.insert(std::stoi(argv[a]));
  std::cout << "acceptance suite, seed " << opt.seed << ", " << opt.threads << " thread(s)" << std::endl;
  const auto rep = run_verify(opt, [](const CriterionResult& r) { std::cout << r.line() << std::endl; });
  std::size_t failed = 0;
  for (const auto& r : rep.results) failed += !r.pass;
  std::cout << rep.results.size() - failed << "/" << rep.results.size() << " criteria passed" << std::endl;
  return failed ? 1 : 0;
}
