#include "sortnet/harness/parallel.hpp"

#include <cstdlib>
#include <string>

namespace sortnet::harness {

int default_threads() {
  if (const char* env = std::getenv("SORTNET_THREADS")) {
    try {
      const int t = std::stoi(env);
      if (t > 0) return t;
    } catch (const std::exception&) {
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace sortnet::harness
