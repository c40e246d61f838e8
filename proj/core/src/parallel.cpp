#include "lejalab/parallel.hpp"

#include <cstdlib>
#include <string>

namespace lejalab {

std::size_t worker_count() {
  static const std::size_t count = [] {
    std::size_t n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("LEJA_LAB_THREADS")) {
      try {
        const long cap = std::stol(env);
        if (cap >= 1) n = std::min<std::size_t>(n, static_cast<std::size_t>(cap));
      } catch (...) {
        // Unparseable caps are ignored.
      }
    }
    return n;
  }();
  return count;
}

}  // namespace lejalab
