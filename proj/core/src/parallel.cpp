#include "abacus/parallel.hpp"

#include <cstdlib>

namespace abacus {

unsigned worker_count() {
  if (const char* env = std::getenv("MOTIVIC_ABACUS_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  unsigned h = std::thread::hardware_concurrency();
  return h ? h : 1;
}

}  // namespace abacus
