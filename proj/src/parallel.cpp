#include "plasma/parallel.hpp"

#include <atomic>
#include <cstdlib>

namespace plasma {

namespace {

int initial_threads() {
  if (const char* env = std::getenv("PLASMA_KERNEL_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? int(hw) : 1;
}

std::atomic<int>& threads() {
  static std::atomic<int> n{initial_threads()};
  return n;
}

}  // namespace

int thread_count() { return threads().load(); }

void set_thread_count(int n) { threads().store(n > 0 ? n : 1); }

}  // namespace plasma
