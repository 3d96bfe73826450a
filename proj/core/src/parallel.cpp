#include "dgla/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace dgla {

namespace {
int g_cap = 0;  // 0 = uninitialized

int env_cap() {
  const char* s = std::getenv("DGLA_THREADS");
  if (!s) return 1;
  int v = std::atoi(s);
  return v >= 1 ? v : 1;
}
}  // namespace

int thread_cap() {
  if (g_cap == 0) g_cap = env_cap();
  return g_cap;
}

void set_thread_cap(int n) { g_cap = n >= 1 ? n : 1; }

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
  int cap = thread_cap();
  if (cap <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      fn(i);
    }
  };
  std::size_t nb = std::min<std::size_t>(static_cast<std::size_t>(cap), n);
  std::vector<std::thread> pool;
  pool.reserve(nb);
  for (std::size_t t = 0; t < nb; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

}  // namespace dgla
