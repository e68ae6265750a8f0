#include "apseries/bernoulli.hpp"

#include <deque>
#include <mutex>

namespace apseries {

namespace {
std::mutex g_mutex;
// deque: growth never invalidates references to existing elements
std::deque<Rat> g_cache;  // g_cache[m] = B_m
}  // namespace

const Rat& bernoulli(unsigned m) {
  std::lock_guard<std::mutex> lock(g_mutex);
  if (g_cache.empty()) g_cache.emplace_back(1);  // B_0
  while (g_cache.size() <= m) {
    const unsigned k = static_cast<unsigned>(g_cache.size());
    // B_k = -1/(k+1) * sum_{j<k} C(k+1, j) B_j
    Rat acc(0);
    Rat binom(1);  // C(k+1, j), updated incrementally
    for (unsigned j = 0; j < k; ++j) {
      if (j > 0) binom *= Rat(static_cast<long>(k + 2 - j), static_cast<long>(j));
      acc += binom * g_cache[j];
    }
    g_cache.emplace_back(-acc / Rat(static_cast<long>(k) + 1));
  }
  return g_cache[m];
}

}  // namespace apseries
