#include <atomic>
#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "doctest.h"
#include "lejalab/parallel.hpp"

using namespace lejalab;

TEST_SUITE("parallel") {

TEST_CASE("argmax ignores the slicing") {
  std::mt19937_64 gen(99);
  std::uniform_int_distribution<int> level(0, 20);
  std::vector<double> v(10007);
  for (auto& x : v) x = level(gen);
  v[17] = std::numeric_limits<double>::quiet_NaN();
  v[5000] = 25.0;
  v[9000] = 25.0;
  for (std::size_t workers = 1; workers <= 9; ++workers) {
    const auto best = argmax_in_slices(v.size(), [&](std::size_t i) { return v[i]; }, workers);
    CHECK(best.index == 5000);
    CHECK(best.value == 25.0);
  }
}

TEST_CASE("argmax edge cases") {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  const std::vector<double> all_nan{nan, nan, nan};
  const auto none = argmax_in_slices(all_nan.size(), [&](std::size_t i) { return all_nan[i]; }, 2);
  CHECK(none.index == all_nan.size());
  const std::vector<double> ties{1.0, 3.0, 3.0, 3.0};
  for (std::size_t workers = 1; workers <= 4; ++workers) {
    CHECK(argmax_in_slices(ties.size(), [&](std::size_t i) { return ties[i]; }, workers).index == 1);
  }
  const std::vector<double> neg_inf{-INFINITY, -INFINITY, 2.0};
  CHECK(parallel_argmax(neg_inf.size(), [&](std::size_t i) { return neg_inf[i]; }).index == 2);
  CHECK(parallel_argmax(0, [](std::size_t) { return 0.0; }).index == 0);
}

TEST_CASE("parallel blocks cover the range once") {
  std::vector<std::atomic<int>> hits(50000);
  parallel_blocks(hits.size(), [&](std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) hits[i].fetch_add(1);
  }, 1000);
  bool once = true;
  for (auto& h : hits) once = once && h.load() == 1;
  CHECK(once);
  CHECK(worker_count() >= 1);
}

}  // TEST_SUITE
