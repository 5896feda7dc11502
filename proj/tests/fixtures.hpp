#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "mofs/evaluation.hpp"
#include "mofs/instance.hpp"
#include "mofs/rng.hpp"

namespace mofs::testing {

// Worked instance W: 2 jobs, 2 machines, t = [[3,2],[1,4]], d = [5,6].
inline Instance worked_instance() { return make_instance({{3, 2}, {1, 4}}, {5, 6}); }

inline Instance random_instance(std::size_t n, std::size_t m, std::uint64_t seed) {
  return generate_instance(GeneratorConfig{n, m, seed, 0.3, 0.5});
}

inline Permutation random_permutation(std::size_t n, SplitMix64& rng) {
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  shuffle(std::span<int>(order), rng);
  return Permutation(std::move(order));
}

inline std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<Permutation> out;
  do {
    out.emplace_back(order);
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

// Brute-force nondominated filter, written independently of pareto_filter.
inline std::vector<ObjectiveVector> brute_force_front(const std::vector<ObjectiveVector>& vectors) {
  auto dom = [](const ObjectiveVector& u, const ObjectiveVector& v) {
    bool all_le = true, any_lt = false;
    for (std::size_t k = 0; k < u.size(); ++k) {
      all_le = all_le && u[k] <= v[k];
      any_lt = any_lt || u[k] < v[k];
    }
    return all_le && any_lt;
  };
  std::vector<ObjectiveVector> front;
  for (const auto& v : vectors) {
    bool dominated = false;
    for (const auto& u : vectors) dominated = dominated || dom(u, v);
    if (!dominated && std::find(front.begin(), front.end(), v) == front.end()) front.push_back(v);
  }
  std::sort(front.begin(), front.end());
  return front;
}

}  // namespace mofs::testing
