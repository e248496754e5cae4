#include "evidist/batch.hpp"

#include <exception>

#include <omp.h>

namespace evidist {

void for_each_index(std::size_t count, Execution exec, const std::function<void(std::size_t)>& body) {
  if (exec == Execution::Serial || count < 2) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }

  std::vector<std::exception_ptr> failures(count);
  const auto n = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      failures[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (const auto& failure : failures) {
    if (failure) std::rethrow_exception(failure);
  }
}

std::vector<DistanceTriple> batch_distances_serial(std::span<const BpaPair> pairs,
                                                   const DistanceParams& params) {
  std::vector<DistanceTriple> out;
  out.reserve(pairs.size());
  for (const auto& pair : pairs) out.push_back(distance_all(pair.first, pair.second, params));
  return out;
}

std::vector<DistanceTriple> batch_distances_parallel(std::span<const BpaPair> pairs,
                                                     const DistanceParams& params) {
  params.validate();
  std::vector<DistanceTriple> out(pairs.size());
  for_each_index(pairs.size(), Execution::Parallel, [&](std::size_t i) {
    out[i] = distance_all(pairs[i].first, pairs[i].second, params);
  });
  return out;
}

std::vector<DistanceTriple> batch_distances(std::span<const BpaPair> pairs,
                                            const DistanceParams& params, Execution exec) {
  return exec == Execution::Serial ? batch_distances_serial(pairs, params)
                                   : batch_distances_parallel(pairs, params);
}

int parallel_threads() noexcept { return omp_get_max_threads(); }

}  // namespace evidist
