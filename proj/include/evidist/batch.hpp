#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "evidist/metrics.hpp"

namespace evidist {

enum class Execution { Serial, Parallel };

struct BpaPair {
  Bpa first;
  Bpa second;
};

/// Runs body(0) ... body(count - 1). The parallel path uses an OpenMP
/// worksharing loop; the first exception thrown by any index (lowest index
/// wins) is rethrown after the loop.
void for_each_index(std::size_t count, Execution exec, const std::function<void(std::size_t)>& body);

/// Reference implementation: one pair at a time, in order.
std::vector<DistanceTriple> batch_distances_serial(std::span<const BpaPair> pairs,
                                                   const DistanceParams& params);

/// OpenMP kernel. Results are bit-identical to the serial path and in input order.
std::vector<DistanceTriple> batch_distances_parallel(std::span<const BpaPair> pairs,
                                                     const DistanceParams& params);

std::vector<DistanceTriple> batch_distances(std::span<const BpaPair> pairs,
                                            const DistanceParams& params, Execution exec);

/// Number of threads the parallel path will use.
int parallel_threads() noexcept;

}  // namespace evidist
