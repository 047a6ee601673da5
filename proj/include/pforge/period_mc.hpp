#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pforge/multigraph.hpp"

namespace pforge {

enum class Sampler { SimplexUniform, AffineGauge };

std::string sampler_name(Sampler s);
Sampler sampler_from_name(const std::string& name);

struct McConfig {
  std::uint64_t samples = 1000000;
  std::uint64_t seed = 0;
  int workers = 1;
  Sampler sampler = Sampler::SimplexUniform;
  int batches = 16;  // median-of-means groups
  int max_edges = 14;
};

struct PeriodEstimate {
  double mean = 0.0;       // median of batch means
  double std_error = 0.0;  // 1.2533 * sd(batch means) / sqrt(batches)
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  Sampler sampler = Sampler::SimplexUniform;
  // plain sample statistics, reported for diagnostics
  double plain_mean = 0.0;
  double plain_std_error = 0.0;
  std::vector<double> batch_means;
};

// Monte Carlo estimate of the period integral over the positive projective
// domain of 1/psi^2. Requires a connected graph, all weights +1, and the
// primitive edge count E = 2 * loop_number. Deterministic: worker RNG
// streams depend only on (seed, worker index), and the reduction order is
// fixed, so identical configs give bit-identical results regardless of
// thread scheduling. samples must be divisible by workers * batches.
PeriodEstimate estimate_period(const Multigraph& g, const McConfig& cfg);

double zscore(const PeriodEstimate& est, double reference);

}  // namespace pforge
