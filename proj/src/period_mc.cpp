#include "pforge/period_mc.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <random>
#include <thread>

#include "pforge/kirchhoff.hpp"

namespace pforge {

std::string sampler_name(Sampler s) {
  return s == Sampler::SimplexUniform ? "simplex" : "affine";
}

Sampler sampler_from_name(const std::string& name) {
  if (name == "simplex") return Sampler::SimplexUniform;
  if (name == "affine") return Sampler::AffineGauge;
  throw std::invalid_argument("unknown sampler '" + name + "'");
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// uniform double in the open interval (0,1), bit-stable across platforms
double uniform01(std::mt19937_64& rng) {
  return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

struct WorkerResult {
  std::vector<double> batch_sum;
  std::vector<double> batch_sum_sq;
};

// One worker's share of every batch, in batch order, from its own stream.
void run_worker(const Multigraph& g, const McConfig& cfg, int worker,
                std::uint64_t per_cell, WorkerResult& out) {
  const int n_edges = g.edge_count();
  PsiEvaluator psi(g);
  std::mt19937_64 rng(
      splitmix64(cfg.seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(worker + 1)));
  std::vector<double> alpha(n_edges);
  double log_fact = 0.0;  // log (N-1)!
  for (int k = 2; k < n_edges; ++k) log_fact += std::log(static_cast<double>(k));

  out.batch_sum.assign(cfg.batches, 0.0);
  out.batch_sum_sq.assign(cfg.batches, 0.0);
  for (int b = 0; b < cfg.batches; ++b) {
    double sum = 0.0, sum_sq = 0.0;
    for (std::uint64_t i = 0; i < per_cell; ++i) {
      // the sample value can span hundreds of orders of magnitude near the
      // integration boundary, so it is assembled in log space
      double value;
      if (cfg.sampler == Sampler::SimplexUniform) {
        double total = 0.0;
        for (int k = 0; k < n_edges; ++k) {
          alpha[k] = -std::log(uniform01(rng));
          total += alpha[k];
        }
        for (int k = 0; k < n_edges; ++k) alpha[k] /= total;
        value = std::exp(-log_fact - 2.0 * psi.eval_log(alpha));
      } else {
        double log_jacobian = 0.0;
        for (int k = 0; k + 1 < n_edges; ++k) {
          double u = uniform01(rng);
          alpha[k] = u / (1.0 - u);
          log_jacobian += -2.0 * std::log1p(-u);
        }
        alpha[n_edges - 1] = 1.0;
        value = std::exp(log_jacobian - 2.0 * psi.eval_log(alpha));
      }
      if (!(value > 0.0) || !std::isfinite(value))
        throw invariant_violation("period sample is not a positive finite number");
      sum += value;
      sum_sq += value * value;
    }
    out.batch_sum[b] = sum;
    out.batch_sum_sq[b] = sum_sq;
  }
}

}  // namespace

PeriodEstimate estimate_period(const Multigraph& g, const McConfig& cfg) {
  if (!g.all_weights_one())
    throw std::invalid_argument("estimate_period requires all edge weights +1");
  if (!g.connected())
    throw std::invalid_argument("estimate_period requires a connected graph");
  if (g.edge_count() != 2 * g.loop_number())
    throw std::invalid_argument("not primitive log-divergent edge count");
  if (g.edge_count() > cfg.max_edges)
    throw std::invalid_argument("edge count exceeds the Monte Carlo cap " +
                                std::to_string(cfg.max_edges));
  if (cfg.samples == 0 || cfg.workers < 1 || cfg.batches < 1)
    throw std::invalid_argument("samples, workers and batches must be positive");
  std::uint64_t cells = static_cast<std::uint64_t>(cfg.workers) * cfg.batches;
  if (cfg.samples % cells != 0)
    throw std::invalid_argument("samples must be divisible by workers * batches");
  std::uint64_t per_cell = cfg.samples / cells;

  std::vector<WorkerResult> results(cfg.workers);
  if (cfg.workers == 1) {
    run_worker(g, cfg, 0, per_cell, results[0]);
  } else {
    std::vector<std::thread> threads;
    std::exception_ptr error;
    std::mutex error_mutex;
    for (int w = 0; w < cfg.workers; ++w)
      threads.emplace_back([&, w] {
        try {
          run_worker(g, cfg, w, per_cell, results[w]);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      });
    for (auto& t : threads) t.join();
    if (error) std::rethrow_exception(error);
  }

  // fixed-order reduction keeps the result independent of scheduling
  const double batch_size = static_cast<double>(cfg.samples) / cfg.batches;
  std::vector<double> batch_means(cfg.batches, 0.0);
  double total = 0.0, total_sq = 0.0;
  for (int b = 0; b < cfg.batches; ++b) {
    double sum = 0.0;
    for (int w = 0; w < cfg.workers; ++w) {
      sum += results[w].batch_sum[b];
      total_sq += results[w].batch_sum_sq[b];
    }
    batch_means[b] = sum / batch_size;
    total += sum;
  }

  PeriodEstimate est;
  est.samples = cfg.samples;
  est.seed = cfg.seed;
  est.sampler = cfg.sampler;
  est.batch_means = batch_means;
  est.plain_mean = total / static_cast<double>(cfg.samples);
  if (cfg.samples > 1) {
    double variance = (total_sq - static_cast<double>(cfg.samples) * est.plain_mean *
                                      est.plain_mean) /
                      (static_cast<double>(cfg.samples) - 1.0);
    est.plain_std_error = std::sqrt(std::max(variance, 0.0) /
                                    static_cast<double>(cfg.samples));
  }

  std::vector<double> sorted = batch_means;
  std::sort(sorted.begin(), sorted.end());
  int b = cfg.batches;
  est.mean = b % 2 == 1 ? sorted[b / 2] : 0.5 * (sorted[b / 2 - 1] + sorted[b / 2]);
  if (b >= 2) {
    double mean_of_means = 0.0;
    for (double m : batch_means) mean_of_means += m;
    mean_of_means /= b;
    double var = 0.0;
    for (double m : batch_means) var += (m - mean_of_means) * (m - mean_of_means);
    var /= (b - 1);
    // sqrt(pi/2) accounts for the efficiency of the median
    est.std_error = 1.2533141373155003 * std::sqrt(var / b);
  } else {
    est.std_error = est.plain_std_error;
  }
  return est;
}

double zscore(const PeriodEstimate& est, double reference) {
  if (!(est.std_error > 0.0))
    throw std::invalid_argument("zscore needs a positive standard error");
  return (est.mean - reference) / est.std_error;
}

}  // namespace pforge
