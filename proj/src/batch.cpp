#include "cnn/batch.hpp"

#include <omp.h>

#include <cstdlib>
#include <exception>

#include "cnn/generators.hpp"
#include "cnn/potential.hpp"

namespace cnn {

BatchItem verify_random_pair(std::uint64_t seed, const BatchConfig& config) {
  BatchItem item;
  item.seed = seed;
  try {
    const GeneratedPair pair = random_orthogonal(seed, config.n_segments, config.coord_bound);
    const Trace trace = run(pair.instance);
    item.ell_on = trace.final_cost;
    item.ell_opt = pair.opt.cost();
    const bool aligned = validate_alignment(trace.server_trajectory(), pair.instance).feasible;
    const VerificationReport generated = verify_nondecreasing(trace, pair.opt);
    const VerificationReport lazy = verify_nondecreasing(trace, lazy_trajectory(pair.instance));
    item.ok = aligned && generated.ok && lazy.ok;
    if (!generated.ok) {
      item.first_decrease = generated.first_decrease->s;
    } else if (!lazy.ok) {
      item.first_decrease = lazy.first_decrease->s;
    }
    if (!aligned) item.error = "online trace is not aligned";
  } catch (const std::exception& e) {
    item.ok = false;
    item.error = e.what();
  }
  return item;
}

BatchSummary verify_random_serial(const BatchConfig& config) {
  BatchSummary out;
  out.items.reserve(config.count);
  for (std::size_t i = 0; i < config.count; ++i) {
    out.items.push_back(verify_random_pair(config.first_seed + i, config));
    if (!out.items.back().ok) ++out.failures;
  }
  return out;
}

BatchSummary verify_random_parallel(const BatchConfig& config, int threads) {
  if (threads <= 0) threads = batch_thread_count();
  BatchSummary out;
  out.items.resize(config.count);
  const auto n = static_cast<std::int64_t>(config.count);
  std::size_t failures = 0;
#pragma omp parallel for schedule(dynamic, 4) num_threads(threads) reduction(+ : failures)
  for (std::int64_t i = 0; i < n; ++i) {
    out.items[i] = verify_random_pair(config.first_seed + static_cast<std::uint64_t>(i), config);
    if (!out.items[i].ok) ++failures;
  }
  out.failures = failures;
  return out;
}

int batch_thread_count() {
  if (const char* env = std::getenv("CNN_BENCH_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
  }
  return omp_get_num_procs();
}

}  // namespace cnn
