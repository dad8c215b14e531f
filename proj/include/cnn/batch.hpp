#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cnn/scalar.hpp"

namespace cnn {

struct BatchConfig {
  std::uint64_t first_seed = 0;
  std::size_t count = 1000;
  std::size_t n_segments = 12;
  std::int64_t coord_bound = 3;
};

/// Outcome for one seeded random pair. `ok` requires the potential check to
/// pass against both the generated opt and the lazy opt, and the online
/// trace to be aligned.
struct BatchItem {
  std::uint64_t seed = 0;
  bool ok = false;
  Scalar ell_on;
  Scalar ell_opt;
  std::optional<Scalar> first_decrease;
  std::string error;

  friend bool operator==(const BatchItem&, const BatchItem&) = default;
};

struct BatchSummary {
  std::vector<BatchItem> items;
  std::size_t failures = 0;
};

BatchItem verify_random_pair(std::uint64_t seed, const BatchConfig& config);

/// Reference kernel, one pair after another.
BatchSummary verify_random_serial(const BatchConfig& config);

/// OpenMP kernel; results are identical to the serial one. threads <= 0
/// means `batch_thread_count()`.
BatchSummary verify_random_parallel(const BatchConfig& config, int threads = 0);

/// CNN_BENCH_THREADS when set to a positive integer, otherwise the number
/// of processors.
int batch_thread_count();

}  // namespace cnn
