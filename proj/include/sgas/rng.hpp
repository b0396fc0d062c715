#pragma once

#include <cstdint>
#include <random>

namespace sgas {

/// Identifies an independent random stream. The engine is seeded from all
/// four 32-bit halves, so distinct pairs give unrelated sequences.
struct RngStream {
  std::uint64_t master_seed = 0;
  std::uint64_t stream_index = 0;
};

class RandomSource {
 public:
  explicit RandomSource(const RngStream& stream);

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on the open interval (0,1).
  double uniform() { return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53; }

  /// Standard normal (Marsaglia polar method).
  double normal();

  const RngStream& stream() const { return stream_; }

 private:
  RngStream stream_;
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

/// Gamma variate with density x^{shape-1} e^{-x/scale} / (Γ(shape) scale^shape).
double draw_gamma(double shape, double scale, RandomSource& rng);

/// Beta(alpha, beta) variate in (0,1).
double draw_beta(double alpha, double beta, RandomSource& rng);

}  // namespace sgas
