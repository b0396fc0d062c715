#include "sgas/rng.hpp"

#include <cmath>

#include "sgas/errors.hpp"

namespace sgas {

namespace {

std::mt19937_64 seeded_engine(const RngStream& s) {
  std::seed_seq seq{static_cast<std::uint32_t>(s.master_seed), static_cast<std::uint32_t>(s.master_seed >> 32),
                    static_cast<std::uint32_t>(s.stream_index), static_cast<std::uint32_t>(s.stream_index >> 32)};
  return std::mt19937_64(seq);
}

}  // namespace

RandomSource::RandomSource(const RngStream& stream) : stream_(stream), engine_(seeded_engine(stream)) {}

double RandomSource::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u = 0.0;
  double v = 0.0;
  double s = 0.0;
  do {
    u = 2.0 * uniform() - 1.0;
    v = 2.0 * uniform() - 1.0;
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  const double f = std::sqrt(-2.0 * std::log(s) / s);
  spare_ = v * f;
  has_spare_ = true;
  return u * f;
}

double draw_gamma(double shape, double scale, RandomSource& rng) {
  if (!(shape > 0.0) || !(scale > 0.0)) throw DomainError("draw_gamma: shape and scale must be positive");
  if (shape < 1.0) {
    const double g = draw_gamma(shape + 1.0, 1.0, rng);
    return scale * g * std::pow(rng.uniform(), 1.0 / shape);
  }
  // Marsaglia and Tsang (2000).
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x = 0.0;
    double v = 0.0;
    do {
      x = rng.normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = rng.uniform();
    if (u < 1.0 - 0.0331 * x * x * x * x) return scale * d * v;
    if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return scale * d * v;
  }
}

double draw_beta(double alpha, double beta, RandomSource& rng) {
  if (!(alpha > 0.0) || !(beta > 0.0)) throw DomainError("draw_beta: parameters must be positive");
  for (;;) {
    const double x = draw_gamma(alpha, 1.0, rng);
    const double y = draw_gamma(beta, 1.0, rng);
    const double b = x / (x + y);
    if (b > 0.0 && b < 1.0) return b;
  }
}

}  // namespace sgas
