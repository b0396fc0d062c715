#include "sgas/ensembles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "sgas/errors.hpp"

namespace sgas {

double RecurrenceDraw::evaluate(int j, double x) const {
  if (j < 0 || j > degree()) throw DomainError("RecurrenceDraw::evaluate: degree out of range");
  if (j == 0) return 1.0;
  double prev = 1.0;
  double cur = x - b1;
  const double xx = x * (x - 1.0);
  for (int k = 2; k <= j; ++k) {
    const RecurrenceStep& s = steps[k - 2];
    const double next = (s.w2 * (x - 1.0) + s.w0 * x) * cur + s.w1 * xx * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

RecurrenceDraw draw_recurrence(int n, RandomSource& rng) {
  if (n < 1) throw DomainError("draw_recurrence: n must be positive");
  RecurrenceDraw d;
  d.b1 = draw_beta(n + 0.5, n + 0.5, rng);
  d.steps.reserve(n - 1);
  for (int j = 2; j <= n; ++j) {
    const double a = draw_gamma(n + 1 - j + 0.5, 1.0, rng);
    const double b = draw_gamma(j - 1, 1.0, rng);
    const double c = draw_gamma(n + 1 - j + 0.5, 1.0, rng);
    const double sum = a + b + c;
    const double w0 = a / sum;
    const double w1 = b / sum;
    d.steps.push_back({w0, w1, 1.0 - (w0 + w1)});
  }
  return d;
}

namespace {

double bisect(const RecurrenceDraw& draw, int j, double lo, double hi) {
  double flo = draw.evaluate(j, lo);
  const double fhi = draw.evaluate(j, hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo < 0.0) == (fhi < 0.0)) {
    throw SamplingError("recurrence_roots: no sign change in bracket [" + std::to_string(lo) + ", " +
                        std::to_string(hi) + "] at degree " + std::to_string(j));
  }
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fm = draw.evaluate(j, mid);
    if (fm == 0.0) return mid;
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

std::vector<double> recurrence_roots(const RecurrenceDraw& draw) {
  std::vector<double> roots{draw.b1};
  std::vector<double> edges;
  for (int j = 2; j <= draw.degree(); ++j) {
    edges.assign(1, 0.0);
    edges.insert(edges.end(), roots.begin(), roots.end());
    edges.push_back(1.0);
    std::vector<double> next(j);
    for (int i = 0; i < j; ++i) next[i] = bisect(draw, j, edges[i], edges[i + 1]);
    roots = std::move(next);
  }
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (!(roots[i] > 0.0 && roots[i] < 1.0) || (i > 0 && !(roots[i] > roots[i - 1]))) {
      throw SamplingError("recurrence_roots: roots not strictly increasing inside (0,1)");
    }
  }
  return roots;
}

EigenvalueSample sample_jue_halfhalf(int n, RandomSource& rng) {
  constexpr int kMaxResamples = 16;
  EigenvalueSample out;
  out.params = EnsembleParams{n, 0.5, 0.5, 1.0};
  out.provenance = Provenance::Recurrence;
  for (int attempt = 0; attempt <= kMaxResamples; ++attempt) {
    try {
      out.points = recurrence_roots(draw_recurrence(n, rng));
      out.resamples = attempt;
      return out;
    } catch (const SamplingError&) {
      if (attempt == kMaxResamples) throw;
    }
  }
  return out;
}

namespace {

double log_pair_sum(const std::vector<double>& x, int i, double xi) {
  double s = 0.0;
  for (int k = 0; k < static_cast<int>(x.size()); ++k) {
    if (k != i) s += std::log(std::fabs(xi - x[k]));
  }
  return s;
}

}  // namespace

EigenvalueSample sample_jue_metropolis(const EnsembleParams& params, int sweeps, RandomSource& rng,
                                       const MetropolisOptions& options) {
  params.validate();
  if (sweeps < options.burn_in) throw DomainError("sample_jue_metropolis: sweeps must cover the burn-in");
  const int n = params.n;
  const double beta = params.beta();
  std::vector<double> x(n);
  for (int k = 0; k < n; ++k) x[k] = 0.5 * (1.0 - std::cos(std::numbers::pi * (k + 0.5) / n));

  auto log_one = [&](double v) { return params.lambda1 * std::log(v) + params.lambda2 * std::log1p(-v); };

  double step = 0.5 / n;
  long accepted = 0;
  long proposed = 0;
  auto sweep = [&]() {
    int acc = 0;
    for (int i = 0; i < n; ++i) {
      const double y = x[i] + step * rng.normal();
      const double u = rng.uniform();
      if (!(y > 0.0 && y < 1.0)) continue;
      const double delta =
          log_one(y) - log_one(x[i]) + beta * (log_pair_sum(x, i, y) - log_pair_sum(x, i, x[i]));
      if (delta >= 0.0 || std::log(u) < delta) {
        x[i] = y;
        ++acc;
      }
    }
    return acc;
  };

  constexpr int kAdaptBlock = 10;
  long block_accepted = 0;
  for (int s = 0; s < options.burn_in; ++s) {
    const int acc = sweep();
    block_accepted += acc;
    if (s >= options.burn_in / 2) {
      accepted += acc;
      proposed += n;
    }
    if ((s + 1) % kAdaptBlock == 0) {
      const double rate = static_cast<double>(block_accepted) / (kAdaptBlock * n);
      step *= rate > options.target_acceptance ? 1.1 : 1.0 / 1.1;
      step = std::clamp(step, 1e-6, 1.0);
      block_accepted = 0;
    }
  }
  const int production = std::max(options.thinning, sweeps - options.burn_in);
  for (int s = 0; s < production; ++s) {
    accepted += sweep();
    proposed += n;
  }

  EigenvalueSample out;
  std::sort(x.begin(), x.end());
  out.points = std::move(x);
  out.params = params;
  out.provenance = Provenance::Metropolis;
  out.acceptance_rate = static_cast<double>(accepted) / static_cast<double>(proposed);
  out.tuning_warning = !(out.acceptance_rate > 0.05 && out.acceptance_rate < 0.95);
  return out;
}

}  // namespace sgas
