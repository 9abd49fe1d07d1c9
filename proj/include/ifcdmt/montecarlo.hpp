#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ifcdmt/parallel.hpp"
#include "ifcdmt/regions.hpp"

namespace ifcdmt {

// ---------------------------------------------------------------------------
// Finite-SNR Monte Carlo outage estimation.
//
// Reproducibility contract: every random number is a pure function of
// (seed, x_index, sample_index, dimension) through the counter scheme below,
// so results are bit-identical for a given seed regardless of how samples are
// sharded across threads. Shard reductions are integer counts.
// ---------------------------------------------------------------------------

/// Pinned generator identifier, emitted with results.
[[nodiscard]] constexpr const char* rng_scheme_id() noexcept {
  return "splitmix64-counter-v1";
}

namespace detail {

/// SplitMix64 finalizer round.
[[nodiscard]] constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Uniform draw in (0, 1]: dimension `dim` of sample `i` at grid point `k`.
/// The derivation is fixed: h = mix64(mix64(mix64(seed ^ C1*(k+1)) ^ C2*(i+1))
/// ^ C3*(dim+1)), u = ((h >> 11) + 1) * 2^-53.
[[nodiscard]] constexpr double counter_uniform(std::uint64_t seed, std::uint64_t k,
                                               std::uint64_t i, std::uint64_t dim) noexcept {
  std::uint64_t h = mix64(seed ^ (0x9E3779B97F4A7C15ULL * (k + 1)));
  h = mix64(h ^ (0xC2B2AE3D27D4EB4FULL * (i + 1)));
  h = mix64(h ^ (0x165667B19E3779F9ULL * (dim + 1)));
  return static_cast<double>((h >> 11) + 1) * 0x1.0p-53;
}

}  // namespace detail

/// Per-(x point) fading sampler: S_cu = x^{beta_cu} * E_cu with independent
/// unit-mean exponential E_cu.
class FadingSampler {
 public:
  FadingSampler(const ChannelGains& ch, double x, std::uint64_t seed, std::uint64_t x_index)
      : seed_(seed), k_(x_index) {
    if (!(x > 1.0)) throw std::invalid_argument("FadingSampler: x must exceed 1");
    m_[0] = std::pow(x, ch.b11);
    m_[1] = std::pow(x, ch.b12);
    m_[2] = std::pow(x, ch.b21);
    m_[3] = std::pow(x, ch.b22);
  }

  [[nodiscard]] FiniteFadingSample operator()(std::uint64_t sample_index) const {
    std::array<double, 4> s{};
    for (std::uint64_t d = 0; d < 4; ++d)
      s[d] = m_[d] * -std::log(detail::counter_uniform(seed_, k_, sample_index, d));
    return {s[0], s[1], s[2], s[3]};
  }

 private:
  std::uint64_t seed_, k_;
  std::array<double, 4> m_{};
};

/// One fading draw (convenience wrapper over FadingSampler).
[[nodiscard]] inline FiniteFadingSample sample_fading(const ChannelGains& ch, double x,
                                                      std::uint64_t seed,
                                                      std::uint64_t x_index,
                                                      std::uint64_t sample_index) {
  return FadingSampler(ch, x, seed, x_index)(sample_index);
}

// ---------------------------------------------------------------------------

struct McConfig {
  std::vector<double> x_grid;      ///< SNR scale points, strictly increasing, > 1
  std::int64_t samples_per_x = 0;  ///< >= 1
  std::uint64_t seed = 0;
  FiniteRegion region = FiniteRegion::EtwOuter;
  int min_outage_events = 100;     ///< slope-fit usability cut
  int threads = 0;                 ///< 0 = auto; always capped by IFC_DMT_THREADS

  void validate() const {
    if (x_grid.empty()) throw std::invalid_argument("McConfig: x_grid must not be empty");
    double prev = 1.0;
    for (double x : x_grid) {
      if (!(x > prev)) throw std::invalid_argument("McConfig: x_grid must be > 1 and strictly increasing");
      prev = x;
    }
    if (samples_per_x < 1) throw std::invalid_argument("McConfig: samples_per_x must be >= 1");
  }
};

struct OutageEstimate {
  double x = 0.0;
  double p_out = 0.0;
  double ci95_half_width = 0.0;
  std::int64_t n = 0;
  std::int64_t events = 0;
};

/// Normal-approximation 95% confidence half-width.
[[nodiscard]] inline double ci95_half_width(double p, std::int64_t n) {
  return 1.96 * std::sqrt(p * (1.0 - p) / static_cast<double>(n));
}

namespace detail {

struct ShardCounts {
  std::int64_t etw = 0, hk = 0, order_violations = 0;
};

template <bool Both>
inline std::vector<ShardCounts> run_counts(const ChannelGains& ch, const RatePair& r,
                                           const McConfig& cfg) {
  cfg.validate();
  const int workers = worker_count(cfg.threads);
  std::vector<ShardCounts> per_x(cfg.x_grid.size());
  for (std::size_t k = 0; k < cfg.x_grid.size(); ++k) {
    const double x = cfg.x_grid[k];
    const FadingSampler draw(ch, x, cfg.seed, k);
    const std::int64_t n = cfg.samples_per_x;
    std::vector<ShardCounts> shard(static_cast<std::size_t>(workers));
    const std::int64_t chunk = (n + workers - 1) / workers;
    parallel_for_index(workers, workers, [&](std::int64_t w) {
      const std::int64_t lo = w * chunk, hi = std::min(n, lo + chunk);
      ShardCounts c;
      for (std::int64_t i = lo; i < hi; ++i) {
        const FiniteFadingSample s = draw(static_cast<std::uint64_t>(i));
        if constexpr (Both) {
          const bool out_etw = !in_etw_finite(s, ch, r, x);
          const bool out_hk = !in_hk_finite(s, ch, r, x);
          c.etw += out_etw ? 1 : 0;
          c.hk += out_hk ? 1 : 0;
          if (out_etw && !out_hk) ++c.order_violations;
        } else {
          const bool out = !in_finite_region(cfg.region, s, ch, r, x);
          c.etw += out ? 1 : 0;
        }
      }
      shard[static_cast<std::size_t>(w)] = c;
    });
    ShardCounts total;
    for (const ShardCounts& c : shard) {  // fixed order: shard index
      total.etw += c.etw;
      total.hk += c.hk;
      total.order_violations += c.order_violations;
    }
    per_x[k] = total;
  }
  return per_x;
}

[[nodiscard]] inline OutageEstimate make_estimate(double x, std::int64_t events,
                                                  std::int64_t n) {
  OutageEstimate e;
  e.x = x;
  e.n = n;
  e.events = events;
  e.p_out = static_cast<double>(events) / static_cast<double>(n);
  e.ci95_half_width = ci95_half_width(e.p_out, n);
  return e;
}

}  // namespace detail

/// Outage probability of the configured region at every x in the grid.
[[nodiscard]] inline std::vector<OutageEstimate> outage_probability(const ChannelGains& ch,
                                                                    const RatePair& r,
                                                                    const McConfig& cfg) {
  const auto counts = detail::run_counts<false>(ch, r, cfg);
  std::vector<OutageEstimate> out(counts.size());
  for (std::size_t k = 0; k < counts.size(); ++k)
    out[k] = detail::make_estimate(cfg.x_grid[k], counts[k].etw, cfg.samples_per_x);
  return out;
}

struct OutagePair {
  OutageEstimate etw, hk;
  std::int64_t ordering_violations = 0;  ///< samples out of the outer region but inside the inner
};

/// Common-random-numbers comparison of the two finite regions. The same
/// fading draws feed both memberships, so outage(outer) <= outage(inner)
/// holds sample by sample; violations of that ordering are counted.
[[nodiscard]] inline std::vector<OutagePair> outage_probability_compare(const ChannelGains& ch,
                                                                        const RatePair& r,
                                                                        const McConfig& cfg) {
  const auto counts = detail::run_counts<true>(ch, r, cfg);
  std::vector<OutagePair> out(counts.size());
  for (std::size_t k = 0; k < counts.size(); ++k) {
    out[k].etw = detail::make_estimate(cfg.x_grid[k], counts[k].etw, cfg.samples_per_x);
    out[k].hk = detail::make_estimate(cfg.x_grid[k], counts[k].hk, cfg.samples_per_x);
    out[k].ordering_violations = counts[k].order_violations;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Diversity slope fitting
// ---------------------------------------------------------------------------

class InsufficientOutageEvents : public std::runtime_error {
 public:
  explicit InsufficientOutageEvents(const std::string& what) : std::runtime_error(what) {}
};

struct SlopeFit {
  double d_hat = 0.0;
  double residual = 0.0;                          ///< RMS residual of the fit
  std::vector<std::array<double, 2>> points;      ///< (log10 x, -log10 p_out)
};

/// Least-squares slope of -log10 p against log10 x. A point is usable when it
/// has outage events and either meets the event cut (bounded relative CI) or
/// saturated at p = 1 (zero-width CI).
[[nodiscard]] inline SlopeFit fit_slope(const std::vector<OutageEstimate>& estimates,
                                        int min_outage_events = 100) {
  SlopeFit fit;
  for (const OutageEstimate& e : estimates) {
    if (e.events <= 0) continue;
    if (e.events < min_outage_events && e.events != e.n) continue;
    fit.points.push_back({std::log10(e.x), -std::log10(e.p_out)});
  }
  if (fit.points.size() < 2)
    throw InsufficientOutageEvents(
        "fit_slope: fewer than two x points with usable outage counts; raise samples_per_x "
        "or lower the x grid");
  double su = 0, sy = 0, suu = 0, suy = 0;
  const double n = static_cast<double>(fit.points.size());
  for (const auto& p : fit.points) {
    su += p[0];
    sy += p[1];
    suu += p[0] * p[0];
    suy += p[0] * p[1];
  }
  const double denom = n * suu - su * su;
  fit.d_hat = denom != 0.0 ? (n * suy - su * sy) / denom : 0.0;
  const double intercept = (sy - fit.d_hat * su) / n;
  double ss = 0;
  for (const auto& p : fit.points) {
    const double e = p[1] - (intercept + fit.d_hat * p[0]);
    ss += e * e;
  }
  fit.residual = std::sqrt(ss / n);
  return fit;
}

/// Run the simulation and fit the outage slope in one step.
[[nodiscard]] inline SlopeFit estimate_diversity(const ChannelGains& ch, const RatePair& r,
                                                 const McConfig& cfg) {
  return fit_slope(outage_probability(ch, r, cfg), cfg.min_outage_events);
}

// ---------------------------------------------------------------------------
// CSV emission (fixed schema: x, p_out, ci95, n, region; LF line endings,
// 9 significant digits)
// ---------------------------------------------------------------------------

namespace detail {
[[nodiscard]] inline std::string g9(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}
}  // namespace detail

inline void write_outage_csv(std::ostream& os, const std::vector<OutageEstimate>& estimates,
                             FiniteRegion region) {
  os << "x,p_out,ci95,n,region\n";
  for (const OutageEstimate& e : estimates)
    os << detail::g9(e.x) << ',' << detail::g9(e.p_out) << ',' << detail::g9(e.ci95_half_width)
       << ',' << e.n << ',' << to_string(region) << '\n';
}

}  // namespace ifcdmt
