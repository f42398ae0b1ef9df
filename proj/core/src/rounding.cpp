#include "dynmwm/rounding.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include "dynmwm/levels.hpp"

namespace dynmwm {

std::string_view to_string(RoundingMode mode) {
  return mode == RoundingMode::kPlain ? "plain" : "rounded";
}

std::optional<RoundingMode> parse_rounding_mode(std::string_view text) {
  if (text == "plain") return RoundingMode::kPlain;
  if (text == "rounded") return RoundingMode::kRounded;
  return std::nullopt;
}

double RoundingConfig::offset() const {
  if (mode == RoundingMode::kPlain) return 0.0;
  if (!r) throw std::logic_error("rounded config used before resolve()");
  return *r;
}

void validate(const RoundingConfig& cfg) {
  if (!std::isfinite(cfg.alpha) || !(cfg.alpha > 1.0)) {
    throw std::invalid_argument("alpha must be a finite value > 1, got " +
                                std::to_string(cfg.alpha));
  }
  if (cfg.rounded() && cfg.r && !(*cfg.r > 0.0 && *cfg.r <= 1.0)) {
    throw std::invalid_argument("rounding offset r must lie in (0,1], got " +
                                std::to_string(*cfg.r));
  }
}

double draw_offset(std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  // [0,1) mirrored onto (0,1].
  return 1.0 - std::uniform_real_distribution<double>(0.0, 1.0)(gen);
}

RoundingConfig resolve(RoundingConfig cfg) {
  validate(cfg);
  if (cfg.rounded() && !cfg.r) cfg.r = draw_offset(cfg.seed);
  return cfg;
}

Weight rounded_weight(Weight w, const RoundingConfig& cfg) {
  if (!cfg.rounded()) {
    throw std::logic_error("rounded_weight requires rounded mode");
  }
  return level_lower_bound(level_of(w, cfg), cfg);
}

double expected_rounding_factor(double alpha) {
  if (!(alpha > 1.0)) throw std::invalid_argument("alpha must be > 1");
  return (alpha - 1.0) / (alpha * std::log(alpha));
}

double plain_ratio(double alpha) {
  if (!(alpha > 1.0)) throw std::invalid_argument("alpha must be > 1");
  return 2.0 * alpha / (alpha - 1.0) + 2.0 * alpha;
}

double rounded_ratio(double alpha) {
  if (!(alpha > 1.0)) throw std::invalid_argument("alpha must be > 1");
  const double d = alpha - 1.0;
  return 2.0 * alpha * alpha * std::log(alpha) / (d * d);
}

double rounded_state_ratio(double alpha) {
  if (!(alpha > 1.0)) throw std::invalid_argument("alpha must be > 1");
  return 2.0 * alpha / (alpha - 1.0);
}

RatioOptimum optimize_rounded_ratio(double tolerance) {
  // rounded_ratio is unimodal on (1, 100]: it diverges like 2/(a-1) at 1 and
  // grows like 2 ln a for large a.
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = 1.0 + 1e-9;
  double hi = 100.0;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = rounded_ratio(x1);
  double f2 = rounded_ratio(x2);
  while (hi - lo > tolerance) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = rounded_ratio(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = rounded_ratio(x2);
    }
  }
  const double a = 0.5 * (lo + hi);
  return {a, rounded_ratio(a)};
}

}  // namespace dynmwm
