#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>

namespace minrank {

struct BoundParams {
  std::size_t n = 0;
  double p = 0.0;
  std::size_t k = 0;
};

// n * ln(1/p) / (80 * ln n).  The log-ratio is base-invariant, so natural
// logs are canonical here.
inline double minrank_lower_threshold(std::size_t n, double p) {
  if (n < 2) throw std::invalid_argument("minrank_lower_threshold: n must be >= 2");
  if (p <= 0.0 || p > 1.0)
    throw std::invalid_argument("minrank_lower_threshold: p out of (0,1]");
  return double(n) * std::log(1.0 / p) / (80.0 * std::log(double(n)));
}

namespace detail {

inline double log_binom(std::size_t n, std::size_t k) {
  if (k > n) return -std::numeric_limits<double>::infinity();
  return std::lgamma(double(n) + 1) - std::lgamma(double(k) + 1) -
         std::lgamma(double(n - k) + 1);
}

// log(exp(a) + exp(b)) without overflow.
inline double log_add(double a, double b) {
  if (a == -std::numeric_limits<double>::infinity()) return b;
  if (b == -std::numeric_limits<double>::infinity()) return a;
  double hi = std::max(a, b), lo = std::min(a, b);
  return hi + std::log1p(std::exp(lo - hi));
}

// log of sum_{i=0}^{count-1} exp(first + i*step): a finite geometric
// series in log space.  Literal accumulation for short runs, the
// closed form (identical finite sum) for long ones.
inline double log_geom_sum(double first, double step, std::uint64_t count) {
  if (count == 0) return -std::numeric_limits<double>::infinity();
  if (count == 1) return first;
  if (count <= 4096) {
    double acc = -std::numeric_limits<double>::infinity();
    double t = first;
    for (std::uint64_t i = 0; i < count; ++i, t += step) acc = log_add(acc, t);
    return acc;
  }
  if (step == 0.0) return first + std::log(double(count));
  // sum = e^first * expm1(step*count) / expm1(step), valid for step != 0
  double num = double(count) * step;
  double log_ratio;
  if (step < 0) {
    // both expm1 arguments negative; ratio positive
    log_ratio = std::log(std::expm1(num) / std::expm1(step));
  } else {
    // rewrite to keep arguments bounded: e^{(count-1)step} * expm1-form
    log_ratio = (double(count) - 1.0) * step +
                std::log(std::expm1(-num) / std::expm1(-step));
  }
  return first + log_ratio;
}

}  // namespace detail

// Natural log of the triple union-bound sum
//   sum_{n'=1..n} sum_{k'=1..floor(n'k/n)} sum_{s'=ceil(n'n/(4k))..n'^2}
//     C(n,n') C(n',k')^2 n'^{20k's'/n'} p^{(s'-n')/2}
// evaluated fully in log space.  Returns -inf when the triple sum is
// empty.  The s' upper limit n'^2 is the physical nonzero-count cap.
inline double union_bound_log(const BoundParams& params) {
  const std::size_t n = params.n;
  const double p = params.p;
  const std::size_t k = params.k;
  if (n < 2 || k < 1 || k > n)
    throw std::invalid_argument("union_bound_log: bad parameters");
  if (p <= 0.0 || p >= 1.0)
    throw std::invalid_argument("union_bound_log: p must lie in (0,1)");

  const double lnp = std::log(p);
  double acc = -std::numeric_limits<double>::infinity();
  for (std::size_t np = 1; np <= n; ++np) {
    const double lnnp = std::log(double(np));
    const std::size_t kmax = np * k / n;  // floor
    // ceil(n'*n/(4k))
    const std::uint64_t smin = (std::uint64_t(np) * n + 4 * k - 1) / (4 * k);
    const std::uint64_t smax = std::uint64_t(np) * np;
    if (smin > smax) continue;
    const double log_choose_u = detail::log_binom(n, np);
    for (std::size_t kp = 1; kp <= kmax; ++kp) {
      // per-unit-s' slope and the s'-independent offset
      const double slope = (20.0 * double(kp) / double(np)) * lnnp + 0.5 * lnp;
      const double offset = log_choose_u + 2.0 * detail::log_binom(np, kp) -
                            0.5 * double(np) * lnp;
      const double first = offset + double(smin) * slope;
      acc = detail::log_add(acc,
                            detail::log_geom_sum(first, slope, smax - smin + 1));
    }
  }
  return acc;
}

// (Theorem-scale pair) lower threshold and the raw Theta reference scale
// n * ln(1/p) / ln(n) experimental values are reported against.
inline std::pair<double, double> envelope(std::size_t n, double p) {
  if (n < 2) throw std::invalid_argument("envelope: n must be >= 2");
  if (p <= 0.0 || p > 1.0) throw std::invalid_argument("envelope: p out of (0,1]");
  double scale = double(n) * std::log(1.0 / p) / std::log(double(n));
  return {minrank_lower_threshold(n, p), scale};
}

}  // namespace minrank
