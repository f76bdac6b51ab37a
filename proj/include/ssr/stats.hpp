#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "ssr/common.hpp"

namespace ssr {

// Pairwise summation: order-stable and accurate enough that parallel draw
// aggregation stays bit-reproducible.
inline double pairwise_sum(std::span<const double> x) {
  const std::size_t n = x.size();
  if (n == 0) return 0.0;
  if (n <= 8) {
    double s = 0.0;
    for (double v : x) s += v;
    return s;
  }
  const std::size_t half = n / 2;
  return pairwise_sum(x.first(half)) + pairwise_sum(x.subspan(half));
}

inline double mean(std::span<const double> x) {
  if (x.empty()) throw Error(Errc::insufficient_data, "mean of empty sample");
  return pairwise_sum(x) / static_cast<double>(x.size());
}

inline double variance(std::span<const double> x) {
  if (x.size() < 2) throw Error(Errc::insufficient_data, "variance needs >= 2 values");
  const double m = mean(x);
  std::vector<double> sq(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) sq[i] = (x[i] - m) * (x[i] - m);
  return pairwise_sum(sq) / static_cast<double>(x.size() - 1);
}

// Quantile by linear interpolation between order statistics
// (h = (n-1)p, value = x[floor(h)] + frac(h) * (x[floor(h)+1] - x[floor(h)])).
// `sorted` must be ascending.
inline double quantile_sorted(std::span<const double> sorted, double p) {
  if (sorted.empty()) throw Error(Errc::insufficient_data, "quantile of empty sample");
  if (p <= 0.0) return sorted.front();
  if (p >= 1.0) return sorted.back();
  const double h = static_cast<double>(sorted.size() - 1) * p;
  const std::size_t lo = static_cast<std::size_t>(h);
  const double frac = h - static_cast<double>(lo);
  if (lo + 1 >= sorted.size()) return sorted.back();
  return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

inline double quantile(std::span<const double> x, double p) {
  std::vector<double> s(x.begin(), x.end());
  std::sort(s.begin(), s.end());
  return quantile_sorted(s, p);
}

// Regularized upper incomplete gamma Q(a, x), series/continued-fraction split.
inline double gamma_q(double a, double x) {
  if (x < 0.0 || a <= 0.0) throw Error(Errc::invalid_argument, "gamma_q domain");
  if (x == 0.0) return 1.0;
  if (x < a + 1.0) {
    // lower series
    double ap = a;
    double sum = 1.0 / a;
    double del = sum;
    for (int i = 0; i < 500; ++i) {
      ap += 1.0;
      del *= x / ap;
      sum += del;
      if (std::abs(del) < std::abs(sum) * 1e-15) break;
    }
    return 1.0 - sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
  }
  // continued fraction
  const double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 500; ++i) {
    const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < 1e-15) break;
  }
  return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

// P(X > x) for X ~ chi-squared(df)
inline double chi2_sf(double x, double df) { return gamma_q(0.5 * df, 0.5 * x); }

struct LjungBox {
  double statistic = 0.0;
  int lags = 0;
  double p_value = 1.0;
};

inline LjungBox ljung_box(std::span<const double> x, int lags) {
  const std::size_t n = x.size();
  if (static_cast<int>(n) <= lags + 1)
    throw Error(Errc::insufficient_data, "ljung_box: series shorter than lag count");
  const double m = mean(x);
  double denom = 0.0;
  for (double v : x) denom += (v - m) * (v - m);
  LjungBox out;
  out.lags = lags;
  if (denom <= 0.0) return out;  // constant series
  double q = 0.0;
  for (int k = 1; k <= lags; ++k) {
    double num = 0.0;
    for (std::size_t t = static_cast<std::size_t>(k); t < n; ++t)
      num += (x[t] - m) * (x[t - k] - m);
    const double rk = num / denom;
    q += rk * rk / static_cast<double>(n - static_cast<std::size_t>(k));
  }
  out.statistic = static_cast<double>(n) * (static_cast<double>(n) + 2.0) * q;
  out.p_value = chi2_sf(out.statistic, lags);
  return out;
}

struct JarqueBera {
  double statistic = 0.0;
  double p_value = 1.0;
  double skewness = 0.0;
  double kurtosis = 3.0;
};

inline JarqueBera jarque_bera(std::span<const double> x) {
  const std::size_t n = x.size();
  if (n < 4) throw Error(Errc::insufficient_data, "jarque_bera needs >= 4 values");
  const double m = mean(x);
  double m2 = 0.0, m3 = 0.0, m4 = 0.0;
  for (double v : x) {
    const double d = v - m;
    m2 += d * d;
    m3 += d * d * d;
    m4 += d * d * d * d;
  }
  const double dn = static_cast<double>(n);
  m2 /= dn;
  m3 /= dn;
  m4 /= dn;
  JarqueBera out;
  if (m2 <= 0.0) return out;
  out.skewness = m3 / std::pow(m2, 1.5);
  out.kurtosis = m4 / (m2 * m2);
  out.statistic = dn / 6.0 * (out.skewness * out.skewness +
                              0.25 * (out.kurtosis - 3.0) * (out.kurtosis - 3.0));
  out.p_value = chi2_sf(out.statistic, 2.0);
  return out;
}

struct HistogramBin {
  double left = 0.0;
  double right = 0.0;
  std::size_t count = 0;
};

inline std::vector<HistogramBin> histogram(std::span<const double> x, int n_bins) {
  if (x.empty()) throw Error(Errc::insufficient_data, "histogram of empty sample");
  if (n_bins < 1) throw Error(Errc::invalid_argument, "histogram needs >= 1 bin");
  const auto [mn_it, mx_it] = std::minmax_element(x.begin(), x.end());
  double lo = *mn_it, hi = *mx_it;
  if (hi <= lo) hi = lo + 1.0;  // point mass: one unit-wide bin window
  const double width = (hi - lo) / n_bins;
  std::vector<HistogramBin> bins(static_cast<std::size_t>(n_bins));
  for (int b = 0; b < n_bins; ++b) {
    bins[static_cast<std::size_t>(b)].left = lo + b * width;
    bins[static_cast<std::size_t>(b)].right = lo + (b + 1) * width;
  }
  for (double v : x) {
    int b = static_cast<int>((v - lo) / width);
    b = std::clamp(b, 0, n_bins - 1);
    bins[static_cast<std::size_t>(b)].count += 1;
  }
  return bins;
}

}  // namespace ssr
