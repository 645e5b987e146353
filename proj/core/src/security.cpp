#include "qkdsec/security.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

#include "qkdsec/attacks.hpp"
#include "qkdsec/info.hpp"

namespace qkdsec {
namespace {

constexpr int kMaxBisectIter = 200;
constexpr double kResidualTarget = 1e-12;

ClonerAsymmetry cloner_at_error(int n_dim, double e_b) {
  // e_B = (N-1) beta^2 / N
  const double beta = std::sqrt(n_dim * e_b / (n_dim - 1.0));
  return cloner_from_beta(std::min(beta, 1.0), n_dim);
}

// Plain bisection with fixed brackets; f must change sign across them.
ThresholdResult bisect(int n_dim, ThresholdKind kind,
                       const std::function<double(double)>& f) {
  double lo = 1e-15;
  double hi = (n_dim - 1.0) / n_dim - 1e-15;
  double flo = f(lo);
  if (f(hi) * flo >= 0.0)
    throw std::logic_error("threshold bisection: no sign change in bracket");
  double mid = lo, fmid = flo;
  for (int i = 0; i < kMaxBisectIter; ++i) {
    mid = 0.5 * (lo + hi);
    fmid = f(mid);
    if (std::abs(fmid) < kResidualTarget) break;
    if ((fmid < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  return {n_dim, mid, kind, fmid};
}

}  // namespace

RatePoint rate_ab(int n_dim, int n_bases, double e_b) {
  if (n_dim < 2) throw std::invalid_argument("rate_ab: dim < 2");
  if (n_bases < 1 || n_bases > n_dim + 1)
    throw std::invalid_argument("rate_ab: bases outside [1, N+1]");
  if (e_b < 0.0 || e_b > (n_dim - 1.0) / n_dim)
    throw std::invalid_argument("rate_ab: error rate outside [0, (N-1)/N]");
  const ClonerAsymmetry asym = cloner_at_error(n_dim, e_b);
  const double rate = (i_ab_cloner(asym) - i_ae_cloner(asym)) / n_bases;
  return {n_dim, n_bases, e_b, rate};
}

ThresholdResult incoherent_threshold(int n_dim) {
  if (n_dim < 2) throw std::invalid_argument("incoherent_threshold: dim < 2");
  return bisect(n_dim, ThresholdKind::kIncoherent, [n_dim](double e) {
    const ClonerAsymmetry asym = cloner_at_error(n_dim, e);
    return i_ab_cloner(asym) - i_ae_cloner(asym);
  });
}

ThresholdResult coherent_threshold(int n_dim) {
  if (n_dim < 2) throw std::invalid_argument("coherent_threshold: dim < 2");
  const double half_log = 0.5 * std::log2(static_cast<double>(n_dim));
  return bisect(n_dim, ThresholdKind::kCoherent, [n_dim, half_log](double e) {
    return i_ab_symmetric({n_dim, e}) - half_log;
  });
}

double hall_sum_bound(int n_dim, int n_symbols) {
  if (n_dim < 2) throw std::invalid_argument("hall_sum_bound: dim < 2");
  if (n_symbols < 1) throw std::invalid_argument("hall_sum_bound: n < 1");
  return n_symbols * std::log2(static_cast<double>(n_dim));
}

}  // namespace qkdsec
