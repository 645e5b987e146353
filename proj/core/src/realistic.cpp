#include "qkdsec/realistic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qkdsec {
namespace {

void check(const LinkParams& lp) {
  if (lp.mu < 0.0 || lp.eta_d < 0.0 || lp.alpha_db_per_km < 0.0 ||
      lp.length_km < 0.0 || lp.p_dark < 0.0)
    throw std::invalid_argument("link: negative parameter");
  if (lp.eta_d > 1.0) throw std::invalid_argument("link: eta_D > 1");
  if (lp.dim < 2) throw std::invalid_argument("link: dim < 2");
  if (lp.bases < 1 || lp.bases > lp.dim + 1)
    throw std::invalid_argument("link: bases outside [1, N+1]");
}

}  // namespace

double transmittance(const LinkParams& lp) {
  check(lp);
  return std::pow(10.0, -lp.alpha_db_per_km * lp.length_km / 10.0);
}

double p_correct(const LinkParams& lp) {
  return lp.mu * lp.eta_d * transmittance(lp) / lp.bases;
}

double p_incorrect(const LinkParams& lp) {
  check(lp);
  return lp.p_dark * (lp.dim - 1) / lp.bases;
}

double qber(const LinkParams& lp, QberMode mode) {
  // the 1/M factors cancel analytically, so M never enters the arithmetic
  const double corr = lp.mu * lp.eta_d * transmittance(lp);
  const double inc = lp.p_dark * (lp.dim - 1);
  if (corr <= 0.0) throw std::domain_error("qber: dead link (p_correct = 0)");
  return mode == QberMode::kApprox ? inc / corr : inc / (inc + corr);
}

std::vector<DistancePoint> rate_vs_distance(const LinkParams& lp,
                                            const std::vector<double>& grid_km,
                                            QberMode mode) {
  check(lp);
  if (!std::is_sorted(grid_km.begin(), grid_km.end()))
    throw std::invalid_argument("rate_vs_distance: grid not ascending");
  const double e_cap = (lp.dim - 1.0) / lp.dim;
  std::vector<DistancePoint> out;
  out.reserve(grid_km.size());
  for (double l : grid_km) {
    LinkParams at = lp;
    at.length_km = l;
    const double q = qber(at, mode);
    const double e_b = std::min(q, e_cap);
    out.push_back({l, q, rate_ab(lp.dim, lp.bases, e_b).rate_bits});
  }
  return out;
}

MaxDistance max_distance(const LinkParams& lp, ThresholdKind kind) {
  check(lp);
  const double e_max = (kind == ThresholdKind::kIncoherent
                            ? incoherent_threshold(lp.dim)
                            : coherent_threshold(lp.dim))
                           .e_max;
  if (lp.mu <= 0.0 || lp.eta_d <= 0.0)
    throw std::domain_error("max_distance: dead link");
  if (lp.p_dark <= 0.0) return {MaxDistance::Kind::kUnbounded, 0.0};
  const double qber0 = lp.p_dark * (lp.dim - 1) / (lp.mu * lp.eta_d);
  if (qber0 >= e_max) return {MaxDistance::Kind::kNoSecureDistance, 0.0};
  if (lp.alpha_db_per_km <= 0.0) return {MaxDistance::Kind::kUnbounded, 0.0};
  const double l = 10.0 / lp.alpha_db_per_km * std::log10(e_max / qber0);
  return {MaxDistance::Kind::kFinite, l};
}

}  // namespace qkdsec
