// Dark-count-limited link model: detection probabilities, the resulting
// symbol error rate, and the maximum distance at which the key rate stays
// positive. Channel attenuation is specified in dB/km, so the transmittance
// is 10^(-alpha_dB * L / 10).
#pragma once

#include <vector>

#include "qkdsec/security.hpp"

namespace qkdsec {

struct LinkParams {
  double mu = 0.1;               // mean photon number per symbol
  double eta_d = 0.2;            // detector quantum efficiency
  double alpha_db_per_km = 0.2;  // channel attenuation
  double length_km = 0.0;        // transmission length
  double p_dark = 1e-5;          // dark-count probability per detector per gate
  int dim = 2;                   // N
  int bases = 3;                 // M
};

enum class QberMode {
  kApprox,  // P_incorrect / P_correct
  kExact,   // P_incorrect / (P_incorrect + P_correct)
};

double transmittance(const LinkParams& lp);

// mu * eta_D * T(L) / M
double p_correct(const LinkParams& lp);

// P_dark * (N-1) / M
double p_incorrect(const LinkParams& lp);

// Throws std::domain_error on a dead link (p_correct = 0). Independent of M
// in either mode (the 1/M factors cancel).
double qber(const LinkParams& lp, QberMode mode = QberMode::kApprox);

struct DistancePoint {
  double length_km;
  double qber;
  double rate_bits;  // rate_ab at the (clamped) error rate
};

// Evaluates the curve over an ascending grid of distances; the error rate is
// clamped to (N-1)/N before the rate evaluation.
std::vector<DistancePoint> rate_vs_distance(const LinkParams& lp,
                                            const std::vector<double>& grid_km,
                                            QberMode mode = QberMode::kApprox);

struct MaxDistance {
  enum class Kind {
    kFinite,            // length_km holds the crossing
    kUnbounded,         // the QBER never reaches the threshold
    kNoSecureDistance,  // already above threshold at L = 0
  };
  Kind kind;
  double length_km;  // meaningful only for kFinite
};

// Distance at which the (approximate) QBER reaches the security threshold:
// L = (10 / alpha_dB) log10(mu eta e_max / (P_dark (N-1))).
MaxDistance max_distance(const LinkParams& lp,
                         ThresholdKind kind = ThresholdKind::kIncoherent);

}  // namespace qkdsec
