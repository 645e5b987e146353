// Security thresholds and the effective secret-key rate. The rate charges
// the sifting factor 1/M and the cloner-attack information leakage against
// the channel information; a key is extractable while the rate is positive.
#pragma once

namespace qkdsec {

enum class ThresholdKind { kIncoherent, kCoherent };

struct ThresholdResult {
  int dim;
  double e_max;        // Bob's maximum tolerable sifted error rate
  ThresholdKind kind;
  double residual;     // value of the defining equation at e_max
};

struct RatePoint {
  int dim;
  int bases;
  double e_b;
  double rate_bits;  // (1/M)(I_AB - I_AE), bits per transmitted symbol
};

// Effective rate at Bob's error rate e_b, with the leakage I_AE evaluated on
// the cloner that produces exactly that error rate (beta^2 = N e / (N-1)).
RatePoint rate_ab(int n_dim, int n_bases, double e_b);

// Error rate where I_AB equals the cloner I_AE: the zero of rate_ab in e.
// Deterministic bisection, |residual| <= 1e-12 (bits).
ThresholdResult incoherent_threshold(int n_dim);

// Root of (1-e) log2(1-e) + e log2(e/(N-1)) = -log2(N)/2, i.e. the error
// rate where I_AB drops to half of log2(N).
ThresholdResult coherent_threshold(int n_dim);

// n * log2(N): cap on I_AB + I_AE over an n-symbol sifted block.
double hall_sum_bound(int n_dim, int n_symbols);

}  // namespace qkdsec
