#include "qkdsec/attacks.hpp"

#include <cmath>
#include <stdexcept>

#include "qkdsec/info.hpp"

namespace qkdsec {
namespace {

void check_asym(const ClonerAsymmetry& asym) {
  if (asym.dim < 2) throw std::invalid_argument("cloner: dim < 2");
  if (asym.alpha < 0.0 || asym.beta < 0.0)
    throw std::invalid_argument("cloner: negative amplitude");
  const double norm = asym.alpha * asym.alpha +
                      2.0 / asym.dim * asym.alpha * asym.beta +
                      asym.beta * asym.beta;
  if (std::abs(norm - 1.0) > 1e-12)
    throw std::invalid_argument("cloner: normalization violated");
}

// p * log2(num/den), zero when p is zero.
double plog2(double p, double num, double den) {
  return p <= 0.0 ? 0.0 : p * std::log2(num / den);
}

}  // namespace

ClonerAsymmetry ClonerAsymmetry::symmetric(int n_dim) {
  if (n_dim < 2) throw std::invalid_argument("cloner: dim < 2");
  const double v = std::sqrt(n_dim / (2.0 * (n_dim + 1)));
  return {v, v, n_dim};
}

ClonerAsymmetry cloner_from_beta(double beta, int n_dim) {
  if (n_dim < 2) throw std::invalid_argument("cloner: dim < 2");
  if (beta < 0.0 || beta > 1.0)
    throw std::invalid_argument("cloner: beta outside [0, 1]");
  const double alpha =
      -beta / n_dim +
      std::sqrt(beta * beta / (static_cast<double>(n_dim) * n_dim) + 1.0 -
                beta * beta);
  // rounding can push the beta = 1 endpoint a few ulp below zero
  return {std::max(alpha, 0.0), beta, n_dim};
}

AttackStats intercept_resend_stats(int n_dim, int n_bases) {
  if (n_dim < 2) throw std::invalid_argument("intercept_resend: dim < 2");
  if (n_bases < 1 || n_bases > n_dim + 1)
    throw std::invalid_argument("intercept_resend: bases outside [1, N+1]");
  const double e = (1.0 - 1.0 / n_bases) * (1.0 - 1.0 / n_dim);
  AttackStats s{};
  s.e_b = e;
  s.f_bob = 1.0 - e;
  s.f_eve = 1.0 - e;
  s.i_ab_bits = i_ab_symmetric({n_dim, e});
  s.i_ae_bits = std::log2(static_cast<double>(n_dim)) / n_bases;
  return s;
}

Fidelities fidelities(const ClonerAsymmetry& asym) {
  check_asym(asym);
  const double n = asym.dim;
  return {1.0 - (n - 1.0) * asym.beta * asym.beta / n,
          1.0 - (n - 1.0) * asym.alpha * asym.alpha / n};
}

EveJointProbs eve_joint_probs(const ClonerAsymmetry& asym) {
  check_asym(asym);
  const double n = asym.dim;
  const double ab = asym.alpha + asym.beta;
  return {ab * ab / n, asym.alpha * asym.alpha / n, asym.beta * asym.beta / n};
}

double i_ab_cloner(const ClonerAsymmetry& asym) {
  return i_ab_symmetric({asym.dim, 1.0 - fidelities(asym).bob});
}

double i_ae_cloner(const ClonerAsymmetry& asym) {
  const auto [fb, fe] = fidelities(asym);
  const double n = asym.dim;
  return std::log2(n) + plog2(fb + fe - 1.0, fb + fe - 1.0, fb) +
         plog2(1.0 - fe, 1.0 - fe, (n - 1.0) * fb);
}

double i_ae_cloner_amplitude_form(const ClonerAsymmetry& asym) {
  check_asym(asym);
  const double n = asym.dim;
  const double fb = fidelities(asym).bob;
  const double ab2 = (asym.alpha + asym.beta) * (asym.alpha + asym.beta);
  const double a2 = asym.alpha * asym.alpha;
  return std::log2(n) + plog2(ab2 / n, ab2, n * fb) +
         plog2((n - 1.0) / n * a2, a2, n * fb);
}

CVector cloner_output_state(int k, const ClonerAsymmetry& asym) {
  check_asym(asym);
  const int n = asym.dim;
  if (k < 0 || k >= n)
    throw std::invalid_argument("cloner_output_state: symbol out of range");
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  CVector amp(static_cast<std::size_t>(n) * n * n);
  // alpha term: Bob exact, Eve and machine perfectly correlated.
  for (int l = 0; l < n; ++l)
    amp[(k * n + l) * n + l] += asym.alpha * scale;
  // beta terms: shift m on Bob and machine, Eve pinned to k.
  for (int m = 0; m < n; ++m) {
    const int b = (k + m) % n;
    amp[(b * n + k) * n + b] += asym.beta * scale;
  }
  return amp;
}

AttackStats oracle_stats(const ClonerAsymmetry& asym) {
  check_asym(asym);
  const int n = asym.dim;
  if (n > kOracleDimCap)
    throw std::invalid_argument("oracle_stats: dimension above cap");

  const auto nn = static_cast<std::size_t>(n);
  double f_bob = 0.0, f_eve = 0.0;
  JointDistribution joint_ab(nn, nn);       // (Alice k, Bob outcome)
  JointDistribution joint_ae(nn, nn * nn);  // (Alice k, Eve (e, m-slot) outcome)
  for (int k = 0; k < n; ++k) {
    const CVector amp = cloner_output_state(k, asym);
    // rho_B = Tr_EM |out><out|; only the diagonal feeds the statistics, but
    // build the full matrix as the definition dictates.
    CMatrix rho_b(nn, nn);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        cplx s = 0.0;
        for (int e = 0; e < n; ++e)
          for (int m = 0; m < n; ++m)
            s += amp[(i * n + e) * n + m] * std::conj(amp[(j * n + e) * n + m]);
        rho_b(i, j) = s;
      }
    f_bob += rho_b(k, k).real() / n;
    // rho_E diagonal element at k.
    double pk = 0.0;
    for (int b = 0; b < n; ++b)
      for (int m = 0; m < n; ++m) pk += std::norm(amp[(b * n + k) * n + m]);
    f_eve += pk / n;
    // projections onto computational outcomes of B / of (E, M).
    for (int b = 0; b < n; ++b)
      for (int e = 0; e < n; ++e)
        for (int m = 0; m < n; ++m) {
          const double p = std::norm(amp[(b * n + e) * n + m]) / n;
          joint_ab.at(k, b) += p;
          joint_ae.at(k, e * nn + m) += p;
        }
  }

  AttackStats s{};
  s.f_bob = f_bob;
  s.f_eve = f_eve;
  s.e_b = 1.0 - f_bob;
  s.i_ab_bits = mutual_information(joint_ab);
  s.i_ae_bits = mutual_information(joint_ae);
  return s;
}

EveJointProbs oracle_eve_joint_probs(const ClonerAsymmetry& asym) {
  check_asym(asym);
  const int n = asym.dim;
  if (n > kOracleDimCap)
    throw std::invalid_argument("oracle_eve_joint_probs: dimension above cap");

  // p(e, m-slot) = sum_b |amp|^2, averaged over k after classifying the
  // outcome relative to k: coincident-and-right, coincident-and-wrong, or
  // shifted (per-outcome probability in each class).
  double m0_correct = 0.0, m0_other = 0.0, mneq0_correct = 0.0;
  for (int k = 0; k < n; ++k) {
    const CVector amp = cloner_output_state(k, asym);
    for (int e = 0; e < n; ++e)
      for (int m = 0; m < n; ++m) {
        double p = 0.0;
        for (int b = 0; b < n; ++b) p += std::norm(amp[(b * n + e) * n + m]);
        if (e == m) {
          (e == k ? m0_correct : m0_other) += p;
        } else if (e == k) {
          mneq0_correct += p;
        }
        // e != m with e != k has zero amplitude; fold nothing.
      }
  }
  return {m0_correct / n, m0_other / (n * (n - 1.0)),
          mneq0_correct / (n * (n - 1.0))};
}

}  // namespace qkdsec
