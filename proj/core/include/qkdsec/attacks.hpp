// Eavesdropping models on the N-dimensional protocol: intercept-resend and
// the asymmetric universal cloner, as closed forms, plus a brute-force
// state-vector oracle that re-derives the same quantities from the cloner's
// output state. The oracle is the independent verification path: it never
// touches the closed-form code below fidelity level.
#pragma once

#include <variant>

#include "qkdsec/cmatrix.hpp"

namespace qkdsec {

// (alpha, beta) of the asymmetric cloner, non-negative branch, normalized as
// alpha^2 + (2/N) alpha beta + beta^2 = 1 for the dimension it was built for.
struct ClonerAsymmetry {
  double alpha;
  double beta;
  int dim;

  // The balanced cloner: alpha = beta = sqrt(N / (2(N+1))), where Bob's and
  // Eve's copy fidelities coincide.
  static ClonerAsymmetry symmetric(int n_dim);
};

// alpha is the unique non-negative root of the normalization for this beta.
ClonerAsymmetry cloner_from_beta(double beta, int n_dim);

struct NoAttack {};
struct InterceptResend {};
struct Cloner {
  ClonerAsymmetry asym;
};

using AttackModel = std::variant<NoAttack, InterceptResend, Cloner>;

struct AttackStats {
  double e_b;        // Bob's sifted error rate
  double f_bob;      // Bob's copy fidelity
  double f_eve;      // Eve's copy fidelity
  double i_ab_bits;  // I(A:B)
  double i_ae_bits;  // I(A:E)
};

// Eve's per-symbol joint outcome law under the cloner, conditioned on
// Alice's symbol k: she sees no Bob error (m = 0) and the right k, or m = 0
// and one of the N-1 wrong values, or one of the N-1 shifts m != 0 (where
// her copy is right with certainty).
struct EveJointProbs {
  double m0_correct;     // (alpha + beta)^2 / N
  double m0_other;       // alpha^2 / N, each of N-1 values
  double mneq0_correct;  // beta^2 / N, each of N-1 shifts
};

// Intercept-resend over M of the N+1 bases: e_B = (1-1/M)(1-1/N),
// I_AE = log2(N)/M.
AttackStats intercept_resend_stats(int n_dim, int n_bases);

struct Fidelities {
  double bob;  // 1 - (N-1) beta^2 / N
  double eve;  // 1 - (N-1) alpha^2 / N
};
Fidelities fidelities(const ClonerAsymmetry& asym);

EveJointProbs eve_joint_probs(const ClonerAsymmetry& asym);

// I(A:B) for the cloner channel; equals i_ab_symmetric(N, 1 - F_B).
double i_ab_cloner(const ClonerAsymmetry& asym);

// I(A:E) averaged over Eve's two cases (m = 0 / m != 0), in the
// (F_B, F_E) form.
double i_ae_cloner(const ClonerAsymmetry& asym);

// The same quantity written directly in the amplitudes:
// log2(N) + ((a+b)^2/N) log2((a+b)^2/(N F_B)) + ((N-1)/N) a^2 log2(a^2/(N F_B)).
double i_ae_cloner_amplitude_form(const ClonerAsymmetry& asym);

// The cloner output for input symbol k as a pure state on Bob x Eve x
// Machine, length N^3, index b*N^2 + e*N + m.
CVector cloner_output_state(int k, const ClonerAsymmetry& asym);

inline constexpr int kOracleDimCap = 7;

// Brute-force verification path (N <= 7): partial-trace F_B and F_E,
// computational-basis projections for Eve's joint probabilities, and both
// informations from the resulting joints, averaged over Alice's symbol.
AttackStats oracle_stats(const ClonerAsymmetry& asym);
EveJointProbs oracle_eve_joint_probs(const ClonerAsymmetry& asym);

}  // namespace qkdsec
