// Seeded Monte Carlo run of the full prepare/transmit/measure/sift protocol
// under each attack model. Outcomes are drawn from the per-symbol laws the
// closed forms predict (the state-vector route is covered separately by the
// attacks oracle), so multi-million-symbol runs stay cheap.
//
// Reproducibility contract: the generator is std::mt19937_64 seeded with
// ProtocolConfig::seed, consumed only through uniform_index / uniform_unit
// below. Per symbol the draw order is fixed:
//   1. Alice basis          uniform_index(M)
//   2. Alice symbol         uniform_index(N)
//   3. Bob basis            uniform_index(M)
//   4. attack-dependent outcome draws, in the order documented at
//      run_protocol. Identical configs give bit-identical transcripts on any
//      conforming platform.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <random>

#include "qkdsec/attacks.hpp"
#include "qkdsec/info.hpp"

namespace qkdsec {

// Uniform draw from {0, ..., n-1} by rejection on the raw 64-bit stream;
// unbiased and independent of std::uniform_int_distribution quirks.
std::uint64_t uniform_index(std::mt19937_64& gen, std::uint64_t n);

// 53-bit uniform double in [0, 1).
double uniform_unit(std::mt19937_64& gen);

struct ProtocolConfig {
  int dim = 2;
  int bases = 3;
  std::uint64_t n_symbols = 100000;
  AttackModel attack = NoAttack{};
  std::uint64_t seed = 0;
};

struct TranscriptStats {
  std::uint64_t n_sifted = 0;
  std::uint64_t n_errors = 0;
  double e_hat = 0.0;
  // Sifted-symbol empirical joints. Alice x Bob is N x N. Alice x Eve uses
  // Eve's full sifted record: under intercept-resend her symbol plus the
  // basis-match flag (2N outcomes, matched first), under the cloner her
  // symbol plus the inferred shift m (N^2 outcomes, index guess*N + m).
  JointDistribution joint_ab;
  JointDistribution joint_ae;
  bool has_eve = false;
  double i_ab_hat = 0.0;
  double i_ae_hat = 0.0;
};

// Information estimates from the empirical joints. The a-priori entropy is
// the protocol's exact log2(N) (Alice draws uniformly by design); only the
// a-posteriori entropy is the plug-in value, so a diagonal empirical joint
// gives exactly log2(N). Biased upward by about (|X|-1)(|Y|-1) / (2 n ln 2)
// bits, which the comparison tolerances absorb. Throws std::domain_error on
// an empty (zero-sifted) transcript.
struct EmpiricalInformation {
  double i_ab_bits;
  double i_ae_bits;
};
EmpiricalInformation empirical_mutual_information(const TranscriptStats& stats);

// Runs the protocol. Attack-dependent draws per symbol:
//   NoAttack:        Bob outcome = Alice symbol when bases match; otherwise
//                    one uniform_index(N) draw.
//   InterceptResend: Eve basis uniform_index(M); her outcome = Alice symbol
//                    when her basis matches Alice's, else uniform_index(N);
//                    Bob outcome = Eve's symbol when his basis matches hers,
//                    else uniform_index(N).
//   Cloner:          only sifted symbols are resolved: one uniform_unit for
//                    the outcome class (no shift + Eve right; no shift + Eve
//                    wrong; shift + Eve right), then uniform_index(N-1) for
//                    the wrong value or the shift when the class needs one.
//                    Unsifted symbols cost one uniform_index(N) draw for Bob
//                    and leave Eve's record empty.
// When transcript_csv is non-null every symbol is streamed as a CSV row
// symbol_index,alice_basis,alice_symbol,bob_basis,bob_symbol,eve_symbol,sifted
// with eve_symbol = -1 when Eve holds no record for that symbol.
TranscriptStats run_protocol(const ProtocolConfig& cfg,
                             std::ostream* transcript_csv = nullptr);

}  // namespace qkdsec
