#include "qkdsec/sim.hpp"

#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "qkdsec/mub.hpp"

namespace qkdsec {

std::uint64_t uniform_index(std::mt19937_64& gen, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("uniform_index: n = 0");
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t u;
  do {
    u = gen();
  } while (u >= limit);
  return u % n;
}

double uniform_unit(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

namespace {

void check_config(const ProtocolConfig& cfg) {
  if (!is_supported_dimension(cfg.dim))
    throw std::invalid_argument("run_protocol: unsupported dimension");
  if (cfg.bases < 1 || cfg.bases > cfg.dim + 1)
    throw std::invalid_argument("run_protocol: bases outside [1, N+1]");
  if (cfg.n_symbols < 1)
    throw std::invalid_argument("run_protocol: no symbols");
  if (const auto* c = std::get_if<Cloner>(&cfg.attack))
    if (c->asym.dim != cfg.dim)
      throw std::invalid_argument(
          "run_protocol: cloner was built for a different dimension");
}

struct Tally {
  std::uint64_t sifted = 0;
  std::uint64_t errors = 0;
  std::vector<std::uint64_t> ab;   // N x N
  std::vector<std::uint64_t> ae;   // N x |Eve alphabet|
  std::size_t ny_eve = 0;
};

}  // namespace

TranscriptStats run_protocol(const ProtocolConfig& cfg,
                             std::ostream* transcript_csv) {
  check_config(cfg);
  const int n = cfg.dim;
  const auto nn = static_cast<std::size_t>(n);
  const int m_bases = cfg.bases;

  const bool is_ir = std::holds_alternative<InterceptResend>(cfg.attack);
  const bool is_cloner = std::holds_alternative<Cloner>(cfg.attack);

  Tally tally;
  tally.ab.assign(nn * nn, 0);
  tally.ny_eve = is_ir ? 2 * nn : (is_cloner ? nn * nn : 0);
  tally.ae.assign(nn * tally.ny_eve, 0);

  EveJointProbs law{};
  if (is_cloner) law = eve_joint_probs(std::get<Cloner>(cfg.attack).asym);

  if (transcript_csv)
    *transcript_csv << "symbol_index,alice_basis,alice_symbol,bob_basis,"
                       "bob_symbol,eve_symbol,sifted\n";

  std::mt19937_64 gen(cfg.seed);
  for (std::uint64_t i = 0; i < cfg.n_symbols; ++i) {
    const auto a_basis = static_cast<int>(uniform_index(gen, m_bases));
    const auto a_sym = static_cast<int>(uniform_index(gen, n));
    const auto b_basis = static_cast<int>(uniform_index(gen, m_bases));
    const bool sifted = a_basis == b_basis;

    int b_sym = -1;
    int eve_record = -1;  // Eve's symbol guess, for the transcript
    std::size_t eve_outcome = 0;  // composite index into the AE joint
    bool eve_present = false;

    if (is_ir) {
      const auto e_basis = static_cast<int>(uniform_index(gen, m_bases));
      const bool e_match = e_basis == a_basis;
      const int e_sym =
          e_match ? a_sym : static_cast<int>(uniform_index(gen, n));
      b_sym = b_basis == e_basis ? e_sym
                                 : static_cast<int>(uniform_index(gen, n));
      eve_record = e_sym;
      eve_outcome = (e_match ? 0 : nn) + static_cast<std::size_t>(e_sym);
      eve_present = true;
    } else if (is_cloner) {
      if (sifted) {
        // class probabilities, cumulative: no-shift right, no-shift wrong,
        // shifted (Eve right, Bob off by the shift)
        const double u = uniform_unit(gen);
        int shift = 0;
        int e_sym;
        if (u < law.m0_correct) {
          e_sym = a_sym;
        } else if (u < law.m0_correct + (n - 1) * law.m0_other) {
          const auto off = static_cast<int>(uniform_index(gen, n - 1));
          e_sym = (a_sym + 1 + off) % n;
        } else {
          shift = 1 + static_cast<int>(uniform_index(gen, n - 1));
          e_sym = a_sym;
        }
        b_sym = (a_sym + shift) % n;
        eve_record = e_sym;
        eve_outcome = static_cast<std::size_t>(e_sym) * nn +
                      static_cast<std::size_t>(shift);
        eve_present = true;
      } else {
        b_sym = static_cast<int>(uniform_index(gen, n));
      }
    } else {
      b_sym = sifted ? a_sym : static_cast<int>(uniform_index(gen, n));
    }

    if (sifted) {
      ++tally.sifted;
      if (b_sym != a_sym) ++tally.errors;
      ++tally.ab[static_cast<std::size_t>(a_sym) * nn + b_sym];
      if (eve_present)
        ++tally.ae[static_cast<std::size_t>(a_sym) * tally.ny_eve +
                   eve_outcome];
    }

    if (transcript_csv)
      *transcript_csv << i << ',' << a_basis << ',' << a_sym << ',' << b_basis
                      << ',' << b_sym << ',' << eve_record << ','
                      << (sifted ? 1 : 0) << '\n';
  }

  TranscriptStats stats;
  stats.n_sifted = tally.sifted;
  stats.n_errors = tally.errors;
  stats.e_hat = tally.sifted == 0
                    ? 0.0
                    : static_cast<double>(tally.errors) / tally.sifted;
  stats.has_eve = is_ir || is_cloner;
  if (tally.sifted > 0) {
    stats.joint_ab = JointDistribution(nn, nn);
    for (std::size_t x = 0; x < nn; ++x)
      for (std::size_t y = 0; y < nn; ++y)
        stats.joint_ab.at(x, y) =
            static_cast<double>(tally.ab[x * nn + y]) / tally.sifted;
    if (stats.has_eve) {
      stats.joint_ae = JointDistribution(nn, tally.ny_eve);
      for (std::size_t x = 0; x < nn; ++x)
        for (std::size_t y = 0; y < tally.ny_eve; ++y)
          stats.joint_ae.at(x, y) =
              static_cast<double>(tally.ae[x * tally.ny_eve + y]) /
              tally.sifted;
    }
    const EmpiricalInformation mi = empirical_mutual_information(stats);
    stats.i_ab_hat = mi.i_ab_bits;
    stats.i_ae_hat = mi.i_ae_bits;
  }
  return stats;
}

EmpiricalInformation empirical_mutual_information(
    const TranscriptStats& stats) {
  if (stats.n_sifted == 0)
    throw std::domain_error("empirical_mutual_information: empty transcript");
  const auto estimate = [](const JointDistribution& joint) {
    return std::log2(static_cast<double>(joint.nx)) -
           a_posteriori_entropy(joint);
  };
  EmpiricalInformation out{};
  out.i_ab_bits = estimate(stats.joint_ab);
  out.i_ae_bits = stats.has_eve ? estimate(stats.joint_ae) : 0.0;
  return out;
}

}  // namespace qkdsec
