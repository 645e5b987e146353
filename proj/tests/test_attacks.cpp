#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "qkdsec/attacks.hpp"
#include "qkdsec/info.hpp"

using namespace qkdsec;

namespace {

std::vector<double> beta_grid(int n) {
  return {0.0, 0.25, 0.5, std::sqrt(n / (2.0 * (n + 1))), 0.75, 1.0};
}

}  // namespace

TEST_CASE("intercept-resend statistics") {
  const AttackStats s22 = intercept_resend_stats(2, 2);
  CHECK(s22.e_b == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(s22.i_ae_bits == doctest::Approx(0.5).epsilon(1e-12));

  const AttackStats s23 = intercept_resend_stats(2, 3);
  CHECK(s23.e_b == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(s23.i_ae_bits == doctest::Approx(1.0 / 3.0).epsilon(1e-12));

  // M = 1: Eve always guesses the right basis
  for (int n : {2, 3, 8}) {
    const AttackStats s = intercept_resend_stats(n, 1);
    CHECK(s.e_b == 0.0);
    CHECK(s.i_ae_bits == doctest::Approx(std::log2(n)).epsilon(1e-12));
  }

  CHECK_THROWS_AS(intercept_resend_stats(2, 0), std::invalid_argument);
  CHECK_THROWS_AS(intercept_resend_stats(2, 4), std::invalid_argument);
}

TEST_CASE("cloner asymmetry from beta") {
  SUBCASE("endpoints") {
    const ClonerAsymmetry b0 = cloner_from_beta(0.0, 3);
    CHECK(b0.alpha == doctest::Approx(1.0).epsilon(1e-15));
    const ClonerAsymmetry b1 = cloner_from_beta(1.0, 3);
    CHECK(b1.alpha == doctest::Approx(0.0).epsilon(1e-15));
  }
  SUBCASE("symmetric point solves alpha = beta") {
    for (int n : {2, 3, 5, 8}) {
      const double expected = std::sqrt(n / (2.0 * (n + 1)));
      const ClonerAsymmetry s = ClonerAsymmetry::symmetric(n);
      CHECK(s.alpha == s.beta);
      CHECK(s.beta == doctest::Approx(expected).epsilon(1e-15));
      // and cloner_from_beta lands on the same alpha
      const ClonerAsymmetry viaBeta = cloner_from_beta(expected, n);
      CHECK(viaBeta.alpha == doctest::Approx(expected).epsilon(1e-12));
    }
  }
  SUBCASE("normalization closure on a 101-point grid") {
    for (int n : {2, 3, 5})
      for (int i = 0; i <= 100; ++i) {
        const ClonerAsymmetry c = cloner_from_beta(i / 100.0, n);
        const double norm =
            c.alpha * c.alpha + 2.0 / n * c.alpha * c.beta + c.beta * c.beta;
        CHECK(std::abs(norm - 1.0) < 1e-12);
        const EveJointProbs p = eve_joint_probs(c);
        const double closure =
            p.m0_correct + (n - 1) * p.m0_other + (n - 1) * p.mneq0_correct;
        CHECK(std::abs(closure - 1.0) < 1e-12);
      }
  }
  SUBCASE("validation") {
    CHECK_THROWS_AS(cloner_from_beta(-0.1, 2), std::invalid_argument);
    CHECK_THROWS_AS(cloner_from_beta(1.1, 2), std::invalid_argument);
    CHECK_THROWS_AS(cloner_from_beta(0.5, 1), std::invalid_argument);
  }
}

TEST_CASE("fidelities") {
  for (int n : {2, 3, 5, 8}) {
    CHECK(fidelities(cloner_from_beta(0.0, n)).bob == doctest::Approx(1.0));
    CHECK(fidelities(cloner_from_beta(0.0, n)).eve ==
          doctest::Approx(1.0 / n).epsilon(1e-12));
  }
  // symmetric cloner: F_B = F_E = 1 - (N-1)/(2(N+1))
  const Fidelities f2 = fidelities(ClonerAsymmetry::symmetric(2));
  CHECK(f2.bob == doctest::Approx(5.0 / 6.0).epsilon(1e-12));
  CHECK(f2.eve == doctest::Approx(5.0 / 6.0).epsilon(1e-12));
  const Fidelities f3 = fidelities(ClonerAsymmetry::symmetric(3));
  CHECK(f3.bob == doctest::Approx(0.75).epsilon(1e-12));

  SUBCASE("monotone in beta: bob falls, eve rises") {
    for (int n : {2, 3, 5}) {
      double prev_b = 2.0, prev_e = -1.0;
      for (int i = 0; i <= 50; ++i) {
        const Fidelities f = fidelities(cloner_from_beta(i / 50.0, n));
        CHECK(f.bob < prev_b);
        CHECK(f.eve > prev_e);
        CHECK(f.bob >= 1.0 / n - 1e-12);
        CHECK(f.bob <= 1.0 + 1e-12);
        CHECK(f.eve >= 1.0 / n - 1e-12);
        CHECK(f.eve <= 1.0 + 1e-12);
        prev_b = f.bob;
        prev_e = f.eve;
      }
    }
  }
}

TEST_CASE("eve joint outcome probabilities") {
  SUBCASE("beta = 0") {
    for (int n : {2, 5}) {
      const EveJointProbs p = eve_joint_probs(cloner_from_beta(0.0, n));
      CHECK(p.m0_correct == doctest::Approx(1.0 / n).epsilon(1e-12));
      CHECK(p.m0_other == doctest::Approx(1.0 / n).epsilon(1e-12));
      CHECK(p.mneq0_correct == doctest::Approx(0.0).epsilon(1e-12));
    }
  }
  SUBCASE("beta = 1") {
    for (int n : {2, 5}) {
      const EveJointProbs p = eve_joint_probs(cloner_from_beta(1.0, n));
      CHECK(p.m0_correct == doctest::Approx(1.0 / n).epsilon(1e-12));
      CHECK(p.m0_other == doctest::Approx(0.0).epsilon(1e-12));
      CHECK(p.mneq0_correct == doctest::Approx(1.0 / n).epsilon(1e-12));
    }
  }
  SUBCASE("n=2 symmetric point") {
    const EveJointProbs p = eve_joint_probs(ClonerAsymmetry::symmetric(2));
    CHECK(p.m0_correct == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(p.m0_other == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
    CHECK(p.mneq0_correct == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
  }
}

TEST_CASE("cloner informations") {
  SUBCASE("i_ab endpoints and symmetric value") {
    for (int n : {2, 3, 8}) {
      CHECK(i_ab_cloner(cloner_from_beta(0.0, n)) ==
            doctest::Approx(std::log2(n)).epsilon(1e-12));
      CHECK(i_ab_cloner(cloner_from_beta(1.0, n)) ==
            doctest::Approx(0.0).epsilon(1e-12));
    }
    // N=2 symmetric: 1 - H2(1/6)
    CHECK(i_ab_cloner(ClonerAsymmetry::symmetric(2)) ==
          doctest::Approx(0.349977578352).epsilon(1e-10));
  }
  SUBCASE("i_ae endpoints") {
    for (int n : {2, 3, 8}) {
      CHECK(i_ae_cloner(cloner_from_beta(0.0, n)) ==
            doctest::Approx(0.0).epsilon(1e-12));
      CHECK(i_ae_cloner(cloner_from_beta(1.0, n)) ==
            doctest::Approx(std::log2(n)).epsilon(1e-12));
    }
  }
  SUBCASE("i_ae at the n=2 symmetric point exceeds i_ab") {
    // Eve also reads the machine register, so at F_B = F_E her information
    // is strictly larger than Bob's: 0.398393 vs 0.349978 bits.
    const ClonerAsymmetry sym = ClonerAsymmetry::symmetric(2);
    CHECK(i_ae_cloner(sym) == doctest::Approx(0.398393254261).epsilon(1e-10));
    CHECK(i_ae_cloner(sym) > i_ab_cloner(sym));
  }
  SUBCASE("both printed i_ae forms agree on the full grid") {
    for (int n : {2, 3, 5, 8})
      for (int i = 0; i <= 100; ++i) {
        const ClonerAsymmetry c = cloner_from_beta(i / 100.0, n);
        CHECK(std::abs(i_ae_cloner(c) - i_ae_cloner_amplitude_form(c)) <
              1e-12);
      }
  }
  SUBCASE("i_ab equals the symmetric channel closed form") {
    for (int n : {2, 3, 5, 8})
      for (int i = 0; i <= 100; ++i) {
        const ClonerAsymmetry c = cloner_from_beta(i / 100.0, n);
        const double e = 1.0 - fidelities(c).bob;
        CHECK(std::abs(i_ab_cloner(c) - i_ab_symmetric({n, e})) < 1e-12);
      }
  }
  SUBCASE("informations stay inside [0, log2 n]") {
    for (int n : {2, 3, 5})
      for (int i = 0; i <= 100; ++i) {
        const ClonerAsymmetry c = cloner_from_beta(i / 100.0, n);
        for (double v : {i_ab_cloner(c), i_ae_cloner(c)}) {
          CHECK(v >= -1e-12);
          CHECK(v <= std::log2(n) + 1e-12);
        }
      }
  }
}

TEST_CASE("cloner output state") {
  SUBCASE("unit norm everywhere") {
    for (int n : {2, 3, 5})
      for (double beta : beta_grid(n))
        for (int k = 0; k < n; ++k) {
          const CVector amp = cloner_output_state(k, cloner_from_beta(beta, n));
          CHECK(std::abs(norm(amp) - 1.0) < 1e-12);
        }
  }
  SUBCASE("beta = 0 leaves bob exact with a maximally correlated ancilla") {
    const int n = 3;
    const CVector amp = cloner_output_state(1, cloner_from_beta(0.0, n));
    const double s = 1.0 / std::sqrt(3.0);
    for (int b = 0; b < n; ++b)
      for (int e = 0; e < n; ++e)
        for (int m = 0; m < n; ++m) {
          const cplx expect = (b == 1 && e == m) ? cplx(s, 0) : cplx(0, 0);
          CHECK(std::abs(amp[(b * n + e) * n + m] - expect) < 1e-12);
        }
  }
  SUBCASE("alpha = 0 pins eve to alice's symbol") {
    const int n = 2;
    const CVector amp = cloner_output_state(0, cloner_from_beta(1.0, n));
    const double s = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(amp[(0 * n + 0) * n + 0] - s) < 1e-12);  // m=0
    CHECK(std::abs(amp[(1 * n + 0) * n + 1] - s) < 1e-12);  // m=1
  }
  SUBCASE("index validation") {
    CHECK_THROWS_AS(cloner_output_state(-1, cloner_from_beta(0.5, 2)),
                    std::invalid_argument);
    CHECK_THROWS_AS(cloner_output_state(2, cloner_from_beta(0.5, 2)),
                    std::invalid_argument);
  }
}

TEST_CASE("state-vector oracle agrees with the closed forms") {
  for (int n : {2, 3, 5}) {
    CAPTURE(n);
    for (double beta : beta_grid(n)) {
      CAPTURE(beta);
      const ClonerAsymmetry c = cloner_from_beta(beta, n);
      const AttackStats o = oracle_stats(c);
      const Fidelities f = fidelities(c);
      CHECK(std::abs(o.f_bob - f.bob) < 1e-10);
      CHECK(std::abs(o.f_eve - f.eve) < 1e-10);
      CHECK(std::abs(o.e_b - (1.0 - f.bob)) < 1e-10);
      CHECK(std::abs(o.i_ab_bits - i_ab_cloner(c)) < 1e-10);
      CHECK(std::abs(o.i_ae_bits - i_ae_cloner(c)) < 1e-10);

      const EveJointProbs po = oracle_eve_joint_probs(c);
      const EveJointProbs pc = eve_joint_probs(c);
      CHECK(std::abs(po.m0_correct - pc.m0_correct) < 1e-10);
      CHECK(std::abs(po.m0_other - pc.m0_other) < 1e-10);
      CHECK(std::abs(po.mneq0_correct - pc.mneq0_correct) < 1e-10);
    }
  }
  SUBCASE("specific pinned oracle values") {
    CHECK(oracle_stats(ClonerAsymmetry::symmetric(2)).f_bob ==
          doctest::Approx(5.0 / 6.0).epsilon(1e-10));
    const AttackStats quiet = oracle_stats(cloner_from_beta(0.0, 3));
    CHECK(quiet.f_bob == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(oracle_eve_joint_probs(cloner_from_beta(0.0, 3)).m0_correct ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-10));
    const AttackStats loud = oracle_stats(cloner_from_beta(1.0, 2));
    CHECK(loud.e_b == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(loud.f_eve == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(loud.i_ae_bits == doctest::Approx(1.0).epsilon(1e-10));
  }
  SUBCASE("oracle dimension cap") {
    CHECK_THROWS_AS(oracle_stats(cloner_from_beta(0.5, 8)),
                    std::invalid_argument);
  }
}
