#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "qkdsec/realistic.hpp"

using namespace qkdsec;

namespace {

LinkParams defaults(int n) {
  LinkParams lp;
  lp.dim = n;
  lp.bases = n + 1;
  return lp;  // mu=0.1, eta=0.2, alpha=0.2 dB/km, p_dark=1e-5
}

// independent root of the key-rate zero along the distance axis
double bisect_rate_zero(const LinkParams& lp) {
  double lo = 0.0, hi = 1000.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    LinkParams at = lp;
    at.length_km = mid;
    const double rate = rate_vs_distance(at, {mid}).front().rate_bits;
    (rate > 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("detection probabilities") {
  LinkParams lp = defaults(2);
  CHECK(p_correct(lp) == doctest::Approx(0.1 * 0.2 / 3.0).epsilon(1e-12));
  CHECK(p_incorrect(lp) == doctest::Approx(1e-5 / 3.0).epsilon(1e-12));

  lp.mu = 0.0;
  CHECK(p_correct(lp) == 0.0);
  lp.mu = 0.1;
  lp.p_dark = 0.0;
  CHECK(p_incorrect(lp) == 0.0);

  SUBCASE("50 km is exactly one order of magnitude at 0.2 dB/km") {
    LinkParams base = defaults(2);
    LinkParams far = base;
    far.length_km = 50.0;
    CHECK(p_correct(base) / p_correct(far) == doctest::Approx(10.0).epsilon(1e-12));
  }
  SUBCASE("(n-1) scaling of dark counts") {
    LinkParams n2 = defaults(2);
    LinkParams n4 = defaults(2);
    n4.dim = 4;  // hold M fixed at 3
    CHECK(p_incorrect(n4) / p_incorrect(n2) == doctest::Approx(3.0).epsilon(1e-12));
  }
  SUBCASE("validation") {
    LinkParams bad = defaults(2);
    bad.eta_d = 1.5;
    CHECK_THROWS_AS(p_correct(bad), std::invalid_argument);
    bad = defaults(2);
    bad.mu = -0.1;
    CHECK_THROWS_AS(p_correct(bad), std::invalid_argument);
    bad = defaults(2);
    bad.bases = 4;
    CHECK_THROWS_AS(p_correct(bad), std::invalid_argument);
  }
}

TEST_CASE("qber") {
  LinkParams lp = defaults(2);
  SUBCASE("reference point at l = 0") {
    CHECK(qber(lp) == doctest::Approx(5.0e-4).epsilon(1e-12));
    lp.length_km = 50.0;
    CHECK(qber(lp) == doctest::Approx(5.0e-3).epsilon(1e-12));
  }
  SUBCASE("independent of the number of bases") {
    LinkParams m2 = lp;
    m2.bases = 2;
    CHECK(qber(lp) == qber(m2));
  }
  SUBCASE("exact cancellation: qber * p_correct == p_incorrect") {
    for (double l : {0.0, 10.0, 77.5}) {
      lp.length_km = l;
      CHECK(std::abs(qber(lp) * p_correct(lp) - p_incorrect(lp)) < 1e-15);
    }
  }
  SUBCASE("exact form is slightly smaller and consistent") {
    const double approx = qber(lp, QberMode::kApprox);
    const double exact = qber(lp, QberMode::kExact);
    CHECK(exact < approx);
    CHECK(exact == doctest::Approx(approx / (1.0 + approx)).epsilon(1e-12));
  }
  SUBCASE("dead link is an explicit error") {
    lp.mu = 0.0;
    CHECK_THROWS_AS(qber(lp), std::domain_error);
  }
}

TEST_CASE("rate_vs_distance") {
  const LinkParams lp = defaults(2);
  std::vector<double> grid;
  for (int i = 0; i <= 60; ++i) grid.push_back(i * 3.0);  // 0..180 km
  const auto curve = rate_vs_distance(lp, grid);
  REQUIRE(curve.size() == grid.size());

  SUBCASE("rate starts positive and never increases") {
    CHECK(curve.front().rate_bits > 0.0);
    for (std::size_t i = 1; i < curve.size(); ++i) {
      CHECK(curve[i].rate_bits <= curve[i - 1].rate_bits + 1e-12);
      CHECK(curve[i].qber > curve[i - 1].qber);
    }
  }
  SUBCASE("sign change brackets the max distance") {
    const MaxDistance md = max_distance(lp);
    REQUIRE(md.kind == MaxDistance::Kind::kFinite);
    for (std::size_t i = 1; i < curve.size(); ++i)
      if (curve[i].rate_bits < 0.0 && curve[i - 1].rate_bits >= 0.0) {
        CHECK(curve[i - 1].length_km <= md.length_km);
        CHECK(curve[i].length_km >= md.length_km);
      }
  }
  SUBCASE("unsorted grid rejected") {
    CHECK_THROWS_AS(rate_vs_distance(lp, {10.0, 5.0}), std::invalid_argument);
  }
}

TEST_CASE("max distance") {
  SUBCASE("golden values at the default parameters, incoherent threshold") {
    // frozen from the independent 40-digit threshold computation
    const double golden[][2] = {
        {2, 124.759653}, {3, 117.773908}, {4, 112.485234}, {8, 99.007369}};
    for (const auto&[n, km] : golden) {
      const MaxDistance md = max_distance(defaults(static_cast<int>(n)));
      REQUIRE(md.kind == MaxDistance::Kind::kFinite);
      CHECK(md.length_km == doctest::Approx(km).epsilon(1e-7));
    }
  }
  SUBCASE("closed form agrees with the rate-zero bisection to 1e-6 km") {
    for (int n : {2, 3, 4, 8}) {
      const LinkParams lp = defaults(n);
      const MaxDistance md = max_distance(lp);
      REQUIRE(md.kind == MaxDistance::Kind::kFinite);
      CHECK(std::abs(md.length_km - bisect_rate_zero(lp)) < 1e-6);
    }
  }
  SUBCASE("monotone decreasing in the dimension") {
    double prev = 1e9;
    for (int n : {2, 3, 4, 5, 7, 8, 9, 16}) {
      const MaxDistance md = max_distance(defaults(n));
      REQUIRE(md.kind == MaxDistance::Kind::kFinite);
      CHECK(md.length_km < prev);
      prev = md.length_km;
    }
  }
  SUBCASE("doubling the dark counts costs (10/alpha) log10(2) km") {
    LinkParams lp = defaults(2);
    const double before = max_distance(lp).length_km;
    lp.p_dark *= 2.0;
    const double after = max_distance(lp).length_km;
    CHECK(before - after ==
          doctest::Approx(50.0 * std::log10(2.0)).epsilon(1e-9));
  }
  SUBCASE("no dark counts means unbounded reach") {
    LinkParams lp = defaults(2);
    lp.p_dark = 0.0;
    CHECK(max_distance(lp).kind == MaxDistance::Kind::kUnbounded);
  }
  SUBCASE("hopeless link has no secure distance") {
    LinkParams lp = defaults(2);
    lp.p_dark = 0.01;  // qber(0) = 0.5 > threshold
    CHECK(max_distance(lp).kind == MaxDistance::Kind::kNoSecureDistance);
  }
  SUBCASE("coherent threshold shortens the reach") {
    const LinkParams lp = defaults(2);
    const double inc = max_distance(lp, ThresholdKind::kIncoherent).length_km;
    const double coh = max_distance(lp, ThresholdKind::kCoherent).length_km;
    CHECK(coh < inc);
  }
}
