// Shannon information on finite alphabets: entropies, Bayes posteriors,
// mutual information of a joint distribution, and the closed form for the
// N-ary symmetric channel. Every logarithm here is base 2 (bits) and
// 0*log2(0) is 0 by continuity.
#pragma once

#include <vector>

namespace qkdsec {

inline constexpr double kDistributionTol = 1e-9;

struct DiscreteDistribution {
  std::vector<double> probs;

  std::size_t size() const { return probs.size(); }
};

// p(x, y) over X sender symbols by Y receiver outcomes, row-major.
struct JointDistribution {
  std::size_t nx = 0, ny = 0;
  std::vector<double> probs;

  JointDistribution() = default;
  JointDistribution(std::size_t x, std::size_t y)
      : nx(x), ny(y), probs(x * y, 0.0) {}

  double& at(std::size_t x, std::size_t y) { return probs[x * ny + y]; }
  double at(std::size_t x, std::size_t y) const { return probs[x * ny + y]; }

  DiscreteDistribution marginal_x() const;
  DiscreteDistribution marginal_y() const;
  JointDistribution transposed() const;
};

struct SymmetricChannelPoint {
  int dim;           // N >= 2
  double error_rate; // in [0, 1]
};

// x*log2(x) with the 0*log 0 = 0 convention.
double xlog2(double x);

// -sum p log2 p. Throws std::invalid_argument on invalid distributions.
double shannon_entropy(const DiscreteDistribution& d);

// p(x | y) for a fixed outcome y. Throws std::domain_error when the marginal
// p(y) vanishes (the conditional is undefined, never silently NaN).
DiscreteDistribution bayes_posterior(const JointDistribution& joint,
                                     std::size_t y);

// sum_y p(y) H(X|Y=y); outcomes with p(y) = 0 contribute nothing.
double a_posteriori_entropy(const JointDistribution& joint);

// I(X:Y) = H(X) - sum_y p(y) H(X|Y=y).
double mutual_information(const JointDistribution& joint);

// log2(N) + (1-e) log2(1-e) + e log2(e / (N-1)): the mutual information of
// the uniform-input N-ary symmetric channel with total error rate e.
double i_ab_symmetric(SymmetricChannelPoint pt);

// The joint distribution realizing i_ab_symmetric: uniform input, correct
// with probability 1-e, each of the N-1 wrong symbols with e/(N-1).
JointDistribution symmetric_channel_joint(SymmetricChannelPoint pt);

}  // namespace qkdsec
