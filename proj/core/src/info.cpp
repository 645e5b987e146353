#include "qkdsec/info.hpp"

#include <cmath>
#include <stdexcept>

namespace qkdsec {
namespace {

void validate(const DiscreteDistribution& d) {
  if (d.probs.empty())
    throw std::invalid_argument("distribution: empty");
  double sum = 0.0;
  for (double p : d.probs) {
    if (p < 0.0) throw std::invalid_argument("distribution: negative entry");
    sum += p;
  }
  if (std::abs(sum - 1.0) > kDistributionTol)
    throw std::invalid_argument("distribution: does not sum to 1");
}

void validate(const JointDistribution& joint) {
  if (joint.nx == 0 || joint.ny == 0 ||
      joint.probs.size() != joint.nx * joint.ny)
    throw std::invalid_argument("joint distribution: bad shape");
  double sum = 0.0;
  for (double p : joint.probs) {
    if (p < 0.0)
      throw std::invalid_argument("joint distribution: negative entry");
    sum += p;
  }
  if (std::abs(sum - 1.0) > kDistributionTol)
    throw std::invalid_argument("joint distribution: does not sum to 1");
}

}  // namespace

DiscreteDistribution JointDistribution::marginal_x() const {
  DiscreteDistribution d{std::vector<double>(nx, 0.0)};
  for (std::size_t x = 0; x < nx; ++x)
    for (std::size_t y = 0; y < ny; ++y) d.probs[x] += at(x, y);
  return d;
}

DiscreteDistribution JointDistribution::marginal_y() const {
  DiscreteDistribution d{std::vector<double>(ny, 0.0)};
  for (std::size_t x = 0; x < nx; ++x)
    for (std::size_t y = 0; y < ny; ++y) d.probs[y] += at(x, y);
  return d;
}

JointDistribution JointDistribution::transposed() const {
  JointDistribution t(ny, nx);
  for (std::size_t x = 0; x < nx; ++x)
    for (std::size_t y = 0; y < ny; ++y) t.at(y, x) = at(x, y);
  return t;
}

double xlog2(double x) { return x <= 0.0 ? 0.0 : x * std::log2(x); }

double shannon_entropy(const DiscreteDistribution& d) {
  validate(d);
  double h = 0.0;
  for (double p : d.probs) h -= xlog2(p);
  return h;
}

DiscreteDistribution bayes_posterior(const JointDistribution& joint,
                                     std::size_t y) {
  validate(joint);
  if (y >= joint.ny)
    throw std::invalid_argument("bayes_posterior: outcome index out of range");
  double py = 0.0;
  for (std::size_t x = 0; x < joint.nx; ++x) py += joint.at(x, y);
  if (py <= 0.0)
    throw std::domain_error("bayes_posterior: outcome has zero marginal");
  DiscreteDistribution post{std::vector<double>(joint.nx)};
  for (std::size_t x = 0; x < joint.nx; ++x) post.probs[x] = joint.at(x, y) / py;
  return post;
}

double a_posteriori_entropy(const JointDistribution& joint) {
  validate(joint);
  double h_apost = 0.0;
  for (std::size_t y = 0; y < joint.ny; ++y) {
    double py = 0.0;
    for (std::size_t x = 0; x < joint.nx; ++x) py += joint.at(x, y);
    if (py <= 0.0) continue;
    double h = 0.0;
    for (std::size_t x = 0; x < joint.nx; ++x) h -= xlog2(joint.at(x, y) / py);
    h_apost += py * h;
  }
  return h_apost;
}

double mutual_information(const JointDistribution& joint) {
  validate(joint);
  const DiscreteDistribution px = joint.marginal_x();
  double h_apri = 0.0;
  for (double p : px.probs) h_apri -= xlog2(p);
  return h_apri - a_posteriori_entropy(joint);
}

double i_ab_symmetric(SymmetricChannelPoint pt) {
  if (pt.dim < 2) throw std::invalid_argument("i_ab_symmetric: dim < 2");
  if (pt.error_rate < 0.0 || pt.error_rate > 1.0)
    throw std::invalid_argument("i_ab_symmetric: error rate outside [0, 1]");
  const double e = pt.error_rate;
  return std::log2(static_cast<double>(pt.dim)) + xlog2(1.0 - e) +
         (e <= 0.0 ? 0.0 : e * std::log2(e / (pt.dim - 1)));
}

JointDistribution symmetric_channel_joint(SymmetricChannelPoint pt) {
  if (pt.dim < 2) throw std::invalid_argument("symmetric_channel_joint: dim < 2");
  const auto n = static_cast<std::size_t>(pt.dim);
  const double e = pt.error_rate;
  JointDistribution joint(n, n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      joint.at(x, y) = (x == y ? 1.0 - e : e / (pt.dim - 1)) / pt.dim;
  return joint;
}

}  // namespace qkdsec
