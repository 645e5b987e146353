#include "qkdsec/mub.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qkdsec/galois.hpp"

namespace qkdsec {
namespace {

// Pinned moduli, coefficients low -> high.
// Odd characteristic, GF(p^k):   9: x^2+2x+2   25: x^2+4x+2   27: x^3+2x+1
// Even, GR(4,k) over Z4 (basic primitive Hensel lifts):
//   k=1: x+3   k=2: x^2+x+1   k=3: x^3+2x^2+x+3   k=4: x^4+2x^2+3x+1
std::vector<int> odd_field_modulus(int p, int k) {
  if (k == 1) return {0, 1};  // unused
  if (p == 3 && k == 2) return {2, 2, 1};
  if (p == 5 && k == 2) return {2, 4, 1};
  if (p == 3 && k == 3) return {1, 2, 0, 1};
  throw std::invalid_argument("unsupported odd prime power dimension");
}

std::vector<int> ring_modulus(int k) {
  switch (k) {
    case 1: return {3, 1};
    case 2: return {1, 1, 1};
    case 3: return {3, 1, 2, 1};
    case 4: return {1, 3, 2, 0, 1};
    default: throw std::invalid_argument("unsupported power-of-two dimension");
  }
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Enforce the phase convention: first nonzero component real and positive.
void fix_column_phases(CMatrix& m) {
  for (std::size_t c = 0; c < m.cols(); ++c) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
      const cplx z = m(r, c);
      if (std::abs(z) > 1e-9) {
        const cplx phase = std::conj(z) / std::abs(z);
        for (std::size_t rr = 0; rr < m.rows(); ++rr) m(rr, c) *= phase;
        break;
      }
    }
  }
}

// Odd characteristic: basis a, vector b, row x, entry
// q^{-1/2} * omega_p^{tr(a x^2 + b x)} with omega_p = exp(2 pi i / p).
std::vector<Basis> quadratic_bases(const PrimePowerDim& dim) {
  const galois::PrimePowerField field(dim.p, dim.k, odd_field_modulus(dim.p, dim.k));
  const int q = dim.n;
  const double scale = 1.0 / std::sqrt(static_cast<double>(q));
  std::vector<Basis> out;
  out.reserve(q);
  for (int a = 0; a < q; ++a) {
    Basis basis{CMatrix(q, q)};
    for (int b = 0; b < q; ++b) {
      for (int x = 0; x < q; ++x) {
        const int expo = field.trace(
            field.add(field.mul(a, field.mul(x, x)), field.mul(b, x)));
        const double angle = 2.0 * std::numbers::pi * expo / dim.p;
        basis.vectors(x, b) = std::polar(scale, angle);
      }
    }
    out.push_back(std::move(basis));
  }
  return out;
}

// Characteristic 2: basis a, vector b, row y, entry
// q^{-1/2} * i^{tr((a + 2b) y)} with a, b, y ranging over the Teichmuller set,
// indexed by the bit pattern of their mod-2 reduction.
std::vector<Basis> galois_ring_bases(const PrimePowerDim& dim) {
  const galois::GaloisRing4 ring(dim.k, ring_modulus(dim.k));
  const int q = dim.n;
  const double scale = 1.0 / std::sqrt(static_cast<double>(q));
  static const cplx kI4[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  std::vector<Basis> out;
  out.reserve(q);
  for (int a = 0; a < q; ++a) {
    Basis basis{CMatrix(q, q)};
    for (int b = 0; b < q; ++b) {
      const int ab = ring.add(ring.teichmuller(a), ring.twice(ring.teichmuller(b)));
      for (int y = 0; y < q; ++y) {
        const int expo = ring.trace(ring.mul(ab, ring.teichmuller(y)));
        basis.vectors(y, b) = scale * kI4[expo];
      }
    }
    out.push_back(std::move(basis));
  }
  return out;
}

}  // namespace

PrimePowerDim PrimePowerDim::of(int n) {
  if (n < 2) throw std::invalid_argument("dimension must be at least 2");
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int m = n, k = 0;
    while (m % p == 0) {
      m /= p;
      ++k;
    }
    if (m != 1)
      throw std::invalid_argument("dimension " + std::to_string(n) +
                                  " is not a prime power");
    return {n, p, k};
  }
  return {n, n, 1};  // n itself is prime
}

bool is_supported_dimension(int n, int prime_cap) {
  if (n < 2) return false;
  PrimePowerDim dim{};
  try {
    dim = PrimePowerDim::of(n);
  } catch (const std::invalid_argument&) {
    return false;
  }
  if (dim.k == 1) return dim.p <= prime_cap;
  if (dim.p == 2) return dim.k <= 4;
  return n == 9 || n == 25 || n == 27;
}

std::vector<int> supported_dimensions(int prime_cap) {
  std::vector<int> dims;
  for (int n = 2; n <= std::max(prime_cap, 27); ++n)
    if (is_supported_dimension(n, prime_cap)) dims.push_back(n);
  return dims;
}

MubFamily build_mub_family(PrimePowerDim dim, int prime_cap) {
  if (dim.n < 2 || !is_prime(dim.p)) throw std::invalid_argument("invalid dimension");
  int check = 1;
  for (int i = 0; i < dim.k; ++i) check *= dim.p;
  if (check != dim.n) throw std::invalid_argument("invalid prime-power factorization");
  if (!is_supported_dimension(dim.n, prime_cap))
    throw std::invalid_argument("dimension " + std::to_string(dim.n) +
                                " is not supported");

  MubFamily family{dim, {}};
  family.bases.reserve(dim.n + 1);
  family.bases.push_back(Basis{CMatrix::identity(dim.n)});
  auto rest = dim.p == 2 ? galois_ring_bases(dim) : quadratic_bases(dim);
  for (auto& b : rest) family.bases.push_back(std::move(b));
  for (auto& b : family.bases) fix_column_phases(b.vectors);
  return family;
}

CMatrix weyl_operator(WeylIndex idx, int n_dim) {
  if (n_dim < 2) throw std::invalid_argument("weyl_operator: dimension < 2");
  if (idx.m < 0 || idx.m >= n_dim || idx.n < 0 || idx.n >= n_dim)
    throw std::invalid_argument("weyl_operator: index out of range");
  CMatrix u(n_dim, n_dim);
  for (int k = 0; k < n_dim; ++k) {
    const double angle = 2.0 * std::numbers::pi * k * idx.n / n_dim;
    u((k + idx.m) % n_dim, k) = std::polar(1.0, angle);
  }
  return u;
}

CVector bell_state(WeylIndex idx, int n_dim) {
  if (n_dim < 2) throw std::invalid_argument("bell_state: dimension < 2");
  if (idx.m < 0 || idx.m >= n_dim || idx.n < 0 || idx.n >= n_dim)
    throw std::invalid_argument("bell_state: index out of range");
  CVector v(static_cast<std::size_t>(n_dim) * n_dim);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n_dim));
  for (int l = 0; l < n_dim; ++l) {
    const double angle = 2.0 * std::numbers::pi * l * idx.n / n_dim;
    v[l * n_dim + (l + idx.m) % n_dim] = std::polar(scale, angle);
  }
  return v;
}

}  // namespace qkdsec
