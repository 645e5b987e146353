// Mutually unbiased bases for prime-power dimensions, plus the shift/phase
// (generalized Pauli) operators and maximally entangled two-quNit states
// built from them.
//
// Basis family layout: bases[0] is always the computational basis; the other
// N bases come from the quadratic Gauss-sum construction over GF(p^k) for odd
// characteristic and from the Galois-ring GR(4,k) construction for N = 2^k.
// Every basis vector's first nonzero component is real and positive, and the
// construction is closed-form, so repeated builds are bit-identical.
#pragma once

#include <cstdint>
#include <vector>

#include "qkdsec/cmatrix.hpp"

namespace qkdsec {

inline constexpr int kDefaultPrimeCap = 31;
inline constexpr double kAlgebraTol = 1e-12;

// N = p^k with p prime, k >= 1. Construction fails for anything else.
struct PrimePowerDim {
  int n;  // the dimension
  int p;  // prime
  int k;  // exponent

  static PrimePowerDim of(int n);  // throws std::invalid_argument
};

// Orthonormal basis of C^N; column j is the j-th basis vector.
struct Basis {
  CMatrix vectors;
};

struct MubFamily {
  PrimePowerDim dim;
  std::vector<Basis> bases;  // N + 1 of them, bases[0] computational

  int size() const { return static_cast<int>(bases.size()); }
};

// Shift index m and phase index n, both mod N.
struct WeylIndex {
  int m = 0;
  int n = 0;
};

// All N + 1 mutually unbiased bases of C^N. Supported N: primes up to
// prime_cap plus the prime powers 4, 8, 9, 16, 25, 27 (the dimensions with a
// pinned modulus). Throws std::invalid_argument otherwise.
MubFamily build_mub_family(PrimePowerDim dim, int prime_cap = kDefaultPrimeCap);

bool is_supported_dimension(int n, int prime_cap = kDefaultPrimeCap);
std::vector<int> supported_dimensions(int prime_cap = kDefaultPrimeCap);

// U_{m,n} = sum_k exp(2*pi*i*k*n/N) |k+m><k| on the computational basis.
CMatrix weyl_operator(WeylIndex idx, int n_dim);

// |Psi_{m,n}> = N^{-1/2} sum_l exp(2*pi*i*l*n/N) |l>|l+m>, length N^2,
// first tensor factor major (index l*N + (l+m mod N)).
CVector bell_state(WeylIndex idx, int n_dim);

}  // namespace qkdsec
