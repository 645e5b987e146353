// Finite-field and Galois-ring arithmetic backing the unbiased-basis
// construction. Elements are addressed by integer index: the coefficient
// vector (c0, c1, ..., c_{k-1}) of the representative polynomial maps to
// sum(c_i * base^i) with base = p for GF(p^k) and base = 4 for GR(4,k).
// All operation tables are built once at construction from exact integer
// polynomial arithmetic modulo the pinned modulus.
#pragma once

#include <vector>

namespace qkdsec::galois {

// GF(p^k). For k = 1 this degenerates to Z_p and the modulus is unused.
class PrimePowerField {
 public:
  PrimePowerField(int p, int k, std::vector<int> modulus);

  int characteristic() const { return p_; }
  int degree() const { return k_; }
  int size() const { return q_; }

  int add(int a, int b) const { return add_[a * q_ + b]; }
  int mul(int a, int b) const { return mul_[a * q_ + b]; }
  // Field trace into the prime subfield, returned as an integer in [0, p).
  int trace(int a) const { return trace_[a]; }

 private:
  int p_, k_, q_;
  std::vector<int> add_, mul_, trace_;
};

// GR(4,k) = Z4[x]/(h), h basic primitive, used for even prime-power
// dimensions. The Teichmuller set {0, xi^0, ..., xi^{2^k-2}} gives the
// canonical coset representatives; teichmuller(t) returns the ring element
// whose mod-2 reduction has bit pattern t, a bijection onto GF(2^k).
class GaloisRing4 {
 public:
  GaloisRing4(int k, std::vector<int> modulus);

  int degree() const { return k_; }
  int residue_size() const { return q_; }   // 2^k
  int size() const { return size_; }        // 4^k

  int add(int a, int b) const { return add_[a * size_ + b]; }
  int mul(int a, int b) const { return mul_[a * size_ + b]; }
  int twice(int a) const { return add(a, a); }
  // Generalized trace into Z4.
  int trace(int a) const { return trace_[a]; }
  int teichmuller(int bits) const { return teich_[bits]; }

 private:
  int frobenius(int c) const;

  int k_, q_, size_;
  std::vector<int> add_, mul_, teich_, trace_;
};

}  // namespace qkdsec::galois
