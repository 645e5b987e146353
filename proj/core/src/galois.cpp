#include "qkdsec/galois.hpp"

#include <stdexcept>
#include <string>

namespace qkdsec::galois {
namespace {

int ipow(int b, int e) {
  int r = 1;
  while (e-- > 0) r *= b;
  return r;
}

std::vector<int> decode(int idx, int base, int k) {
  std::vector<int> c(k);
  for (int i = 0; i < k; ++i) {
    c[i] = idx % base;
    idx /= base;
  }
  return c;
}

int encode(const std::vector<int>& c, int base) {
  int idx = 0;
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i)
    idx = idx * base + c[i];
  return idx;
}

// Schoolbook product of coefficient vectors, reduced modulo the monic
// modulus, all coefficients mod `m`.
std::vector<int> polymul_mod(const std::vector<int>& a,
                             const std::vector<int>& b,
                             const std::vector<int>& modulus, int k, int m) {
  std::vector<int> prod(2 * k - 1, 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % m;
  for (int d = 2 * k - 2; d >= k; --d) {
    const int c = prod[d];
    if (c == 0) continue;
    prod[d] = 0;
    for (int i = 0; i <= k; ++i) {
      int& slot = prod[d - k + i];
      slot = ((slot - c * modulus[i]) % m + m) % m;
    }
  }
  prod.resize(k);
  return prod;
}

}  // namespace

PrimePowerField::PrimePowerField(int p, int k, std::vector<int> modulus)
    : p_(p), k_(k), q_(ipow(p, k)) {
  if (k > 1 && (static_cast<int>(modulus.size()) != k + 1 || modulus[k] != 1))
    throw std::invalid_argument("PrimePowerField: modulus must be monic of degree k");
  add_.resize(static_cast<std::size_t>(q_) * q_);
  mul_.resize(static_cast<std::size_t>(q_) * q_);
  for (int a = 0; a < q_; ++a) {
    const auto ca = decode(a, p_, k_);
    for (int b = 0; b < q_; ++b) {
      const auto cb = decode(b, p_, k_);
      std::vector<int> sum(k_);
      for (int i = 0; i < k_; ++i) sum[i] = (ca[i] + cb[i]) % p_;
      add_[a * q_ + b] = encode(sum, p_);
      mul_[a * q_ + b] =
          k_ == 1 ? (a * b) % p_ : encode(polymul_mod(ca, cb, modulus, k_, p_), p_);
    }
  }
  // tr(a) = a + a^p + ... + a^(p^(k-1)); lands in the prime subfield, whose
  // elements are the constant polynomials with index < p.
  trace_.resize(q_);
  for (int a = 0; a < q_; ++a) {
    int s = 0, t = a;
    for (int j = 0; j < k_; ++j) {
      s = add(s, t);
      int tp = t;
      for (int e = 1; e < p_; ++e) tp = mul(tp, t);
      t = tp;
    }
    if (s >= p_)
      throw std::logic_error("PrimePowerField: trace left the prime subfield");
    trace_[a] = s;
  }
}

GaloisRing4::GaloisRing4(int k, std::vector<int> modulus)
    : k_(k), q_(ipow(2, k)), size_(ipow(4, k)) {
  if (static_cast<int>(modulus.size()) != k + 1 || modulus[k] != 1)
    throw std::invalid_argument("GaloisRing4: modulus must be monic of degree k");
  add_.resize(static_cast<std::size_t>(size_) * size_);
  mul_.resize(static_cast<std::size_t>(size_) * size_);
  for (int a = 0; a < size_; ++a) {
    const auto ca = decode(a, 4, k_);
    for (int b = 0; b < size_; ++b) {
      const auto cb = decode(b, 4, k_);
      std::vector<int> sum(k_);
      for (int i = 0; i < k_; ++i) sum[i] = (ca[i] + cb[i]) % 4;
      add_[a * size_ + b] = encode(sum, 4);
      mul_[a * size_ + b] = encode(polymul_mod(ca, cb, modulus, k_, 4), 4);
    }
  }

  // Teichmuller set: 0 together with the powers of xi (the class of x).
  // The pinned moduli are basic primitive, so xi has order 2^k - 1 and the
  // mod-2 reductions enumerate GF(2^k) exactly once.
  teich_.assign(q_, -1);
  teich_[0] = 0;
  const int one = 1;               // index of the constant polynomial 1
  const int xi = k_ == 1 ? 1 : 4;  // the class of x; for k=1, x = -3 = 1
  int t = one;
  for (int j = 0; j < q_ - 1; ++j) {
    const auto ct = decode(t, 4, k_);
    int bits = 0;
    for (int i = 0; i < k_; ++i) bits |= (ct[i] % 2) << i;
    if (bits == 0 || teich_[bits] != -1)
      throw std::logic_error("GaloisRing4: modulus is not basic primitive");
    teich_[bits] = t;
    t = mul(t, xi);
  }
  if (t != one) throw std::logic_error("GaloisRing4: xi order != 2^k - 1");

  trace_.resize(size_);
  for (int a = 0; a < size_; ++a) {
    int s = 0, c = a;
    for (int j = 0; j < k_; ++j) {
      s = add(s, c);
      c = frobenius(c);
    }
    if (s >= 4) throw std::logic_error("GaloisRing4: trace left Z4");
    trace_[a] = s;
  }
}

// frob(a + 2b) = a^2 + 2 b^2 for Teichmuller a, b; the 2-adic pair is
// recovered from the unique Teichmuller lift of each mod-2 reduction.
int GaloisRing4::frobenius(int c) const {
  const auto cc = decode(c, 4, k_);
  int bits = 0;
  for (int i = 0; i < k_; ++i) bits |= (cc[i] % 2) << i;
  const int a = teich_[bits];
  const auto ca = decode(a, 4, k_);
  int dbits = 0;
  for (int i = 0; i < k_; ++i) {
    const int d = ((cc[i] - ca[i]) % 4 + 4) % 4;
    dbits |= (d / 2) << i;  // d is 0 or 2
  }
  const int b = teich_[dbits];
  return add(mul(a, a), twice(mul(b, b)));
}

}  // namespace qkdsec::galois
