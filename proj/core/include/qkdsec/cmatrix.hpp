// Minimal dense complex matrix/vector helpers for the small state spaces used
// throughout (dimensions stay below ~30, oracle states below ~350 amplitudes).
#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace qkdsec {

using cplx = std::complex<double>;
using CVector = std::vector<cplx>;

// Row-major dense complex matrix.
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  static CMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  cplx& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const {
    return a_[r * cols_ + c];
  }

  const std::vector<cplx>& data() const { return a_; }

  CMatrix adjoint() const;
  CVector column(std::size_t c) const;

  bool operator==(const CMatrix& other) const = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<cplx> a_;
};

CMatrix operator*(const CMatrix& lhs, const CMatrix& rhs);
CVector operator*(const CMatrix& m, const CVector& v);

// Kronecker product, first factor major: (A (x) B)[i*rB + k, j*cB + l] = A(i,j) B(k,l).
CMatrix kron(const CMatrix& a, const CMatrix& b);

cplx inner(const CVector& a, const CVector& b);  // <a|b>, conjugate-linear in a
double norm(const CVector& v);

// max |A(i,j) - B(i,j)|
double max_abs_diff(const CMatrix& a, const CMatrix& b);

}  // namespace qkdsec
