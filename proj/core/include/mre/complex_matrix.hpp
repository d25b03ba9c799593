#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace mre {

using Complex = std::complex<double>;

// Dense square complex matrix of dimension 2^k (k >= 0), row-major storage.
// Dimensions are restricted to powers of two because every operator in this
// library acts on some number of qubits.
class ComplexMatrix {
 public:
  ComplexMatrix() : ComplexMatrix(1) {}
  explicit ComplexMatrix(std::size_t dim);  // zero-filled
  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);

  std::size_t dim() const noexcept { return dim_; }

  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }

  ComplexMatrix adjoint() const;
  Complex trace() const;
  double max_abs() const;
  double max_abs_diff(const ComplexMatrix& other) const;
  double hermiticity_defect() const;  // max entrywise |M - M^dagger|
  double frobenius_norm() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scale);

  // this += coeff * |v><v|
  void add_scaled_outer(Complex coeff, const std::vector<Complex>& v);

 private:
  std::size_t dim_;
  std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex scale, ComplexMatrix m);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

// Tr(A * B) without forming the product.
Complex trace_product(const ComplexMatrix& a, const ComplexMatrix& b);

// (A (x) B)[i*dimB + k, j*dimB + l] = A[i,j] * B[k,l]
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Partial trace over the qubits NOT listed in `keep`. The matrix acts on
// n = log2(dim) qubits; qubit 0 is the most significant bit of the basis
// index. The result's qubit order follows the order of `keep`.
// Throws "invalid-subsystem" if keep is empty, covers all qubits, repeats an
// index, or indexes out of range.
ComplexMatrix partial_trace(const ComplexMatrix& m, const std::vector<int>& keep);

}  // namespace mre
