#include "mre/complex_matrix.hpp"

#include "mre/error.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstddef>

namespace mre {

namespace {

bool is_power_of_two(std::size_t x) { return x != 0 && std::has_single_bit(x); }

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {
  if (!is_power_of_two(dim)) {
    throw Error("invalid-dimension", "matrix dimension must be a power of two, got " +
                                         std::to_string(dim));
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::from_rows(
    std::initializer_list<std::initializer_list<Complex>> rows) {
  ComplexMatrix m(rows.size());
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != m.dim()) {
      throw Error("invalid-dimension", "from_rows requires a square entry grid");
    }
    std::size_t j = 0;
    for (const auto& v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

Complex ComplexMatrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& v : data_) m = std::max(m, std::abs(v));
  return m;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& other) const {
  if (other.dim_ != dim_) {
    throw Error("dim-mismatch", "max_abs_diff requires equal dimensions");
  }
  double m = 0.0;
  for (std::size_t k = 0; k < data_.size(); ++k) m = std::max(m, std::abs(data_[k] - other.data_[k]));
  return m;
}

double ComplexMatrix::hermiticity_defect() const {
  double m = 0.0;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i; j < dim_; ++j)
      m = std::max(m, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  return m;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& v : data_) s += std::norm(v);
  return std::sqrt(s);
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  if (other.dim_ != dim_) throw Error("dim-mismatch", "operator+= requires equal dimensions");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  if (other.dim_ != dim_) throw Error("dim-mismatch", "operator-= requires equal dimensions");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
  for (auto& v : data_) v *= scale;
  return *this;
}

void ComplexMatrix::add_scaled_outer(Complex coeff, const std::vector<Complex>& v) {
  if (v.size() != dim_) throw Error("dim-mismatch", "outer-product vector length mismatch");
  for (std::size_t i = 0; i < dim_; ++i) {
    const Complex ci = coeff * v[i];
    for (std::size_t j = 0; j < dim_; ++j) (*this)(i, j) += ci * std::conj(v[j]);
  }
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(Complex scale, ComplexMatrix m) { return m *= scale; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw Error("dim-mismatch", "matrix product requires equal dimensions");
  const std::size_t d = a.dim();
  ComplexMatrix out(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < d; ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

Complex trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw Error("dim-mismatch", "trace_product requires equal dimensions");
  Complex t = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) t += a(i, j) * b(j, i);
  return t;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t da = a.dim(), db = b.dim();
  ComplexMatrix out(da * db);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j) {
      const Complex aij = a(i, j);
      if (aij == Complex{}) continue;
      for (std::size_t k = 0; k < db; ++k)
        for (std::size_t l = 0; l < db; ++l) out(i * db + k, j * db + l) = aij * b(k, l);
    }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, const std::vector<int>& keep) {
  const int n = std::countr_zero(m.dim());
  if (keep.empty() || keep.size() >= static_cast<std::size_t>(n)) {
    throw Error("invalid-subsystem", "keep set must be a nonempty strict subset of the qubits");
  }
  std::vector<bool> kept(n, false);
  for (int q : keep) {
    if (q < 0 || q >= n || kept[q]) {
      throw Error("invalid-subsystem", "keep indices must be distinct and in range");
    }
    kept[q] = true;
  }
  std::vector<int> traced;
  for (int q = 0; q < n; ++q)
    if (!kept[q]) traced.push_back(q);

  // Qubit q occupies bit n-1-q of the basis index.
  auto spread = [n](std::size_t packed, const std::vector<int>& slots) {
    std::size_t idx = 0;
    for (std::size_t k = 0; k < slots.size(); ++k) {
      const std::size_t bit = (packed >> (slots.size() - 1 - k)) & 1u;
      idx |= bit << (n - 1 - slots[k]);
    }
    return idx;
  };

  const std::size_t dk = std::size_t{1} << keep.size();
  const std::size_t dt = std::size_t{1} << traced.size();
  ComplexMatrix out(dk);
  for (std::size_t r = 0; r < dk; ++r) {
    const std::size_t rk = spread(r, keep);
    for (std::size_t c = 0; c < dk; ++c) {
      const std::size_t ck = spread(c, keep);
      Complex sum = 0.0;
      for (std::size_t s = 0; s < dt; ++s) {
        const std::size_t st = spread(s, traced);
        sum += m(rk | st, ck | st);
      }
      out(r, c) = sum;
    }
  }
  return out;
}

}  // namespace mre
