#include "lkb/poly_matrix.hpp"

#include "lkb/error.hpp"
#include "lkb/modp.hpp"

namespace lkb {

PolyMatrix PolyMatrix::identity(std::size_t size) { return scalar(size, LaurentPoly(1)); }

PolyMatrix PolyMatrix::scalar(std::size_t size, const LaurentPoly& c) {
  PolyMatrix m(size, size);
  for (std::size_t k = 0; k < size; ++k) m(k, k) = c;
  return m;
}

bool PolyMatrix::is_zero() const {
  for (const auto& p : data_)
    if (!p.is_zero()) return false;
  return true;
}

bool PolyMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (r == c ? !(*this)(r, c).is_one() : !(*this)(r, c).is_zero()) return false;
  return true;
}

PolyMatrix PolyMatrix::submatrix(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const {
  if (r0 + rows > rows_ || c0 + cols > cols_) throw DimensionError("submatrix out of range");
  PolyMatrix out(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) out(r, c) = (*this)(r0 + r, c0 + c);
  return out;
}

PolyMatrix PolyMatrix::operator-() const {
  PolyMatrix out = *this;
  for (auto& p : out.data_) p = -p;
  return out;
}

PolyMatrix& PolyMatrix::operator+=(const PolyMatrix& m) {
  if (rows_ != m.rows_ || cols_ != m.cols_) throw DimensionError("matrix sizes differ in sum");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += m.data_[k];
  return *this;
}

PolyMatrix& PolyMatrix::operator-=(const PolyMatrix& m) {
  if (rows_ != m.rows_ || cols_ != m.cols_) throw DimensionError("matrix sizes differ in difference");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= m.data_[k];
  return *this;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix sizes incompatible in product");
  PolyMatrix out(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const LaurentPoly& x = a(r, k);
      if (x.is_zero()) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) {
        const LaurentPoly& y = b(k, c);
        if (!y.is_zero()) out(r, c).add_product(x, y);
      }
    }
  return out;
}

PolyMatrix operator*(const LaurentPoly& c, PolyMatrix m) {
  for (auto& p : m.data_) p = c * p;
  return m;
}

ModMatrix ModMatrix::identity(std::size_t size) {
  ModMatrix m(size);
  for (std::size_t k = 0; k < size; ++k) m(k, k) = 1;
  return m;
}

ModMatrix ModMatrix::from(const PolyMatrix& m, std::uint64_t qv, std::uint64_t tv) {
  if (m.rows() != m.cols()) throw DimensionError("ModMatrix needs a square matrix");
  ModMatrix out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c).eval_mod(qv, tv);
  return out;
}

bool ModMatrix::is_zero() const {
  for (auto v : data_)
    if (v != 0) return false;
  return true;
}

ModMatrix& ModMatrix::operator+=(const ModMatrix& m) {
  if (n_ != m.n_) throw DimensionError("matrix sizes differ in sum");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] = modp::add(data_[k], m.data_[k]);
  return *this;
}

ModMatrix& ModMatrix::operator-=(const ModMatrix& m) {
  if (n_ != m.n_) throw DimensionError("matrix sizes differ in difference");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] = modp::sub(data_[k], m.data_[k]);
  return *this;
}

ModMatrix operator*(const ModMatrix& a, const ModMatrix& b) {
  if (a.n_ != b.n_) throw DimensionError("matrix sizes incompatible in product");
  const std::size_t n = a.n_;
  ModMatrix out(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k < n; ++k) {
      const std::uint64_t x = a(r, k);
      if (x == 0) continue;
      for (std::size_t c = 0; c < n; ++c) out(r, c) = modp::add(out(r, c), modp::mul(x, b(k, c)));
    }
  return out;
}

std::string to_string(const PolyMatrix& m) {
  std::string out;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero())
        out += "[" + std::to_string(r) + "," + std::to_string(c) + "] " + to_string(m(r, c)) + "\n";
  return out;
}

}  // namespace lkb
