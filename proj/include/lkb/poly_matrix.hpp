#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lkb/laurent.hpp"

namespace lkb {

/// Dense matrix over LaurentPoly, row-major.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static PolyMatrix identity(std::size_t size);
  static PolyMatrix zero(std::size_t size) { return PolyMatrix(size, size); }
  /// c times the identity.
  static PolyMatrix scalar(std::size_t size, const LaurentPoly& c);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  LaurentPoly& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const LaurentPoly& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;
  bool is_identity() const;
  PolyMatrix submatrix(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const;

  PolyMatrix operator-() const;
  PolyMatrix& operator+=(const PolyMatrix& m);
  PolyMatrix& operator-=(const PolyMatrix& m);
  friend PolyMatrix operator+(PolyMatrix a, const PolyMatrix& b) { return a += b; }
  friend PolyMatrix operator-(PolyMatrix a, const PolyMatrix& b) { return a -= b; }
  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator*(const LaurentPoly& c, PolyMatrix m);
  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<LaurentPoly> data_;
};

/// Square matrix over Z/P (P = 2^61 - 1). Images of polynomial matrices under
/// a fixed specialization of q and t; a nonzero image certifies a nonzero
/// polynomial matrix.
class ModMatrix {
 public:
  ModMatrix() = default;
  explicit ModMatrix(std::size_t size) : n_(size), data_(size * size, 0) {}
  static ModMatrix identity(std::size_t size);
  static ModMatrix from(const PolyMatrix& m, std::uint64_t qv, std::uint64_t tv);

  std::size_t size() const { return n_; }
  std::uint64_t& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
  std::uint64_t operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }
  bool is_zero() const;

  ModMatrix& operator+=(const ModMatrix& m);
  ModMatrix& operator-=(const ModMatrix& m);
  friend ModMatrix operator+(ModMatrix a, const ModMatrix& b) { return a += b; }
  friend ModMatrix operator-(ModMatrix a, const ModMatrix& b) { return a -= b; }
  friend ModMatrix operator*(const ModMatrix& a, const ModMatrix& b);
  friend bool operator==(const ModMatrix&, const ModMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> data_;
};

/// One entry per line, "[r,c] poly"; zero entries omitted.
std::string to_string(const PolyMatrix& m);

}  // namespace lkb
