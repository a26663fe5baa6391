#include "lkb/krammer.hpp"

#include "lkb/error.hpp"

namespace lkb {

BlockMatrix::BlockMatrix(int n) : n_(n) {
  if (n < 1) throw DimensionError("block matrix needs n >= 1");
  blocks_.assign(static_cast<std::size_t>(n * n), MagnusElement::zero(static_cast<std::size_t>(n + 1)));
}

BlockMatrix BlockMatrix::identity(int n) {
  BlockMatrix m(n);
  for (int i = 1; i <= n; ++i) m.block(i, i) = MagnusElement::identity(static_cast<std::size_t>(n + 1));
  return m;
}

MagnusElement& BlockMatrix::block(int i, int j) {
  if (i < 1 || i > n_ || j < 1 || j > n_) throw DimensionError("block index outside 1..n");
  return blocks_[static_cast<std::size_t>((i - 1) * n_ + (j - 1))];
}

const MagnusElement& BlockMatrix::block(int i, int j) const {
  if (i < 1 || i > n_ || j < 1 || j > n_) throw DimensionError("block index outside 1..n");
  return blocks_[static_cast<std::size_t>((i - 1) * n_ + (j - 1))];
}

bool BlockMatrix::is_identity() const {
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j)
      if (i == j ? !block(i, j).is_identity() : !block(i, j).is_zero()) return false;
  return true;
}

PolyMatrix BlockMatrix::flatten() const {
  const auto s = static_cast<std::size_t>(n_ + 1);
  const auto N = static_cast<std::size_t>(n_);
  PolyMatrix out(N * s, N * s);
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j) {
      const auto& b = block(i, j);
      for (std::size_t r = 0; r < s; ++r)
        for (std::size_t c = 0; c < s; ++c) out(static_cast<std::size_t>(i - 1) * s + r, static_cast<std::size_t>(j - 1) * s + c) = b(r, c);
    }
  return out;
}

BlockMatrix operator*(const BlockMatrix& a, const BlockMatrix& b) {
  if (a.n_ != b.n_) throw DimensionError("block matrices of different n");
  BlockMatrix out(a.n_);
  for (int i = 1; i <= a.n_; ++i)
    for (int k = 1; k <= a.n_; ++k) {
      const auto& x = a.block(i, k);
      if (x.is_zero()) continue;
      for (int j = 1; j <= a.n_; ++j) {
        const auto& y = b.block(k, j);
        if (!y.is_zero()) out.block(i, j) += x * y;
      }
    }
  return out;
}

BlockMatrix tau_plus_generator(int n, int i, int sign) {
  if (i < 1 || i > n - 1) throw DimensionError("sigma index outside 1..n-1");
  const auto& tbl = magnus_table(n);
  const MagnusElement one = MagnusElement::identity(static_cast<std::size_t>(n + 1));
  BlockMatrix m(n);
  if (sign > 0) {
    const MagnusElement& s = tbl.sig(i, 1);
    for (int k = 1; k <= n; ++k)
      if (k != i && k != i + 1) m.block(k, k) = s;
    m.block(i, i + 1) = s * tbl.gen_x(i, 1);
    m.block(i + 1, i) = s;
    m.block(i + 1, i + 1) = s * (one - tbl.gen_x(i + 1, 1));
  } else {
    const MagnusElement& s_inv = tbl.sig(i, -1);
    for (int k = 1; k <= n; ++k)
      if (k != i && k != i + 1) m.block(k, k) = s_inv;
    m.block(i, i) = -((one - tbl.gen_x(i + 1, 1)) * tbl.gen_x(i, -1) * s_inv);
    m.block(i, i + 1) = s_inv;
    m.block(i + 1, i) = tbl.gen_x(i, -1) * s_inv;
  }
  return m;
}

BlockMatrix tau_plus(const BraidWord& b) {
  const int n = b.strands();
  BlockMatrix m = BlockMatrix::identity(n);
  for (const auto& l : b.letters()) m = m * tau_plus_generator(n, l.index, l.sign);
  return m;
}

MagnusElement entry(const BraidWord& b, int i, int j) {
  const int n = b.strands();
  if (i < 1 || i > n || j < 1 || j > n) throw DimensionError("entry index outside 1..n");
  return tau_plus(b).block(i, j);
}

bool is_identity(const BraidWord& b) { return tau_plus(b).is_identity(); }

EvaluatedClass apply(const BlockMatrix& m, const EvaluatedClass& v) {
  if (v.size() != static_cast<std::size_t>(m.n())) throw DimensionError("class and block matrix of different n");
  EvaluatedClass out(v.size(), MagnusElement::zero(static_cast<std::size_t>(m.n() + 1)));
  for (int i = 1; i <= m.n(); ++i)
    for (int j = 1; j <= m.n(); ++j) {
      const auto& b = m.block(i, j);
      if (!b.is_zero()) out[static_cast<std::size_t>(i - 1)] += b * v[static_cast<std::size_t>(j - 1)];
    }
  return out;
}

}  // namespace lkb
