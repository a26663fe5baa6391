#pragma once

#include <vector>

#include "lkb/homology.hpp"
#include "lkb/magnus.hpp"
#include "lkb/words.hpp"

namespace lkb {

/// n x n grid of Magnus matrices; block (i, j) is stored at (i-1, j-1).
class BlockMatrix {
 public:
  BlockMatrix() = default;
  explicit BlockMatrix(int n);
  static BlockMatrix identity(int n);

  int n() const { return n_; }
  /// 1-based block access.
  MagnusElement& block(int i, int j);
  const MagnusElement& block(int i, int j) const;

  bool is_identity() const;
  /// The n(n+1) x n(n+1) matrix over LaurentPoly.
  PolyMatrix flatten() const;

  friend BlockMatrix operator*(const BlockMatrix& a, const BlockMatrix& b);
  friend bool operator==(const BlockMatrix&, const BlockMatrix&) = default;

 private:
  int n_ = 0;
  std::vector<MagnusElement> blocks_;
};

BlockMatrix tau_plus_generator(int n, int i, int sign = 1);
/// Product of generator images, left to right.
BlockMatrix tau_plus(const BraidWord& b);
/// Block (i, j) of tau_plus(b).
MagnusElement entry(const BraidWord& b, int i, int j);
/// True iff tau_plus(b) is the block identity.
bool is_identity(const BraidWord& b);

/// Column vector action on evaluated x classes.
EvaluatedClass apply(const BlockMatrix& m, const EvaluatedClass& v);

}  // namespace lkb
