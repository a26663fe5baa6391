#pragma once

#include <array>
#include <string_view>
#include <vector>

#include "lkb/group_ring.hpp"
#include "lkb/poly_matrix.hpp"
#include "lkb/words.hpp"

namespace lkb {

/// (n+1) x (n+1) matrix over Z[q^+-1, t^+-1]; rows and columns indexed 0..n.
using MagnusElement = PolyMatrix;

/// Letter of a word in B_{1,n}: a braid generator sigma_i or a free generator x_j.
struct B1nLetter {
  enum class Kind { Sigma, X };
  Kind kind = Kind::Sigma;
  int index = 1;
  int sign = 1;
  friend bool operator==(const B1nLetter&, const B1nLetter&) = default;
};

/// Word in B_{1,n} = F_n semidirect B_n. Not reduced.
class B1nWord {
 public:
  explicit B1nWord(int n = 1) : n_(n) {}
  B1nWord(int n, std::vector<B1nLetter> letters);
  static B1nWord from(const BraidWord& b);
  static B1nWord from(const FreeWord& w);

  int strands() const { return n_; }
  const std::vector<B1nLetter>& letters() const { return letters_; }
  B1nWord inverse() const;
  friend B1nWord operator*(const B1nWord& a, const B1nWord& b);

 private:
  int n_;
  std::vector<B1nLetter> letters_;
};

/// Tokens "sK", "xK" with optional "^E", or bare signed integers for sigma_K.
B1nWord parse_b1n(std::string_view text, int n);

/// Exponent sum of the x letters.
int deg(const B1nWord& w);
inline int deg(const FreeWord& w) { return w.degree(); }
inline int deg(const BraidWord&) { return 0; }

/// Unreduced Magnus matrices of the generators (sign -1 gives the inverse).
MagnusElement rho_sigma(int n, int i, int sign = 1);
MagnusElement rho_x(int n, int j, int sign = 1);
/// tau(G) = q^deg(G) rho(G).
MagnusElement tau_sigma(int n, int i, int sign = 1);
MagnusElement tau_x(int n, int j, int sign = 1);

/// Images of words; products are taken left to right (tau is a homomorphism).
MagnusElement tau(const BraidWord& b);
MagnusElement tau(const FreeWord& w);
MagnusElement tau(const B1nWord& w);
/// Z-linear extension to the group ring.
MagnusElement tau(const GroupRingElement& r);
MagnusElement rho(const B1nWord& w);

/// Rows/cols 1..n of a Magnus matrix (the unreduced Burau block for braids).
PolyMatrix burau_block(const MagnusElement& m);

/// Per-n table of generator images, built once and shared read-only.
struct MagnusTable {
  int n = 0;
  // index 1..n (entry 0 unused); [0] = +1, [1] = -1
  std::vector<std::array<MagnusElement, 2>> sigma, x, y;
  /// prefix[k] = tau(x_1 ... x_k), k = 0..n
  std::vector<MagnusElement> prefix;
  /// t[i] = prefix[i] - prefix[i-1], i = 1..n
  std::vector<MagnusElement> t;

  // The same matrices specialized at (kModQ, kModT) modulo modp::P.
  std::vector<std::array<ModMatrix, 2>> sigma_mod, x_mod, y_mod;
  std::vector<ModMatrix> t_mod;

  const MagnusElement& sig(int i, int sign) const { return sigma[i][sign > 0 ? 0 : 1]; }
  const MagnusElement& gen_x(int j, int sign) const { return x[j][sign > 0 ? 0 : 1]; }
  const MagnusElement& gen_y(int j, int sign) const { return y[j][sign > 0 ? 0 : 1]; }
  const ModMatrix& sig_mod(int i, int sign) const { return sigma_mod[i][sign > 0 ? 0 : 1]; }
  const ModMatrix& gen_x_mod(int j, int sign) const { return x_mod[j][sign > 0 ? 0 : 1]; }
  const ModMatrix& gen_y_mod(int j, int sign) const { return y_mod[j][sign > 0 ? 0 : 1]; }
};

inline constexpr std::uint64_t kModQ = 0x1b873593d2c3a5e1ULL % ((std::uint64_t{1} << 61) - 1);
inline constexpr std::uint64_t kModT = 0x0cc9e2d51f3b9a17ULL % ((std::uint64_t{1} << 61) - 1);

const MagnusTable& magnus_table(int n);

/// tau(w) specialized modulo P.
ModMatrix tau_mod(const FreeWord& w);
ModMatrix tau_mod(const BraidWord& b);

}  // namespace lkb
