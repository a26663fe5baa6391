#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lkb {

/// One letter of a word: generator index (1-based) raised to sign +1 or -1.
struct Letter {
  int index = 0;
  int sign = 1;

  Letter inverse() const { return {index, -sign}; }
  bool cancels(const Letter& other) const {
    return index == other.index && sign == -other.sign;
  }
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

namespace detail {
// Appends `l` to a freely reduced sequence, keeping it reduced.
inline void push_reduced(std::vector<Letter>& out, Letter l) {
  if (!out.empty() && out.back().cancels(l))
    out.pop_back();
  else
    out.push_back(l);
}
}  // namespace detail

/// Element of the braid group B_n written in sigma_1..sigma_{n-1}.
/// Stored freely reduced (adjacent sigma_i sigma_i^-1 pairs cancelled).
class BraidWord {
 public:
  BraidWord() = default;
  explicit BraidWord(int n);
  /// Throws DimensionError if n < 1 or an index is outside 1..n-1.
  BraidWord(int n, std::span<const Letter> letters);
  BraidWord(int n, std::initializer_list<Letter> letters)
      : BraidWord(n, std::span<const Letter>(letters.begin(), letters.size())) {}

  static BraidWord generator(int n, int i, int sign = 1);

  int strands() const { return n_; }
  std::span<const Letter> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  BraidWord inverse() const;
  BraidWord power(int e) const;
  /// Same letters read in the braid group on `m >= n` strands.
  BraidWord embed(int m) const;

  friend BraidWord operator*(const BraidWord& a, const BraidWord& b);
  friend bool operator==(const BraidWord&, const BraidWord&) = default;
  /// Depth-lex order: shorter words first, then lexicographic with
  /// sigma_i < sigma_i^-1 < sigma_{i+1}.
  friend std::strong_ordering operator<=>(const BraidWord& a, const BraidWord& b);

 private:
  int n_ = 1;
  std::vector<Letter> letters_;
};

/// Element of the free group F_n on x_1..x_n, stored freely reduced.
class FreeWord {
 public:
  FreeWord() = default;
  explicit FreeWord(int n);
  FreeWord(int n, std::span<const Letter> letters);
  FreeWord(int n, std::initializer_list<Letter> letters)
      : FreeWord(n, std::span<const Letter>(letters.begin(), letters.size())) {}

  static FreeWord generator(int n, int i, int sign = 1);

  int rank() const { return n_; }
  std::span<const Letter> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  FreeWord inverse() const;
  /// Letters [pos, pos+count) as a word (reduced, since any subword is).
  FreeWord subword(std::size_t pos, std::size_t count = std::string::npos) const;
  /// Exponent sum of x_i.
  int exponent(int i) const;
  /// Sum of all exponents.
  int degree() const;

  friend FreeWord operator*(const FreeWord& a, const FreeWord& b);
  friend bool operator==(const FreeWord&, const FreeWord&) = default;
  /// Shortlex order.
  friend std::strong_ordering operator<=>(const FreeWord& a, const FreeWord& b);

 private:
  int n_ = 1;
  std::vector<Letter> letters_;
};

struct FreeWordHash {
  std::size_t operator()(const FreeWord& w) const noexcept;
};

// Text forms. Braid words: whitespace/comma separated signed integers
// ("-2 1 3"), or symbolic tokens "s2^-1 s1" (any integer exponent).
// Free words: "x2 x4 x2^-1" or "x2x4x2^-1"; "1" or "" is the identity.
BraidWord parse_braid(std::string_view text, int n);
FreeWord parse_free(std::string_view text, int n);
std::string format_braid(const BraidWord& b);
std::string format_free(const FreeWord& w);

/// Image of w under the automorphism of F_n induced by b. Letters of b act
/// right to left: (g_1 ... g_k)(w) = g_1(g_2(...g_k(w))), with
///   sigma_i: x_i -> x_{i+1}, x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}.
FreeWord act(const BraidWord& b, const FreeWord& w);

/// Images b(x_1), ..., b(x_n).
std::vector<FreeWord> generator_images(const BraidWord& b);

/// Applies the substitution x_k -> images[k-1] to w.
FreeWord substitute(const std::vector<FreeWord>& images, const FreeWord& w);

/// y_i = x_1 ... x_{i-1} x_i^-1 x_{i-1}^-1 ... x_1^-1.
FreeWord y_basis_word(int i, int n);

/// x_1 x_2 ... x_k (identity for k = 0).
FreeWord x_prefix(int k, int n);

int exponent_sum(const BraidWord& b);

/// Strand permutation; entry k-1 is the end position of the strand starting
/// at k.
std::vector<int> permutation(const BraidWord& b);

}  // namespace lkb
