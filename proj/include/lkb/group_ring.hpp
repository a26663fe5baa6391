#pragma once

#include <map>
#include <string>

#include "lkb/laurent.hpp"
#include "lkb/words.hpp"

namespace lkb {

/// Finite Z-linear combination of free-group elements (an element of Z F_n).
class GroupRingElement {
 public:
  using Terms = std::map<FreeWord, Integer>;

  explicit GroupRingElement(int n = 1) : n_(n) {}
  /// c * w.
  GroupRingElement(const FreeWord& w, Integer c = 1);
  static GroupRingElement one(int n) { return GroupRingElement(FreeWord(n)); }

  int rank() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coeff(const FreeWord& w) const;

  /// Adds c * w.
  void add_term(const FreeWord& w, const Integer& c);

  /// Reverse-and-invert on every term: sum c_g g -> sum c_g g^-1.
  GroupRingElement involution() const;
  /// Sum of the coefficients.
  Integer augmentation() const;

  GroupRingElement operator-() const;
  GroupRingElement& operator+=(const GroupRingElement& r);
  GroupRingElement& operator-=(const GroupRingElement& r);
  friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { return a += b; }
  friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) { return a -= b; }
  friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b);
  friend bool operator==(const GroupRingElement&, const GroupRingElement&) = default;

 private:
  int n_;
  Terms terms_;
};

/// "x3x2x3^-1x2^-1 + x3^-1x2^-1 - x2^-1", terms in shortlex order; "0" if empty.
std::string to_string(const GroupRingElement& r);

/// Parses the form produced by to_string; coefficients as in "2*x1 - 3".
GroupRingElement parse_group_ring(std::string_view text, int n);

}  // namespace lkb
