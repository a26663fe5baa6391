#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lkb/group_ring.hpp"
#include "lkb/magnus.hpp"
#include "lkb/words.hpp"

namespace lkb {

/// Class sum_i e_i c_i in the left module with basis e_1..e_n. Classes of
/// based loops remember the loop word.
class HomologyClassX {
 public:
  explicit HomologyClassX(int n = 1);
  explicit HomologyClassX(std::vector<GroupRingElement> coeffs, std::optional<FreeWord> loop = std::nullopt);
  /// e_i, the class of the loop x_i.
  static HomologyClassX basis(int n, int i);

  int rank() const { return n_; }
  /// Coefficient of e_i, 1-based.
  const GroupRingElement& coeff(int i) const;
  const std::vector<GroupRingElement>& coeffs() const { return coeffs_; }
  const std::optional<FreeWord>& loop() const { return loop_; }
  bool is_zero() const;

  HomologyClassX& operator+=(const HomologyClassX& v);
  HomologyClassX& operator-=(const HomologyClassX& v);
  friend HomologyClassX operator+(HomologyClassX a, const HomologyClassX& b) { return a += b; }
  friend HomologyClassX operator-(HomologyClassX a, const HomologyClassX& b) { return a -= b; }
  /// v * r (right scalar multiplication); the result has no loop word.
  friend HomologyClassX operator*(const HomologyClassX& v, const GroupRingElement& r);
  /// Compares coefficients only.
  friend bool operator==(const HomologyClassX& a, const HomologyClassX& b) { return a.coeffs_ == b.coeffs_; }

 private:
  int n_;
  std::vector<GroupRingElement> coeffs_;
  std::optional<FreeWord> loop_;
};

/// Class sum_i c_i f_i in the right module with basis f_1..f_n.
class HomologyClassY {
 public:
  explicit HomologyClassY(int n = 1);
  explicit HomologyClassY(std::vector<GroupRingElement> coeffs, std::optional<FreeWord> loop = std::nullopt);
  /// f_i, the class of the loop y_i.
  static HomologyClassY basis(int n, int i);

  int rank() const { return n_; }
  const GroupRingElement& coeff(int i) const;
  const std::vector<GroupRingElement>& coeffs() const { return coeffs_; }
  const std::optional<FreeWord>& loop() const { return loop_; }
  bool is_zero() const;

  HomologyClassY& operator+=(const HomologyClassY& v);
  HomologyClassY& operator-=(const HomologyClassY& v);
  friend HomologyClassY operator+(HomologyClassY a, const HomologyClassY& b) { return a += b; }
  friend HomologyClassY operator-(HomologyClassY a, const HomologyClassY& b) { return a -= b; }
  /// r * v (left scalar multiplication); the result has no loop word.
  friend HomologyClassY operator*(const GroupRingElement& r, const HomologyClassY& v);
  friend bool operator==(const HomologyClassY& a, const HomologyClassY& b) { return a.coeffs_ == b.coeffs_; }

 private:
  int n_;
  std::vector<GroupRingElement> coeffs_;
  std::optional<FreeWord> loop_;
};

/// d(w) with d(x_i) = e_i and d(uv) = d(u) v + d(v).
HomologyClassX fox_x(const FreeWord& w);
/// e(w) with e(y_i) = f_i and e(uv) = u e(v) + e(u); w is given in the x basis.
HomologyClassY fox_y(const FreeWord& w);

/// [w]_x -> e(w^-1). Throws MissingProvenance for classes without a loop word.
HomologyClassY star_x_to_y(const HomologyClassX& v);
/// sum e_i r_i -> sum r_i^* e(x_i^-1), with r^* the group ring involution.
HomologyClassY star_coefficients(const HomologyClassX& v);

/// beta [w]_x beta^-1 = d(beta(w)), computed through the free group.
HomologyClassX left_action(const BraidWord& b, const HomologyClassX& v);
/// beta [u]_y beta^-1 = e(beta(u)).
HomologyClassY conjugate_action(const BraidWord& b, const HomologyClassY& v);

/// "e2*(x4x2^-1 - x2^-1) + e4*x2^-1"; "0" for the zero class.
std::string to_string(const HomologyClassX& v);
/// "(1 - x3^-1)*f1 + x2^-1x1^-1*f3".
std::string to_string(const HomologyClassY& v);

// --- tau-evaluated classes ---------------------------------------------------

/// Components tau(c_1), ..., tau(c_n) (stored 0-based).
using EvaluatedClass = std::vector<MagnusElement>;
using ModClass = std::vector<ModMatrix>;

EvaluatedClass evaluate(const HomologyClassX& v);
EvaluatedClass evaluate(const HomologyClassY& v);

/// tau(d(w)) and tau(e(w)) in O(|w|) matrix products, without expanding the
/// group ring coefficients.
EvaluatedClass fox_x_evaluated(const FreeWord& w);
EvaluatedClass fox_y_evaluated(const FreeWord& w);
ModClass fox_x_mod(const FreeWord& w);
ModClass fox_y_mod(const FreeWord& w);

/// Left B_n action on column vectors of the x module, generator by generator.
EvaluatedClass act_left_matrix(const BraidWord& b, const EvaluatedClass& v);
/// Right B_n action on row vectors of the y module.
EvaluatedClass act_right_matrix(const EvaluatedClass& v, const BraidWord& b);

EvaluatedClass left_multiply(const MagnusElement& m, const EvaluatedClass& v);
EvaluatedClass right_multiply(const EvaluatedClass& v, const MagnusElement& m);

}  // namespace lkb
