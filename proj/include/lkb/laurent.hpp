#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace lkb {

using Integer = boost::multiprecision::cpp_int;

/// Exponent pair of the monomial q^a t^b.
struct Monomial {
  int a = 0;
  int b = 0;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Canonical term order: total degree ascending, then q-degree descending.
inline bool monomial_less(const Monomial& x, const Monomial& y) {
  const int dx = x.a + x.b, dy = y.a + y.b;
  if (dx != dy) return dx < dy;
  return x.a > y.a;
}

struct Term {
  Monomial m;
  Integer c;
};

/// Element of Z[q, 1/q, t, 1/t]. Terms are sorted by monomial_less with no
/// zero coefficients, so the representation is unique.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long long c);  // NOLINT: integers embed implicitly
  LaurentPoly(Integer c);    // NOLINT
  static LaurentPoly monomial(int a, int b, Integer c = 1);
  static LaurentPoly q(int a = 1) { return monomial(a, 0); }
  static LaurentPoly t(int b = 1) { return monomial(0, b); }
  /// Canonicalizes an arbitrary term list (merges duplicates, drops zeros).
  static LaurentPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  /// Single term with coefficient +1 or -1.
  bool is_unit() const;
  /// Coefficient of q^a t^b.
  Integer coeff(int a, int b) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& r);
  LaurentPoly& operator-=(const LaurentPoly& r);
  LaurentPoly& operator*=(const LaurentPoly& r) { return *this = *this * r; }
  friend LaurentPoly operator+(LaurentPoly p, const LaurentPoly& r) { return p += r; }
  friend LaurentPoly operator-(LaurentPoly p, const LaurentPoly& r) { return p -= r; }
  friend LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& r);
  /// this += a * b without a temporary for the product.
  void add_product(const LaurentPoly& a, const LaurentPoly& b);

  friend bool operator==(const LaurentPoly& p, const LaurentPoly& r);

  /// Value at q = qv, t = tv modulo modp::P; qv and tv must be nonzero.
  std::uint64_t eval_mod(std::uint64_t qv, std::uint64_t tv) const;

 private:
  std::vector<Term> terms_;
};

inline bool is_zero(const LaurentPoly& p) { return p.is_zero(); }

/// "1 - q + q*t", "-q^-1*t^2", "0".
std::string to_string(const LaurentPoly& p);
/// Inverse of to_string; also accepts "qt", "q^2 t", "3q", spaces anywhere.
LaurentPoly parse_laurent(std::string_view text);

}  // namespace lkb
