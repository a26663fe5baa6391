#include "lkb/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "lkb/error.hpp"
#include "lkb/modp.hpp"

namespace lkb {

namespace {

void canonicalize(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& x, const Term& y) { return monomial_less(x.m, y.m); });
  std::size_t out = 0;
  for (std::size_t k = 0; k < terms.size();) {
    std::size_t j = k + 1;
    Integer c = std::move(terms[k].c);
    while (j < terms.size() && terms[j].m == terms[k].m) c += terms[j++].c;
    if (c != 0) {
      terms[out].m = terms[k].m;
      terms[out].c = std::move(c);
      ++out;
    }
    k = j;
  }
  terms.resize(out);
}

// Merge of two canonical term lists; sign is applied to r.
std::vector<Term> merge(const std::vector<Term>& p, const std::vector<Term>& r, bool negate) {
  std::vector<Term> out;
  out.reserve(p.size() + r.size());
  std::size_t i = 0, j = 0;
  while (i < p.size() || j < r.size()) {
    if (j == r.size() || (i < p.size() && monomial_less(p[i].m, r[j].m))) {
      out.push_back(p[i++]);
    } else if (i == p.size() || monomial_less(r[j].m, p[i].m)) {
      out.push_back(r[j++]);
      if (negate) out.back().c = -out.back().c;
    } else {
      Integer c = negate ? Integer(p[i].c - r[j].c) : Integer(p[i].c + r[j].c);
      if (c != 0) out.push_back({p[i].m, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

std::uint64_t integer_mod(const Integer& c) {
  static const Integer big(modp::P);
  if (c >= -big && c < big) return modp::from_signed(c.convert_to<long long>());
  Integer r = c % big;
  if (r < 0) r += big;
  return r.convert_to<std::uint64_t>();
}

std::uint64_t power_mod(std::uint64_t v, int e) {
  return e >= 0 ? modp::pow(v, static_cast<std::uint64_t>(e)) : modp::pow(modp::inv(v), static_cast<std::uint64_t>(-e));
}

}  // namespace

LaurentPoly::LaurentPoly(long long c) {
  if (c != 0) terms_.push_back({{0, 0}, Integer(c)});
}

LaurentPoly::LaurentPoly(Integer c) {
  if (c != 0) terms_.push_back({{0, 0}, std::move(c)});
}

LaurentPoly LaurentPoly::monomial(int a, int b, Integer c) {
  LaurentPoly p;
  if (c != 0) p.terms_.push_back({{a, b}, std::move(c)});
  return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  canonicalize(terms);
  LaurentPoly p;
  p.terms_ = std::move(terms);
  return p;
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].m == Monomial{0, 0} && terms_[0].c == 1;
}

bool LaurentPoly::is_unit() const { return terms_.size() == 1 && (terms_[0].c == 1 || terms_[0].c == -1); }

Integer LaurentPoly::coeff(int a, int b) const {
  for (const auto& term : terms_)
    if (term.m == Monomial{a, b}) return term.c;
  return 0;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& term : r.terms_) term.c = -term.c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& r) {
  if (r.terms_.empty()) return *this;
  if (terms_.empty()) return *this = r;
  terms_ = merge(terms_, r.terms_, false);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& r) {
  if (r.terms_.empty()) return *this;
  terms_ = merge(terms_, r.terms_, true);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& r) {
  LaurentPoly out;
  if (p.terms_.empty() || r.terms_.empty()) return out;
  if (p.terms_.size() == 1 && p.terms_[0].m == Monomial{0, 0} && p.terms_[0].c == 1) return r;
  if (r.terms_.size() == 1 && r.terms_[0].m == Monomial{0, 0} && r.terms_[0].c == 1) return p;
  out.terms_.reserve(p.terms_.size() * r.terms_.size());
  for (const auto& x : p.terms_)
    for (const auto& y : r.terms_) out.terms_.push_back({{x.m.a + y.m.a, x.m.b + y.m.b}, x.c * y.c});
  if (p.terms_.size() > 1 && r.terms_.size() > 1) canonicalize(out.terms_);
  return out;
}

void LaurentPoly::add_product(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.terms_.empty() || b.terms_.empty()) return;
  *this += a * b;
}

bool operator==(const LaurentPoly& p, const LaurentPoly& r) {
  if (p.terms_.size() != r.terms_.size()) return false;
  for (std::size_t k = 0; k < p.terms_.size(); ++k)
    if (!(p.terms_[k].m == r.terms_[k].m) || p.terms_[k].c != r.terms_[k].c) return false;
  return true;
}

std::uint64_t LaurentPoly::eval_mod(std::uint64_t qv, std::uint64_t tv) const {
  std::uint64_t acc = 0;
  for (const auto& term : terms_) {
    std::uint64_t v = modp::mul(power_mod(qv, term.m.a), power_mod(tv, term.m.b));
    acc = modp::add(acc, modp::mul(integer_mod(term.c), v));
  }
  return acc;
}

// --- text --------------------------------------------------------------------

namespace {

std::string monomial_text(const Monomial& m) {
  std::string s;
  auto var = [&s](char v, int e) {
    if (e == 0) return;
    if (!s.empty()) s += '*';
    s += v;
    if (e != 1) s += '^' + std::to_string(e);
  };
  var('q', m.a);
  var('t', m.b);
  return s;
}

}  // namespace

std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& term : p.terms()) {
    const bool neg = term.c < 0;
    const Integer mag = neg ? Integer(-term.c) : term.c;
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    first = false;
    const std::string mono = monomial_text(term.m);
    if (mono.empty())
      out += mag.str();
    else if (mag == 1)
      out += mono;
    else
      out += mag.str() + "*" + mono;
  }
  return out;
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view s) : s_(s) {}

  LaurentPoly parse() {
    std::vector<Term> terms;
    skip();
    if (pos_ == s_.size()) throw ParseError("empty polynomial");
    bool first = true;
    while (pos_ < s_.size()) {
      int sign = 1;
      if (s_[pos_] == '+' || s_[pos_] == '-') {
        sign = s_[pos_] == '-' ? -1 : 1;
        ++pos_;
        skip();
      } else if (!first) {
        throw error("expected '+' or '-'");
      }
      first = false;
      terms.push_back(term(sign));
      skip();
    }
    return LaurentPoly::from_terms(std::move(terms));
  }

 private:
  ParseError error(const std::string& what) const {
    return ParseError("polynomial '" + std::string(s_) + "': " + what + " at offset " + std::to_string(pos_));
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool digit() const { return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])); }

  Integer number() {
    std::size_t start = pos_;
    while (digit()) ++pos_;
    return Integer(std::string(s_.substr(start, pos_ - start)));
  }

  int exponent() {
    skip();
    if (pos_ >= s_.size() || s_[pos_] != '^') return 1;
    ++pos_;
    skip();
    bool brace = pos_ < s_.size() && s_[pos_] == '{';
    if (brace) ++pos_;
    int sign = 1;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) sign = s_[pos_++] == '-' ? -1 : 1;
    if (!digit()) throw error("expected exponent");
    std::size_t start = pos_;
    while (digit()) ++pos_;
    int e = 0;
    std::from_chars(s_.data() + start, s_.data() + pos_, e);
    if (brace) {
      if (pos_ >= s_.size() || s_[pos_] != '}') throw error("expected '}'");
      ++pos_;
    }
    return sign * e;
  }

  Term term(int sign) {
    Term out{{0, 0}, Integer(sign)};
    bool any = false;
    while (true) {
      skip();
      if (pos_ >= s_.size()) break;
      const char c = s_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        out.c *= number();
      } else if (c == 'q' || c == 't') {
        ++pos_;
        const int e = exponent();
        (c == 'q' ? out.m.a : out.m.b) += e;
      } else if (c == '*' && any) {
        ++pos_;
        continue;
      } else {
        break;
      }
      any = true;
    }
    if (!any) throw error("expected a term");
    return out;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly parse_laurent(std::string_view text) { return PolyParser(text).parse(); }

}  // namespace lkb
