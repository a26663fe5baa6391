#include "lkb/group_ring.hpp"

#include <cctype>

#include "lkb/error.hpp"

namespace lkb {

GroupRingElement::GroupRingElement(const FreeWord& w, Integer c) : n_(w.rank()) {
  if (c != 0) terms_.emplace(w, std::move(c));
}

Integer GroupRingElement::coeff(const FreeWord& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Integer(0) : it->second;
}

void GroupRingElement::add_term(const FreeWord& w, const Integer& c) {
  if (w.rank() != n_) throw DimensionError("group ring term of different rank");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

GroupRingElement GroupRingElement::involution() const {
  GroupRingElement out(n_);
  for (const auto& [w, c] : terms_) out.terms_.emplace(w.inverse(), c);
  return out;
}

Integer GroupRingElement::augmentation() const {
  Integer s = 0;
  for (const auto& [w, c] : terms_) s += c;
  return s;
}

GroupRingElement GroupRingElement::operator-() const {
  GroupRingElement out = *this;
  for (auto& [w, c] : out.terms_) c = -c;
  return out;
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& r) {
  if (r.n_ != n_) throw DimensionError("group ring ranks differ");
  for (const auto& [w, c] : r.terms_) add_term(w, c);
  return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& r) {
  if (r.n_ != n_) throw DimensionError("group ring ranks differ");
  for (const auto& [w, c] : r.terms_) add_term(w, -c);
  return *this;
}

GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
  if (a.n_ != b.n_) throw DimensionError("group ring ranks differ");
  GroupRingElement out(a.n_);
  for (const auto& [u, c] : a.terms_)
    for (const auto& [v, d] : b.terms_) out.add_term(u * v, c * d);
  return out;
}

std::string to_string(const GroupRingElement& r) {
  if (r.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : r.terms()) {
    const bool neg = c < 0;
    const Integer mag = neg ? Integer(-c) : c;
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    first = false;
    if (w.empty())
      out += mag.str();
    else if (mag == 1)
      out += format_free(w);
    else
      out += mag.str() + "*" + format_free(w);
  }
  return out;
}

GroupRingElement parse_group_ring(std::string_view text, int n) {
  GroupRingElement out(n);
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip();
  if (text.substr(pos) == "0") return out;
  bool first = true;
  while (true) {
    skip();
    if (pos >= text.size()) break;
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip();
    } else if (!first) {
      throw ParseError("group ring element: expected '+' or '-'");
    }
    first = false;
    Integer c = sign;
    bool coefficient = false;
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos > start) {
      c *= Integer(std::string(text.substr(start, pos - start)));
      coefficient = true;
      skip();
      if (pos < text.size() && text[pos] == '*') ++pos;
      skip();
    }
    start = pos;
    while (pos < text.size() && text[pos] != '+' && text[pos] != '-') {
      if (text[pos] == '^') {
        ++pos;
        if (pos < text.size() && text[pos] == '-') ++pos;
        continue;
      }
      ++pos;
    }
    std::string_view word = text.substr(start, pos - start);
    while (!word.empty() && std::isspace(static_cast<unsigned char>(word.back()))) word.remove_suffix(1);
    if (word.empty() && !coefficient) throw ParseError("group ring element: empty term");
    out.add_term(parse_free(word, n), c);
  }
  return out;
}

}  // namespace lkb
