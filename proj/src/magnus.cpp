#include "lkb/magnus.hpp"

#include <cctype>
#include <map>
#include <memory>
#include <mutex>

#include "lkb/error.hpp"

namespace lkb {

namespace {

using P = LaurentPoly;

P mono(int a, int b, long long c = 1) { return P::monomial(a, b, c); }

void check_sigma(int n, int i) {
  if (n < 1 || i < 1 || i > n - 1)
    throw DimensionError("sigma index " + std::to_string(i) + " outside 1.." + std::to_string(n - 1));
}

void check_x(int n, int j) {
  if (n < 1 || j < 1 || j > n)
    throw DimensionError("x index " + std::to_string(j) + " outside 1.." + std::to_string(n));
}

MagnusElement tau_x_inverse(int n, int j) {
  const auto size = static_cast<std::size_t>(n + 1);
  const auto J = static_cast<std::size_t>(j);
  MagnusElement m = MagnusElement::scalar(size, P::q(-1));
  m(0, 0) = mono(-1, 0) - mono(-1, -1) + mono(-2, -1);
  for (std::size_t c = 1; c < J; ++c) m(0, c) = mono(0, -1) - mono(-1, -1, 2) + mono(-2, -1);
  m(0, J) = mono(0, -1) - mono(-1, -1);
  m(J, 0) = mono(-2, 0) - mono(-2, -1);
  for (std::size_t c = 1; c < J; ++c) m(J, c) = -mono(-1, 0) + mono(-1, -1) + mono(-2, 0) - mono(-2, -1);
  m(J, J) = mono(-1, -1);
  return m;
}

}  // namespace

// --- B_{1,n} words -------------------------------------------------------------

B1nWord::B1nWord(int n, std::vector<B1nLetter> letters) : n_(n), letters_(std::move(letters)) {
  for (const auto& l : letters_) {
    if (l.kind == B1nLetter::Kind::Sigma)
      check_sigma(n_, l.index);
    else
      check_x(n_, l.index);
    if (l.sign != 1 && l.sign != -1) throw DimensionError("letter sign must be +1 or -1");
  }
}

B1nWord B1nWord::from(const BraidWord& b) {
  B1nWord w(b.strands());
  for (const auto& l : b.letters()) w.letters_.push_back({B1nLetter::Kind::Sigma, l.index, l.sign});
  return w;
}

B1nWord B1nWord::from(const FreeWord& f) {
  B1nWord w(f.rank());
  for (const auto& l : f.letters()) w.letters_.push_back({B1nLetter::Kind::X, l.index, l.sign});
  return w;
}

B1nWord B1nWord::inverse() const {
  B1nWord w(n_);
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back({it->kind, it->index, -it->sign});
  return w;
}

B1nWord operator*(const B1nWord& a, const B1nWord& b) {
  if (a.n_ != b.n_) throw DimensionError("B_{1,n} words of different n");
  B1nWord w = a;
  w.letters_.insert(w.letters_.end(), b.letters_.begin(), b.letters_.end());
  return w;
}

B1nWord parse_b1n(std::string_view text, int n) {
  std::vector<B1nLetter> letters;
  std::size_t pos = 0;
  auto digits = [&](std::size_t from) {
    std::size_t p = from;
    while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p]))) ++p;
    return p;
  };
  while (pos < text.size()) {
    const char c = text[pos];
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',' || c == '*') {
      ++pos;
      continue;
    }
    B1nLetter::Kind kind = B1nLetter::Kind::Sigma;
    int index = 0, exponent = 1;
    if (c == 's' || c == 'S' || c == 'x' || c == 'X') {
      kind = (c == 's' || c == 'S') ? B1nLetter::Kind::Sigma : B1nLetter::Kind::X;
      std::size_t end = digits(pos + 1);
      if (end == pos + 1) throw ParseError("missing generator index in B_{1,n} word");
      index = std::stoi(std::string(text.substr(pos + 1, end - pos - 1)));
      pos = end;
      if (pos < text.size() && text[pos] == '^') {
        std::size_t start = ++pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        end = digits(pos);
        if (end == pos) throw ParseError("missing exponent in B_{1,n} word");
        exponent = std::stoi(std::string(text.substr(start, end - start)));
        pos = end;
      }
    } else if (c == '-' || c == '+' || std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos;
      if (c == '-' || c == '+') ++pos;
      std::size_t end = digits(pos);
      if (end == pos) throw ParseError("malformed integer in B_{1,n} word");
      int k = std::stoi(std::string(text.substr(start, end - start)));
      if (k == 0) throw ParseError("braid generator 0 does not exist");
      index = std::abs(k);
      exponent = k < 0 ? -1 : 1;
      pos = end;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "' in B_{1,n} word");
    }
    for (int k = 0; k < std::abs(exponent); ++k) letters.push_back({kind, index, exponent < 0 ? -1 : 1});
  }
  return B1nWord(n, std::move(letters));
}

int deg(const B1nWord& w) {
  int s = 0;
  for (const auto& l : w.letters())
    if (l.kind == B1nLetter::Kind::X) s += l.sign;
  return s;
}

// --- generators ----------------------------------------------------------------

MagnusElement rho_sigma(int n, int i, int sign) {
  check_sigma(n, i);
  const auto size = static_cast<std::size_t>(n + 1);
  const auto I = static_cast<std::size_t>(i);
  MagnusElement m = MagnusElement::identity(size);
  if (sign > 0) {
    m(I, I) = 0;
    m(I, I + 1) = P::q();
    m(I + 1, I) = 1;
    m(I + 1, I + 1) = P(1) - P::q();
  } else {
    m(I, I) = P(1) - P::q(-1);
    m(I, I + 1) = 1;
    m(I + 1, I) = P::q(-1);
    m(I + 1, I + 1) = 0;
  }
  return m;
}

MagnusElement rho_x(int n, int j, int sign) {
  check_x(n, j);
  if (sign < 0) return P::q() * tau_x_inverse(n, j);
  const auto size = static_cast<std::size_t>(n + 1);
  const auto J = static_cast<std::size_t>(j);
  const P one_q = P(1) - P::q();
  const P one_t = P(1) - P::t();
  MagnusElement m = MagnusElement::identity(size);
  m(0, 0) = P::q();
  for (std::size_t c = 1; c < J; ++c) m(0, c) = -(one_q * one_q);
  m(0, J) = P::q() * one_q;
  m(J, 0) = one_t;
  for (std::size_t c = 1; c < J; ++c) m(J, c) = one_t * one_q;
  m(J, J) = P(1) - P::q() + P::q() * P::t();
  return m;
}

MagnusElement tau_sigma(int n, int i, int sign) { return rho_sigma(n, i, sign); }

MagnusElement tau_x(int n, int j, int sign) {
  if (sign < 0) {
    check_x(n, j);
    return tau_x_inverse(n, j);
  }
  return P::q() * rho_x(n, j, 1);
}

// --- tables ------------------------------------------------------------------

namespace {

std::unique_ptr<MagnusTable> build_table(int n) {
  auto tbl = std::make_unique<MagnusTable>();
  tbl->n = n;
  const auto N = static_cast<std::size_t>(n);
  const std::size_t size = N + 1;
  tbl->sigma.resize(N + 1);
  tbl->x.resize(N + 1);
  tbl->y.resize(N + 1);
  tbl->sigma_mod.resize(N + 1);
  tbl->x_mod.resize(N + 1);
  tbl->y_mod.resize(N + 1);
  for (int i = 1; i < n; ++i) tbl->sigma[i] = {rho_sigma(n, i, 1), rho_sigma(n, i, -1)};
  for (int j = 1; j <= n; ++j) tbl->x[j] = {tau_x(n, j, 1), tau_x(n, j, -1)};
  tbl->prefix.push_back(MagnusElement::identity(size));
  for (int k = 1; k <= n; ++k) tbl->prefix.push_back(tbl->prefix.back() * tbl->x[k][0]);
  // prefix inverses: (x_1..x_k)^-1 = x_k^-1 ... x_1^-1
  std::vector<MagnusElement> prefix_inv{MagnusElement::identity(size)};
  for (int k = 1; k <= n; ++k) prefix_inv.push_back(tbl->x[k][1] * prefix_inv.back());
  for (int j = 1; j <= n; ++j) {
    const auto J = static_cast<std::size_t>(j);
    // y_j = (x_1..x_{j-1}) x_j^-1 (x_1..x_{j-1})^-1
    tbl->y[J] = {tbl->prefix[J - 1] * tbl->x[J][1] * prefix_inv[J - 1],
                 tbl->prefix[J - 1] * tbl->x[J][0] * prefix_inv[J - 1]};
  }
  tbl->t.resize(N + 1);
  tbl->t_mod.resize(N + 1);
  for (std::size_t i = 1; i <= N; ++i) tbl->t[i] = tbl->prefix[i] - tbl->prefix[i - 1];

  auto mod = [](const MagnusElement& m) { return ModMatrix::from(m, kModQ, kModT); };
  for (std::size_t i = 1; i < N; ++i) tbl->sigma_mod[i] = {mod(tbl->sigma[i][0]), mod(tbl->sigma[i][1])};
  for (std::size_t j = 1; j <= N; ++j) {
    tbl->x_mod[j] = {mod(tbl->x[j][0]), mod(tbl->x[j][1])};
    tbl->y_mod[j] = {mod(tbl->y[j][0]), mod(tbl->y[j][1])};
    tbl->t_mod[j] = mod(tbl->t[j]);
  }
  return tbl;
}

}  // namespace

const MagnusTable& magnus_table(int n) {
  if (n < 1) throw DimensionError("n must be >= 1");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<MagnusTable>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[n];
  if (!slot) slot = build_table(n);
  return *slot;
}

// --- word images -------------------------------------------------------------

MagnusElement tau(const BraidWord& b) {
  const auto& tbl = magnus_table(b.strands());
  MagnusElement m = MagnusElement::identity(static_cast<std::size_t>(b.strands() + 1));
  for (const auto& l : b.letters()) m = m * tbl.sig(l.index, l.sign);
  return m;
}

MagnusElement tau(const FreeWord& w) {
  const auto& tbl = magnus_table(w.rank());
  MagnusElement m = MagnusElement::identity(static_cast<std::size_t>(w.rank() + 1));
  for (const auto& l : w.letters()) m = m * tbl.gen_x(l.index, l.sign);
  return m;
}

MagnusElement tau(const B1nWord& w) {
  const auto& tbl = magnus_table(w.strands());
  MagnusElement m = MagnusElement::identity(static_cast<std::size_t>(w.strands() + 1));
  for (const auto& l : w.letters())
    m = m * (l.kind == B1nLetter::Kind::Sigma ? tbl.sig(l.index, l.sign) : tbl.gen_x(l.index, l.sign));
  return m;
}

MagnusElement tau(const GroupRingElement& r) {
  MagnusElement m = MagnusElement::zero(static_cast<std::size_t>(r.rank() + 1));
  for (const auto& [w, c] : r.terms()) m += LaurentPoly(c) * tau(w);
  return m;
}

MagnusElement rho(const B1nWord& w) { return P::q(-deg(w)) * tau(w); }

PolyMatrix burau_block(const MagnusElement& m) {
  if (m.rows() < 2 || m.rows() != m.cols()) throw DimensionError("burau_block needs a square Magnus matrix");
  return m.submatrix(1, 1, m.rows() - 1, m.cols() - 1);
}

ModMatrix tau_mod(const FreeWord& w) {
  const auto& tbl = magnus_table(w.rank());
  ModMatrix m = ModMatrix::identity(static_cast<std::size_t>(w.rank() + 1));
  for (const auto& l : w.letters()) m = m * tbl.gen_x_mod(l.index, l.sign);
  return m;
}

ModMatrix tau_mod(const BraidWord& b) {
  const auto& tbl = magnus_table(b.strands());
  ModMatrix m = ModMatrix::identity(static_cast<std::size_t>(b.strands() + 1));
  for (const auto& l : b.letters()) m = m * tbl.sig_mod(l.index, l.sign);
  return m;
}

}  // namespace lkb
