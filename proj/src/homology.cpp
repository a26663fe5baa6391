#include "lkb/homology.hpp"

#include <algorithm>

#include "lkb/error.hpp"

namespace lkb {

namespace {

void check_index(int n, int i) {
  if (i < 1 || i > n) throw DimensionError("basis index " + std::to_string(i) + " outside 1.." + std::to_string(n));
}

void check_coeffs(int n, const std::vector<GroupRingElement>& coeffs) {
  if (n < 1 || coeffs.size() != static_cast<std::size_t>(n)) throw DimensionError("class needs exactly n coefficients");
  for (const auto& c : coeffs)
    if (c.rank() != n) throw DimensionError("coefficient of a different rank");
}

std::vector<GroupRingElement> zeros(int n) { return std::vector<GroupRingElement>(static_cast<std::size_t>(n), GroupRingElement(n)); }

}  // namespace

// --- classes -----------------------------------------------------------------

HomologyClassX::HomologyClassX(int n) : n_(n), coeffs_(zeros(n)) {}

HomologyClassX::HomologyClassX(std::vector<GroupRingElement> coeffs, std::optional<FreeWord> loop)
    : n_(static_cast<int>(coeffs.size())), coeffs_(std::move(coeffs)), loop_(std::move(loop)) {
  check_coeffs(n_, coeffs_);
  if (loop_ && loop_->rank() != n_) throw DimensionError("loop word of a different rank");
}

HomologyClassX HomologyClassX::basis(int n, int i) { return fox_x(FreeWord::generator(n, i)); }

const GroupRingElement& HomologyClassX::coeff(int i) const {
  check_index(n_, i);
  return coeffs_[static_cast<std::size_t>(i - 1)];
}

bool HomologyClassX::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

HomologyClassX& HomologyClassX::operator+=(const HomologyClassX& v) {
  if (v.n_ != n_) throw DimensionError("classes of different rank");
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += v.coeffs_[k];
  loop_.reset();
  return *this;
}

HomologyClassX& HomologyClassX::operator-=(const HomologyClassX& v) {
  if (v.n_ != n_) throw DimensionError("classes of different rank");
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= v.coeffs_[k];
  loop_.reset();
  return *this;
}

HomologyClassX operator*(const HomologyClassX& v, const GroupRingElement& r) {
  std::vector<GroupRingElement> out;
  for (const auto& c : v.coeffs_) out.push_back(c * r);
  return HomologyClassX(std::move(out));
}

HomologyClassY::HomologyClassY(int n) : n_(n), coeffs_(zeros(n)) {}

HomologyClassY::HomologyClassY(std::vector<GroupRingElement> coeffs, std::optional<FreeWord> loop)
    : n_(static_cast<int>(coeffs.size())), coeffs_(std::move(coeffs)), loop_(std::move(loop)) {
  check_coeffs(n_, coeffs_);
  if (loop_ && loop_->rank() != n_) throw DimensionError("loop word of a different rank");
}

HomologyClassY HomologyClassY::basis(int n, int i) { return fox_y(y_basis_word(i, n)); }

const GroupRingElement& HomologyClassY::coeff(int i) const {
  check_index(n_, i);
  return coeffs_[static_cast<std::size_t>(i - 1)];
}

bool HomologyClassY::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

HomologyClassY& HomologyClassY::operator+=(const HomologyClassY& v) {
  if (v.n_ != n_) throw DimensionError("classes of different rank");
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += v.coeffs_[k];
  loop_.reset();
  return *this;
}

HomologyClassY& HomologyClassY::operator-=(const HomologyClassY& v) {
  if (v.n_ != n_) throw DimensionError("classes of different rank");
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= v.coeffs_[k];
  loop_.reset();
  return *this;
}

HomologyClassY operator*(const GroupRingElement& r, const HomologyClassY& v) {
  std::vector<GroupRingElement> out;
  for (const auto& c : v.coeffs_) out.push_back(r * c);
  return HomologyClassY(std::move(out));
}

// --- Fox derivatives ---------------------------------------------------------

HomologyClassX fox_x(const FreeWord& w) {
  const int n = w.rank();
  auto coeffs = zeros(n);
  const auto letters = w.letters();
  for (std::size_t k = 0; k < letters.size(); ++k) {
    const auto& l = letters[k];
    auto& c = coeffs[static_cast<std::size_t>(l.index - 1)];
    if (l.sign > 0)
      c.add_term(w.subword(k + 1), 1);
    else
      c.add_term(w.subword(k), -1);
  }
  return HomologyClassX(std::move(coeffs), w);
}

namespace {

// Letters of w rewritten in the y basis: x_i = y_1..y_{i-1} y_i^-1 y_{i-1}^-1..y_1^-1.
std::vector<Letter> to_y_letters(const FreeWord& w) {
  std::vector<Letter> out;
  for (const auto& l : w.letters()) {
    std::vector<Letter> block;
    for (int k = 1; k < l.index; ++k) block.push_back({k, 1});
    block.push_back({l.index, -1});
    for (int k = l.index - 1; k >= 1; --k) block.push_back({k, -1});
    if (l.sign < 0) {
      std::reverse(block.begin(), block.end());
      for (auto& b : block) b = b.inverse();
    }
    out.insert(out.end(), block.begin(), block.end());
  }
  return out;
}

}  // namespace

HomologyClassY fox_y(const FreeWord& w) {
  const int n = w.rank();
  auto coeffs = zeros(n);
  FreeWord prefix(n);
  for (const auto& l : to_y_letters(w)) {
    const FreeWord y = y_basis_word(l.index, n);
    auto& c = coeffs[static_cast<std::size_t>(l.index - 1)];
    if (l.sign > 0) {
      c.add_term(prefix, 1);
      prefix = prefix * y;
    } else {
      prefix = prefix * y.inverse();
      c.add_term(prefix, -1);
    }
  }
  return HomologyClassY(std::move(coeffs), w);
}

HomologyClassY star_x_to_y(const HomologyClassX& v) {
  if (!v.loop()) throw MissingProvenance("the star map needs a class built from a loop word");
  return fox_y(v.loop()->inverse());
}

HomologyClassY star_coefficients(const HomologyClassX& v) {
  const int n = v.rank();
  HomologyClassY out(n);
  for (int i = 1; i <= n; ++i) {
    const auto& r = v.coeff(i);
    if (r.is_zero()) continue;
    out += r.involution() * fox_y(FreeWord::generator(n, i, -1));
  }
  return out;
}

HomologyClassX left_action(const BraidWord& b, const HomologyClassX& v) {
  if (b.strands() != v.rank()) throw DimensionError("braid and class have different n");
  if (!v.loop()) throw MissingProvenance("the free-group action needs a class built from a loop word");
  return fox_x(act(b, *v.loop()));
}

HomologyClassY conjugate_action(const BraidWord& b, const HomologyClassY& v) {
  if (b.strands() != v.rank()) throw DimensionError("braid and class have different n");
  if (!v.loop()) throw MissingProvenance("the free-group action needs a class built from a loop word");
  return fox_y(act(b, *v.loop()));
}

// --- text --------------------------------------------------------------------

namespace {

std::string coefficient_text(const GroupRingElement& c) {
  if (c.terms().size() == 1) {
    const auto& [w, k] = *c.terms().begin();
    if (k == 1) return w.empty() ? "" : format_free(w);
    if (k == -1) return "-" + (w.empty() ? std::string("1") : format_free(w));
  }
  return "(" + to_string(c) + ")";
}

template <class Class, class Join>
std::string class_text(const Class& v, Join join) {
  std::string out;
  for (int i = 1; i <= v.rank(); ++i) {
    const auto& c = v.coeff(i);
    if (c.is_zero()) continue;
    std::string piece = join(i, coefficient_text(c));
    if (!out.empty()) {
      if (piece.front() == '-')
        piece = " - " + piece.substr(1);
      else
        piece = " + " + piece;
    }
    out += piece;
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::string to_string(const HomologyClassX& v) {
  return class_text(v, [](int i, const std::string& c) {
    const std::string e = "e" + std::to_string(i);
    if (c.empty()) return e;
    if (c.front() == '-') return "-" + e + "*" + c.substr(1);
    return e + "*" + c;
  });
}

std::string to_string(const HomologyClassY& v) {
  return class_text(v, [](int i, const std::string& c) {
    const std::string f = "f" + std::to_string(i);
    if (c.empty()) return f;
    return c + "*" + f;
  });
}

// --- evaluation --------------------------------------------------------------

namespace {

template <class Class>
EvaluatedClass evaluate_class(const Class& v) {
  EvaluatedClass out;
  for (const auto& c : v.coeffs()) out.push_back(tau(c));
  return out;
}

// Generic routes over PolyMatrix / ModMatrix. Ops supplies identity(), zero(),
// x(j, sign) and y(j, sign).
template <class M, class Ops>
std::vector<M> fox_x_generic(const FreeWord& w, const Ops& ops) {
  const int n = w.rank();
  std::vector<M> out(static_cast<std::size_t>(n), ops.zero());
  const auto letters = w.letters();
  M suffix = ops.identity();
  for (std::size_t k = letters.size(); k-- > 0;) {
    const auto& l = letters[k];
    auto& c = out[static_cast<std::size_t>(l.index - 1)];
    if (l.sign > 0) {
      c += suffix;
      suffix = ops.x(l.index, 1) * suffix;
    } else {
      suffix = ops.x(l.index, -1) * suffix;
      c -= suffix;
    }
  }
  return out;
}

template <class M, class Ops>
std::vector<M> fox_y_generic(const FreeWord& w, const Ops& ops) {
  const int n = w.rank();
  std::vector<M> out(static_cast<std::size_t>(n), ops.zero());
  M prefix = ops.identity();
  for (const auto& l : to_y_letters(w)) {
    auto& c = out[static_cast<std::size_t>(l.index - 1)];
    if (l.sign > 0) {
      c += prefix;
      prefix = prefix * ops.y(l.index, 1);
    } else {
      prefix = prefix * ops.y(l.index, -1);
      c -= prefix;
    }
  }
  return out;
}

struct PolyOps {
  const MagnusTable& tbl;
  MagnusElement identity() const { return MagnusElement::identity(static_cast<std::size_t>(tbl.n + 1)); }
  MagnusElement zero() const { return MagnusElement::zero(static_cast<std::size_t>(tbl.n + 1)); }
  const MagnusElement& x(int j, int s) const { return tbl.gen_x(j, s); }
  const MagnusElement& y(int j, int s) const { return tbl.gen_y(j, s); }
};

struct ModOps {
  const MagnusTable& tbl;
  ModMatrix identity() const { return ModMatrix::identity(static_cast<std::size_t>(tbl.n + 1)); }
  ModMatrix zero() const { return ModMatrix(static_cast<std::size_t>(tbl.n + 1)); }
  const ModMatrix& x(int j, int s) const { return tbl.gen_x_mod(j, s); }
  const ModMatrix& y(int j, int s) const { return tbl.gen_y_mod(j, s); }
};

void check_class_size(const EvaluatedClass& v, int n) {
  if (v.size() != static_cast<std::size_t>(n)) throw DimensionError("evaluated class has the wrong number of components");
}

}  // namespace

EvaluatedClass evaluate(const HomologyClassX& v) { return evaluate_class(v); }
EvaluatedClass evaluate(const HomologyClassY& v) { return evaluate_class(v); }

EvaluatedClass fox_x_evaluated(const FreeWord& w) {
  return fox_x_generic<MagnusElement>(w, PolyOps{magnus_table(w.rank())});
}
EvaluatedClass fox_y_evaluated(const FreeWord& w) {
  return fox_y_generic<MagnusElement>(w, PolyOps{magnus_table(w.rank())});
}
ModClass fox_x_mod(const FreeWord& w) { return fox_x_generic<ModMatrix>(w, ModOps{magnus_table(w.rank())}); }
ModClass fox_y_mod(const FreeWord& w) { return fox_y_generic<ModMatrix>(w, ModOps{magnus_table(w.rank())}); }

EvaluatedClass act_left_matrix(const BraidWord& b, const EvaluatedClass& v) {
  const int n = b.strands();
  check_class_size(v, n);
  const auto& tbl = magnus_table(n);
  const MagnusElement one = MagnusElement::identity(static_cast<std::size_t>(n + 1));
  EvaluatedClass m = v;
  const auto letters = b.letters();
  for (std::size_t k = letters.size(); k-- > 0;) {
    const int i = letters[k].index;
    const auto I = static_cast<std::size_t>(i - 1);
    if (letters[k].sign > 0) {
      const MagnusElement& s = tbl.sig(i, 1);
      EvaluatedClass next(m.size());
      for (std::size_t j = 0; j < m.size(); ++j)
        if (j != I && j != I + 1) next[j] = s * m[j];
      next[I] = s * tbl.gen_x(i, 1) * m[I + 1];
      next[I + 1] = s * (m[I] + (one - tbl.gen_x(i + 1, 1)) * m[I + 1]);
      m = std::move(next);
    } else {
      const MagnusElement& s_inv = tbl.sig(i, -1);
      EvaluatedClass next(m.size());
      for (std::size_t j = 0; j < m.size(); ++j)
        if (j != I && j != I + 1) next[j] = s_inv * m[j];
      next[I + 1] = tbl.gen_x(i, -1) * s_inv * m[I];
      next[I] = s_inv * m[I + 1] - (one - tbl.gen_x(i + 1, 1)) * next[I + 1];
      m = std::move(next);
    }
  }
  return m;
}

EvaluatedClass act_right_matrix(const EvaluatedClass& v, const BraidWord& b) {
  const int n = b.strands();
  check_class_size(v, n);
  const auto& tbl = magnus_table(n);
  const MagnusElement one = MagnusElement::identity(static_cast<std::size_t>(n + 1));
  EvaluatedClass c = v;
  for (const auto& l : b.letters()) {
    const int i = l.index;
    const auto I = static_cast<std::size_t>(i - 1);
    EvaluatedClass next(c.size());
    if (l.sign < 0) {
      const MagnusElement& s_inv = tbl.sig(i, -1);
      for (std::size_t j = 0; j < c.size(); ++j)
        if (j != I && j != I + 1) next[j] = c[j] * s_inv;
      next[I] = (c[I] * (one - tbl.gen_y(i, 1)) + c[I + 1]) * s_inv;
      next[I + 1] = c[I] * tbl.gen_y(i + 1, 1) * s_inv;
    } else {
      const MagnusElement& s = tbl.sig(i, 1);
      for (std::size_t j = 0; j < c.size(); ++j)
        if (j != I && j != I + 1) next[j] = c[j] * s;
      next[I] = c[I + 1] * s * tbl.gen_y(i + 1, -1);
      next[I + 1] = c[I] * s - next[I] * (one - tbl.gen_y(i, 1));
    }
    c = std::move(next);
  }
  return c;
}

EvaluatedClass left_multiply(const MagnusElement& m, const EvaluatedClass& v) {
  EvaluatedClass out;
  out.reserve(v.size());
  for (const auto& c : v) out.push_back(m * c);
  return out;
}

EvaluatedClass right_multiply(const EvaluatedClass& v, const MagnusElement& m) {
  EvaluatedClass out;
  out.reserve(v.size());
  for (const auto& c : v) out.push_back(c * m);
  return out;
}

}  // namespace lkb
