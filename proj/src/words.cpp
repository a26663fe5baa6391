#include "lkb/words.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

#include "lkb/error.hpp"

namespace lkb {

namespace {

void check_braid_letters(int n, std::span<const Letter> letters) {
  if (n < 1) throw DimensionError("braid strand count must be >= 1");
  for (const auto& l : letters) {
    if (l.index < 1 || l.index > n - 1)
      throw DimensionError("braid generator index " + std::to_string(l.index) +
                           " outside 1.." + std::to_string(n - 1));
    if (l.sign != 1 && l.sign != -1) throw DimensionError("letter sign must be +1 or -1");
  }
}

void check_free_letters(int n, std::span<const Letter> letters) {
  if (n < 1) throw DimensionError("free group rank must be >= 1");
  for (const auto& l : letters) {
    if (l.index < 1 || l.index > n)
      throw DimensionError("free generator index " + std::to_string(l.index) +
                           " outside 1.." + std::to_string(n));
    if (l.sign != 1 && l.sign != -1) throw DimensionError("letter sign must be +1 or -1");
  }
}

std::vector<Letter> reduce(std::span<const Letter> letters) {
  std::vector<Letter> out;
  out.reserve(letters.size());
  for (const auto& l : letters) detail::push_reduced(out, l);
  return out;
}

std::strong_ordering shortlex(std::span<const Letter> a, std::span<const Letter> b) {
  if (a.size() != b.size()) return a.size() <=> b.size();
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k].index != b[k].index) return a[k].index <=> b[k].index;
    // positive letter sorts before its inverse
    if (a[k].sign != b[k].sign) return b[k].sign <=> a[k].sign;
  }
  return std::strong_ordering::equal;
}

bool is_separator(char c) { return std::isspace(static_cast<unsigned char>(c)) || c == ',' || c == '*'; }

int parse_int(std::string_view s, std::string_view context) {
  int value = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (!s.empty() && s.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last)
    throw ParseError("malformed integer '" + std::string(s) + "' in " + std::string(context));
  return value;
}

// Scans "<prefix>K" optionally followed by "^E"; returns (K, E) and advances pos.
std::pair<int, int> scan_symbol(std::string_view text, std::size_t& pos, std::string_view context) {
  ++pos;  // prefix letter
  std::size_t start = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  int index = parse_int(text.substr(start, pos - start), context);
  int exponent = 1;
  if (pos < text.size() && text[pos] == '^') {
    ++pos;
    bool braced = pos < text.size() && text[pos] == '{';
    if (braced) ++pos;
    start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    exponent = parse_int(text.substr(start, pos - start), context);
    if (braced) {
      if (pos >= text.size() || text[pos] != '}') throw ParseError("unterminated exponent in " + std::string(context));
      ++pos;
    }
  }
  return {index, exponent};
}

void append_power(std::vector<Letter>& out, int index, int exponent) {
  const int sign = exponent < 0 ? -1 : 1;
  for (int k = 0; k < std::abs(exponent); ++k) out.push_back({index, sign});
}

}  // namespace

// --- BraidWord ---------------------------------------------------------------

BraidWord::BraidWord(int n) : n_(n) { check_braid_letters(n, {}); }

BraidWord::BraidWord(int n, std::span<const Letter> letters) : n_(n) {
  check_braid_letters(n, letters);
  letters_ = reduce(letters);
}

BraidWord BraidWord::generator(int n, int i, int sign) { return BraidWord(n, {Letter{i, sign}}); }

BraidWord BraidWord::inverse() const {
  BraidWord r(n_);
  r.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) r.letters_.push_back(it->inverse());
  return r;
}

BraidWord BraidWord::power(int e) const {
  BraidWord base = e < 0 ? inverse() : *this;
  BraidWord r(n_);
  for (int k = 0; k < std::abs(e); ++k) r = r * base;
  return r;
}

BraidWord BraidWord::embed(int m) const {
  if (m < n_) throw DimensionError("cannot embed a braid into fewer strands");
  return BraidWord(m, letters_);
}

BraidWord operator*(const BraidWord& a, const BraidWord& b) {
  if (a.n_ != b.n_) throw DimensionError("braid strand counts differ");
  BraidWord r = a;
  for (const auto& l : b.letters_) detail::push_reduced(r.letters_, l);
  return r;
}

std::strong_ordering operator<=>(const BraidWord& a, const BraidWord& b) {
  if (a.n_ != b.n_) return a.n_ <=> b.n_;
  return shortlex(a.letters_, b.letters_);
}

// --- FreeWord ----------------------------------------------------------------

FreeWord::FreeWord(int n) : n_(n) { check_free_letters(n, {}); }

FreeWord::FreeWord(int n, std::span<const Letter> letters) : n_(n) {
  check_free_letters(n, letters);
  letters_ = reduce(letters);
}

FreeWord FreeWord::generator(int n, int i, int sign) { return FreeWord(n, {Letter{i, sign}}); }

FreeWord FreeWord::inverse() const {
  FreeWord r(n_);
  r.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) r.letters_.push_back(it->inverse());
  return r;
}

FreeWord FreeWord::subword(std::size_t pos, std::size_t count) const {
  FreeWord r(n_);
  if (pos >= letters_.size()) return r;
  count = std::min(count, letters_.size() - pos);
  r.letters_.assign(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                    letters_.begin() + static_cast<std::ptrdiff_t>(pos + count));
  return r;
}

int FreeWord::exponent(int i) const {
  int s = 0;
  for (const auto& l : letters_)
    if (l.index == i) s += l.sign;
  return s;
}

int FreeWord::degree() const {
  int s = 0;
  for (const auto& l : letters_) s += l.sign;
  return s;
}

FreeWord operator*(const FreeWord& a, const FreeWord& b) {
  if (a.n_ != b.n_) throw DimensionError("free group ranks differ");
  FreeWord r = a;
  r.letters_.reserve(a.letters_.size() + b.letters_.size());
  for (const auto& l : b.letters_) detail::push_reduced(r.letters_, l);
  return r;
}

std::strong_ordering operator<=>(const FreeWord& a, const FreeWord& b) {
  if (a.n_ != b.n_) return a.n_ <=> b.n_;
  return shortlex(a.letters_, b.letters_);
}

std::size_t FreeWordHash::operator()(const FreeWord& w) const noexcept {
  std::size_t h = static_cast<std::size_t>(w.rank()) * 0x9e3779b97f4a7c15ULL;
  for (const auto& l : w.letters()) {
    const std::size_t v = static_cast<std::size_t>(l.index * 2 + (l.sign > 0 ? 0 : 1));
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

// --- text --------------------------------------------------------------------

BraidWord parse_braid(std::string_view text, int n) {
  std::vector<Letter> letters;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const char c = text[pos];
    if (is_separator(c)) {
      ++pos;
    } else if (c == 's' || c == 'S') {
      auto [index, exponent] = scan_symbol(text, pos, "braid word");
      append_power(letters, index, exponent);
    } else if (c == '-' || c == '+' || std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos++;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      const int k = parse_int(text.substr(start, pos - start), "braid word");
      if (k == 0) throw ParseError("braid generator 0 does not exist");
      letters.push_back({std::abs(k), k < 0 ? -1 : 1});
    } else {
      throw ParseError(std::string("unexpected character '") + c + "' in braid word");
    }
  }
  return BraidWord(n, letters);
}

FreeWord parse_free(std::string_view text, int n) {
  std::vector<Letter> letters;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const char c = text[pos];
    if (is_separator(c)) {
      ++pos;
    } else if (c == 'x' || c == 'X') {
      auto [index, exponent] = scan_symbol(text, pos, "free word");
      append_power(letters, index, exponent);
    } else if (c == '1' && (pos + 1 == text.size() || is_separator(text[pos + 1]))) {
      ++pos;  // explicit identity
    } else {
      throw ParseError(std::string("unexpected character '") + c + "' in free word");
    }
  }
  return FreeWord(n, letters);
}

std::string format_braid(const BraidWord& b) {
  std::string out;
  for (const auto& l : b.letters()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(l.sign * l.index);
  }
  return out;
}

std::string format_free(const FreeWord& w) {
  if (w.empty()) return "1";
  std::string out;
  for (const auto& l : w.letters()) {
    out += 'x';
    out += std::to_string(l.index);
    if (l.sign < 0) out += "^-1";
  }
  return out;
}

// --- action ------------------------------------------------------------------

namespace {

// sigma_i^sign (x_j) as letters.
void generator_image(int i, int sign, int j, std::vector<Letter>& out) {
  out.clear();
  if (sign > 0) {
    if (j == i)
      out = {{i + 1, 1}};
    else if (j == i + 1)
      out = {{i + 1, -1}, {i, 1}, {i + 1, 1}};
    else
      out = {{j, 1}};
  } else {
    if (j == i + 1)
      out = {{i, 1}};
    else if (j == i)
      out = {{i, 1}, {i + 1, 1}, {i, -1}};
    else
      out = {{j, 1}};
  }
}

void append_image(std::vector<Letter>& out, const FreeWord& image, int sign) {
  const auto ls = image.letters();
  if (sign > 0) {
    for (const auto& l : ls) detail::push_reduced(out, l);
  } else {
    for (auto it = ls.rbegin(); it != ls.rend(); ++it) detail::push_reduced(out, it->inverse());
  }
}

}  // namespace

FreeWord substitute(const std::vector<FreeWord>& images, const FreeWord& w) {
  std::vector<Letter> out;
  for (const auto& l : w.letters()) append_image(out, images.at(static_cast<std::size_t>(l.index - 1)), l.sign);
  return FreeWord(w.rank(), out);
}

std::vector<FreeWord> generator_images(const BraidWord& b) {
  const int n = b.strands();
  std::vector<FreeWord> table;
  table.reserve(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) table.push_back(FreeWord::generator(n, k));
  // table = g_1 o ... o g_m after consuming g_m; extend by composing on the right.
  std::vector<Letter> img;
  for (const auto& g : b.letters()) {
    std::vector<FreeWord> next;
    next.reserve(table.size());
    for (int k = 1; k <= n; ++k) {
      generator_image(g.index, g.sign, k, img);
      std::vector<Letter> out;
      for (const auto& l : img) append_image(out, table[static_cast<std::size_t>(l.index - 1)], l.sign);
      next.emplace_back(n, out);
    }
    table = std::move(next);
  }
  return table;
}

FreeWord act(const BraidWord& b, const FreeWord& w) {
  if (b.strands() != w.rank())
    throw DimensionError("braid on " + std::to_string(b.strands()) + " strands cannot act on F_" +
                         std::to_string(w.rank()));
  if (b.empty()) return w;
  return substitute(generator_images(b), w);
}

FreeWord y_basis_word(int i, int n) {
  if (i < 1 || i > n) throw DimensionError("y-basis index " + std::to_string(i) + " outside 1.." + std::to_string(n));
  std::vector<Letter> letters;
  for (int k = 1; k < i; ++k) letters.push_back({k, 1});
  letters.push_back({i, -1});
  for (int k = i - 1; k >= 1; --k) letters.push_back({k, -1});
  return FreeWord(n, letters);
}

FreeWord x_prefix(int k, int n) {
  if (k < 0 || k > n) throw DimensionError("prefix length outside 0..n");
  std::vector<Letter> letters;
  for (int j = 1; j <= k; ++j) letters.push_back({j, 1});
  return FreeWord(n, letters);
}

int exponent_sum(const BraidWord& b) {
  int s = 0;
  for (const auto& l : b.letters()) s += l.sign;
  return s;
}

std::vector<int> permutation(const BraidWord& b) {
  // position[p] = strand currently at position p (1-based strands)
  std::vector<int> at_position(static_cast<std::size_t>(b.strands()));
  std::iota(at_position.begin(), at_position.end(), 1);
  for (const auto& l : b.letters())
    std::swap(at_position[static_cast<std::size_t>(l.index - 1)], at_position[static_cast<std::size_t>(l.index)]);
  std::vector<int> end_of(at_position.size());
  for (std::size_t p = 0; p < at_position.size(); ++p)
    end_of[static_cast<std::size_t>(at_position[p] - 1)] = static_cast<int>(p) + 1;
  return end_of;
}

}  // namespace lkb
