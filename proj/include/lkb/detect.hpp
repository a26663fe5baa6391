#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lkb/homology.hpp"
#include "lkb/krammer.hpp"
#include "lkb/words.hpp"

namespace lkb {

/// Loop word act(witness_braid, x_generator) together with its class.
struct SimpleClass {
  FreeWord word;
  BraidWord witness_braid;
  int generator = 1;
  HomologyClassX cls;

  int level() const { return static_cast<int>(witness_braid.size()); }
};

/// act(b, x_i) over all freely reduced braid words b of length <= depth and
/// all i, deduplicated by word. Order: braid length, then braid word, then i;
/// each word keeps its first witness.
std::vector<SimpleClass> enumerate_simple(int n, int depth);

enum class DetectionKind { None, ReducePositive, ReduceNegative, Exchange };
std::string to_string(DetectionKind k);

struct DetectionOptions {
  int depth = 3;
  /// Collect every certified witness up to depth instead of stopping at the
  /// first level with a hit.
  bool exhaustive = false;
  /// 0: LKB_THREADS environment variable, else hardware concurrency.
  int threads = 0;
};

struct Witness {
  DetectionKind kind = DetectionKind::None;
  /// One class for reducing moves; (v, w) for exchange moves.
  std::vector<SimpleClass> classes;
  /// Braid length at which the witness was found.
  int level = 0;
  /// Exchange only: 1 for joint pairs (psi x_{n-1}, psi x_n), 2 for
  /// independent pairs.
  int strategy = 0;
  /// Exchange strategy 1 only: the braid psi.
  std::optional<BraidWord> psi;

  std::size_t certificate_size() const;
};

struct DetectionResult {
  bool found = false;
  DetectionKind kind = DetectionKind::None;
  std::vector<SimpleClass> witnesses;
  std::optional<BraidWord> rewritten;
  int depth_searched = 0;
  /// The selected witness followed by every other witness in exhaustive mode.
  std::vector<Witness> all;
};

DetectionResult detect_reducing(const BraidWord& b, const DetectionOptions& opts = {});
DetectionResult detect_exchange(const BraidWord& b, const DetectionOptions& opts = {});

/// Vanishing tests, evaluated exactly. Reducing: kind selects
/// <e(w^-1), d(b(w))> (positive) or <e(b(w)^-1), d(w)> (negative).
bool reducing_condition(const BraidWord& b, const FreeWord& w, DetectionKind kind);
/// Both exchange conditions <e(v^-1), d(w)> = 0 and <e(v^-1), d(b(w))> = 0.
bool exchange_condition(const BraidWord& b, const FreeWord& v, const FreeWord& w);

struct RewriteOptions {
  /// Maximum length of psi and phi.
  int depth = 12;
  /// States whose total word length exceeds the start by more than this are pruned.
  int slack = 8;
};

/// A braid c with act(c, x_{n-1}) = v and act(c, x_n) = w, by breadth-first
/// search from (v, w) back to (x_{n-1}, x_n).
std::optional<BraidWord> find_joint_braid(const FreeWord& v, const FreeWord& w, const RewriteOptions& opts = {});

struct RewriteResult {
  std::optional<BraidWord> braid;
  std::optional<BraidWord> psi;
  std::optional<BraidWord> phi;
  std::string message;
};

/// phi s^-2 phi^-1 b psi s^2 psi^-1 with s = sigma_{n-1}, for an exchange pair (v, w).
RewriteResult rewrite_exchange(const BraidWord& b, const FreeWord& v, const FreeWord& w, const RewriteOptions& opts = {});
/// Uses the selected witness of an exchange result.
RewriteResult rewrite_exchange(const BraidWord& b, const DetectionResult& result, const RewriteOptions& opts = {});

struct SpecialFormReport {
  int n = 0;
  /// All (i, j) with r_ij = 0, row-major.
  std::vector<std::pair<int, int>> zero_entries;
  /// r_{n,n} = 0: b = P s^-1 Q with P, Q in B_{n-1}.
  bool reducible = false;
  /// r_{n,n-1} = 0: b = P s^-1 Q s.
  bool exchange_form = false;
};

SpecialFormReport special_form_tests(const BraidWord& b);

/// Worker count for parallel searches.
int thread_count(int requested = 0);

}  // namespace lkb
