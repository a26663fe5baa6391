#include "lkb/detect.hpp"

#include <algorithm>
#include <cstdlib>
#include <future>
#include <set>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "lkb/error.hpp"
#include "lkb/pairing.hpp"

namespace lkb {

int thread_count(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("LKB_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

// Runs f(0..count-1) on up to `threads` workers; results keep index order.
template <class F>
auto parallel_map(std::size_t count, int threads, F f) -> std::vector<decltype(f(std::size_t{0}))> {
  using R = decltype(f(std::size_t{0}));
  std::vector<R> out(count);
  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(std::max(threads, 1)), count);
  if (workers <= 1) {
    for (std::size_t k = 0; k < count; ++k) out[k] = f(k);
    return out;
  }
  std::vector<std::future<void>> jobs;
  for (std::size_t w = 0; w < workers; ++w)
    jobs.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t k = w; k < count; k += workers) out[k] = f(k);
    }));
  for (auto& j : jobs) j.get();
  return out;
}

struct BraidNode {
  BraidWord braid;
  std::vector<FreeWord> images;
};

// levels[d] = all freely reduced braid words of length d in depth-lex order,
// with their generator images.
std::vector<std::vector<BraidNode>> braid_levels(int n, int depth) {
  if (depth < 0) throw DimensionError("depth must be >= 0");
  std::vector<Letter> gens;
  for (int i = 1; i < n; ++i) {
    gens.push_back({i, 1});
    gens.push_back({i, -1});
  }
  std::vector<std::vector<FreeWord>> gen_tables;
  for (const auto& g : gens) gen_tables.push_back(generator_images(BraidWord::generator(n, g.index, g.sign)));

  std::vector<std::vector<BraidNode>> levels(1);
  BraidNode root{BraidWord(n), {}};
  for (int k = 1; k <= n; ++k) root.images.push_back(FreeWord::generator(n, k));
  levels[0].push_back(std::move(root));
  for (int d = 1; d <= depth; ++d) {
    std::vector<BraidNode> next;
    for (const auto& node : levels.back()) {
      for (std::size_t gi = 0; gi < gens.size(); ++gi) {
        const Letter g = gens[gi];
        if (!node.braid.empty() && node.braid.letters().back().cancels(g)) continue;
        BraidNode child{node.braid * BraidWord(n, {g}), {}};
        child.images.reserve(node.images.size());
        for (const auto& img : gen_tables[gi]) child.images.push_back(substitute(node.images, img));
        next.push_back(std::move(child));
      }
    }
    levels.push_back(std::move(next));
  }
  return levels;
}

bool exact_zero(const FreeWord& y_word, const FreeWord& x_word) {
  return is_zero_pairing(pair(fox_y(y_word), fox_x(x_word)));
}

// Recomputes a vanishing condition through term-by-term evaluation of the
// group ring classes, independent of the fast routes used in the search.
void certify_zero(const FreeWord& y_word, const FreeWord& x_word, const char* what) {
  const MagnusElement v = pair_evaluated(evaluate(fox_y(y_word)), evaluate(fox_x(x_word)));
  if (!v.is_zero()) throw InvariantViolation(std::string("certificate failed to re-verify: ") + what);
}

void certify(const BraidWord& b, const Witness& w) {
  switch (w.kind) {
    case DetectionKind::ReducePositive: {
      const FreeWord& x = w.classes.at(0).word;
      certify_zero(x.inverse(), act(b, x), "positive reducing condition");
      break;
    }
    case DetectionKind::ReduceNegative: {
      const FreeWord& x = w.classes.at(0).word;
      certify_zero(act(b, x).inverse(), x, "negative reducing condition");
      break;
    }
    case DetectionKind::Exchange: {
      const FreeWord& v = w.classes.at(0).word;
      const FreeWord& x = w.classes.at(1).word;
      certify_zero(v.inverse(), x, "first exchange condition");
      certify_zero(v.inverse(), act(b, x), "second exchange condition");
      break;
    }
    case DetectionKind::None:
      break;
  }
}

template <class Size>
DetectionResult finish(const BraidWord& b, std::vector<Witness> hits, int depth_searched, Size size) {
  DetectionResult r;
  r.depth_searched = depth_searched;
  if (hits.empty()) return r;
  // Smallest certificate among the first level with hits; ties keep search order.
  const int first_level = hits.front().level;
  std::size_t best = 0;
  for (std::size_t k = 1; k < hits.size() && hits[k].level == first_level; ++k)
    if (size(hits[k]) < size(hits[best])) best = k;
  std::rotate(hits.begin(), hits.begin() + static_cast<std::ptrdiff_t>(best), hits.begin() + static_cast<std::ptrdiff_t>(best) + 1);
  for (const auto& h : hits) certify(b, h);
  r.found = true;
  r.kind = hits.front().kind;
  r.witnesses = hits.front().classes;
  r.all = std::move(hits);
  return r;
}

SimpleClass make_class(const FreeWord& word, const BraidWord& braid, int generator) {
  return SimpleClass{word, braid, generator, fox_x(word)};
}

}  // namespace

std::string to_string(DetectionKind k) {
  switch (k) {
    case DetectionKind::ReducePositive: return "reduce_positive";
    case DetectionKind::ReduceNegative: return "reduce_negative";
    case DetectionKind::Exchange: return "exchange";
    case DetectionKind::None: break;
  }
  return "none";
}

std::size_t Witness::certificate_size() const {
  std::size_t s = 0;
  for (const auto& c : classes) s += c.word.size();
  return s;
}

std::vector<SimpleClass> enumerate_simple(int n, int depth) {
  std::vector<SimpleClass> out;
  std::unordered_set<FreeWord, FreeWordHash> seen;
  for (const auto& level : braid_levels(n, depth))
    for (const auto& node : level)
      for (int k = 1; k <= n; ++k) {
        const FreeWord& img = node.images[static_cast<std::size_t>(k - 1)];
        if (seen.insert(img).second) out.push_back(make_class(img, node.braid, k));
      }
  return out;
}

bool reducing_condition(const BraidWord& b, const FreeWord& w, DetectionKind kind) {
  const FreeWord bw = act(b, w);
  if (kind == DetectionKind::ReducePositive) return exact_zero(w.inverse(), bw);
  if (kind == DetectionKind::ReduceNegative) return exact_zero(bw.inverse(), w);
  throw std::invalid_argument("reducing_condition needs a reducing kind");
}

bool exchange_condition(const BraidWord& b, const FreeWord& v, const FreeWord& w) {
  return exact_zero(v.inverse(), w) && exact_zero(v.inverse(), act(b, w));
}

DetectionResult detect_reducing(const BraidWord& b, const DetectionOptions& opts) {
  const int n = b.strands();
  const auto images = generator_images(b);
  const auto classes = enumerate_simple(n, opts.depth);
  const int threads = thread_count(opts.threads);
  magnus_table(n);

  struct Check {
    bool positive = false;
    bool negative = false;
    std::size_t size = 0;
  };
  std::vector<Witness> hits;
  int scanned = -1;
  std::size_t begin = 0;
  for (int level = 0; level <= opts.depth && begin < classes.size(); ++level) {
    std::size_t end = begin;
    while (end < classes.size() && classes[end].level() == level) ++end;
    auto checks = parallel_map(end - begin, threads, [&](std::size_t k) {
      const FreeWord& w = classes[begin + k].word;
      const FreeWord bw = substitute(images, w);
      Check c;
      c.size = w.size() + bw.size();
      if (pair_mod(fox_y_mod(w.inverse()), fox_x_mod(bw)).is_zero()) c.positive = exact_zero(w.inverse(), bw);
      if (pair_mod(fox_y_mod(bw.inverse()), fox_x_mod(w)).is_zero()) c.negative = exact_zero(bw.inverse(), w);
      return c;
    });
    for (std::size_t k = 0; k < checks.size(); ++k) {
      const auto& cls = classes[begin + k];
      if (checks[k].positive) hits.push_back({DetectionKind::ReducePositive, {cls}, level, 0, std::nullopt});
      if (checks[k].negative) hits.push_back({DetectionKind::ReduceNegative, {cls}, level, 0, std::nullopt});
    }
    scanned = level;
    begin = end;
    if (!hits.empty() && !opts.exhaustive) break;
  }
  if (hits.empty()) scanned = opts.depth;
  // the image word is part of a reducing certificate
  return finish(b, std::move(hits), scanned, [&](const Witness& w) {
    return w.classes[0].word.size() + substitute(images, w.classes[0].word).size();
  });
}

DetectionResult detect_exchange(const BraidWord& b, const DetectionOptions& opts) {
  const int n = b.strands();
  if (n < 3) throw DimensionError("exchange detection needs n >= 3");
  const auto images = generator_images(b);
  const auto levels = braid_levels(n, opts.depth);
  const int threads = thread_count(opts.threads);
  magnus_table(n);

  // Simple classes with their specialized Fox images.
  struct Prepared {
    SimpleClass cls;
    FreeWord image;
    ModClass y_inv;
    ModClass x;
    ModClass x_image;
  };
  std::vector<SimpleClass> classes = enumerate_simple(n, opts.depth);
  auto prepared = parallel_map(classes.size(), threads, [&](std::size_t k) {
    const FreeWord& w = classes[k].word;
    FreeWord bw = substitute(images, w);
    ModClass x_image = fox_x_mod(bw);
    return Prepared{classes[k], std::move(bw), fox_y_mod(w.inverse()), fox_x_mod(w), std::move(x_image)};
  });

  using PairKey = std::pair<FreeWord, FreeWord>;
  std::set<PairKey> tried;
  std::vector<Witness> hits;
  int scanned = -1;
  for (int level = 0; level <= opts.depth; ++level) {
    // (i) joint pairs from braids psi of this length
    const auto& nodes = levels[static_cast<std::size_t>(level)];
    std::vector<std::size_t> fresh;
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      const auto& img = nodes[k].images;
      if (tried.insert({img[static_cast<std::size_t>(n - 2)], img[static_cast<std::size_t>(n - 1)]}).second) fresh.push_back(k);
    }
    auto joint = parallel_map(fresh.size(), threads, [&](std::size_t k) {
      const auto& img = nodes[fresh[k]].images;
      const FreeWord& v = img[static_cast<std::size_t>(n - 2)];
      const FreeWord& w = img[static_cast<std::size_t>(n - 1)];
      const FreeWord bw = substitute(images, w);
      const ModClass y_inv = fox_y_mod(v.inverse());
      if (!pair_mod(y_inv, fox_x_mod(w)).is_zero()) return false;
      if (!pair_mod(y_inv, fox_x_mod(bw)).is_zero()) return false;
      return exact_zero(v.inverse(), w) && exact_zero(v.inverse(), bw);
    });
    for (std::size_t k = 0; k < fresh.size(); ++k) {
      if (!joint[k]) continue;
      const auto& node = nodes[fresh[k]];
      const auto& img = node.images;
      hits.push_back({DetectionKind::Exchange,
                      {make_class(img[static_cast<std::size_t>(n - 2)], node.braid, n - 1),
                       make_class(img[static_cast<std::size_t>(n - 1)], node.braid, n)},
                      level, 1, node.braid});
    }

    // (ii) independent pairs whose larger witness level is this level
    std::vector<std::pair<std::size_t, std::size_t>> candidates;
    for (std::size_t a = 0; a < prepared.size(); ++a) {
      if (prepared[a].cls.level() > level) break;
      for (std::size_t c = 0; c < prepared.size(); ++c) {
        if (prepared[c].cls.level() > level) break;
        if (a == c || std::max(prepared[a].cls.level(), prepared[c].cls.level()) != level) continue;
        candidates.push_back({a, c});
      }
    }
    auto indep = parallel_map(candidates.size(), threads, [&](std::size_t k) {
      const auto& v = prepared[candidates[k].first];
      const auto& w = prepared[candidates[k].second];
      if (!pair_mod(v.y_inv, w.x).is_zero()) return false;
      if (!pair_mod(v.y_inv, w.x_image).is_zero()) return false;
      return exact_zero(v.cls.word.inverse(), w.cls.word) && exact_zero(v.cls.word.inverse(), w.image);
    });
    for (std::size_t k = 0; k < candidates.size(); ++k) {
      if (!indep[k]) continue;
      const auto& v = prepared[candidates[k].first].cls;
      const auto& w = prepared[candidates[k].second].cls;
      if (!tried.insert({v.word, w.word}).second) continue;
      hits.push_back({DetectionKind::Exchange, {v, w}, level, 2, std::nullopt});
    }

    scanned = level;
    if (!hits.empty() && !opts.exhaustive) break;
  }
  if (hits.empty()) scanned = opts.depth;
  return finish(b, std::move(hits), scanned, [](const Witness& w) { return w.certificate_size(); });
}

// --- rewriting ---------------------------------------------------------------

namespace {

struct PairHash {
  std::size_t operator()(const std::pair<FreeWord, FreeWord>& p) const noexcept {
    FreeWordHash h;
    return h(p.first) * 31 + h(p.second);
  }
};

}  // namespace

std::optional<BraidWord> find_joint_braid(const FreeWord& v, const FreeWord& w, const RewriteOptions& opts) {
  const int n = v.rank();
  if (w.rank() != n || n < 2) throw DimensionError("joint braid search needs two words of the same rank >= 2");
  using State = std::pair<FreeWord, FreeWord>;
  const State target{FreeWord::generator(n, n - 1), FreeWord::generator(n, n)};
  const State start{v, w};
  if (start == target) return BraidWord(n);

  std::vector<Letter> gens;
  std::vector<std::vector<FreeWord>> tables;
  for (int i = 1; i < n; ++i)
    for (int s : {1, -1}) {
      gens.push_back({i, s});
      tables.push_back(generator_images(BraidWord::generator(n, i, s)));
    }
  struct Node {
    State state;
    std::size_t parent;
    Letter via;
  };
  std::vector<Node> nodes{{start, 0, {0, 0}}};
  std::unordered_map<State, std::size_t, PairHash> seen{{start, 0}};
  const std::size_t budget = v.size() + w.size() + static_cast<std::size_t>(std::max(opts.slack, 0));
  std::size_t frontier_begin = 0;
  for (int d = 0; d < opts.depth; ++d) {
    const std::size_t frontier_end = nodes.size();
    for (std::size_t k = frontier_begin; k < frontier_end; ++k) {
      for (std::size_t gi = 0; gi < gens.size(); ++gi) {
        State next{substitute(tables[gi], nodes[k].state.first), substitute(tables[gi], nodes[k].state.second)};
        if (next.first.size() + next.second.size() > budget) continue;
        if (!seen.emplace(next, nodes.size()).second) continue;
        nodes.push_back({next, k, gens[gi]});
        if (next == target) {
          // applied g_1 first ... g_k last: psi = g_1^-1 ... g_k^-1
          std::vector<Letter> applied;
          for (std::size_t at = nodes.size() - 1; at != 0; at = nodes[at].parent) applied.push_back(nodes[at].via);
          std::reverse(applied.begin(), applied.end());
          std::vector<Letter> psi;
          for (const auto& l : applied) psi.push_back(l.inverse());
          return BraidWord(n, psi);
        }
      }
    }
    frontier_begin = frontier_end;
    if (frontier_begin == nodes.size()) break;
  }
  return std::nullopt;
}

RewriteResult rewrite_exchange(const BraidWord& b, const FreeWord& v, const FreeWord& w, const RewriteOptions& opts) {
  const int n = b.strands();
  RewriteResult r;
  r.psi = find_joint_braid(v, w, opts);
  if (!r.psi) {
    r.message = "no braid psi with psi(x_{n-1}) = v, psi(x_n) = w within the search bounds";
    return r;
  }
  r.phi = find_joint_braid(v, act(b, w), opts);
  if (!r.phi) {
    r.message = "no braid phi with phi(x_{n-1}) = v, phi(x_n) = b(w) within the search bounds";
    return r;
  }
  const BraidWord s = BraidWord::generator(n, n - 1);
  r.braid = *r.phi * s.power(-2) * r.phi->inverse() * b * *r.psi * s.power(2) * r.psi->inverse();
  r.message = "ok";
  return r;
}

RewriteResult rewrite_exchange(const BraidWord& b, const DetectionResult& result, const RewriteOptions& opts) {
  if (!result.found || result.kind != DetectionKind::Exchange || result.witnesses.size() != 2)
    throw std::invalid_argument("rewrite_exchange needs a found exchange result");
  return rewrite_exchange(b, result.witnesses[0].word, result.witnesses[1].word, opts);
}

SpecialFormReport special_form_tests(const BraidWord& b) {
  const int n = b.strands();
  const BlockMatrix m = tau_plus(b);
  SpecialFormReport r;
  r.n = n;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (m.block(i, j).is_zero()) r.zero_entries.push_back({i, j});
  r.reducible = m.block(n, n).is_zero();
  r.exchange_form = n >= 2 && m.block(n, n - 1).is_zero();
  return r;
}

}  // namespace lkb
