// Command-line front end for the lkbraid library.

#include <CLI11.hpp>
#include <iostream>
#include <optional>
#include <string>

#include "lkb/detect.hpp"
#include "lkb/error.hpp"
#include "lkb/json_io.hpp"
#include "lkb/krammer.hpp"
#include "lkb/magnus.hpp"
#include "lkb/pairing.hpp"

using namespace lkb;

namespace {

constexpr int kExitNotFound = 10;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 70;

struct Common {
  int n = 4;
  bool json = false;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("-n,--strands", c.n, "Number of strands / punctures")->check(CLI::PositiveNumber);
  cmd->add_flag("--json", c.json, "Emit JSON instead of text");
}

void print(const Common& c, const Json& j, const std::string& text) {
  if (c.json)
    std::cout << j.dump() << "\n";
  else
    std::cout << text;
}

std::string witness_text(const DetectionResult& r) {
  std::string out;
  for (const auto& w : r.witnesses) {
    out += "witness " + format_free(w.word) + "  (braid: " + (w.witness_braid.empty() ? "identity" : format_braid(w.witness_braid)) +
           ", generator x" + std::to_string(w.generator) + ")\n";
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Magnus and Lawrence-Krammer representations of braid groups, intersection pairing, and move detection"};
  app.require_subcommand(1);
  Common common;
  std::string word, word2, rep = "tau", basis = "x", y_word, x_word;
  int depth = 3, i_index = 1, j_index = 1, threads = 0, rewrite_depth = 12, slack = 8;
  bool rewrite = false, exhaustive = false;

  auto* matrix = app.add_subcommand("matrix", "Matrix of a word under rho, tau, tau-plus or burau");
  add_common(matrix, common);
  matrix->add_option("--rep", rep, "rho | tau | tau-plus | burau")
      ->check(CLI::IsMember({"rho", "tau", "tau-plus", "burau"}));
  matrix->add_option("word", word, "Word: signed integers / sK^e for braid letters, xK^e for free letters")->required();

  auto* act_cmd = app.add_subcommand("act", "Image of a free word under a braid");
  add_common(act_cmd, common);
  act_cmd->add_option("braid", word, "Braid word")->required();
  act_cmd->add_option("free", word2, "Free word")->required();

  auto* fox = app.add_subcommand("fox", "Fox derivative d (x basis) or e (y basis) of a free word");
  add_common(fox, common);
  fox->add_option("--basis", basis, "x for d, y for e")->check(CLI::IsMember({"x", "y"}));
  fox->add_option("word", word, "Free word")->required();

  auto* pair_cmd = app.add_subcommand("pair", "Pairing of e(Y) with d(X)");
  add_common(pair_cmd, common);
  pair_cmd->add_option("--y", y_word, "Loop word of the y class")->required();
  pair_cmd->add_option("--x", x_word, "Loop word of the x class")->required();

  auto* reduce = app.add_subcommand("detect-reduce", "Search for a reducing loop");
  add_common(reduce, common);
  reduce->add_option("--depth", depth, "Maximum braid length of simple-class witnesses")->check(CLI::NonNegativeNumber);
  reduce->add_flag("--exhaustive", exhaustive, "Report every witness up to the depth");
  reduce->add_option("--threads", threads, "Worker threads (default: LKB_THREADS or hardware)");
  reduce->add_option("braid", word, "Braid word")->required();

  auto* exchange = app.add_subcommand("detect-exchange", "Search for an exchange move");
  add_common(exchange, common);
  exchange->add_option("--depth", depth, "Maximum braid length of witnesses")->check(CLI::NonNegativeNumber);
  exchange->add_flag("--rewrite", rewrite, "Rewrite the braid with the found witness");
  exchange->add_option("--rewrite-depth", rewrite_depth, "Maximum length of the rewrite conjugators");
  exchange->add_option("--slack", slack, "Word-length slack of the rewrite search");
  exchange->add_flag("--exhaustive", exhaustive, "Report every witness up to the depth");
  exchange->add_option("--threads", threads, "Worker threads (default: LKB_THREADS or hardware)");
  exchange->add_option("braid", word, "Braid word")->required();

  auto* entry_cmd = app.add_subcommand("entry", "Block r_ij of tau-plus");
  add_common(entry_cmd, common);
  entry_cmd->add_option("--i", i_index, "Block row, 1..n")->required();
  entry_cmd->add_option("--j", j_index, "Block column, 1..n")->required();
  entry_cmd->add_option("braid", word, "Braid word")->required();

  auto* ident = app.add_subcommand("is-identity", "Decide whether a braid word is trivial");
  add_common(ident, common);
  ident->add_option("braid", word, "Braid word")->required();

  auto* simple = app.add_subcommand("enumerate-simple", "List simple classes up to a braid length");
  add_common(simple, common);
  simple->add_option("--depth", depth, "Maximum braid length")->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    const int n = common.n;
    if (matrix->parsed()) {
      if (rep == "tau-plus") {
        const BlockMatrix m = tau_plus(parse_braid(word, n));
        print(common, to_json(m), to_string(m.flatten()));
      } else {
        const B1nWord w = parse_b1n(word, n);
        MagnusElement m = rep == "rho" ? rho(w) : tau(w);
        if (rep == "burau") {
          if (deg(w) != 0 || std::any_of(w.letters().begin(), w.letters().end(),
                                         [](const B1nLetter& l) { return l.kind == B1nLetter::Kind::X; }))
            throw DimensionError("burau needs a braid word");
          m = burau_block(m);
        }
        print(common, to_json(m), to_string(m));
      }
    } else if (act_cmd->parsed()) {
      const FreeWord img = act(parse_braid(word, n), parse_free(word2, n));
      print(common, Json(format_free(img)), format_free(img) + "\n");
    } else if (fox->parsed()) {
      const FreeWord w = parse_free(word, n);
      if (basis == "x") {
        const auto v = fox_x(w);
        print(common, to_json(v), to_string(v) + "\n");
      } else {
        const auto v = fox_y(w);
        print(common, to_json(v), to_string(v) + "\n");
      }
    } else if (pair_cmd->parsed()) {
      const PairingValue p = pair(fox_y(parse_free(y_word, n)), fox_x(parse_free(x_word, n)));
      const bool zero = is_zero_pairing(p);
      print(common, to_json(p),
            "symbolic: " + to_string(p.symbolic()) + "\nevaluated:\n" + to_string(p.evaluated()) +
                "zero: " + (zero ? "true" : "false") + "\n");
    } else if (reduce->parsed()) {
      DetectionOptions opts{depth, exhaustive, threads};
      const DetectionResult r = detect_reducing(parse_braid(word, n), opts);
      std::string text = r.found ? "found " + to_string(r.kind) + " at depth " + std::to_string(r.all.front().level) + "\n" + witness_text(r)
                                 : "not found within depth " + std::to_string(depth) + "\n";
      if (exhaustive)
        for (std::size_t k = 1; k < r.all.size(); ++k)
          text += "also " + to_string(r.all[k].kind) + " " + format_free(r.all[k].classes[0].word) + "\n";
      print(common, to_json(r), text);
      return r.found ? 0 : kExitNotFound;
    } else if (exchange->parsed()) {
      const BraidWord b = parse_braid(word, n);
      DetectionOptions opts{depth, exhaustive, threads};
      DetectionResult r = detect_exchange(b, opts);
      std::string text;
      if (r.found) {
        text = "found exchange at depth " + std::to_string(r.all.front().level) + "\n" + witness_text(r);
        if (exhaustive)
          for (std::size_t k = 1; k < r.all.size(); ++k)
            text += "also " + format_free(r.all[k].classes[0].word) + " , " + format_free(r.all[k].classes[1].word) + "\n";
        if (rewrite) {
          const RewriteResult rw = rewrite_exchange(b, r, RewriteOptions{rewrite_depth, slack});
          r.rewritten = rw.braid;
          text += rw.braid ? "rewritten " + format_braid(*rw.braid) + "\n" : "rewrite failed: " + rw.message + "\n";
        }
      } else {
        text = "not found within depth " + std::to_string(depth) + "\n";
      }
      print(common, to_json(r), text);
      return r.found ? 0 : kExitNotFound;
    } else if (entry_cmd->parsed()) {
      const MagnusElement m = entry(parse_braid(word, n), i_index, j_index);
      print(common, to_json(m), m.is_zero() ? std::string("0\n") : to_string(m));
    } else if (ident->parsed()) {
      const bool yes = is_identity(parse_braid(word, n));
      print(common, Json(yes), yes ? "true\n" : "false\n");
    } else if (simple->parsed()) {
      const auto classes = enumerate_simple(n, depth);
      Json j = Json::array();
      std::string text;
      for (const auto& c : classes) {
        const std::string braid = c.witness_braid.empty() ? "" : format_braid(c.witness_braid);
        j.push_back({{"word", format_free(c.word)}, {"braid", braid}, {"generator", c.generator}});
        text += format_free(c.word) + "\t" + (braid.empty() ? "identity" : braid) + "\tx" + std::to_string(c.generator) + "\n";
      }
      print(common, j, text);
    }
  } catch (const InvariantViolation& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return 0;
}
