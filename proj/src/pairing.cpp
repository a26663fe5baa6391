#include "lkb/pairing.hpp"

#include <atomic>
#include <iostream>
#include <mutex>

#include "lkb/error.hpp"

namespace lkb {

namespace {

std::atomic<std::uint64_t> g_vanishing_mismatch{0};

}  // namespace

struct PairingValue::State {
  GroupRingElement symbolic;
  HomologyClassY y;
  HomologyClassX x;
  std::once_flag once;
  MagnusElement value;
};

PairingValue::PairingValue(GroupRingElement symbolic, HomologyClassY y, HomologyClassX x)
    : state_(std::make_shared<State>()) {
  state_->symbolic = std::move(symbolic);
  state_->y = std::move(y);
  state_->x = std::move(x);
}

const GroupRingElement& PairingValue::symbolic() const { return state_->symbolic; }

const MagnusElement& PairingValue::evaluated() const {
  State& s = *state_;
  std::call_once(s.once, [&s] {
    const int n = s.x.rank();
    if (s.symbolic.is_zero()) {
      s.value = MagnusElement::zero(static_cast<std::size_t>(n + 1));
      return;
    }
    auto y = s.y.loop() ? fox_y_evaluated(*s.y.loop()) : evaluate(s.y);
    auto x = s.x.loop() ? fox_x_evaluated(*s.x.loop()) : evaluate(s.x);
    s.value = pair_evaluated(y, x);
    if (s.value.is_zero()) {
      ++g_vanishing_mismatch;
      std::clog << "lkb: pairing with nonzero group ring value " << to_string(s.symbolic)
                << " evaluates to zero\n";
    }
  });
  return s.value;
}

bool PairingValue::is_zero() const {
  if (state_->symbolic.is_zero()) return true;
  return evaluated().is_zero();
}

GroupRingElement pair_symbolic(const HomologyClassY& y, const HomologyClassX& x) {
  const int n = x.rank();
  if (y.rank() != n) throw DimensionError("paired classes have different n");
  GroupRingElement out(n);
  for (int i = 1; i <= n; ++i) {
    const auto& c = y.coeff(i);
    const auto& m = x.coeff(i);
    if (c.is_zero() || m.is_zero()) continue;
    GroupRingElement t(x_prefix(i, n));
    t.add_term(x_prefix(i - 1, n), -1);
    out += c * t * m;
  }
  return out;
}

PairingValue pair(const HomologyClassY& y, const HomologyClassX& x) { return PairingValue(pair_symbolic(y, x), y, x); }

bool is_zero_pairing(const PairingValue& p) { return p.is_zero(); }

MagnusElement pair_evaluated(const EvaluatedClass& y, const EvaluatedClass& x) {
  if (y.size() != x.size() || x.empty()) throw DimensionError("paired classes have different n");
  const int n = static_cast<int>(x.size());
  const auto& tbl = magnus_table(n);
  MagnusElement out = MagnusElement::zero(static_cast<std::size_t>(n + 1));
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (y[i].is_zero() || x[i].is_zero()) continue;
    out += y[i] * tbl.t[i + 1] * x[i];
  }
  return out;
}

ModMatrix pair_mod(const ModClass& y, const ModClass& x) {
  if (y.size() != x.size() || x.empty()) throw DimensionError("paired classes have different n");
  const int n = static_cast<int>(x.size());
  const auto& tbl = magnus_table(n);
  ModMatrix out(static_cast<std::size_t>(n + 1));
  for (std::size_t i = 0; i < x.size(); ++i) out += y[i] * tbl.t_mod[i + 1] * x[i];
  return out;
}

std::uint64_t symbolic_nonzero_evaluated_zero_count() { return g_vanishing_mismatch.load(); }

}  // namespace lkb
