#pragma once

#include <cstdint>
#include <memory>

#include "lkb/homology.hpp"

namespace lkb {

/// Value of the pairing: the group ring element before tau, and its image in
/// the matrix ring, computed once on first use.
class PairingValue {
 public:
  PairingValue(GroupRingElement symbolic, HomologyClassY y, HomologyClassX x);

  const GroupRingElement& symbolic() const;
  /// tau(symbolic), computed as sum_i tau(c_i) t_i tau(m_i).
  const MagnusElement& evaluated() const;
  /// True iff the evaluated value is the zero matrix.
  bool is_zero() const;

 private:
  struct State;
  std::shared_ptr<State> state_;
};

/// sum_i c_i (x_1..x_i - x_1..x_{i-1}) m_i for y = sum c_i f_i, x = sum e_i m_i.
GroupRingElement pair_symbolic(const HomologyClassY& y, const HomologyClassX& x);
PairingValue pair(const HomologyClassY& y, const HomologyClassX& x);
bool is_zero_pairing(const PairingValue& p);

/// sum_i y_i t_i x_i on evaluated classes.
MagnusElement pair_evaluated(const EvaluatedClass& y, const EvaluatedClass& x);
ModMatrix pair_mod(const ModClass& y, const ModClass& x);

/// Number of pairings seen so far whose symbolic value is nonzero but whose
/// evaluation vanishes.
std::uint64_t symbolic_nonzero_evaluated_zero_count();

}  // namespace lkb
