#pragma once

#include <cstdint>
#include <vector>

#include "praa/nielsen.hpp"

namespace praa::autf {

// Which generating family the signed-flip/permutation action targets.
// Ak: all C- and N-generators; a flip at index 0 swaps L_{0j} <-> R_{0j}.
// LAk: the variant whose C-part has left transvections only; the action
// never flips the side of a C-generator and ignores flips[0].
enum class PhiMode { Ak, LAk };

// An element (a_0..a_k, sigma) of the signed permutation group acting on
// the generators by conjugation with the automorphism x_i -> x_{sigma(i)}^{a_sigma(i)}.
// sigma always fixes 0.
struct PhiElement {
  std::vector<std::int8_t> flips;   // size k+1, entries +1/-1
  std::vector<std::uint8_t> perm;   // size k+1, perm[0] == 0

  static PhiElement identity(int rank);
  // sigma = transposition (a b) on 1..k, no flips.
  static PhiElement transposition(int rank, int a, int b);
  // single flip at index i (i = 0 allowed in Ak mode).
  static PhiElement flip(int rank, int i);

  int rank() const { return static_cast<int>(perm.size()) - 1; }
  PhiElement inverse() const;
  friend PhiElement operator*(const PhiElement& a, const PhiElement& b);

  Automorphism to_automorphism() const;

  friend bool operator==(const PhiElement&, const PhiElement&) = default;
};

void validate(const PhiElement& p);

// Action on a single generator label; agrees with conjugation of the
// corresponding Nielsen automorphism (in Ak mode this is exactly
// phi_act(phi, nielsen(g))).
NielsenGen phi_act(const PhiElement& phi, const NielsenGen& g, PhiMode mode = PhiMode::Ak);

// Conjugation phi . a = phi a phi^-1. The witness is carried along
// generator-by-generator, so word-length bookkeeping survives the action.
AkElement phi_act(const PhiElement& phi, const AkElement& a, PhiMode mode = PhiMode::Ak);

}  // namespace praa::autf
