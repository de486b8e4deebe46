#pragma once

#include <cstdint>
#include <vector>

#include "praa/rational.hpp"
#include "praa/walker.hpp"

namespace praa::schreier {

// Data of the sharpness witness: the generator action on the 3^k - 1
// nonzero vectors over Z_3 (N-generators act as transvections through the
// quotient onto SL_k(Z_3); C-generators act trivially), evaluated on the
// test vector v = sum_i (delta_{e_i} - delta_{-e_i}). Everything is exact.
struct SharpnessResult {
  int k = 0;
  std::size_t vertices = 0;                 // 3^k - 1
  Int v_norm_sq;                            // = 2k
  std::vector<walker::Move> generators;     // all 4k^2 signed labels
  std::vector<Int> displacement_sq;         // ||rho(s)v - v||^2 per label
  Int max_displacement_sq;                  // = (2/k) * ||v||^2
  Rat rayleigh;                             // (sum_s disp^2) / ||v||^2, s over 4k^2 labels
  bool transitive = false;                  // action is transitive on V
};

// 2 <= k <= 7. Checks max displacement^2 == (2/k)||v||^2 and
// rayleigh <= 8k; throws std::logic_error if either fails.
SharpnessResult sharpness_check(int k);

}  // namespace praa::schreier
