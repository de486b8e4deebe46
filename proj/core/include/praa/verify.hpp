#pragma once

#include <string>
#include <vector>

#include "praa/laplacian.hpp"

namespace praa::ring {

struct IdentityCheck {
  std::string name;
  bool pass = false;
};

// The exact decomposition identities of the squared Laplacian at rank k:
// the three sub-decompositions and the full seven-term sum. Zero tolerance.
std::vector<IdentityCheck> verify_decomposition(int k);

// The eight symmetrization scaling identities from rank k to rank K.
// Identities whose left side is an empty sum degenerate to 0 = 0 and are
// asserted in that form (their factorial prefactors are not evaluated).
std::vector<IdentityCheck> verify_symmetrization(int k, int K);

bool all_pass(const std::vector<IdentityCheck>& checks);

}  // namespace praa::ring
