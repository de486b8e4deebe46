#pragma once

#include <string>

#include "praa/group_ring.hpp"
#include "praa/phi.hpp"

namespace praa::ring {

// Partial Laplacian (1-L_ij)(1-L_ij)* + (1-R_ij)(1-R_ij)*; zero when i = j.
AkRing partial_laplacian(const AkModel& m, int i, int j);

// Sums of partial Laplacians over the C-generators (0s), the N-generators
// (ij, 1 <= i,j <= k) and the whole 4k^2 family.
AkRing laplacian_C(const AkModel& m);
AkRing laplacian_N(const AkModel& m);
AkRing laplacian(const AkModel& m);

// The seven pieces of the squared Laplacian:
//   (D^C)^2       = SqC + AdjC
//   {D^C, D^N}    = AdjCN + OppCN
//   (D^N)^2       = SqN + AdjN + OppN
// Opp terms are empty sums at small rank (OppCN needs k >= 3, OppN k >= 4).
enum class DecompTerm { SqC, AdjC, AdjCN, OppCN, SqN, AdjN, OppN };

DecompTerm decomp_term_from_name(const std::string& name);
std::string decomp_term_name(DecompTerm t);

AkRing decomposition_term(const AkModel& m, DecompTerm t);

// Conjugation action on every support element (the witness is relabeled
// generator-by-generator, so word-length bounds survive).
AkRing phi_act(const autf::PhiElement& phi, const AkRing& xi,
               autf::PhiMode mode = autf::PhiMode::Ak);

// Symmetrization: embed a rank-k element at rank K and sum its conjugates
// over all K! permutations of the indices 1..K (0 stays fixed).
AkRing symmetrize(const AkRing& xi, int k, int K,
                  const Budgets& budgets = Budgets::global());

// The rank-5 element AdjC + AdjCN + OppCN + (D^N)^2 - (141/100) * Delta_5.
AkRing induction_target(int k);

}  // namespace praa::ring
