#include "praa/laplacian.hpp"

#include <algorithm>
#include <stdexcept>

namespace praa::ring {

namespace {

AkRing one_minus_sq(const AkModel& m, const autf::NielsenGen& g) {
  // (1-g)(1-g)* = 2 - g - g^-1
  AkRing out = AkRing::unit(m, 2);
  out.add_term(m, autf::AkElement::nielsen(g, m.rank), Rat(-1));
  out.add_term(m, autf::AkElement::nielsen(g.inverse(), m.rank), Rat(-1));
  return out;
}

AkRing anticommutator(const AkModel& m, const AkRing& a, const AkRing& b) {
  return multiply(m, a, b) + multiply(m, b, a);
}

}  // namespace

AkRing partial_laplacian(const AkModel& m, int i, int j) {
  if (i < 0 || i > m.rank || j < 1 || j > m.rank)
    throw std::out_of_range("partial laplacian indices out of range");
  if (i == j) return AkRing::zero();
  using autf::Side;
  auto gen = [&](Side s) {
    return autf::NielsenGen{s, static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j), 1};
  };
  return one_minus_sq(m, gen(Side::L)) + one_minus_sq(m, gen(Side::R));
}

AkRing laplacian_C(const AkModel& m) {
  AkRing out;
  for (int s = 1; s <= m.rank; ++s) out += partial_laplacian(m, 0, s);
  return out;
}

AkRing laplacian_N(const AkModel& m) {
  AkRing out;
  for (int i = 1; i <= m.rank; ++i)
    for (int j = 1; j <= m.rank; ++j)
      if (i != j) out += partial_laplacian(m, i, j);
  return out;
}

AkRing laplacian(const AkModel& m) { return laplacian_C(m) + laplacian_N(m); }

DecompTerm decomp_term_from_name(const std::string& name) {
  if (name == "SqC") return DecompTerm::SqC;
  if (name == "AdjC") return DecompTerm::AdjC;
  if (name == "AdjCN") return DecompTerm::AdjCN;
  if (name == "OppCN") return DecompTerm::OppCN;
  if (name == "SqN") return DecompTerm::SqN;
  if (name == "AdjN") return DecompTerm::AdjN;
  if (name == "OppN") return DecompTerm::OppN;
  throw std::invalid_argument("unknown decomposition term: " + name);
}

std::string decomp_term_name(DecompTerm t) {
  switch (t) {
    case DecompTerm::SqC: return "SqC";
    case DecompTerm::AdjC: return "AdjC";
    case DecompTerm::AdjCN: return "AdjCN";
    case DecompTerm::OppCN: return "OppCN";
    case DecompTerm::SqN: return "SqN";
    case DecompTerm::AdjN: return "AdjN";
    case DecompTerm::OppN: return "OppN";
  }
  throw std::logic_error("unreachable");
}

AkRing decomposition_term(const AkModel& m, DecompTerm t) {
  const int k = m.rank;
  if (k < 2) throw std::invalid_argument("decomposition terms need k >= 2");
  AkRing out;
  switch (t) {
    case DecompTerm::SqC:
      for (int s = 1; s <= k; ++s) {
        AkRing d = partial_laplacian(m, 0, s);
        out += multiply(m, d, d);
      }
      break;
    case DecompTerm::AdjC:
      for (int s = 1; s <= k; ++s)
        for (int u = 1; u <= k; ++u) {
          if (s == u) continue;
          out += multiply(m, partial_laplacian(m, 0, s), partial_laplacian(m, 0, u));
        }
      break;
    case DecompTerm::AdjCN:
      for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j) {
          if (i == j) continue;
          out += anticommutator(m, partial_laplacian(m, 0, i) + partial_laplacian(m, 0, j),
                                partial_laplacian(m, i, j));
        }
      break;
    case DecompTerm::OppCN:
      for (int s = 1; s <= k; ++s)
        for (int i = 1; i <= k; ++i)
          for (int j = 1; j <= k; ++j) {
            if (i == j || s == i || s == j) continue;
            out += anticommutator(m, partial_laplacian(m, 0, s), partial_laplacian(m, i, j));
          }
      break;
    case DecompTerm::SqN:
      for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j) {
          if (i == j) continue;
          AkRing x = partial_laplacian(m, i, j) + partial_laplacian(m, j, i);
          out += Rat(1, 2) * multiply(m, x, x);
        }
      break;
    case DecompTerm::AdjN:
      for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j)
          for (int l = 1; l <= k; ++l) {
            if (i == j || i == l || j == l) continue;
            AkRing sum = partial_laplacian(m, i, l) + partial_laplacian(m, l, i) +
                         partial_laplacian(m, j, l) + partial_laplacian(m, l, j);
            out += multiply(m, partial_laplacian(m, i, j), sum);
          }
      break;
    case DecompTerm::OppN:
      for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j)
          for (int l = 1; l <= k; ++l)
            for (int n = 1; n <= k; ++n) {
              if (i == j || l == n) continue;
              if (l == i || l == j || n == i || n == j) continue;
              out += multiply(m, partial_laplacian(m, i, j), partial_laplacian(m, l, n));
            }
      break;
  }
  return out;
}

AkRing phi_act(const autf::PhiElement& phi, const AkRing& xi, autf::PhiMode mode) {
  AkModel m{phi.rank()};
  AkRing out;
  for (const auto& [key, t] : xi.terms()) out.add_term(m, autf::phi_act(phi, t.g, mode), t.c);
  return out;
}

AkRing symmetrize(const AkRing& xi, int k, int K, const Budgets& budgets) {
  if (K < k) throw std::invalid_argument("symmetrize needs K >= k");
  if (K > budgets.max_sym_rank)
    throw ResourceError("symmetrization rank " + std::to_string(K) +
                        " exceeds budget (PRAA_MAX_SYM_K)");
  AkModel mk{K};

  // Embed once, then run over all K! permutations of 1..K.
  AkRing embedded;
  for (const auto& [key, t] : xi.terms()) embedded.add_term(mk, t.g.embedded(K), t.c);

  std::vector<std::uint8_t> perm(K);
  for (int i = 0; i < K; ++i) perm[i] = static_cast<std::uint8_t>(i + 1);
  AkRing out;
  do {
    autf::PhiElement phi = autf::PhiElement::identity(K);
    for (int i = 1; i <= K; ++i) phi.perm[i] = perm[i - 1];
    out += phi_act(phi, embedded);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

AkRing induction_target(int k) {
  if (k != 5) throw std::invalid_argument("the induction target is defined at k = 5");
  AkModel m{5};
  AkRing dn = laplacian_N(m);
  AkRing out = decomposition_term(m, DecompTerm::AdjC) +
               decomposition_term(m, DecompTerm::AdjCN) +
               decomposition_term(m, DecompTerm::OppCN) + multiply(m, dn, dn);
  out += Rat(-141, 100) * laplacian(m);
  return out;
}

}  // namespace praa::ring
