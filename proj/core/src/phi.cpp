#include "praa/phi.hpp"

#include <stdexcept>

namespace praa::autf {

void validate(const PhiElement& p) {
  if (p.flips.size() != p.perm.size() || p.perm.empty())
    throw std::invalid_argument("phi element size mismatch");
  if (p.perm[0] != 0) throw std::invalid_argument("phi permutation must fix 0");
  std::vector<bool> seen(p.perm.size(), false);
  for (std::uint8_t v : p.perm) {
    if (v >= p.perm.size() || seen[v]) throw std::invalid_argument("phi perm not a permutation");
    seen[v] = true;
  }
  for (std::int8_t f : p.flips)
    if (f != 1 && f != -1) throw std::invalid_argument("phi flips must be +1/-1");
}

PhiElement PhiElement::identity(int rank) {
  PhiElement p;
  p.flips.assign(rank + 1, 1);
  p.perm.resize(rank + 1);
  for (int i = 0; i <= rank; ++i) p.perm[i] = static_cast<std::uint8_t>(i);
  return p;
}

PhiElement PhiElement::transposition(int rank, int a, int b) {
  if (a < 1 || b < 1 || a > rank || b > rank)
    throw std::out_of_range("transposition indices must be in 1..k");
  PhiElement p = identity(rank);
  std::swap(p.perm[a], p.perm[b]);
  return p;
}

PhiElement PhiElement::flip(int rank, int i) {
  if (i < 0 || i > rank) throw std::out_of_range("flip index out of range");
  PhiElement p = identity(rank);
  p.flips[i] = -1;
  return p;
}

PhiElement PhiElement::inverse() const {
  PhiElement r = identity(rank());
  for (int i = 0; i <= rank(); ++i) r.perm[perm[i]] = static_cast<std::uint8_t>(i);
  // As an automorphism, phi^-1 sends x_i -> x_{sigma^-1(i)}^{a_i}; in the
  // (flips, perm) encoding that is flips'[m] = flips[perm[m]].
  for (int m = 0; m <= rank(); ++m) r.flips[m] = flips[perm[m]];
  return r;
}

PhiElement operator*(const PhiElement& a, const PhiElement& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("phi rank mismatch");
  // Composition as automorphisms: (a*b)(x_i) = a(b(x_i)).
  PhiElement r = PhiElement::identity(a.rank());
  for (int i = 0; i <= a.rank(); ++i) {
    r.perm[i] = a.perm[b.perm[i]];
    r.flips[r.perm[i]] = static_cast<std::int8_t>(a.flips[a.perm[b.perm[i]]] * b.flips[b.perm[i]]);
  }
  return r;
}

Automorphism PhiElement::to_automorphism() const {
  validate(*this);
  std::vector<Word> ims;
  ims.reserve(rank() + 1);
  for (int i = 0; i <= rank(); ++i)
    ims.push_back(Word::generator(perm[i], flips[perm[i]]));
  return Automorphism(rank(), std::move(ims));
}

NielsenGen phi_act(const PhiElement& phi, const NielsenGen& g, PhiMode mode) {
  validate(phi);
  validate(g, phi.rank());
  const std::uint8_t si = phi.perm[g.i];
  const std::uint8_t sj = phi.perm[g.j];
  const std::int8_t aj = phi.flips[sj];
  std::int8_t ai = phi.flips[si];
  if (mode == PhiMode::LAk && g.i == 0) ai = 1;  // side of a C-generator is never flipped
  if (ai > 0) return NielsenGen{g.side, si, sj, static_cast<std::int8_t>(g.sign * aj)};
  Side flipped = (g.side == Side::L) ? Side::R : Side::L;
  return NielsenGen{flipped, si, sj, static_cast<std::int8_t>(-g.sign * aj)};
}

AkElement phi_act(const PhiElement& phi, const AkElement& a, PhiMode mode) {
  validate(phi);
  if (phi.rank() != a.rank()) throw std::invalid_argument("phi/element rank mismatch");
  PhiElement p = phi;
  if (mode == PhiMode::LAk) p.flips[0] = 1;
  Automorphism pa = p.to_automorphism();
  Automorphism pi = p.inverse().to_automorphism();
  Witness w;
  w.reserve(a.witness().size());
  for (const NielsenGen& g : a.witness()) w.push_back(phi_act(phi, g, mode));
  return AkElement(compose(compose(pa, a.fwd()), pi),
                   compose(compose(pa, a.inv()), pi), std::move(w));
}

}  // namespace praa::autf
