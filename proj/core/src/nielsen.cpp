#include "praa/nielsen.hpp"

#include <stdexcept>

namespace praa::autf {

std::string NielsenGen::str() const {
  std::string s(side == Side::L ? "L" : "R");
  s += std::to_string(i);
  s += std::to_string(j);
  s += (sign > 0 ? '+' : '-');
  return s;
}

void validate(const NielsenGen& g, int rank) {
  if (g.j < 1 || g.j > rank) throw std::out_of_range("Nielsen j index out of 1..k");
  if (g.i > rank) throw std::out_of_range("Nielsen i index out of 0..k");
  if (g.i == g.j) throw std::invalid_argument("Nielsen generator requires i != j");
  if (g.sign != 1 && g.sign != -1) throw std::invalid_argument("Nielsen sign must be +1/-1");
}

Automorphism nielsen_automorphism(const NielsenGen& g, int rank) {
  validate(g, rank);
  std::vector<Word> ims;
  ims.reserve(rank + 1);
  for (int m = 0; m <= rank; ++m) ims.push_back(Word::generator(m));
  Word xj = Word::generator(g.j, g.sign);
  ims[g.i] = (g.side == Side::L) ? xj * ims[g.i] : ims[g.i] * xj;
  return Automorphism(rank, std::move(ims));
}

AkElement AkElement::identity(int rank) {
  return AkElement(Automorphism::identity(rank), Automorphism::identity(rank), {});
}

AkElement AkElement::nielsen(const NielsenGen& g, int rank) {
  return AkElement(nielsen_automorphism(g, rank),
                   nielsen_automorphism(g.inverse(), rank), {g});
}

AkElement::AkElement(Automorphism fwd, Automorphism inv, Witness witness)
    : fwd_(std::move(fwd)), inv_(std::move(inv)), witness_(std::move(witness)) {
  if (fwd_.rank() != inv_.rank()) throw std::invalid_argument("fwd/inv rank mismatch");
}

AkElement AkElement::inverse() const {
  Witness w;
  w.reserve(witness_.size());
  for (auto it = witness_.rbegin(); it != witness_.rend(); ++it)
    w.push_back(it->inverse());
  return AkElement(inv_, fwd_, std::move(w));
}

AkElement operator*(const AkElement& a, const AkElement& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("rank mismatch in product");
  Witness w;
  w.reserve(a.witness_.size() + b.witness_.size());
  w.insert(w.end(), a.witness_.begin(), a.witness_.end());
  w.insert(w.end(), b.witness_.begin(), b.witness_.end());
  // (ab)^-1 = b^-1 a^-1, so the stored pair stays mutually inverse.
  return AkElement(compose(a.fwd_, b.fwd_), compose(b.inv_, a.inv_), std::move(w));
}

namespace {
void put_u32(std::string& out, std::uint32_t v) {
  out.push_back(static_cast<char>(v & 0xff));
  out.push_back(static_cast<char>((v >> 8) & 0xff));
  out.push_back(static_cast<char>((v >> 16) & 0xff));
  out.push_back(static_cast<char>((v >> 24) & 0xff));
}
void put_u16(std::string& out, std::uint16_t v) {
  out.push_back(static_cast<char>(v & 0xff));
  out.push_back(static_cast<char>((v >> 8) & 0xff));
}
}  // namespace

std::string key_of(const Automorphism& a) {
  std::string out;
  put_u32(out, static_cast<std::uint32_t>(a.rank()));
  for (const Word& w : a.images()) {
    put_u32(out, static_cast<std::uint32_t>(w.size()));
    for (const Letter& l : w.letters()) {
      put_u16(out, l.idx);
      put_u16(out, static_cast<std::uint16_t>(static_cast<std::int16_t>(l.exp)));
    }
  }
  return out;
}

std::string AkElement::key() const { return key_of(fwd_); }

bool AkElement::is_consistent() const {
  return compose(fwd_, inv_).is_identity() && compose(inv_, fwd_).is_identity();
}

AkElement AkElement::embedded(int new_rank) const {
  if (new_rank < rank()) throw std::invalid_argument("embedding must not shrink rank");
  if (new_rank == rank()) return *this;
  auto extend = [&](const Automorphism& a) {
    std::vector<Word> ims = a.images();
    for (int m = a.rank() + 1; m <= new_rank; ++m) ims.push_back(Word::generator(m));
    return Automorphism(new_rank, std::move(ims));
  };
  return AkElement(extend(fwd_), extend(inv_), witness_);
}

void AkElement::adopt_witness(Witness w) { witness_ = std::move(w); }

std::pair<Word, Word> kernel_decompose(const AkElement& a) {
  const int k = a.rank();
  for (int i = 1; i <= k; ++i) {
    const Word& im = a.fwd().image(i);
    if (!(im.size() == 1 && im.letters()[0].idx == i && im.letters()[0].exp == 1))
      throw std::invalid_argument("element does not fix x_" + std::to_string(i) +
                                  "; not in the kernel of the restriction map");
  }
  const Word& im0 = a.fwd().image(0);
  // im0 = l x_0 r with l, r not containing x_0.
  int pos = -1;
  for (std::size_t p = 0; p < im0.size(); ++p) {
    if (im0.letters()[p].idx == 0) {
      if (pos >= 0 || im0.letters()[p].exp != 1)
        throw std::invalid_argument("image of x_0 is not of the form l*x_0*r");
      pos = static_cast<int>(p);
    }
  }
  if (pos < 0) throw std::invalid_argument("image of x_0 does not contain x_0");
  std::vector<Letter> l(im0.letters().begin(), im0.letters().begin() + pos);
  std::vector<Letter> r(im0.letters().begin() + pos + 1, im0.letters().end());
  return {Word::reduce(l, k), Word::reduce(r, k)};
}

}  // namespace praa::autf
