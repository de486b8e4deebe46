#include "praa/automorphism.hpp"

#include <stdexcept>

namespace praa::autf {

Automorphism::Automorphism(int rank, std::vector<Word> images)
    : rank_(rank), images_(std::move(images)) {
  if (rank_ < 0) throw std::invalid_argument("negative rank");
  if (images_.size() != static_cast<std::size_t>(rank_) + 1)
    throw std::invalid_argument("automorphism needs rank+1 generator images");
  for (const Word& w : images_)
    if (w.max_index() > rank_)
      throw std::out_of_range("image letter index exceeds rank");
}

Automorphism Automorphism::identity(int rank) {
  std::vector<Word> ims;
  ims.reserve(rank + 1);
  for (int i = 0; i <= rank; ++i) ims.push_back(Word::generator(i));
  return Automorphism(rank, std::move(ims));
}

Word Automorphism::apply(const Word& w) const {
  if (w.max_index() > rank_)
    throw std::out_of_range("word letter index exceeds automorphism rank");
  std::vector<Letter> out;
  out.reserve(w.size() * 2 + 1);
  for (const Letter& l : w.letters()) {
    const Word& im = images_[l.idx];
    if (l.exp > 0) {
      for (const Letter& m : im.letters()) out.push_back(m);
    } else {
      for (auto it = im.letters().rbegin(); it != im.letters().rend(); ++it)
        out.push_back(inverse(*it));
    }
  }
  return Word::reduce(out, rank_);
}

bool Automorphism::is_identity() const {
  for (int i = 0; i <= rank_; ++i) {
    const auto& ls = images_[i].letters();
    if (ls.size() != 1 || ls[0].idx != i || ls[0].exp != 1) return false;
  }
  return true;
}

Automorphism compose(const Automorphism& a, const Automorphism& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("rank mismatch in compose");
  std::vector<Word> ims;
  ims.reserve(b.rank() + 1);
  for (const Word& w : b.images()) ims.push_back(a.apply(w));
  return Automorphism(a.rank(), std::move(ims));
}

}  // namespace praa::autf
