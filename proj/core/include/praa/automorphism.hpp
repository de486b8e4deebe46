#pragma once

#include <vector>

#include "praa/word.hpp"

namespace praa::autf {

// An endomorphism of the free group on x_0..x_k given by its images on the
// generators. Instances produced by this library are automorphisms; equality
// is letter-for-letter equality of the (reduced) image tuple, which is the
// canonical form.
class Automorphism {
 public:
  // images[i] is the image of x_i; must have size rank+1.
  Automorphism(int rank, std::vector<Word> images);

  static Automorphism identity(int rank);

  int rank() const { return rank_; }
  const Word& image(int i) const { return images_.at(i); }
  const std::vector<Word>& images() const { return images_; }

  // Substitutes images into w and reduces.
  Word apply(const Word& w) const;

  bool is_identity() const;

  friend bool operator==(const Automorphism&, const Automorphism&) = default;

 private:
  int rank_;
  std::vector<Word> images_;
};

// Composition acting as functions: compose(a, b)(x) = a(b(x)).
Automorphism compose(const Automorphism& a, const Automorphism& b);

}  // namespace praa::autf
