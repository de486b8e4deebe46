#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "praa/automorphism.hpp"

namespace praa::autf {

enum class Side : std::uint8_t { L, R };

// A Nielsen transvection label T_{ij}^sign: multiply x_j^sign onto x_i,
// from the left (L) or the right (R). i = 0 marks a C-generator (the
// accumulator letter is modified), i >= 1 an N-generator. j >= 1 always.
struct NielsenGen {
  Side side;
  std::uint8_t i;
  std::uint8_t j;
  std::int8_t sign;

  NielsenGen inverse() const {
    return {side, i, j, static_cast<std::int8_t>(-sign)};
  }
  bool is_c() const { return i == 0; }

  friend bool operator==(const NielsenGen&, const NielsenGen&) = default;

  std::string str() const;
};

void validate(const NielsenGen& g, int rank);

// The Nielsen automorphism named by g, at the given rank:
//   L_{ij}^s : x_i -> x_j^s x_i      R_{ij}^s : x_i -> x_i x_j^s
Automorphism nielsen_automorphism(const NielsenGen& g, int rank);

using Witness = std::vector<NielsenGen>;

// An element of the subgroup generated by the C- and N-generators inside
// SAut of the free group on x_0..x_k. The element is stored as the pair of
// mutually inverse automorphisms (inverting an automorphism from its images
// alone is out of scope, so the inverse is carried from construction), plus
// a witness word in the generators that evaluates to fwd. The witness need
// not be geodesic; its length is an upper bound on the word-length norm.
class AkElement {
 public:
  static AkElement identity(int rank);
  static AkElement nielsen(const NielsenGen& g, int rank);

  // fwd and inv must be mutually inverse; witness must evaluate to fwd.
  AkElement(Automorphism fwd, Automorphism inv, Witness witness);

  int rank() const { return fwd_.rank(); }
  const Automorphism& fwd() const { return fwd_; }
  const Automorphism& inv() const { return inv_; }
  const Witness& witness() const { return witness_; }

  AkElement inverse() const;
  friend AkElement operator*(const AkElement& a, const AkElement& b);

  bool is_identity() const { return fwd_.is_identity(); }

  // Canonical byte key: rank, then each fwd image serialized as a u32
  // little-endian length followed by (u16 index, i16 exponent) pairs.
  // Equality of elements is equality of keys; inv and witness are excluded.
  std::string key() const;

  // Verifies fwd∘inv = inv∘fwd = id (used by tests; O(compose)).
  bool is_consistent() const;

  // The same element considered at a larger rank (new letters are fixed).
  AkElement embedded(int new_rank) const;

  // Replaces the witness by a shorter one for the same element. Caller
  // guarantees the new witness evaluates to fwd.
  void adopt_witness(Witness w);

  friend bool operator==(const AkElement& a, const AkElement& b) {
    return a.fwd_ == b.fwd_;
  }

 private:
  Automorphism fwd_;
  Automorphism inv_;
  Witness witness_;
};

std::string key_of(const Automorphism& a);

// For an element fixing x_1..x_k pointwise, returns the unique pair (l, r)
// of words in x_1..x_k with fwd(x_0) = l * x_0 * r. Throws
// std::invalid_argument when some x_i, i >= 1, is not fixed.
std::pair<Word, Word> kernel_decompose(const AkElement& a);

}  // namespace praa::autf
