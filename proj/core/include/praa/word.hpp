#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace praa::autf {

// One letter x_idx^exp of the free group on x_0..x_k, exp in {-1,+1}.
struct Letter {
  std::uint8_t idx;
  std::int8_t exp;

  friend bool operator==(const Letter&, const Letter&) = default;
};

inline Letter inverse(Letter l) { return {l.idx, static_cast<std::int8_t>(-l.exp)}; }

// A freely reduced word. The empty word is the identity.
class Word {
 public:
  Word() = default;

  // Free reduction of a raw letter sequence. Letters must satisfy
  // idx <= max_index and exp in {-1,+1}.
  static Word reduce(std::span<const Letter> raw, int max_index);
  static Word generator(int idx, int exp = +1);

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }
  int max_index() const;

  Word inverse() const;
  friend Word operator*(const Word& a, const Word& b);

  friend bool operator==(const Word&, const Word&) = default;

  // Compact rendering, e.g. "x1*x2^-1"; "1" for the identity.
  std::string str() const;

 private:
  std::vector<Letter> letters_;
};

}  // namespace praa::autf
