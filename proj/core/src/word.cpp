#include "praa/word.hpp"

#include <stdexcept>

namespace praa::autf {

Word Word::reduce(std::span<const Letter> raw, int max_index) {
  Word w;
  w.letters_.reserve(raw.size());
  for (const Letter& l : raw) {
    if (l.idx > max_index)
      throw std::out_of_range("letter index " + std::to_string(l.idx) +
                              " out of range 0.." + std::to_string(max_index));
    if (l.exp != 1 && l.exp != -1)
      throw std::invalid_argument("letter exponent must be +1 or -1");
    if (!w.letters_.empty() && w.letters_.back().idx == l.idx &&
        w.letters_.back().exp == -l.exp) {
      w.letters_.pop_back();
    } else {
      w.letters_.push_back(l);
    }
  }
  return w;
}

Word Word::generator(int idx, int exp) {
  if (idx < 0 || idx > 255) throw std::out_of_range("generator index out of range");
  Letter l{static_cast<std::uint8_t>(idx), static_cast<std::int8_t>(exp)};
  return reduce(std::span<const Letter>(&l, 1), idx);
}

int Word::max_index() const {
  int m = -1;
  for (const Letter& l : letters_) m = std::max(m, static_cast<int>(l.idx));
  return m;
}

Word Word::inverse() const {
  Word w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    w.letters_.push_back(autf::inverse(*it));
  return w;
}

Word operator*(const Word& a, const Word& b) {
  // Both inputs are reduced, so cancellation can only happen across the seam.
  Word w;
  w.letters_ = a.letters_;
  for (const Letter& l : b.letters_) {
    if (!w.letters_.empty() && w.letters_.back().idx == l.idx &&
        w.letters_.back().exp == -l.exp) {
      w.letters_.pop_back();
    } else {
      w.letters_.push_back(l);
    }
  }
  return w;
}

std::string Word::str() const {
  if (letters_.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += "*";
    out += "x" + std::to_string(letters_[i].idx);
    if (letters_[i].exp < 0) out += "^-1";
  }
  return out;
}

}  // namespace praa::autf
