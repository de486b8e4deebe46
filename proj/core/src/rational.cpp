#include "praa/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace praa {

Rat rat_from_decimal(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty numeric string");
  if (s.find('/') != std::string_view::npos) {
    Rat r;
    if (r.set_str(std::string(s), 10) != 0)
      throw std::invalid_argument("bad rational literal: " + std::string(s));
    r.canonicalize();
    return r;
  }

  bool neg = false;
  std::size_t i = 0;
  if (s[i] == '+' || s[i] == '-') {
    neg = (s[i] == '-');
    ++i;
  }
  std::string digits;
  long frac_digits = 0;
  bool seen_dot = false, seen_digit = false;
  long exp10 = 0;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (c == '.') {
      if (seen_dot) throw std::invalid_argument("bad decimal: " + std::string(s));
      seen_dot = true;
    } else if (c == 'e' || c == 'E') {
      exp10 = std::stol(std::string(s.substr(i + 1)));
      break;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      digits += c;
      seen_digit = true;
      if (seen_dot) ++frac_digits;
    } else {
      throw std::invalid_argument("bad decimal: " + std::string(s));
    }
  }
  if (!seen_digit) throw std::invalid_argument("bad decimal: " + std::string(s));

  Int num(digits.empty() ? "0" : digits);
  if (neg) num = -num;
  long shift = exp10 - frac_digits;
  Int pow10 = 1;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
  Rat r;
  if (shift >= 0)
    r = Rat(num * pow10);
  else
    r = Rat(num, pow10);
  r.canonicalize();
  return r;
}

std::string rat_to_string(const Rat& r) { return r.get_str(); }

double rat_to_double(const Rat& r) { return r.get_d(); }

}  // namespace praa
