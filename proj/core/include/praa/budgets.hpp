#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace praa {

// Thrown when a computation would exceed a configured resource budget.
// `partial` carries how far the computation got (e.g. vertices visited).
class ResourceError : public std::runtime_error {
 public:
  ResourceError(const std::string& what, std::size_t partial = 0)
      : std::runtime_error(what), partial_(partial) {}
  std::size_t partial() const { return partial_; }

 private:
  std::size_t partial_;
};

// Thrown when a query cannot be answered either way (e.g. generation
// checks on a group that cannot be enumerated). Distinct from `false`.
class UnverifiableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Resource limits. Every field can be overridden through the environment
// variable named next to it; `global()` reads the environment once.
struct Budgets {
  int max_rank = 8;                        // PRAA_MAX_RANK
  std::size_t max_vertices = 2'000'000;    // PRAA_MAX_VERTICES
  std::size_t max_enumerate = 1'000'000;   // PRAA_ENUM_BOUND
  int max_sym_rank = 6;                    // PRAA_MAX_SYM_K
  std::size_t dense_eig_max = 4000;        // PRAA_DENSE_EIG_MAX
  std::size_t exact_evolve_max = 10'000;   // PRAA_EXACT_EVOLVE_MAX

  static const Budgets& global();
};

void require_rank(int k, const Budgets& b = Budgets::global());

}  // namespace praa
