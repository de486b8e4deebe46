#include "praa/budgets.hpp"

#include <cstdlib>

namespace praa {
namespace {

std::size_t env_size(const char* name, std::size_t fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  return static_cast<std::size_t>(std::strtoull(v, nullptr, 10));
}

int env_int(const char* name, int fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  return static_cast<int>(std::strtol(v, nullptr, 10));
}

Budgets read_env() {
  Budgets b;
  b.max_rank = env_int("PRAA_MAX_RANK", b.max_rank);
  b.max_vertices = env_size("PRAA_MAX_VERTICES", b.max_vertices);
  b.max_enumerate = env_size("PRAA_ENUM_BOUND", b.max_enumerate);
  b.max_sym_rank = env_int("PRAA_MAX_SYM_K", b.max_sym_rank);
  b.dense_eig_max = env_size("PRAA_DENSE_EIG_MAX", b.dense_eig_max);
  b.exact_evolve_max = env_size("PRAA_EXACT_EVOLVE_MAX", b.exact_evolve_max);
  return b;
}

}  // namespace

const Budgets& Budgets::global() {
  static const Budgets b = read_env();
  return b;
}

void require_rank(int k, const Budgets& b) {
  if (k < 1) throw std::invalid_argument("rank must be positive");
  if (k > b.max_rank)
    throw ResourceError("rank " + std::to_string(k) + " exceeds configured bound " +
                        std::to_string(b.max_rank) + " (PRAA_MAX_RANK)");
}

}  // namespace praa
