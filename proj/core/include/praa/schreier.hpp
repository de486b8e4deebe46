#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "praa/blackbox.hpp"
#include "praa/rational.hpp"
#include "praa/walker.hpp"

namespace praa::schreier {

using blackbox::GenTuple;
using blackbox::GroupHandle;

// A connected component of the move action, enumerated by BFS from a root.
// Vertices are indexed in deterministic BFS order (labels scanned in the
// canonical order of walker::move_family). Edges are stored per label, so
// out-degree equals labels.size() counting multiplicity, loops included.
struct LabeledGraph {
  int k = 0;
  walker::MoveFamily family = walker::MoveFamily::CN;
  bool has_accumulator = false;
  std::vector<walker::Move> labels;
  std::vector<std::string> acc_keys;    // per vertex; empty if no accumulator
  std::vector<std::string> tuple_keys;  // per vertex
  std::vector<std::uint32_t> targets;   // row-major: vertex * degree + label

  std::size_t size() const { return tuple_keys.size(); }
  int degree() const { return static_cast<int>(labels.size()); }
  std::uint32_t target(std::size_t v, std::size_t label) const {
    return targets[v * labels.size() + label];
  }

  // Collapsed adjacency: per vertex, (neighbor, edge multiplicity) pairs.
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> neighbor_counts() const;
};

// Component of (g_0 | g_1..g_k) under all C+N moves (the accumulator walk).
LabeledGraph enumerate_component(const GroupHandle& h, const walker::WalkState& root,
                                 std::size_t vertex_budget = Budgets::global().max_vertices);
// Component of a bare tuple under N-moves only (the classical walk).
LabeledGraph enumerate_component(const GroupHandle& h, const GenTuple& root,
                                 std::size_t vertex_budget = Budgets::global().max_vertices);

// Total map from vertices onto classes (e.g. the accumulator value).
struct Projection {
  std::vector<std::uint32_t> class_of;   // per vertex
  std::vector<std::string> class_keys;   // class -> key, first-seen order
  std::size_t classes() const { return class_keys.size(); }
};

Projection accumulator_projection(const LabeledGraph& g);
Projection tuple_projection(const LabeledGraph& g);
std::vector<std::size_t> fiber_sizes(const Projection& p);

// Exact probability distributions over graph vertices.
using Dist = std::vector<Rat>;

Dist point_mass(std::size_t n, std::size_t at);
Dist uniform_dist(std::size_t n);
bool is_distribution(const Dist& mu);

// Total variation distance (1/2) * l1.
Rat tv(const Dist& mu, const Dist& nu);

Dist pushforward(const Dist& mu, const Projection& proj);

// The lazy transition matrix P = I/2 + A/(2 deg), exact rational entries.
struct SparseStochastic {
  std::size_t n = 0;
  std::vector<std::vector<std::pair<std::uint32_t, Rat>>> rows;

  bool is_symmetric() const;
  Rat row_sum(std::size_t r) const;
};

SparseStochastic lazy_matrix(const LabeledGraph& g);

// mu P^t by direct sparse multiplication (general-purpose, exact).
Dist evolve(const SparseStochastic& p, Dist mu, std::int64_t t);

// Incremental exact evolution of the lazy walk from a point mass. The state
// is kept as integer numerators over the common denominator (2 deg)^t, which
// is what makes thousands of exact steps affordable.
class ExactEvolution {
 public:
  ExactEvolution(const LabeledGraph& g, std::size_t root_vertex);

  void advance(std::int64_t steps);
  std::int64_t t() const { return t_; }

  Rat tv_to_uniform() const;
  Rat tv_pushforward_to_uniform(const Projection& proj) const;
  Dist distribution() const;
  Int denominator() const { return denom_; }

 private:
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> nbrs_;
  std::vector<Int> num_, scratch_;
  Int denom_;
  std::int64_t t_ = 0;
  std::uint32_t degree_;
};

// Fixed-precision (default 128-bit mantissa) evolution for graphs too large
// for exact mode, with a first-order accumulated rounding bound.
class DecimalEvolution {
 public:
  DecimalEvolution(const LabeledGraph& g, std::size_t root_vertex, int precision_bits = 128);

  void advance(std::int64_t steps);
  std::int64_t t() const { return t_; }
  double tv_to_uniform() const;
  double error_bound() const { return err_; }

 private:
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> nbrs_;
  std::vector<mpf_class> x_, scratch_;
  int prec_;
  double err_ = 0.0;
  std::int64_t t_ = 0;
  std::uint32_t degree_;
};

}  // namespace praa::schreier
