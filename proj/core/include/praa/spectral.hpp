#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "praa/budgets.hpp"
#include "praa/schreier.hpp"

namespace praa::spectral {

// A regular multigraph given by neighbor multiplicity lists.
struct Multigraph {
  std::size_t n = 0;
  std::uint32_t degree = 0;
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> nbrs;
};

Multigraph to_multigraph(const schreier::LabeledGraph& g);
Multigraph complete_graph(std::size_t n);

struct GapResult {
  double gap = 0.0;       // smallest nonzero eigenvalue of I - A/deg
  double residual = 0.0;  // ||L v - gap v||_2 for the returned eigenpair
  std::size_t n = 0;
  bool dense = true;      // which solver produced it
};

// Spectral gap of the normalized Laplacian I - A/deg. Dense symmetric
// eigensolve up to `dense_threshold` vertices; beyond that a Lanczos
// iteration with full reorthogonalization on 2I - L, deflating the constant
// eigenvector. Fails (std::runtime_error) if the residual cannot be
// certified below `residual_tol`. Throws std::invalid_argument on a
// disconnected graph.
GapResult spectral_gap(const Multigraph& g,
                       std::size_t dense_threshold = Budgets::global().dense_eig_max,
                       double residual_tol = 1e-9);

GapResult spectral_gap(const schreier::LabeledGraph& g,
                       std::size_t dense_threshold = Budgets::global().dense_eig_max,
                       double residual_tol = 1e-9);

}  // namespace praa::spectral
