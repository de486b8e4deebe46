#include "praa/spectral.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <queue>
#include <stdexcept>

namespace praa::spectral {

namespace {

bool connected(const Multigraph& g) {
  if (g.n == 0) return false;
  std::vector<bool> seen(g.n, false);
  std::queue<std::uint32_t> q;
  q.push(0);
  seen[0] = true;
  std::size_t cnt = 1;
  while (!q.empty()) {
    auto v = q.front();
    q.pop();
    for (auto [w, mult] : g.nbrs[v])
      if (!seen[w]) {
        seen[w] = true;
        ++cnt;
        q.push(w);
      }
  }
  return cnt == g.n;
}

// y = (I - A/deg) x
void apply_laplacian(const Multigraph& g, const Eigen::VectorXd& x, Eigen::VectorXd& y) {
  y = x;
  const double inv_deg = 1.0 / g.degree;
  for (std::size_t v = 0; v < g.n; ++v) {
    double acc = 0.0;
    for (auto [w, mult] : g.nbrs[v]) acc += mult * x[w];
    y[static_cast<Eigen::Index>(v)] -= acc * inv_deg;
  }
}

GapResult dense_gap(const Multigraph& g, double residual_tol) {
  const auto n = static_cast<Eigen::Index>(g.n);
  Eigen::MatrixXd lap = Eigen::MatrixXd::Identity(n, n);
  const double inv_deg = 1.0 / g.degree;
  for (std::size_t v = 0; v < g.n; ++v)
    for (auto [w, mult] : g.nbrs[v]) lap(static_cast<Eigen::Index>(v), w) -= mult * inv_deg;

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(lap);
  if (es.info() != Eigen::Success) throw std::runtime_error("eigensolver failed");
  // Connectivity was checked by the caller, so eigenvalue 0 is simple and
  // the gap is the second-smallest eigenvalue.
  GapResult r;
  r.n = g.n;
  r.dense = true;
  r.gap = es.eigenvalues()[std::min<Eigen::Index>(1, n - 1)];
  if (n == 1) r.gap = 0.0;
  Eigen::VectorXd v = es.eigenvectors().col(std::min<Eigen::Index>(1, n - 1));
  Eigen::VectorXd lv;
  apply_laplacian(g, v, lv);
  r.residual = (lv - r.gap * v).norm();
  if (r.residual > residual_tol)
    throw std::runtime_error("dense eigensolve residual " + std::to_string(r.residual) +
                             " exceeds tolerance");
  return r;
}

// Lanczos with full reorthogonalization on B = 2I - L, with the constant
// vector deflated. The largest Ritz value of B on 1^perp is 2 - gap.
GapResult lanczos_gap(const Multigraph& g, double residual_tol) {
  const auto n = static_cast<Eigen::Index>(g.n);
  const int max_iter = std::min<int>(400, static_cast<int>(g.n));
  Eigen::VectorXd ones = Eigen::VectorXd::Constant(n, 1.0 / std::sqrt(static_cast<double>(n)));

  auto apply_b = [&](const Eigen::VectorXd& x, Eigen::VectorXd& y) {
    apply_laplacian(g, x, y);
    y = 2.0 * x - y;
  };
  auto deflate = [&](Eigen::VectorXd& x) { x -= (ones.dot(x)) * ones; };

  std::vector<Eigen::VectorXd> basis;
  std::vector<double> alpha, beta;
  Eigen::VectorXd v = Eigen::VectorXd::Zero(n);
  // deterministic pseudo-random start vector
  for (Eigen::Index i = 0; i < n; ++i) v[i] = std::sin(0.7 * static_cast<double>(i) + 0.3);
  deflate(v);
  v.normalize();
  basis.push_back(v);

  Eigen::VectorXd w(n), tmp(n);
  GapResult result;
  result.n = g.n;
  result.dense = false;

  for (int it = 0; it < max_iter; ++it) {
    apply_b(basis.back(), w);
    deflate(w);
    double a = basis.back().dot(w);
    alpha.push_back(a);
    w -= a * basis.back();
    if (basis.size() > 1) w -= beta.back() * basis[basis.size() - 2];
    // full reorthogonalization keeps the certified residual meaningful
    for (const auto& q : basis) w -= q.dot(w) * q;
    double b = w.norm();

    // Ritz extraction every few steps once the subspace is warm.
    if (it >= 8 && (it % 4 == 0 || b < 1e-13 || it == max_iter - 1)) {
      const int m = static_cast<int>(alpha.size());
      Eigen::MatrixXd tri = Eigen::MatrixXd::Zero(m, m);
      for (int i = 0; i < m; ++i) {
        tri(i, i) = alpha[i];
        if (i + 1 < m) tri(i, i + 1) = tri(i + 1, i) = beta.size() > static_cast<std::size_t>(i)
                                                           ? beta[i]
                                                           : 0.0;
      }
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(tri);
      const Eigen::Index top = m - 1;
      Eigen::VectorXd ritz = Eigen::VectorXd::Zero(n);
      for (int i = 0; i < m; ++i) ritz += es.eigenvectors()(i, top) * basis[i];
      ritz.normalize();
      apply_b(ritz, tmp);
      deflate(tmp);
      double theta = es.eigenvalues()[top];
      double res = (tmp - theta * ritz).norm();
      if (res <= residual_tol || b < 1e-13) {
        result.gap = 2.0 - theta;
        result.residual = res;
        if (res > residual_tol)
          throw std::runtime_error("lanczos residual " + std::to_string(res) +
                                   " exceeds tolerance");
        return result;
      }
    }
    if (b < 1e-13) break;
    beta.push_back(b);
    basis.push_back(w / b);
  }
  throw std::runtime_error("lanczos did not certify the gap within iteration budget");
}

}  // namespace

Multigraph to_multigraph(const schreier::LabeledGraph& g) {
  Multigraph m;
  m.n = g.size();
  m.degree = static_cast<std::uint32_t>(g.degree());
  m.nbrs = g.neighbor_counts();
  return m;
}

Multigraph complete_graph(std::size_t n) {
  Multigraph m;
  m.n = n;
  m.degree = static_cast<std::uint32_t>(n - 1);
  m.nbrs.resize(n);
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t w = 0; w < n; ++w)
      if (v != w) m.nbrs[v].emplace_back(static_cast<std::uint32_t>(w), 1);
  return m;
}

GapResult spectral_gap(const Multigraph& g, std::size_t dense_threshold, double residual_tol) {
  if (g.n == 0) throw std::invalid_argument("empty graph");
  if (!connected(g)) throw std::invalid_argument("graph is disconnected");
  if (g.n <= dense_threshold) return dense_gap(g, residual_tol);
  return lanczos_gap(g, residual_tol);
}

GapResult spectral_gap(const schreier::LabeledGraph& g, std::size_t dense_threshold,
                       double residual_tol) {
  return spectral_gap(to_multigraph(g), dense_threshold, residual_tol);
}

}  // namespace praa::spectral
