#include "praa/schreier.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace praa::schreier {

namespace {

struct BfsSetup {
  bool has_accumulator;
  walker::MoveFamily family;
};

LabeledGraph bfs(const GroupHandle& h, walker::WalkState root, BfsSetup setup, int k,
                 std::size_t budget) {
  LabeledGraph g;
  g.k = k;
  g.family = setup.family;
  g.has_accumulator = setup.has_accumulator;
  g.labels = walker::move_family(k, setup.family);

  std::unordered_map<std::string, std::uint32_t> index;
  std::vector<walker::WalkState> states;

  auto full_key = [&](const walker::WalkState& s) {
    std::string key;
    if (setup.has_accumulator) key = h.encode(s.accumulator);
    key += '|';
    key += blackbox::encode_tuple(h, s.tuple);
    return key;
  };

  auto add_vertex = [&](const walker::WalkState& s, const std::string& key) {
    if (states.size() >= budget)
      throw ResourceError("component exceeds vertex budget " + std::to_string(budget),
                          states.size());
    index.emplace(key, static_cast<std::uint32_t>(states.size()));
    states.push_back(s);
    if (setup.has_accumulator) g.acc_keys.push_back(h.encode(s.accumulator));
    g.tuple_keys.push_back(blackbox::encode_tuple(h, s.tuple));
  };

  add_vertex(root, full_key(root));

  blackbox::GroupElement scratch;
  for (std::size_t v = 0; v < states.size(); ++v) {
    // states grows as we go; copy the source state since the vector may move.
    walker::WalkState cur = states[v];
    for (const walker::Move& m : g.labels) {
      walker::WalkState next = cur;
      walker::apply_move_inplace(h, next, m, scratch);
      std::string key = full_key(next);
      auto it = index.find(key);
      std::uint32_t tgt;
      if (it == index.end()) {
        tgt = static_cast<std::uint32_t>(states.size());
        add_vertex(next, key);
      } else {
        tgt = it->second;
      }
      g.targets.push_back(tgt);
    }
  }
  return g;
}

}  // namespace

LabeledGraph enumerate_component(const GroupHandle& h, const walker::WalkState& root,
                                 std::size_t vertex_budget) {
  return bfs(h, root, {true, walker::MoveFamily::CN}, root.k(), vertex_budget);
}

LabeledGraph enumerate_component(const GroupHandle& h, const GenTuple& root,
                                 std::size_t vertex_budget) {
  walker::WalkState s{h.identity(), root};
  return bfs(h, s, {false, walker::MoveFamily::NOnly}, static_cast<int>(root.size()),
             vertex_budget);
}

std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>>
LabeledGraph::neighbor_counts() const {
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> out(size());
  std::vector<std::uint32_t> row;
  for (std::size_t v = 0; v < size(); ++v) {
    row.assign(targets.begin() + v * labels.size(),
               targets.begin() + (v + 1) * labels.size());
    std::sort(row.begin(), row.end());
    for (std::size_t i = 0; i < row.size();) {
      std::size_t j = i;
      while (j < row.size() && row[j] == row[i]) ++j;
      out[v].emplace_back(row[i], static_cast<std::uint32_t>(j - i));
      i = j;
    }
  }
  return out;
}

Projection accumulator_projection(const LabeledGraph& g) {
  if (!g.has_accumulator)
    throw std::invalid_argument("graph has no accumulator coordinate");
  Projection p;
  p.class_of.resize(g.size());
  std::unordered_map<std::string, std::uint32_t> classes;
  for (std::size_t v = 0; v < g.size(); ++v) {
    auto [it, fresh] = classes.emplace(g.acc_keys[v], static_cast<std::uint32_t>(p.class_keys.size()));
    if (fresh) p.class_keys.push_back(g.acc_keys[v]);
    p.class_of[v] = it->second;
  }
  return p;
}

Projection tuple_projection(const LabeledGraph& g) {
  Projection p;
  p.class_of.resize(g.size());
  std::unordered_map<std::string, std::uint32_t> classes;
  for (std::size_t v = 0; v < g.size(); ++v) {
    auto [it, fresh] = classes.emplace(g.tuple_keys[v], static_cast<std::uint32_t>(p.class_keys.size()));
    if (fresh) p.class_keys.push_back(g.tuple_keys[v]);
    p.class_of[v] = it->second;
  }
  return p;
}

std::vector<std::size_t> fiber_sizes(const Projection& p) {
  std::vector<std::size_t> out(p.classes(), 0);
  for (std::uint32_t c : p.class_of) ++out[c];
  return out;
}

Dist point_mass(std::size_t n, std::size_t at) {
  Dist mu(n, Rat(0));
  mu.at(at) = 1;
  return mu;
}

Dist uniform_dist(std::size_t n) {
  return Dist(n, Rat(1, static_cast<unsigned long>(n)));
}

bool is_distribution(const Dist& mu) {
  Rat s = 0;
  for (const Rat& x : mu) {
    if (x < 0) return false;
    s += x;
  }
  return s == 1;
}

Rat tv(const Dist& mu, const Dist& nu) {
  if (mu.size() != nu.size()) throw std::invalid_argument("distribution size mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < mu.size(); ++i) s += abs(mu[i] - nu[i]);
  return s / 2;
}

Dist pushforward(const Dist& mu, const Projection& proj) {
  if (mu.size() != proj.class_of.size())
    throw std::invalid_argument("distribution/projection size mismatch");
  Dist out(proj.classes(), Rat(0));
  for (std::size_t v = 0; v < mu.size(); ++v) out[proj.class_of[v]] += mu[v];
  return out;
}

SparseStochastic lazy_matrix(const LabeledGraph& g) {
  SparseStochastic p;
  p.n = g.size();
  p.rows.resize(p.n);
  const unsigned long two_deg = 2ul * g.degree();
  auto nbrs = g.neighbor_counts();
  for (std::size_t v = 0; v < p.n; ++v) {
    bool self_seen = false;
    for (auto [w, mult] : nbrs[v]) {
      unsigned long num = mult;
      if (w == v) {
        num += g.degree();  // the lazy half-step
        self_seen = true;
      }
      p.rows[v].emplace_back(w, frac(num, two_deg));
    }
    if (!self_seen)
      p.rows[v].emplace_back(static_cast<std::uint32_t>(v), Rat(g.degree(), two_deg));
    std::sort(p.rows[v].begin(), p.rows[v].end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
  }
  return p;
}

bool SparseStochastic::is_symmetric() const {
  for (std::size_t v = 0; v < n; ++v)
    for (const auto& [w, q] : rows[v]) {
      const auto& rw = rows[w];
      auto it = std::lower_bound(rw.begin(), rw.end(), v,
                                 [](const auto& e, std::size_t x) { return e.first < x; });
      if (it == rw.end() || it->first != v || it->second != q) return false;
    }
  return true;
}

Rat SparseStochastic::row_sum(std::size_t r) const {
  Rat s = 0;
  for (const auto& [w, q] : rows.at(r)) s += q;
  return s;
}

Dist evolve(const SparseStochastic& p, Dist mu, std::int64_t t) {
  if (mu.size() != p.n) throw std::invalid_argument("dimension mismatch in evolve");
  Dist next(p.n);
  for (std::int64_t s = 0; s < t; ++s) {
    std::fill(next.begin(), next.end(), Rat(0));
    for (std::size_t v = 0; v < p.n; ++v) {
      if (mu[v] == 0) continue;
      for (const auto& [w, q] : p.rows[v]) next[w] += mu[v] * q;
    }
    mu.swap(next);
  }
  return mu;
}

ExactEvolution::ExactEvolution(const LabeledGraph& g, std::size_t root_vertex)
    : nbrs_(g.neighbor_counts()),
      num_(g.size(), Int(0)),
      scratch_(g.size(), Int(0)),
      denom_(1),
      degree_(static_cast<std::uint32_t>(g.degree())) {
  num_.at(root_vertex) = 1;
}

void ExactEvolution::advance(std::int64_t steps) {
  // One step: num'[w] = deg * num[w] + sum over edges (v,w) of num[v];
  // the denominator picks up a factor 2*deg.
  for (std::int64_t s = 0; s < steps; ++s) {
    for (std::size_t v = 0; v < num_.size(); ++v) {
      mpz_mul_ui(scratch_[v].get_mpz_t(), num_[v].get_mpz_t(), degree_);
    }
    for (std::size_t v = 0; v < num_.size(); ++v) {
      if (mpz_sgn(num_[v].get_mpz_t()) == 0) continue;
      for (auto [w, mult] : nbrs_[v]) {
        if (mult == 1)
          mpz_add(scratch_[w].get_mpz_t(), scratch_[w].get_mpz_t(), num_[v].get_mpz_t());
        else
          mpz_addmul_ui(scratch_[w].get_mpz_t(), num_[v].get_mpz_t(), mult);
      }
    }
    num_.swap(scratch_);
    denom_ *= 2ul * degree_;
    ++t_;
  }
}

Rat ExactEvolution::tv_to_uniform() const {
  const unsigned long n = num_.size();
  Int acc = 0, term;
  for (const Int& x : num_) {
    term = x * n - denom_;
    mpz_abs(term.get_mpz_t(), term.get_mpz_t());
    acc += term;
  }
  Rat r(acc, 2 * n * denom_);
  r.canonicalize();
  return r;
}

Rat ExactEvolution::tv_pushforward_to_uniform(const Projection& proj) const {
  if (proj.class_of.size() != num_.size())
    throw std::invalid_argument("projection size mismatch");
  std::vector<Int> cls(proj.classes(), Int(0));
  for (std::size_t v = 0; v < num_.size(); ++v) cls[proj.class_of[v]] += num_[v];
  const unsigned long c = cls.size();
  Int acc = 0, term;
  for (const Int& x : cls) {
    term = x * c - denom_;
    mpz_abs(term.get_mpz_t(), term.get_mpz_t());
    acc += term;
  }
  Rat r(acc, 2 * c * denom_);
  r.canonicalize();
  return r;
}

Dist ExactEvolution::distribution() const {
  Dist mu(num_.size());
  for (std::size_t v = 0; v < num_.size(); ++v) {
    mu[v] = frac(num_[v], denom_);
  }
  return mu;
}

DecimalEvolution::DecimalEvolution(const LabeledGraph& g, std::size_t root_vertex,
                                   int precision_bits)
    : nbrs_(g.neighbor_counts()),
      prec_(precision_bits),
      degree_(static_cast<std::uint32_t>(g.degree())) {
  x_.reserve(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) x_.emplace_back(0, prec_);
  scratch_ = x_;
  x_.at(root_vertex) = 1;
}

void DecimalEvolution::advance(std::int64_t steps) {
  const double ulp = std::ldexp(1.0, 1 - prec_);
  for (std::int64_t s = 0; s < steps; ++s) {
    std::size_t max_terms = 0;
    for (std::size_t v = 0; v < x_.size(); ++v) scratch_[v] = x_[v] * degree_;
    for (std::size_t v = 0; v < x_.size(); ++v) {
      for (auto [w, mult] : nbrs_[v]) scratch_[w] += x_[v] * mult;
      max_terms = std::max(max_terms, nbrs_[v].size());
    }
    for (std::size_t v = 0; v < x_.size(); ++v) x_[v] = scratch_[v] / (2 * degree_);
    // One add/mul pair per incoming term plus the final division, each
    // rounding at most one ulp of a value <= 1.
    err_ += static_cast<double>(max_terms + 3) * ulp;
    ++t_;
  }
}

double DecimalEvolution::tv_to_uniform() const {
  mpf_class u(1, prec_);
  u /= static_cast<unsigned long>(x_.size());
  mpf_class acc(0, prec_);
  for (const auto& xv : x_) {
    mpf_class d = xv - u;
    acc += (d < 0) ? mpf_class(-d) : d;
  }
  return acc.get_d() / 2.0;
}

}  // namespace praa::schreier
