#include "praa/sharpness.hpp"

#include <queue>
#include <stdexcept>

namespace praa::schreier {

namespace {

// Vectors of Z_3^k encoded as base-3 integers 0..3^k-1; digit i is coord i.
std::uint32_t pow3(int k) {
  std::uint32_t p = 1;
  for (int i = 0; i < k; ++i) p *= 3;
  return p;
}

// Image of vector w under the transvection e_i -> e_i + sign*e_j (as a
// matrix on column vectors: coord j gains sign*coord i).
std::uint32_t transvect(std::uint32_t w, int i, int j, int sign, const std::vector<std::uint32_t>& p3) {
  std::int64_t ci = (w / p3[i]) % 3;
  std::int64_t cj = (w / p3[j]) % 3;
  std::int64_t nj = (cj + (sign > 0 ? ci : 2 * ci)) % 3;
  return static_cast<std::uint32_t>(w + (nj - cj) * p3[j]);
}

}  // namespace

SharpnessResult sharpness_check(int k) {
  if (k < 2 || k > 7) throw std::out_of_range("sharpness check supports 2 <= k <= 7");

  SharpnessResult res;
  res.k = k;
  const std::uint32_t n3 = pow3(k);
  res.vertices = n3 - 1;
  std::vector<std::uint32_t> p3(k);
  for (int i = 0; i < k; ++i) p3[i] = pow3(i);

  // v = sum_i (delta_{e_i} - delta_{-e_i}); index 0 (the zero vector) unused.
  std::vector<int> v(n3, 0);
  for (int i = 0; i < k; ++i) {
    v[p3[i]] += 1;       // e_{i+1}
    v[2 * p3[i]] -= 1;   // -e_{i+1}
  }
  Int norm_sq = 0;
  for (int x : v) norm_sq += static_cast<long>(x) * x;
  res.v_norm_sq = norm_sq;

  res.generators = walker::move_family(k, walker::MoveFamily::CN);
  Int sum_disp = 0;
  std::vector<int> img(n3, 0);
  for (const walker::Move& m : res.generators) {
    Int disp = 0;
    if (m.i == 0) {
      // C-generators factor through the trivial action on Z_3^k.
      res.displacement_sq.push_back(0);
      continue;
    }
    std::fill(img.begin(), img.end(), 0);
    for (std::uint32_t w = 1; w < n3; ++w)
      if (v[w]) img[transvect(w, m.i - 1, m.j - 1, m.sign, p3)] += v[w];
    for (std::uint32_t w = 1; w < n3; ++w) {
      long d = img[w] - v[w];
      disp += d * d;
    }
    res.displacement_sq.push_back(disp);
    sum_disp += disp;
  }

  res.max_displacement_sq = 0;
  for (const Int& d : res.displacement_sq)
    if (d > res.max_displacement_sq) res.max_displacement_sq = d;

  res.rayleigh = frac(sum_disp, norm_sq);

  // Transitivity of the transvection action on nonzero vectors.
  {
    std::vector<bool> seen(n3, false);
    std::queue<std::uint32_t> q;
    q.push(p3[0]);
    seen[p3[0]] = true;
    std::size_t cnt = 1;
    while (!q.empty()) {
      std::uint32_t w = q.front();
      q.pop();
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
          if (i == j) continue;
          for (int sign : {1, -1}) {
            std::uint32_t u = transvect(w, i, j, sign, p3);
            if (!seen[u]) {
              seen[u] = true;
              ++cnt;
              q.push(u);
            }
          }
        }
    }
    res.transitive = (cnt == res.vertices);
  }

  // The two stated identities/inequalities, exactly.
  if (res.max_displacement_sq * k != 2 * norm_sq)
    throw std::logic_error("max generator displacement is not sqrt(2/k)*||v||");
  if (res.rayleigh > 8 * k) throw std::logic_error("rayleigh quotient exceeds 8k");
  return res;
}

}  // namespace praa::schreier
