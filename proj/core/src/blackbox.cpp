#include "praa/blackbox.hpp"

#include <mutex>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace praa::blackbox {

namespace {

void put_u32(std::string& out, std::uint32_t v) {
  out.push_back(static_cast<char>(v & 0xff));
  out.push_back(static_cast<char>((v >> 8) & 0xff));
  out.push_back(static_cast<char>((v >> 16) & 0xff));
  out.push_back(static_cast<char>((v >> 24) & 0xff));
}

// Lazily computed, cached element list shared by the concrete handles.
class EnumCache {
 public:
  const std::vector<GroupElement>* get(const GroupHandle& h,
                                       std::span<const GroupElement> seeds,
                                       std::size_t bound) const {
    std::call_once(once_, [&] {
      try {
        elems_ = closure(h, seeds, bound);
        ok_ = true;
      } catch (const ResourceError&) {
        ok_ = false;
      }
    });
    return ok_ ? &elems_ : nullptr;
  }

 private:
  mutable std::once_flag once_;
  mutable std::vector<GroupElement> elems_;
  mutable bool ok_ = false;
};

class CyclicHandle final : public GroupHandle {
 public:
  explicit CyclicHandle(std::uint64_t n) : n_(n) {
    if (n < 2) throw std::invalid_argument("cyclic group needs n >= 2");
  }

  GroupElement identity() const override { return {{0}}; }
  GroupElement multiply(const GroupElement& a, const GroupElement& b) const override {
    check(a); check(b);
    return {{static_cast<std::uint32_t>((static_cast<std::uint64_t>(a.v[0]) + b.v[0]) % n_)}};
  }
  GroupElement invert(const GroupElement& a) const override {
    check(a);
    return {{static_cast<std::uint32_t>(a.v[0] == 0 ? 0 : n_ - a.v[0])}};
  }
  void multiply_into(GroupElement& out, const GroupElement& a,
                     const GroupElement& b) const override {
    out.v.resize(1);
    out.v[0] = static_cast<std::uint32_t>((static_cast<std::uint64_t>(a.v[0]) + b.v[0]) % n_);
  }
  void invert_into(GroupElement& out, const GroupElement& a) const override {
    out.v.resize(1);
    out.v[0] = static_cast<std::uint32_t>(a.v[0] == 0 ? 0 : n_ - a.v[0]);
  }
  std::optional<std::uint64_t> order_hint() const override { return n_; }
  const std::vector<GroupElement>* enumerate() const override {
    std::call_once(once_, [&] {
      if (n_ <= Budgets::global().max_enumerate) {
        elems_.reserve(n_);
        for (std::uint64_t x = 0; x < n_; ++x)
          elems_.push_back({{static_cast<std::uint32_t>(x)}});
      }
    });
    return elems_.empty() ? nullptr : &elems_;
  }
  std::string name() const override { return "Z_" + std::to_string(n_); }

 private:
  void check(const GroupElement& a) const {
    if (a.v.size() != 1 || a.v[0] >= n_)
      throw std::invalid_argument("element does not belong to " + name());
  }
  std::uint64_t n_;
  mutable std::once_flag once_;
  mutable std::vector<GroupElement> elems_;
};

class VectorHandle final : public GroupHandle {
 public:
  VectorHandle(std::uint64_t n, std::uint32_t d) : n_(n), d_(d) {
    if (n < 2 || d < 1) throw std::invalid_argument("vector group needs n >= 2, d >= 1");
  }

  GroupElement identity() const override { return {std::vector<std::uint32_t>(d_, 0)}; }
  GroupElement multiply(const GroupElement& a, const GroupElement& b) const override {
    check(a); check(b);
    GroupElement out;
    multiply_into(out, a, b);
    return out;
  }
  GroupElement invert(const GroupElement& a) const override {
    check(a);
    GroupElement out;
    invert_into(out, a);
    return out;
  }
  void multiply_into(GroupElement& out, const GroupElement& a,
                     const GroupElement& b) const override {
    out.v.resize(d_);
    for (std::uint32_t i = 0; i < d_; ++i)
      out.v[i] = static_cast<std::uint32_t>((static_cast<std::uint64_t>(a.v[i]) + b.v[i]) % n_);
  }
  void invert_into(GroupElement& out, const GroupElement& a) const override {
    out.v.resize(d_);
    for (std::uint32_t i = 0; i < d_; ++i)
      out.v[i] = static_cast<std::uint32_t>(a.v[i] == 0 ? 0 : n_ - a.v[i]);
  }
  std::optional<std::uint64_t> order_hint() const override {
    std::uint64_t o = 1;
    for (std::uint32_t i = 0; i < d_; ++i) {
      if (o > UINT64_MAX / n_) return std::nullopt;
      o *= n_;
    }
    return o;
  }
  const std::vector<GroupElement>* enumerate() const override {
    std::call_once(once_, [&] {
      auto o = order_hint();
      if (!o || *o > Budgets::global().max_enumerate) return;
      std::vector<std::uint32_t> cur(d_, 0);
      elems_.reserve(*o);
      while (true) {
        elems_.push_back({cur});
        std::uint32_t i = 0;
        for (; i < d_; ++i) {
          if (++cur[i] < n_) break;
          cur[i] = 0;
        }
        if (i == d_) break;
      }
    });
    return elems_.empty() ? nullptr : &elems_;
  }
  std::string name() const override {
    return "Z_" + std::to_string(n_) + "^" + std::to_string(d_);
  }

 private:
  void check(const GroupElement& a) const {
    if (a.v.size() != d_) throw std::invalid_argument("element does not belong to " + name());
    for (auto x : a.v)
      if (x >= n_) throw std::invalid_argument("residue out of range in " + name());
  }
  std::uint64_t n_;
  std::uint32_t d_;
  mutable std::once_flag once_;
  mutable std::vector<GroupElement> elems_;
};

class PermutationHandle final : public GroupHandle {
 public:
  PermutationHandle(std::uint32_t degree, const std::vector<std::vector<std::uint32_t>>& gens)
      : degree_(degree) {
    if (degree < 1) throw std::invalid_argument("permutation degree must be >= 1");
    for (const auto& g : gens) {
      if (g.size() != degree_) throw std::invalid_argument("generator image array length != degree");
      std::vector<bool> seen(degree_, false);
      GroupElement e;
      e.v.reserve(degree_);
      for (std::uint32_t img : g) {
        if (img < 1 || img > degree_ || seen[img - 1])
          throw std::invalid_argument("generator is not a permutation (1-based images)");
        seen[img - 1] = true;
        e.v.push_back(img - 1);  // 0-based internally
      }
      gens_.push_back(std::move(e));
    }
    if (gens_.empty()) throw std::invalid_argument("permutation group needs generators");
  }

  GroupElement identity() const override {
    GroupElement e;
    e.v.resize(degree_);
    std::iota(e.v.begin(), e.v.end(), 0);
    return e;
  }
  GroupElement multiply(const GroupElement& a, const GroupElement& b) const override {
    check(a); check(b);
    GroupElement out;
    multiply_into(out, a, b);
    return out;
  }
  GroupElement invert(const GroupElement& a) const override {
    check(a);
    GroupElement out;
    invert_into(out, a);
    return out;
  }
  // (a*b)(x) = a(b(x))
  void multiply_into(GroupElement& out, const GroupElement& a,
                     const GroupElement& b) const override {
    out.v.resize(degree_);
    for (std::uint32_t x = 0; x < degree_; ++x) out.v[x] = a.v[b.v[x]];
  }
  void invert_into(GroupElement& out, const GroupElement& a) const override {
    out.v.resize(degree_);
    for (std::uint32_t x = 0; x < degree_; ++x) out.v[a.v[x]] = x;
  }
  std::optional<std::uint64_t> order_hint() const override {
    const auto* e = enumerate();
    if (e) return e->size();
    return std::nullopt;
  }
  const std::vector<GroupElement>* enumerate() const override {
    return cache_.get(*this, gens_, Budgets::global().max_enumerate);
  }
  std::string name() const override {
    return "Perm(deg=" + std::to_string(degree_) + ",gens=" + std::to_string(gens_.size()) + ")";
  }
  const std::vector<GroupElement>& generators() const { return gens_; }

 private:
  void check(const GroupElement& a) const {
    if (a.v.size() != degree_) throw std::invalid_argument("element does not belong to " + name());
  }
  std::uint32_t degree_;
  std::vector<GroupElement> gens_;
  EnumCache cache_;
};

class MatrixHandle final : public GroupHandle {
 public:
  MatrixHandle(std::uint64_t mod, std::uint32_t dim,
               const std::vector<std::vector<std::uint32_t>>& gens)
      : mod_(mod), dim_(dim) {
    if (mod < 2) throw std::invalid_argument("matrix modulus must be >= 2");
    if (dim < 1 || dim > 6) throw std::invalid_argument("matrix dimension must be in 1..6");
    for (const auto& g : gens) {
      if (g.size() != static_cast<std::size_t>(dim_) * dim_)
        throw std::invalid_argument("matrix generator needs dim*dim entries");
      GroupElement e{g};
      for (auto& x : e.v) x = static_cast<std::uint32_t>(x % mod_);
      gens_.push_back(std::move(e));
    }
    if (gens_.empty()) throw std::invalid_argument("matrix group needs generators");
  }

  GroupElement identity() const override {
    GroupElement e;
    e.v.assign(static_cast<std::size_t>(dim_) * dim_, 0);
    for (std::uint32_t i = 0; i < dim_; ++i) e.v[i * dim_ + i] = 1;
    return e;
  }
  GroupElement multiply(const GroupElement& a, const GroupElement& b) const override {
    check(a); check(b);
    GroupElement out;
    multiply_into(out, a, b);
    return out;
  }
  void multiply_into(GroupElement& out, const GroupElement& a,
                     const GroupElement& b) const override {
    out.v.assign(static_cast<std::size_t>(dim_) * dim_, 0);
    for (std::uint32_t i = 0; i < dim_; ++i)
      for (std::uint32_t l = 0; l < dim_; ++l) {
        std::uint64_t ail = a.v[i * dim_ + l];
        if (!ail) continue;
        for (std::uint32_t j = 0; j < dim_; ++j)
          out.v[i * dim_ + j] = static_cast<std::uint32_t>(
              (out.v[i * dim_ + j] + ail * b.v[l * dim_ + j]) % mod_);
      }
  }
  GroupElement invert(const GroupElement& a) const override {
    check(a);
    // adjugate * det^-1; the determinant must be a unit mod `mod`.
    std::int64_t det = det_mod(a.v, dim_);
    std::int64_t inv = mod_inverse(det);
    GroupElement out;
    out.v.assign(static_cast<std::size_t>(dim_) * dim_, 0);
    for (std::uint32_t i = 0; i < dim_; ++i)
      for (std::uint32_t j = 0; j < dim_; ++j) {
        std::int64_t c = cofactor(a.v, j, i);  // adj = transposed cofactors
        std::int64_t val = ((c % static_cast<std::int64_t>(mod_)) * inv) % static_cast<std::int64_t>(mod_);
        if (val < 0) val += mod_;
        out.v[i * dim_ + j] = static_cast<std::uint32_t>(val);
      }
    return out;
  }
  std::optional<std::uint64_t> order_hint() const override {
    const auto* e = enumerate();
    if (e) return e->size();
    return std::nullopt;
  }
  const std::vector<GroupElement>* enumerate() const override {
    return cache_.get(*this, gens_, Budgets::global().max_enumerate);
  }
  std::string name() const override {
    return "Mat(dim=" + std::to_string(dim_) + ",mod=" + std::to_string(mod_) + ")";
  }
  const std::vector<GroupElement>& generators() const { return gens_; }

 private:
  void check(const GroupElement& a) const {
    if (a.v.size() != static_cast<std::size_t>(dim_) * dim_)
      throw std::invalid_argument("element does not belong to " + name());
  }
  std::int64_t det_mod(const std::vector<std::uint32_t>& m, std::uint32_t d) const {
    if (d == 1) return m[0] % mod_;
    std::int64_t acc = 0;
    for (std::uint32_t j = 0; j < d; ++j) {
      std::vector<std::uint32_t> minor;
      minor.reserve((d - 1) * (d - 1));
      for (std::uint32_t r = 1; r < d; ++r)
        for (std::uint32_t c = 0; c < d; ++c)
          if (c != j) minor.push_back(m[r * d + c]);
      std::int64_t term = (static_cast<std::int64_t>(m[j]) * det_mod(minor, d - 1)) %
                          static_cast<std::int64_t>(mod_);
      acc = (acc + (j % 2 ? -term : term)) % static_cast<std::int64_t>(mod_);
    }
    return acc < 0 ? acc + mod_ : acc;
  }
  std::int64_t cofactor(const std::vector<std::uint32_t>& m, std::uint32_t i, std::uint32_t j) const {
    if (dim_ == 1) return 1;
    std::vector<std::uint32_t> minor;
    minor.reserve((dim_ - 1) * (dim_ - 1));
    for (std::uint32_t r = 0; r < dim_; ++r) {
      if (r == i) continue;
      for (std::uint32_t c = 0; c < dim_; ++c)
        if (c != j) minor.push_back(m[r * dim_ + c]);
    }
    std::int64_t d = det_mod(minor, dim_ - 1);
    return ((i + j) % 2) ? -d : d;
  }
  std::int64_t mod_inverse(std::int64_t a) const {
    std::int64_t m = static_cast<std::int64_t>(mod_);
    a %= m;
    if (a < 0) a += m;
    std::int64_t g = m, x = 0, x1 = 1, a1 = a;
    while (a1) {
      std::int64_t q = g / a1;
      g -= q * a1;
      std::swap(g, a1);
      x -= q * x1;
      std::swap(x, x1);
    }
    if (g != 1)
      throw std::domain_error("matrix is not invertible: determinant is not a unit mod " +
                              std::to_string(mod_));
    return ((x % m) + m) % m;
  }

  std::uint64_t mod_;
  std::uint32_t dim_;
  std::vector<GroupElement> gens_;
  EnumCache cache_;
};

}  // namespace

std::string GroupHandle::encode(const GroupElement& a) const {
  std::string out;
  out.reserve(a.v.size() * 4);
  for (std::uint32_t x : a.v) put_u32(out, x);
  return out;
}

HandlePtr make_cyclic(std::uint64_t n) { return std::make_shared<CyclicHandle>(n); }
HandlePtr make_vector(std::uint64_t n, std::uint32_t d) {
  return std::make_shared<VectorHandle>(n, d);
}
HandlePtr make_permutation(std::uint32_t degree,
                           const std::vector<std::vector<std::uint32_t>>& gens) {
  return std::make_shared<PermutationHandle>(degree, gens);
}
HandlePtr make_matrix(std::uint64_t mod, std::uint32_t dim,
                      const std::vector<std::vector<std::uint32_t>>& gens) {
  return std::make_shared<MatrixHandle>(mod, dim, gens);
}

std::vector<GroupElement> closure(const GroupHandle& h, std::span<const GroupElement> gens,
                                  std::size_t bound) {
  std::vector<GroupElement> out;
  std::unordered_set<std::string> seen;
  out.push_back(h.identity());
  seen.insert(h.encode(out[0]));
  std::size_t next = 0;
  while (next < out.size()) {
    GroupElement cur = out[next++];
    for (const GroupElement& g : gens) {
      for (const GroupElement& m : {h.multiply(cur, g), h.multiply(cur, h.invert(g))}) {
        if (seen.insert(h.encode(m)).second) {
          if (out.size() >= bound)
            throw ResourceError("closure exceeds bound " + std::to_string(bound), out.size());
          out.push_back(m);
        }
      }
    }
  }
  return out;
}

bool is_generating(const GroupHandle& h, const GenTuple& tuple) {
  const auto* all = h.enumerate();
  if (!all)
    throw UnverifiableError("group " + h.name() +
                            " cannot be enumerated; generation is unverifiable");
  auto sub = closure(h, tuple, all->size() + 1);
  return sub.size() == all->size();
}

std::string encode_tuple(const GroupHandle& h, const GenTuple& t) {
  std::string out;
  for (const GroupElement& e : t) out += h.encode(e);
  return out;
}

}  // namespace praa::blackbox
