#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "praa/blackbox.hpp"
#include "praa/nielsen.hpp"
#include "praa/rational.hpp"

namespace praa::ring {

// A group-ring coefficient model: the group operations plus a canonical key
// and a word-length bound per element. Two models are provided: AkModel
// (automorphism pairs with generator witnesses) and FiniteModel (a finite
// black-box group with exact BFS word lengths). The certifier and all ring
// identities are generic over the model, which is what lets the same code
// paths be validated on small finite groups.
template <class Model>
class RingElement {
 public:
  using Elem = typename Model::Elem;

  struct Term {
    Elem g;
    Rat c;
    long wl;  // word-length bound of g, cached at insertion
  };

  RingElement() = default;

  static RingElement zero() { return RingElement(); }

  static RingElement unit(const Model& m, const Rat& c = Rat(1)) {
    RingElement r;
    r.add_term(m, m.identity(), c);
    return r;
  }

  static RingElement monomial(const Model& m, const Elem& g, const Rat& c = Rat(1)) {
    RingElement r;
    r.add_term(m, g, c);
    return r;
  }

  void add_term(const Model& m, const Elem& g, const Rat& c) {
    if (c == 0) return;
    std::string key = m.key(g);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      terms_.emplace(std::move(key), Term{g, c, m.word_length(g)});
      return;
    }
    it->second.c += c;
    long wl = m.word_length(g);
    if (wl < it->second.wl) {
      it->second.g = g;  // keep the cheaper representative
      it->second.wl = wl;
    }
    if (it->second.c == 0) terms_.erase(it);
  }

  RingElement& operator+=(const RingElement& o) {
    for (const auto& [key, t] : o.terms_) {
      auto it = terms_.find(key);
      if (it == terms_.end()) {
        terms_.emplace(key, t);
      } else {
        it->second.c += t.c;
        if (t.wl < it->second.wl) {
          it->second.g = t.g;
          it->second.wl = t.wl;
        }
        if (it->second.c == 0) terms_.erase(it);
      }
    }
    return *this;
  }

  friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }

  RingElement& operator*=(const Rat& c) {
    if (c == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [key, t] : terms_) t.c *= c;
    return *this;
  }

  friend RingElement operator*(const Rat& c, RingElement a) { return a *= c; }
  friend RingElement operator-(RingElement a, const RingElement& b) {
    RingElement nb = b;
    nb *= Rat(-1);
    return a += nb;
  }

  friend RingElement multiply(const Model& m, const RingElement& a, const RingElement& b) {
    RingElement out;
    for (const auto& [ka, ta] : a.terms_)
      for (const auto& [kb, tb] : b.terms_)
        out.add_term(m, m.multiply(ta.g, tb.g), ta.c * tb.c);
    return out;
  }

  // The * anti-automorphism: linear extension of g -> g^-1.
  friend RingElement star(const Model& m, const RingElement& a) {
    RingElement out;
    for (const auto& [k, t] : a.terms_) out.add_term(m, m.inverse(t.g), t.c);
    return out;
  }

  Rat augmentation() const {
    Rat s = 0;
    for (const auto& [k, t] : terms_) s += t.c;
    return s;
  }

  Rat l1_norm() const {
    Rat s = 0;
    for (const auto& [k, t] : terms_) s += abs(t.c);
    return s;
  }

  // Max word-length bound over the support (0 for the zero element).
  long support_wordlength() const {
    long m = 0;
    for (const auto& [k, t] : terms_) m = std::max(m, t.wl);
    return m;
  }

  std::size_t support_size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Rat coefficient(const std::string& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Rat(0) : it->second.c;
  }

  const std::map<std::string, Term>& terms() const { return terms_; }

  friend bool operator==(const RingElement& a, const RingElement& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    for (; ia != a.terms_.end(); ++ia, ++ib)
      if (ia->first != ib->first || ia->second.c != ib->second.c) return false;
    return true;
  }

 private:
  // keyed map keeps results canonically ordered independent of evaluation order
  std::map<std::string, Term> terms_;
};

struct AkModel {
  int rank;

  using Elem = autf::AkElement;
  Elem identity() const { return autf::AkElement::identity(rank); }
  Elem multiply(const Elem& a, const Elem& b) const { return a * b; }
  Elem inverse(const Elem& a) const { return a.inverse(); }
  std::string key(const Elem& a) const { return a.key(); }
  long word_length(const Elem& a) const { return static_cast<long>(a.witness().size()); }
};

// A finite group together with a symmetric generating list; word lengths are
// exact geodesic lengths computed once by BFS.
class FiniteModel {
 public:
  FiniteModel(blackbox::HandlePtr handle, std::vector<blackbox::GroupElement> sym_gens);

  using Elem = blackbox::GroupElement;
  Elem identity() const { return handle_->identity(); }
  Elem multiply(const Elem& a, const Elem& b) const { return handle_->multiply(a, b); }
  Elem inverse(const Elem& a) const { return handle_->invert(a); }
  std::string key(const Elem& a) const { return handle_->encode(a); }
  long word_length(const Elem& a) const;

  const blackbox::GroupHandle& handle() const { return *handle_; }
  blackbox::HandlePtr handle_ptr() const { return handle_; }
  const std::vector<Elem>& generators() const { return gens_; }

 private:
  blackbox::HandlePtr handle_;
  std::vector<Elem> gens_;
  std::unordered_map<std::string, long> lengths_;
};

using AkRing = RingElement<AkModel>;
using FiniteRing = RingElement<FiniteModel>;

}  // namespace praa::ring
