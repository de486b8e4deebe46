#include "praa/group_ring.hpp"

#include <deque>

namespace praa::ring {

FiniteModel::FiniteModel(blackbox::HandlePtr handle, std::vector<blackbox::GroupElement> sym_gens)
    : handle_(std::move(handle)), gens_(std::move(sym_gens)) {
  if (gens_.empty()) throw std::invalid_argument("finite model needs generators");
  // the generating list must be symmetric so word lengths are two-sided
  for (const auto& g : gens_) {
    std::string ik = handle_->encode(handle_->invert(g));
    bool found = false;
    for (const auto& h : gens_)
      if (handle_->encode(h) == ik) {
        found = true;
        break;
      }
    if (!found) throw std::invalid_argument("generator list is not symmetric");
  }
  // exact geodesic word lengths by BFS from the identity
  std::deque<Elem> queue;
  queue.push_back(handle_->identity());
  lengths_[handle_->encode(queue.front())] = 0;
  while (!queue.empty()) {
    Elem cur = queue.front();
    queue.pop_front();
    long d = lengths_[handle_->encode(cur)];
    for (const auto& g : gens_) {
      Elem nxt = handle_->multiply(cur, g);
      auto [it, fresh] = lengths_.emplace(handle_->encode(nxt), d + 1);
      if (fresh) queue.push_back(std::move(nxt));
    }
  }
}

long FiniteModel::word_length(const Elem& a) const {
  auto it = lengths_.find(handle_->encode(a));
  if (it == lengths_.end())
    throw std::invalid_argument("element is not in the subgroup generated by the model's list");
  return it->second;
}

}  // namespace praa::ring
