#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "praa/budgets.hpp"

namespace praa::blackbox {

// Plain data owned by some GroupHandle; the payload layout is the handle's
// business (residues, permutation images, matrix entries). Elements carry no
// back-reference to their handle and must only be combined through it.
struct GroupElement {
  std::vector<std::uint32_t> v;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

using GenTuple = std::vector<GroupElement>;

// A finite group accessed only through multiplication, inversion, identity
// and a canonical injective encoding.
class GroupHandle {
 public:
  virtual ~GroupHandle() = default;

  virtual GroupElement identity() const = 0;
  virtual GroupElement multiply(const GroupElement& a, const GroupElement& b) const = 0;
  virtual GroupElement invert(const GroupElement& a) const = 0;

  // Allocation-free variants for hot loops; out may alias neither input.
  virtual void multiply_into(GroupElement& out, const GroupElement& a,
                             const GroupElement& b) const {
    out = multiply(a, b);
  }
  virtual void invert_into(GroupElement& out, const GroupElement& a) const {
    out = invert(a);
  }

  // Canonical bytes, injective on elements of this handle.
  virtual std::string encode(const GroupElement& a) const;

  virtual std::optional<std::uint64_t> order_hint() const { return std::nullopt; }

  // Full element list when the group fits the enumeration budget, else
  // nullptr. The list is computed once and cached.
  virtual const std::vector<GroupElement>* enumerate() const = 0;

  virtual std::string name() const = 0;
};

using HandlePtr = std::shared_ptr<const GroupHandle>;

HandlePtr make_cyclic(std::uint64_t n);
HandlePtr make_vector(std::uint64_t n, std::uint32_t d);
// Generators as 1-based image arrays of the given degree.
HandlePtr make_permutation(std::uint32_t degree,
                           const std::vector<std::vector<std::uint32_t>>& gens);
// dim x dim matrices over Z_mod, row-major entries. Inversion requires the
// determinant to be a unit mod `mod`; this is checked only at invert time.
HandlePtr make_matrix(std::uint64_t mod, std::uint32_t dim,
                      const std::vector<std::vector<std::uint32_t>>& gens);

// Product closure of the given elements; throws ResourceError beyond bound.
std::vector<GroupElement> closure(const GroupHandle& h, std::span<const GroupElement> gens,
                                  std::size_t bound);

// True iff the tuple generates the whole group. Requires enumerate();
// throws UnverifiableError when the group cannot be enumerated.
bool is_generating(const GroupHandle& h, const GenTuple& tuple);

std::string encode_tuple(const GroupHandle& h, const GenTuple& t);

}  // namespace praa::blackbox
