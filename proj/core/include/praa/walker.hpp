#pragma once

#include <cstdint>
#include <vector>

#include "praa/blackbox.hpp"
#include "praa/nielsen.hpp"
#include "praa/rational.hpp"
#include "praa/rng.hpp"

namespace praa::walker {

using Move = autf::NielsenGen;
using blackbox::GenTuple;
using blackbox::GroupElement;
using blackbox::GroupHandle;

// A state (g_0 | g_1,...,g_k): the accumulator plus the generating tuple.
struct WalkState {
  GroupElement accumulator;
  GenTuple tuple;

  int k() const { return static_cast<int>(tuple.size()); }
};

WalkState initial_state(const GroupHandle& h, const GenTuple& s0);

enum class MoveFamily { CN, NOnly };

// The canonical label order shared by the walker, the graph enumeration and
// the CLI: i ascending (0 first when present), then j ascending, side L
// before R, sign + before -. CN has 4k^2 labels, NOnly 4k(k-1).
std::vector<Move> move_family(int k, MoveFamily family);

// One edge of the Schreier graph. With e = sign:
//   L_{ij}^e : g_i <- g_j^{-e} * g_i        R_{ij}^e : g_i <- g_i * g_j^{-e}
// and i = 0 addresses the accumulator. Exactly one group multiplication and
// at most one inversion (only for e = +1) per move.
WalkState apply_move(const GroupHandle& h, WalkState s, const Move& m);
void apply_move_inplace(const GroupHandle& h, WalkState& s, const Move& m,
                        GroupElement& scratch);

enum class WalkMode { PRAA, PRA };

// Lazy step: with probability 1/2 stays put, otherwise applies a uniformly
// chosen label from `labels`.
WalkState lazy_step(const GroupHandle& h, WalkState s, const std::vector<Move>& labels,
                    rng::Philox& gen);

// Runs t lazy steps from (1 | S0) and returns the accumulator.
GroupElement praa_sample(const GroupHandle& h, const GenTuple& s0, std::int64_t t,
                         rng::Philox& gen);

// Classical product replacement: t lazy N-only steps from S0. Requires k >= 2.
GenTuple pra_walk(const GroupHandle& h, const GenTuple& s0, std::int64_t t, rng::Philox& gen);

// Samples `count` accumulators; sample i uses stream id i of the seed, so
// the batch is reproducible regardless of thread count or scheduling.
std::vector<GroupElement> praa_sample_batch(const GroupHandle& h, const GenTuple& s0,
                                            std::int64_t t, std::uint64_t seed,
                                            std::size_t count, unsigned threads = 0);

// Step count that guarantees total-variation distance below eps for the
// accumulator distribution: ceil(8k^2/c * ((k+1) log|G| + log(1/eps))) with
// c = 0.35(k-5) for k > 5 and c = 1.41 for k = 5. Natural logarithms.
// Unsupported for k < 5.
std::int64_t mixing_bound(int k, const Int& group_order, double eps);
std::int64_t mixing_bound_log(int k, double log_order, double eps);
// Pre-ceiling value, for the additivity identities in tests.
long double mixing_bound_raw(int k, long double log_order, long double eps);

}  // namespace praa::walker
