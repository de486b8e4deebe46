#include "praa/walker.hpp"

#include <cmath>
#include <stdexcept>
#include <thread>

namespace praa::walker {

WalkState initial_state(const GroupHandle& h, const GenTuple& s0) {
  return WalkState{h.identity(), s0};
}

std::vector<Move> move_family(int k, MoveFamily family) {
  if (k < 1) throw std::invalid_argument("rank must be positive");
  if (family == MoveFamily::NOnly && k < 2)
    throw std::invalid_argument("N-only moves need k >= 2");
  std::vector<Move> out;
  const int lo = (family == MoveFamily::CN) ? 0 : 1;
  for (int i = lo; i <= k; ++i)
    for (int j = 1; j <= k; ++j) {
      if (i == j) continue;
      for (autf::Side side : {autf::Side::L, autf::Side::R})
        for (int sign : {+1, -1})
          out.push_back(Move{side, static_cast<std::uint8_t>(i),
                             static_cast<std::uint8_t>(j),
                             static_cast<std::int8_t>(sign)});
    }
  return out;
}

void apply_move_inplace(const GroupHandle& h, WalkState& s, const Move& m,
                        GroupElement& scratch) {
  const int k = s.k();
  validate(m, k);
  GroupElement& target = (m.i == 0) ? s.accumulator : s.tuple[m.i - 1];
  const GroupElement& gj = s.tuple[m.j - 1];
  // g_j^{-sign}: one inversion when sign = +1, none otherwise.
  const GroupElement* mult = &gj;
  GroupElement inv;
  if (m.sign > 0) {
    h.invert_into(inv, gj);
    mult = &inv;
  }
  if (m.side == autf::Side::L)
    h.multiply_into(scratch, *mult, target);
  else
    h.multiply_into(scratch, target, *mult);
  std::swap(target, scratch);
}

WalkState apply_move(const GroupHandle& h, WalkState s, const Move& m) {
  GroupElement scratch;
  apply_move_inplace(h, s, m, scratch);
  return s;
}

WalkState lazy_step(const GroupHandle& h, WalkState s, const std::vector<Move>& labels,
                    rng::Philox& gen) {
  if (gen.coin()) return s;
  const Move& m = labels[gen.uniform_below(static_cast<std::uint32_t>(labels.size()))];
  GroupElement scratch;
  apply_move_inplace(h, s, m, scratch);
  return s;
}

GroupElement praa_sample(const GroupHandle& h, const GenTuple& s0, std::int64_t t,
                         rng::Philox& gen) {
  if (t < 0) throw std::invalid_argument("step count must be nonnegative");
  const auto labels = move_family(static_cast<int>(s0.size()), MoveFamily::CN);
  WalkState s = initial_state(h, s0);
  GroupElement scratch;
  for (std::int64_t i = 0; i < t; ++i) {
    if (gen.coin()) continue;
    apply_move_inplace(h, s, labels[gen.uniform_below(static_cast<std::uint32_t>(labels.size()))],
                       scratch);
  }
  return s.accumulator;
}

GenTuple pra_walk(const GroupHandle& h, const GenTuple& s0, std::int64_t t, rng::Philox& gen) {
  if (t < 0) throw std::invalid_argument("step count must be nonnegative");
  const auto labels = move_family(static_cast<int>(s0.size()), MoveFamily::NOnly);
  // The accumulator is never read nor written here.
  WalkState s{GroupElement{}, s0};
  s.accumulator = h.identity();
  GroupElement scratch;
  for (std::int64_t i = 0; i < t; ++i) {
    if (gen.coin()) continue;
    apply_move_inplace(h, s, labels[gen.uniform_below(static_cast<std::uint32_t>(labels.size()))],
                       scratch);
  }
  return s.tuple;
}

std::vector<GroupElement> praa_sample_batch(const GroupHandle& h, const GenTuple& s0,
                                            std::int64_t t, std::uint64_t seed,
                                            std::size_t count, unsigned threads) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  std::vector<GroupElement> out(count);
  auto worker = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      rng::Philox gen(seed, /*stream=*/i);
      out[i] = praa_sample(h, s0, t, gen);
    }
  };
  if (threads <= 1 || count < 2) {
    worker(0, count);
    return out;
  }
  std::vector<std::thread> pool;
  const std::size_t chunk = (count + threads - 1) / threads;
  for (unsigned w = 0; w < threads; ++w) {
    std::size_t lo = w * chunk, hi = std::min(count, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back(worker, lo, hi);
  }
  for (auto& th : pool) th.join();
  return out;
}

long double mixing_bound_raw(int k, long double log_order, long double eps) {
  if (k < 5)
    throw std::invalid_argument("mixing bound applies only for k >= 5");
  if (!(eps > 0.0L && eps < 1.0L))
    throw std::invalid_argument("eps must lie in (0,1)");
  if (!(log_order > 0.0L)) throw std::invalid_argument("log|G| must be positive");
  const long double c = (k == 5) ? 1.41L : 0.35L * (k - 5);
  const long double pref = 8.0L * k * k / c;
  return pref * ((k + 1) * log_order + std::log(1.0L / eps));
}

std::int64_t mixing_bound_log(int k, double log_order, double eps) {
  return static_cast<std::int64_t>(std::ceil(mixing_bound_raw(k, log_order, eps)));
}

std::int64_t mixing_bound(int k, const Int& group_order, double eps) {
  if (group_order < 2) throw std::invalid_argument("|G| must be at least 2");
  // log of an arbitrarily large integer via mantissa/exponent split.
  signed long exp2;
  double mant = mpz_get_d_2exp(&exp2, group_order.get_mpz_t());
  double log_order = std::log(mant) + static_cast<double>(exp2) * std::log(2.0);
  return mixing_bound_log(k, log_order, eps);
}

}  // namespace praa::walker
