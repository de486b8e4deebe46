#include <doctest.h>

#include <set>

#include "praa/blackbox.hpp"
#include "praa/group_io.hpp"
#include "praa/rng.hpp"

using namespace praa;
using namespace praa::blackbox;
using praa::rng::Philox;

namespace {

GroupElement random_element(const GroupHandle& h, Philox& rng) {
  const auto* all = h.enumerate();
  REQUIRE(all != nullptr);
  return (*all)[rng.uniform_below(static_cast<std::uint32_t>(all->size()))];
}

void axiom_suite(const GroupHandle& h, Philox& rng, int trials = 60) {
  const GroupElement e = h.identity();
  for (int i = 0; i < trials; ++i) {
    auto a = random_element(h, rng), b = random_element(h, rng), c = random_element(h, rng);
    CHECK(h.multiply(h.multiply(a, b), c) == h.multiply(a, h.multiply(b, c)));
    CHECK(h.multiply(a, e) == a);
    CHECK(h.multiply(e, a) == a);
    CHECK(h.encode(h.multiply(a, h.invert(a))) == h.encode(e));
  }
  // encode injectivity over the whole enumeration
  std::set<std::string> seen;
  for (const auto& x : *h.enumerate()) CHECK(seen.insert(h.encode(x)).second);
}

}  // namespace

TEST_CASE("cyclic group arithmetic") {
  auto h = make_cyclic(7);
  CHECK(h->encode(h->multiply(GroupElement{{3}}, GroupElement{{5}})) ==
        h->encode(GroupElement{{1}}));
  CHECK(h->order_hint() == 7);
  CHECK(h->enumerate()->size() == 7);
  CHECK_THROWS_AS(make_cyclic(1), std::invalid_argument);
}

TEST_CASE("vector group enumeration") {
  auto h = make_vector(4, 2);
  CHECK(h->enumerate()->size() == 16);
  CHECK(h->order_hint() == 16);
  auto a = GroupElement{{3, 2}};
  CHECK(h->multiply(a, h->invert(a)) == h->identity());
}

TEST_CASE("permutation closure") {
  auto h = make_permutation(3, {{2, 1, 3}, {2, 3, 1}});
  CHECK(h->enumerate()->size() == 6);  // S_3
  CHECK(h->order_hint() == 6);
  // (a*b)(x) = a(b(x))
  GroupElement t{{1, 0, 2}}, c{{1, 2, 0}};
  CHECK(h->multiply(t, c) == GroupElement{{0, 2, 1}});
  CHECK_THROWS_AS(make_permutation(3, {{1, 1, 2}}), std::invalid_argument);
}

TEST_CASE("matrix group over a composite modulus") {
  // SL_2(Z_4) from the two standard transvections
  auto h = make_matrix(4, 2, {{1, 1, 0, 1}, {1, 0, 1, 1}});
  CHECK(h->enumerate()->size() == 48);
  auto a = GroupElement{{1, 3, 0, 1}};
  CHECK(h->multiply(a, h->invert(a)) == h->identity());
  // determinant 2 is not a unit mod 4
  CHECK_THROWS_AS(h->invert(GroupElement{{2, 1, 0, 1}}), std::domain_error);
}

TEST_CASE("randomized axiom suite per handle") {
  Philox rng(99, 0);
  axiom_suite(*make_cyclic(12), rng);
  axiom_suite(*make_vector(3, 3), rng);
  axiom_suite(*make_permutation(4, {{2, 1, 3, 4}, {2, 3, 4, 1}}), rng);
  axiom_suite(*make_matrix(3, 2, {{1, 1, 0, 1}, {1, 0, 1, 1}}), rng);
}

TEST_CASE("is_generating") {
  auto h = make_vector(4, 2);
  CHECK(is_generating(*h, {GroupElement{{1, 0}}, GroupElement{{0, 1}}}));
  CHECK_FALSE(is_generating(*h, {GroupElement{{2, 0}}, GroupElement{{0, 2}}}));
  auto s3 = make_permutation(3, {{2, 1, 3}, {2, 3, 1}});
  CHECK(is_generating(*s3, {GroupElement{{1, 0, 2}}, GroupElement{{1, 2, 0}}}));

  // a group too large to enumerate is unverifiable, not false
  auto big = make_cyclic(20'000'000);
  CHECK_THROWS_AS(is_generating(*big, {GroupElement{{1}}}), UnverifiableError);
}

TEST_CASE("closure respects its bound") {
  auto h = make_cyclic(1000);
  CHECK_THROWS_AS(closure(*h, std::vector<GroupElement>{GroupElement{{1}}}, 100), ResourceError);
}

TEST_CASE("group JSON round trips") {
  auto spec = parse_group(R"({"type":"permutation","degree":3,"generators":[[2,1,3],[2,3,1]]})");
  CHECK(spec.handle->enumerate()->size() == 6);
  CHECK(spec.seed_elements.size() == 2);
  auto t = default_tuple(spec, 6);
  CHECK(t.size() == 6);
  CHECK(t[5] == spec.handle->identity());
  CHECK_THROWS_AS(default_tuple(spec, 1), std::invalid_argument);

  auto vec = parse_group(R"({"type":"vector","n":4,"d":2,"tuple":[[1,0],[1,1]]})");
  CHECK(vec.seed_elements.size() == 2);
  CHECK(vec.seed_elements[1] == GroupElement{{1, 1}});

  auto mat = parse_group(R"({"type":"matrix","mod":3,"dim":2,"generators":[[[1,1],[0,1]]]})");
  CHECK(mat.handle->multiply(mat.seed_elements[0], mat.seed_elements[0]) ==
        GroupElement{{1, 2, 0, 1}});

  CHECK_THROWS(parse_group(R"({"type":"nope"})"));
}

TEST_CASE("philox known-answer vectors") {
  using praa::rng::Philox;
  // Random123 reference vectors for philox4x32-10
  auto z = Philox::block({0, 0, 0, 0}, {0, 0});
  CHECK(z == std::array<std::uint32_t, 4>{0x6627e8d5u, 0xe169c58du, 0xbc57ac4cu, 0x9b00dbd8u});
  auto f = Philox::block({0xffffffffu, 0xffffffffu, 0xffffffffu, 0xffffffffu},
                         {0xffffffffu, 0xffffffffu});
  CHECK(f == std::array<std::uint32_t, 4>{0x408f276du, 0x41c83b0eu, 0xa20bc7c6u, 0x6d5451fdu});
  auto p = Philox::block({0x243f6a88u, 0x85a308d3u, 0x13198a2eu, 0x03707344u},
                         {0xa4093822u, 0x299f31d0u});
  CHECK(p == std::array<std::uint32_t, 4>{0xd16cfe09u, 0x94fdccebu, 0x5001e420u, 0x24126ea1u});
}

TEST_CASE("philox streams are reproducible and distinct") {
  Philox a(42, 0), b(42, 0), c(42, 1);
  std::vector<std::uint32_t> va, vb, vc;
  for (int i = 0; i < 64; ++i) {
    va.push_back(a.next_u32());
    vb.push_back(b.next_u32());
    vc.push_back(c.next_u32());
  }
  CHECK(va == vb);
  CHECK(va != vc);

  Philox d(42, 7);
  for (int i = 0; i < 1000; ++i) {
    auto x = d.uniform_below(13);
    CHECK(x < 13);
  }
}

TEST_CASE("philox coin is fair to binomial tolerance") {
  Philox g(123, 0);
  int heads = 0;
  const int n = 1'000'000;
  for (int i = 0; i < n; ++i) heads += g.coin();
  double p = static_cast<double>(heads) / n;
  CHECK(p == doctest::Approx(0.5).epsilon(0.004));  // 0.5 +- 0.002 absolute
}
