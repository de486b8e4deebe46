#include <doctest.h>

#include <cmath>

#include "praa/certify.hpp"
#include "praa/group_io.hpp"
#include "praa/rng.hpp"
#include "praa/verify.hpp"

using namespace praa;
using namespace praa::ring;
using autf::AkElement;
using autf::NielsenGen;
using autf::Side;

namespace {

NielsenGen gen(char side, int i, int j, int sign) {
  return {side == 'L' ? Side::L : Side::R, static_cast<std::uint8_t>(i),
          static_cast<std::uint8_t>(j), static_cast<std::int8_t>(sign)};
}

AkRing random_element(const AkModel& m, praa::rng::Philox& rng, int terms) {
  AkRing out;
  for (int t = 0; t < terms; ++t) {
    AkElement e = AkElement::identity(m.rank);
    int len = rng.uniform_below(4);
    for (int s = 0; s < len; ++s) {
      int i = rng.uniform_below(m.rank + 1), j = 1 + rng.uniform_below(m.rank);
      if (i == j) continue;
      e = e * AkElement::nielsen(gen(rng.coin() ? 'L' : 'R', i, j, rng.coin() ? 1 : -1), m.rank);
    }
    out.add_term(m, e, Rat(static_cast<long>(rng.uniform_below(7)) - 3));
  }
  return out;
}

}  // namespace

TEST_CASE("ring basics") {
  AkModel m{2};
  auto l01 = AkElement::nielsen(gen('L', 0, 1, 1), 2);

  // star(1 - L_01) = 1 - L_01^-1
  AkRing x = AkRing::unit(m) - AkRing::monomial(m, l01);
  AkRing expect = AkRing::unit(m) - AkRing::monomial(m, l01.inverse());
  CHECK(star(m, x) == expect);

  // (1-g)(1-g^-1) = 2 - g - g^-1
  AkRing prod = multiply(m, x, star(m, x));
  AkRing two = AkRing::unit(m, 2) - AkRing::monomial(m, l01) - AkRing::monomial(m, l01.inverse());
  CHECK(prod == two);

  CHECK(x.augmentation() == 0);
  CHECK(x.l1_norm() == 2);
  CHECK(x.support_wordlength() == 1);
}

TEST_CASE("star is an involutive anti-automorphism and l1 facts") {
  praa::rng::Philox rng(101, 0);
  AkModel m{3};
  for (int trial = 0; trial < 30; ++trial) {
    AkRing a = random_element(m, rng, 5), b = random_element(m, rng, 5);
    CHECK(star(m, star(m, a)) == a);
    CHECK(star(m, multiply(m, a, b)) == multiply(m, star(m, b), star(m, a)));
    CHECK(star(m, a).l1_norm() == a.l1_norm());
    CHECK(multiply(m, a, b).l1_norm() <= a.l1_norm() * b.l1_norm());
  }
}

TEST_CASE("partial laplacians") {
  AkModel m{3};
  CHECK(partial_laplacian(m, 1, 1).is_zero());
  AkRing d12 = partial_laplacian(m, 1, 2);
  CHECK(d12.coefficient(AkElement::identity(3).key()) == 4);
  CHECK(d12.support_size() == 5);
  CHECK(star(m, d12) == d12);
  CHECK(d12.augmentation() == 0);
  CHECK_THROWS_AS(partial_laplacian(m, 4, 1), std::out_of_range);
}

TEST_CASE("full laplacian shape") {
  for (int k : {2, 3}) {
    AkModel m{k};
    AkRing d = laplacian(m);
    CHECK(d.coefficient(AkElement::identity(k).key()) == 4 * k * k);
    CHECK(d.support_size() == static_cast<std::size_t>(4 * k * k + 1));
    CHECK(d.l1_norm() == 8 * k * k);
    CHECK(d.augmentation() == 0);
    CHECK(star(m, d) == d);
    CHECK(laplacian_C(m) + laplacian_N(m) == d);
  }
}

TEST_CASE("laplacian is invariant under the signed permutation action") {
  for (int k = 2; k <= 4; ++k) {
    AkModel m{k};
    AkRing d = laplacian(m);
    std::vector<autf::PhiElement> phis;
    for (int a = 1; a < k; ++a) phis.push_back(autf::PhiElement::transposition(k, a, a + 1));
    for (int i = 0; i <= k; ++i) phis.push_back(autf::PhiElement::flip(k, i));
    for (const auto& p : phis) CHECK(phi_act(p, d) == d);
  }
}

TEST_CASE("decomposition identities hold exactly at k=2 and k=3") {
  for (int k : {2, 3}) {
    auto checks = verify_decomposition(k);
    for (const auto& c : checks) {
      INFO(c.name);
      CHECK(c.pass);
    }
  }
  // empty sums at small rank
  AkModel m2{2};
  CHECK(decomposition_term(m2, DecompTerm::OppN).is_zero());
  CHECK(decomposition_term(m2, DecompTerm::OppCN).is_zero());
  CHECK(decomposition_term(m2, DecompTerm::AdjN).is_zero());
  AkModel m3{3};
  CHECK(decomposition_term(m3, DecompTerm::OppN).is_zero());
  CHECK_FALSE(decomposition_term(m3, DecompTerm::OppCN).is_zero());

  // SqC + AdjC = (D^C)^2, spot-checking the term builder directly
  AkRing dc = laplacian_C(m2);
  CHECK(decomposition_term(m2, DecompTerm::SqC) + decomposition_term(m2, DecompTerm::AdjC) ==
        multiply(m2, dc, dc));
  CHECK_THROWS_AS(decomp_term_from_name("bogus"), std::invalid_argument);
}

TEST_CASE("symmetrization scaling identities") {
  auto checks23 = verify_symmetrization(2, 3);
  for (const auto& c : checks23) {
    INFO(c.name);
    CHECK(c.pass);
  }

  // the named instances: S(D^C_2 -> 3) = 2!*2 D^C_3 = 4 D^C_3, and the N side
  AkModel m2{2}, m3{3};
  AkRing s = symmetrize(laplacian_C(m2), 2, 3);
  AkRing rhs = laplacian_C(m3);
  rhs *= Rat(4);
  CHECK(s == rhs);
  AkRing sn = symmetrize(laplacian_N(m2), 2, 3);
  AkRing rhsn = laplacian_N(m3);
  rhsn *= Rat(2);
  CHECK(sn == rhsn);

  // S(1) = K! * 1
  AkRing one = AkRing::unit(m2);
  AkRing sone = symmetrize(one, 2, 3);
  CHECK(sone == AkRing::unit(m3, Rat(6)));

  CHECK_THROWS_AS(symmetrize(one, 2, 12), ResourceError);
}

TEST_CASE("symmetrization at (k=3, K=4)") {
  auto checks = verify_symmetrization(3, 4);
  for (const auto& c : checks) {
    INFO(c.name);
    CHECK(c.pass);
  }
}

TEST_CASE("induction target at rank 5") {
  CHECK_THROWS_AS(induction_target(4), std::invalid_argument);
  AkModel m{5};
  AkRing xi = induction_target(5);
  CHECK(star(m, xi) == xi);
  CHECK(xi.augmentation() == 0);
  // adding back (141/100) Delta_5 recovers the four positive terms
  AkRing dn = laplacian_N(m);
  AkRing lhs = xi + frac(141, 100) * laplacian(m);
  AkRing expect = decomposition_term(m, DecompTerm::AdjC) +
                  decomposition_term(m, DecompTerm::AdjCN) +
                  decomposition_term(m, DecompTerm::OppCN) + multiply(m, dn, dn);
  CHECK(lhs == expect);
}

TEST_CASE("witness merging keeps the shortest word-length bound") {
  AkModel m{2};
  // identity assembled the long way has witness length 2, but merging with
  // the true identity term must keep the zero-length representative
  auto id_long = AkElement::nielsen(gen('L', 0, 1, 1), 2) * AkElement::nielsen(gen('L', 0, 1, -1), 2);
  AkRing x = AkRing::monomial(m, id_long, Rat(1));
  CHECK(x.support_wordlength() == 2);
  x.add_term(m, AkElement::identity(2), Rat(1));
  CHECK(x.support_wordlength() == 0);
  CHECK(x.coefficient(AkElement::identity(2).key()) == 2);
}

TEST_CASE("sos_eval output is star-invariant with zero augmentation") {
  praa::rng::Philox rng(5150, 0);
  AkModel m{2};
  std::vector<AkElement> basis{AkElement::identity(2),
                               AkElement::nielsen(gen('L', 0, 1, 1), 2),
                               AkElement::nielsen(gen('R', 1, 2, 1), 2),
                               AkElement::nielsen(gen('L', 0, 2, -1), 2)};
  for (int trial = 0; trial < 10; ++trial) {
    QMatrix q(3, std::vector<Rat>(3));
    for (auto& row : q)
      for (auto& e : row) e = frac(static_cast<long>(rng.uniform_below(9)) - 4, 3);
    AkRing s = sos_eval(m, basis, q);
    CHECK(star(m, s) == s);
    CHECK(s.augmentation() == 0);
  }
  QMatrix bad(2, std::vector<Rat>(2));
  CHECK_THROWS_AS(sos_eval(m, basis, bad), std::invalid_argument);
}

TEST_CASE("certify returns lambda0 exactly on a zero residual") {
  AkModel m{2};
  std::vector<AkElement> basis{AkElement::identity(2),
                               AkElement::nielsen(gen('L', 0, 1, 1), 2),
                               AkElement::nielsen(gen('R', 1, 2, 1), 2)};
  QMatrix q{{frac(1, 2), frac(-1, 3)}, {Rat(0), frac(2, 5)}};
  Rat lambda0(7, 10);
  AkRing delta = laplacian(m);
  AkRing xi = sos_eval(m, basis, q);
  AkRing ld = delta;
  ld *= lambda0;
  xi += ld;

  auto r = residual(m, xi, lambda0, delta, basis, q);
  CHECK(r.is_zero());
  auto outcome = certify(m, xi, delta, basis, q, lambda0);
  CHECK(outcome.certified);
  CHECK(outcome.lambda == lambda0);
  CHECK(outcome.residual_l1 == 0);
}

TEST_CASE("netzer-thom arithmetic is exact") {
  AkModel m{2};
  std::vector<AkElement> basis{AkElement::identity(2),
                               AkElement::nielsen(gen('L', 0, 1, 1), 2)};
  QMatrix q{{frac(1, 4)}};
  Rat lambda0(1, 2);
  AkRing delta = laplacian(m);

  // a *-invariant augmentation-zero residual with ||r||_1 = 1/1000 whose
  // support reaches word length 4
  AkElement g = AkElement::nielsen(gen('L', 0, 1, 1), 2) * AkElement::nielsen(gen('R', 1, 2, 1), 2) *
                AkElement::nielsen(gen('L', 0, 2, 1), 2) * AkElement::nielsen(gen('R', 2, 1, 1), 2);
  AkRing r0 = AkRing::monomial(m, g, frac(1, 4000)) + AkRing::monomial(m, g.inverse(), frac(1, 4000)) +
              AkRing::unit(m, frac(-2, 4000));
  CHECK(r0.l1_norm() == frac(1, 1000));
  CHECK(star(m, r0) == r0);
  CHECK(r0.augmentation() == 0);

  AkRing xi = sos_eval(m, basis, q) + r0;
  AkRing ld = delta;
  ld *= lambda0;
  xi += ld;

  auto outcome = certify(m, xi, delta, basis, q, lambda0);
  CHECK(outcome.wordlen_m == 4);
  CHECK(outcome.netzer_thom == frac(16, 1000));
  CHECK(outcome.lambda == lambda0 - frac(16, 1000));
  CHECK(outcome.certified);

  // xi that is not *-invariant or not augmentation-zero is rejected
  AkRing bad = xi + AkRing::monomial(m, g, Rat(1));
  CHECK_THROWS_AS(certify(m, bad, delta, basis, q, lambda0), std::invalid_argument);
}

TEST_CASE("identity-row format flag") {
  AkModel m{2};
  std::vector<AkElement> basis{AkElement::identity(2),
                               AkElement::nielsen(gen('L', 0, 1, 1), 2),
                               AkElement::nielsen(gen('R', 1, 2, 1), 2)};
  QMatrix q3{{Rat(0), Rat(0), Rat(0)},
             {Rat(0), frac(1, 2), frac(-1, 3)},
             {Rat(0), Rat(0), frac(2, 5)}};
  QMatrix q2{{frac(1, 2), frac(-1, 3)}, {Rat(0), frac(2, 5)}};
  CHECK(sos_eval(m, basis, q3, /*q_includes_identity=*/true) == sos_eval(m, basis, q2));
}

TEST_CASE("certificate json round trip with exact decimals") {
  CHECK(rat_from_decimal("1.41") == frac(141, 100));
  CHECK(rat_from_decimal("-0.35") == frac(-35, 100));
  CHECK(rat_from_decimal("2.5e-3") == frac(1, 400));
  CHECK(rat_from_decimal("3/7") == frac(3, 7));
  CHECK_THROWS_AS(rat_from_decimal("x"), std::invalid_argument);

  AkCertificate cert;
  cert.rank = 5;
  cert.lambda0 = frac(141, 100);
  cert.target = "induction_lhs";
  cert.basis_witnesses = {{}, {gen('L', 0, 1, 1)}, {gen('R', 1, 2, 1), gen('L', 2, 1, -1)}};
  cert.q = {{frac(1, 2), Rat(0)}, {frac(-1, 3), frac(2, 7)}};
  auto text = certificate_to_json(cert);
  auto back = parse_certificate(text);
  CHECK(back.rank == 5);
  CHECK(back.lambda0 == cert.lambda0);
  CHECK(back.target == cert.target);
  CHECK(back.q == cert.q);
  CHECK(back.basis_witnesses.size() == 3);
  CHECK(back.basis_witnesses[2][1] == gen('L', 2, 1, -1));
}

TEST_CASE("certify on a constructed end-to-end certificate") {
  // xi = delta_squared with lambda0 = 0 and Q = 0 has residual exactly
  // Delta^2, which the corrector must reject (lambda = -m^2||r||_1 <= 0)
  AkCertificate cert;
  cert.rank = 2;
  cert.lambda0 = Rat(0);
  cert.target = "delta_squared";
  cert.basis_witnesses = {{}, {gen('L', 0, 1, 1)}};
  cert.q = {{Rat(0)}};
  auto outcome = certify(cert);
  CHECK_FALSE(outcome.certified);
  CHECK(outcome.lambda <= 0);

  // resource gating on the basis size
  AkCertificate big = cert;
  big.basis_witnesses.assign(2000, {});
  big.basis_witnesses[0] = {};
  CHECK_THROWS_AS(certify(big), ResourceError);
}

TEST_CASE("toy oracle certifies Z_3 to the exact gap") {
  auto h = blackbox::make_cyclic(3);
  FiniteModel model(h, {blackbox::GroupElement{{1}}, blackbox::GroupElement{{2}}});
  FiniteRing delta = toy_laplacian(model);
  // Delta = 2 - g - g^2 and Delta^2 = 3 Delta exactly
  CHECK(delta.support_size() == 3);
  CHECK(multiply(model, delta, delta) == Rat(3) * delta);

  auto oracle = toy_oracle(model);
  CHECK(oracle.true_gap == doctest::Approx(3.0).epsilon(1e-12));
  FiniteRing xi = multiply(model, delta, delta);
  auto outcome = certify(model, xi, delta, oracle.basis, oracle.q, oracle.lambda0);
  CHECK(outcome.certified);
  CHECK(std::abs(rat_to_double(outcome.lambda) - 3.0) < 1e-6);
  CHECK(rat_to_double(outcome.lambda) <= oracle.true_gap + 1e-12);
}

TEST_CASE("toy certificates are sound on cyclic groups and S_3") {
  auto run = [](blackbox::HandlePtr h, std::vector<blackbox::GroupElement> gens) {
    FiniteModel model(h, std::move(gens));
    auto oracle = toy_oracle(model);
    FiniteRing delta = toy_laplacian(model);
    FiniteRing xi = multiply(model, delta, delta);
    auto outcome = certify(model, xi, delta, oracle.basis, oracle.q, oracle.lambda0);
    CHECK(outcome.certified);
    CHECK(rat_to_double(outcome.lambda) > 0.0);
    CHECK(rat_to_double(outcome.lambda) <= oracle.true_gap + 1e-12);
    CHECK(std::abs(rat_to_double(outcome.lambda) - oracle.true_gap) < 1e-6);
  };
  for (unsigned n : {3u, 5u, 8u, 12u}) {
    auto h = blackbox::make_cyclic(n);
    run(h, {blackbox::GroupElement{{1}}, h->invert(blackbox::GroupElement{{1}})});
  }
  auto s3 = blackbox::make_permutation(3, {{2, 3, 1}, {2, 1, 3}});
  blackbox::GroupElement a{{1, 2, 0}}, t{{1, 0, 2}};
  run(s3, {a, s3->invert(a), t});

  // the word-length model rejects generator lists that are not symmetric
  CHECK_THROWS_AS(FiniteModel(s3, {a}), std::invalid_argument);
}
