#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "praa/group_ring.hpp"
#include "praa/laplacian.hpp"

namespace praa::ring {

using QMatrix = std::vector<std::vector<Rat>>;

// Expands x* Q^T Q x with x the column of (1 - g_i) over the non-identity
// basis entries. `basis` is E with the identity first; when
// q_includes_identity the matrix has one extra leading row/column which
// multiplies the zero entry 1 - 1 and is ignored.
template <class Model>
RingElement<Model> sos_eval(const Model& m, const std::vector<typename Model::Elem>& basis,
                            const QMatrix& q, bool q_includes_identity = false) {
  if (basis.empty() || m.key(basis.front()) != m.key(m.identity()))
    throw std::invalid_argument("basis must start with the identity element");
  const std::size_t n = basis.size() - 1;  // columns of x
  const std::size_t expect = n + (q_includes_identity ? 1 : 0);
  if (q.size() != expect)
    throw std::invalid_argument("Q must be square of size |E|-1 (or |E| with identity row)");
  for (const auto& row : q)
    if (row.size() != expect) throw std::invalid_argument("Q is not square");

  const std::size_t off = q_includes_identity ? 1 : 0;
  RingElement<Model> out;
  for (std::size_t r = 0; r < q.size(); ++r) {
    // xi_r = sum_j Q[r][j] (1 - g_j)
    RingElement<Model> xi;
    for (std::size_t j = 0; j < n; ++j) {
      const Rat& c = q[r][j + off];
      if (c == 0) continue;
      xi.add_term(m, m.identity(), c);
      xi.add_term(m, basis[j + 1], -c);
    }
    if (xi.is_zero()) continue;
    out += multiply(m, star(m, xi), xi);
  }
  return out;
}

struct CertifyOutcome {
  bool certified = false;
  Rat lambda;         // lambda0 - m^2 ||r||_1 when certified
  Rat lambda0;
  Rat residual_l1;
  long wordlen_m = 0;
  Rat netzer_thom;    // m^2 ||r||_1
  std::string message;
};

// r = xi - lambda0 * delta - x* Q^T Q x, computed exactly.
template <class Model>
RingElement<Model> residual(const Model& m, const RingElement<Model>& xi, const Rat& lambda0,
                            const RingElement<Model>& delta,
                            const std::vector<typename Model::Elem>& basis, const QMatrix& q,
                            bool q_includes_identity = false) {
  RingElement<Model> r = xi;
  RingElement<Model> ld = delta;
  ld *= -lambda0;
  r += ld;
  return r - sos_eval(m, basis, q, q_includes_identity);
}

// Verifies xi - lambda * delta >= 0 for lambda = lambda0 - m^2 ||r||_1,
// which is sound because r + m^2||r||_1 * delta is a sum of squares
// whenever m bounds the word length of the support of r. Returns a failure
// outcome (not an exception) when lambda <= 0.
template <class Model>
CertifyOutcome certify(const Model& m, const RingElement<Model>& xi,
                       const RingElement<Model>& delta,
                       const std::vector<typename Model::Elem>& basis, const QMatrix& q,
                       const Rat& lambda0, bool q_includes_identity = false) {
  if (!(star(m, xi) == xi)) throw std::invalid_argument("xi is not *-invariant");
  if (xi.augmentation() != 0)
    throw std::invalid_argument("xi is not in the augmentation ideal");

  RingElement<Model> r = residual(m, xi, lambda0, delta, basis, q, q_includes_identity);
  CertifyOutcome out;
  out.lambda0 = lambda0;
  out.residual_l1 = r.l1_norm();
  out.wordlen_m = r.support_wordlength();
  out.netzer_thom = Rat(out.wordlen_m) * Rat(out.wordlen_m) * out.residual_l1;
  out.lambda = lambda0 - out.netzer_thom;
  out.certified = out.lambda > 0;
  out.message = out.certified ? "certified" : "residual correction exceeds lambda0";
  return out;
}

// Serialized certificate for the automorphism-group targets. JSON:
//   {"rank":5, "lambda0":"1.41", "target":"induction_lhs"|"delta_squared",
//    "q_includes_identity":false,
//    "basis":[[], [["L",0,1,1]], ...],      // witness words, identity first
//    "Q":[["0.1","-2e-3",...], ...]}        // decimals, read exactly
struct AkCertificate {
  int rank = 0;
  Rat lambda0;
  std::string target;
  bool q_includes_identity = false;
  std::vector<autf::Witness> basis_witnesses;
  QMatrix q;
};

AkCertificate load_certificate(const std::filesystem::path& file);
AkCertificate parse_certificate(const std::string& json_text);
std::string certificate_to_json(const AkCertificate& cert);

std::size_t cert_basis_budget();

// Builds the named target and runs the generic certifier. Basis size is
// resource-gated (PRAA_CERT_MAX_BASIS) because the published certificates
// are far beyond desk scale.
CertifyOutcome certify(const AkCertificate& cert,
                       std::size_t max_basis = cert_basis_budget());

// ---- toy finite-group mode -------------------------------------------------

// Laplacian |S| - sum_{s in S} s of a symmetric generating list.
FiniteRing toy_laplacian(const FiniteModel& m);

struct ToyCertificate {
  std::vector<blackbox::GroupElement> basis;  // identity first, then the rest
  QMatrix q;
  Rat lambda0;
  double true_gap = 0.0;  // smallest nonzero eigenvalue of Delta in the regular rep
};

// Produces a near-exact certificate for Delta^2 - lambda0 * Delta >= 0 with
// lambda0 just below the true spectral gap, by eigendecomposition of the
// regular representation followed by exact rationalization of Q.
ToyCertificate toy_oracle(const FiniteModel& m, int decimal_digits = 12);

}  // namespace praa::ring
