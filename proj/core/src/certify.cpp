#include "praa/certify.hpp"

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>
#include <stdexcept>

namespace praa::ring {

std::size_t cert_basis_budget() {
  static const std::size_t v = [] {
    const char* e = std::getenv("PRAA_CERT_MAX_BASIS");
    return (e && *e) ? static_cast<std::size_t>(std::strtoull(e, nullptr, 10)) : std::size_t{512};
  }();
  return v;
}

namespace {

using nlohmann::json;

autf::Witness parse_witness(const json& j) {
  autf::Witness w;
  for (const auto& quad : j) {
    if (!quad.is_array() || quad.size() != 4)
      throw std::invalid_argument("witness letters are [side,i,j,sign] quadruples");
    std::string side = quad[0].get<std::string>();
    if (side != "L" && side != "R") throw std::invalid_argument("witness side must be L or R");
    w.push_back(autf::NielsenGen{side == "L" ? autf::Side::L : autf::Side::R,
                                 quad[1].get<std::uint8_t>(), quad[2].get<std::uint8_t>(),
                                 quad[3].get<std::int8_t>()});
  }
  return w;
}

Rat parse_rat(const json& j) {
  if (j.is_string()) return rat_from_decimal(j.get<std::string>());
  if (j.is_number_integer()) return Rat(static_cast<long>(j.get<std::int64_t>()));
  throw std::invalid_argument("matrix/lambda entries must be decimal strings or integers");
}

}  // namespace

AkCertificate parse_certificate(const std::string& json_text) {
  json j = json::parse(json_text);
  AkCertificate cert;
  cert.rank = j.at("rank").get<int>();
  cert.lambda0 = parse_rat(j.at("lambda0"));
  cert.target = j.at("target").get<std::string>();
  cert.q_includes_identity = j.value("q_includes_identity", false);
  for (const auto& w : j.at("basis")) cert.basis_witnesses.push_back(parse_witness(w));
  for (const auto& row : j.at("Q")) {
    cert.q.emplace_back();
    for (const auto& e : row) cert.q.back().push_back(parse_rat(e));
  }
  return cert;
}

AkCertificate load_certificate(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw std::invalid_argument("cannot open certificate " + file.string());
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_certificate(text);
}

std::string certificate_to_json(const AkCertificate& cert) {
  json j;
  j["rank"] = cert.rank;
  j["lambda0"] = rat_to_string(cert.lambda0);
  j["target"] = cert.target;
  j["q_includes_identity"] = cert.q_includes_identity;
  json basis = json::array();
  for (const auto& w : cert.basis_witnesses) {
    json jw = json::array();
    for (const auto& g : w)
      jw.push_back({g.side == autf::Side::L ? "L" : "R", g.i, g.j, g.sign});
    basis.push_back(jw);
  }
  j["basis"] = basis;
  json q = json::array();
  for (const auto& row : cert.q) {
    json jr = json::array();
    for (const auto& e : row) jr.push_back(rat_to_string(e));
    q.push_back(jr);
  }
  j["Q"] = q;
  return j.dump(2);
}

CertifyOutcome certify(const AkCertificate& cert, std::size_t max_basis) {
  require_rank(cert.rank);
  if (cert.basis_witnesses.size() > max_basis)
    throw ResourceError("certificate basis of size " + std::to_string(cert.basis_witnesses.size()) +
                            " exceeds budget (PRAA_CERT_MAX_BASIS)",
                        cert.basis_witnesses.size());
  AkModel m{cert.rank};

  std::vector<autf::AkElement> basis;
  basis.reserve(cert.basis_witnesses.size());
  for (const auto& w : cert.basis_witnesses) {
    autf::AkElement e = autf::AkElement::identity(cert.rank);
    for (const auto& g : w) e = e * autf::AkElement::nielsen(g, cert.rank);
    basis.push_back(std::move(e));
  }
  if (basis.empty() || !basis.front().is_identity())
    throw std::invalid_argument("certificate basis must start with the identity");

  AkRing xi;
  if (cert.target == "delta_squared") {
    AkRing d = laplacian(m);
    xi = multiply(m, d, d);
  } else if (cert.target == "induction_lhs") {
    if (cert.rank != 5) throw std::invalid_argument("induction_lhs is a rank-5 target");
    AkRing dn = laplacian_N(m);
    xi = decomposition_term(m, DecompTerm::AdjC) + decomposition_term(m, DecompTerm::AdjCN) +
         decomposition_term(m, DecompTerm::OppCN) + multiply(m, dn, dn);
  } else {
    throw std::invalid_argument("unknown certificate target: " + cert.target);
  }

  return certify(m, xi, laplacian(m), basis, cert.q, cert.lambda0, cert.q_includes_identity);
}

FiniteRing toy_laplacian(const FiniteModel& m) {
  FiniteRing out = FiniteRing::unit(m, Rat(static_cast<long>(m.generators().size())));
  for (const auto& g : m.generators()) out.add_term(m, g, Rat(-1));
  return out;
}

ToyCertificate toy_oracle(const FiniteModel& m, int decimal_digits) {
  const auto* elems = m.handle().enumerate();
  if (!elems) throw UnverifiableError("toy oracle needs an enumerable group");
  const std::size_t n = elems->size();

  // index elements; identity goes first in the basis
  std::vector<std::size_t> order;
  std::size_t id_at = n;
  std::string id_key = m.key(m.identity());
  std::unordered_map<std::string, std::size_t> pos;
  for (std::size_t i = 0; i < n; ++i) {
    pos[m.key((*elems)[i])] = i;
    if (m.key((*elems)[i]) == id_key) id_at = i;
  }
  if (id_at == n) throw std::logic_error("enumeration misses the identity");

  // lambda(Delta) in the regular representation: Delta = |S| - sum_s s,
  // lambda(g) e_h = e_{g h}.
  const auto ni = static_cast<Eigen::Index>(n);
  Eigen::MatrixXd lap = Eigen::MatrixXd::Zero(ni, ni);
  lap.diagonal().array() += static_cast<double>(m.generators().size());
  for (const auto& s : m.generators())
    for (std::size_t h = 0; h < n; ++h) {
      std::size_t sh = pos.at(m.key(m.multiply(s, (*elems)[h])));
      lap(static_cast<Eigen::Index>(sh), static_cast<Eigen::Index>(h)) -= 1.0;
    }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(lap);
  if (es.info() != Eigen::Success) throw std::runtime_error("regular-rep eigensolve failed");
  double gap = 0.0;
  for (Eigen::Index i = 0; i < ni; ++i)
    if (es.eigenvalues()[i] > 1e-8) {
      gap = es.eigenvalues()[i];
      break;
    }
  if (gap == 0.0) throw std::runtime_error("trivial group has no spectral gap");

  ToyCertificate cert;
  cert.true_gap = gap;
  // keep lambda0 strictly inside the PSD region, then round to a decimal
  const double lam0 = gap - 1e-9;
  Int scale = 1;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(decimal_digits));
  auto to_rat = [&](double x) {
    Rat r(Int(x * scale.get_d()), scale);
    r.canonicalize();
    return r;
  };
  cert.lambda0 = to_rat(lam0);

  // xi = Delta^2 - lambda0 Delta, PSD in the regular rep; factor through the
  // symmetric square root and express the squares in the (1 - g) coordinates.
  Eigen::MatrixXd xi_mat = lap * lap - lam0 * lap;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es2(xi_mat);
  Eigen::VectorXd clamped = es2.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  Eigen::MatrixXd b = es2.eigenvectors() * clamped.asDiagonal() * es2.eigenvectors().transpose();

  // columns for non-identity elements, scaled by -1/sqrt(n)
  Eigen::MatrixXd c(ni, ni - 1);
  {
    Eigen::Index col = 0;
    const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(n));
    for (std::size_t g = 0; g < n; ++g) {
      if (g == id_at) continue;
      c.col(col++) = -inv_sqrt_n * b.col(static_cast<Eigen::Index>(g));
    }
  }
  Eigen::MatrixXd gram = c.transpose() * c;  // (n-1) x (n-1), PSD
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es3(gram);
  Eigen::VectorXd cl3 = es3.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  Eigen::MatrixXd qf = es3.eigenvectors() * cl3.asDiagonal() * es3.eigenvectors().transpose();

  cert.q.assign(n - 1, std::vector<Rat>(n - 1));
  for (Eigen::Index r = 0; r < ni - 1; ++r)
    for (Eigen::Index cc = 0; cc < ni - 1; ++cc) cert.q[r][cc] = to_rat(qf(r, cc));

  cert.basis.push_back((*elems)[id_at]);
  for (std::size_t g = 0; g < n; ++g)
    if (g != id_at) cert.basis.push_back((*elems)[g]);
  return cert;
}

}  // namespace praa::ring
