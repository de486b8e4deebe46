// praa: sampling near-uniform random elements of finite black-box groups via
// the product replacement accumulator walk, plus desk-scale verification of
// the supporting graph, spectral and group-ring facts.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "praa/budgets.hpp"
#include "praa/certify.hpp"
#include "praa/group_io.hpp"
#include "praa/schreier.hpp"
#include "praa/sharpness.hpp"
#include "praa/spectral.hpp"
#include "praa/verify.hpp"
#include "praa/version.hpp"
#include "praa/walker.hpp"

namespace {

using nlohmann::json;
using namespace praa;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitConfig = 2;
constexpr int kExitResource = 3;

std::string to_hex(const std::string& bytes) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char c : bytes) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 0xf]);
  }
  return out;
}

json provenance(const json& config) {
  return json{{"tool", "praa"}, {"version", praa::kVersion}, {"config", config}};
}

void write_json(const std::string& path, const json& j) {
  if (path.empty()) return;
  std::ofstream out(path);
  out << j.dump(2) << "\n";
}

double paper_gap_bound(int k) {
  if (k < 5) return std::nan("");
  const double c = (k == 5) ? 1.41 : 0.35 * (k - 5);
  return c / (4.0 * k * k);
}

// epsilon such that t equals the step bound, i.e. the guarantee the bound
// gives after t steps (may exceed 1 for small t).
double bound_epsilon_at(int k, double log_order, double t) {
  if (k < 5) return std::nan("");
  const double c = (k == 5) ? 1.41 : 0.35 * (k - 5);
  return std::exp((k + 1) * log_order - t * c / (8.0 * k * k));
}

struct SampleOpts {
  std::string group_file, out_file, steps = "auto";
  int k = 6;
  double eps = std::exp(-1.0);
  std::uint64_t seed = 0;
  std::size_t count = 1;
  unsigned threads = 0;
};

int run_sample(const SampleOpts& o) {
  auto spec = blackbox::load_group(o.group_file);
  require_rank(o.k);
  auto s0 = blackbox::default_tuple(spec, o.k);

  std::int64_t steps;
  if (o.steps == "auto") {
    auto order = spec.handle->order_hint();
    if (!order)
      throw std::invalid_argument(
          "group order unknown; pass an explicit --steps instead of auto");
    steps = walker::mixing_bound(o.k, Int(static_cast<unsigned long>(*order)), o.eps);
  } else {
    steps = std::stoll(o.steps);
    if (steps < 0) throw std::invalid_argument("--steps must be nonnegative");
  }

  auto samples = walker::praa_sample_batch(*spec.handle, s0, steps, o.seed, o.count, o.threads);

  std::ostream* out = &std::cout;
  std::ofstream file;
  if (!o.out_file.empty()) {
    file.open(o.out_file);
    if (!file) throw std::invalid_argument("cannot open output " + o.out_file);
    out = &file;
  }
  *out << "sample_index,element_encoding_hex\n";
  for (std::size_t i = 0; i < samples.size(); ++i)
    *out << i << "," << to_hex(spec.handle->encode(samples[i])) << "\n";
  std::cerr << "praa sample: " << o.count << " sample(s), t=" << steps << ", group "
            << spec.handle->name() << "\n";
  return kExitOk;
}

struct BoundOpts {
  int k = 6;
  std::string order;
  double log_order = 0.0;
  double eps = std::exp(-1.0);
  std::string json_file;
};

int run_bound(const BoundOpts& o) {
  std::int64_t t;
  if (!o.order.empty()) {
    t = walker::mixing_bound(o.k, Int(o.order), o.eps);
  } else if (o.log_order > 0) {
    t = walker::mixing_bound_log(o.k, o.log_order, o.eps);
  } else {
    throw std::invalid_argument("need --order or --log-order");
  }
  std::cout << t << "\n";
  write_json(o.json_file, [&] {
    json j = provenance({{"k", o.k}, {"order", o.order}, {"log_order", o.log_order}, {"eps", o.eps}});
    j["steps"] = t;
    return j;
  }());
  return kExitOk;
}

struct ExploreOpts {
  std::string group_file, family = "cn";
  int k = 6;
  std::string out_summary, out_edges, out_tv;
  std::int64_t tv_max_t = 256;
  std::int64_t tv_stride = 4;
};

int run_explore(const ExploreOpts& o) {
  auto spec = blackbox::load_group(o.group_file);
  require_rank(o.k);
  auto s0 = blackbox::default_tuple(spec, o.k);

  schreier::LabeledGraph g;
  if (o.family == "cn") {
    g = schreier::enumerate_component(*spec.handle, walker::initial_state(*spec.handle, s0));
  } else if (o.family == "n") {
    g = schreier::enumerate_component(*spec.handle, s0);
  } else {
    throw std::invalid_argument("--family must be cn or n");
  }

  auto gap = spectral::spectral_gap(g);
  const double bound = paper_gap_bound(o.k);
  const bool has_bound = o.family == "cn" && !std::isnan(bound);
  const bool satisfied = !has_bound || gap.gap >= bound;

  json config{{"group", json::parse(spec.source_json)}, {"k", o.k}, {"family", o.family},
              {"tv_max_t", o.tv_max_t}, {"tv_stride", o.tv_stride}};
  json summary = provenance(config);
  summary["vertex_count"] = g.size();
  summary["degree"] = g.degree();
  summary["gap"] = gap.gap;
  summary["gap_residual"] = gap.residual;
  summary["dense_solver"] = gap.dense;
  if (has_bound) {
    summary["gap_lower_bound"] = bound;
    summary["bound_satisfied"] = satisfied;
  }

  double log_order = std::nan("");
  if (g.has_accumulator) {
    auto proj = schreier::accumulator_projection(g);
    auto sizes = schreier::fiber_sizes(proj);
    bool constant = true;
    for (auto s : sizes) constant &= (s == sizes.front());
    summary["accumulator_classes"] = proj.classes();
    summary["accumulator_fibers_constant"] = constant;
    log_order = std::log(static_cast<double>(proj.classes()));
  }

  if (!o.out_summary.empty()) write_json(o.out_summary, summary);
  else std::cout << summary.dump(2) << "\n";

  if (!o.out_edges.empty()) {
    std::ofstream out(o.out_edges);
    for (std::size_t v = 0; v < g.size(); ++v)
      for (std::size_t li = 0; li < g.labels.size(); ++li)
        out << v << " " << g.target(v, li) << " " << g.labels[li].str() << "\n";
  }

  if (!o.out_tv.empty() && g.has_accumulator) {
    std::ofstream out(o.out_tv);
    out << "t,tv_sigma,tv_group,paper_bound_epsilon_at_t\n";
    schreier::ExactEvolution ev(g, 0);
    auto proj = schreier::accumulator_projection(g);
    for (std::int64_t t = 0; t <= o.tv_max_t; t += o.tv_stride) {
      ev.advance(t - ev.t());
      out << t << "," << rat_to_double(ev.tv_to_uniform()) << ","
          << rat_to_double(ev.tv_pushforward_to_uniform(proj)) << ",";
      double eps = bound_epsilon_at(o.k, log_order, static_cast<double>(t));
      if (!std::isnan(eps)) out << eps;
      out << "\n";
    }
  }

  return satisfied ? kExitOk : kExitVerificationFailed;
}

struct VerifyRingOpts {
  int k = 2;
  int K = 3;
  std::string json_file;
};

int run_verify_ring(const VerifyRingOpts& o) {
  auto dec = ring::verify_decomposition(o.k);
  auto sym = ring::verify_symmetrization(o.k, o.K);
  bool ok = ring::all_pass(dec) && ring::all_pass(sym);

  json results = json::array();
  auto report = [&](const std::vector<ring::IdentityCheck>& cs) {
    for (const auto& c : cs) {
      std::cout << (c.pass ? "  [PASS] " : "  [FAIL] ") << c.name << "\n";
      results.push_back({{"name", c.name}, {"pass", c.pass}});
    }
  };
  std::cout << "decomposition identities (k=" << o.k << "):\n";
  report(dec);
  std::cout << "symmetrization identities (k=" << o.k << " -> K=" << o.K << "):\n";
  report(sym);
  std::cout << (ok ? "all identities exact: PASS" : "identity check FAILED") << "\n";

  json j = provenance({{"k", o.k}, {"K", o.K}});
  j["checks"] = results;
  j["all_pass"] = ok;
  write_json(o.json_file, j);
  return ok ? kExitOk : kExitVerificationFailed;
}

struct CertifyOpts {
  std::string cert_file, toy_group;
  std::string json_file;
};

int run_certify(const CertifyOpts& o) {
  json j;
  bool ok = false;
  if (!o.cert_file.empty()) {
    auto cert = ring::load_certificate(o.cert_file);
    auto outcome = ring::certify(cert);
    ok = outcome.certified;
    j = provenance({{"cert", o.cert_file}});
    j["target"] = cert.target;
    j["lambda0"] = rat_to_string(outcome.lambda0);
    j["residual_l1"] = rat_to_string(outcome.residual_l1);
    j["wordlength_m"] = outcome.wordlen_m;
    j["netzer_thom_correction"] = rat_to_string(outcome.netzer_thom);
    j["certified"] = outcome.certified;
    j["lambda"] = rat_to_string(outcome.lambda);
    j["lambda_approx"] = rat_to_double(outcome.lambda);
    j["message"] = outcome.message;
  } else if (!o.toy_group.empty()) {
    auto spec = blackbox::load_group(o.toy_group);
    // symmetric closure of the seed tuple
    std::vector<blackbox::GroupElement> gens;
    for (const auto& g : spec.seed_elements) {
      if (g == spec.handle->identity()) continue;
      gens.push_back(g);
      auto inv = spec.handle->invert(g);
      bool dup = false;
      for (const auto& h : gens) dup |= (h == inv);
      if (!dup) gens.push_back(inv);
    }
    ring::FiniteModel model(spec.handle, gens);
    auto oracle = ring::toy_oracle(model);
    ring::FiniteRing delta = ring::toy_laplacian(model);
    ring::FiniteRing xi = multiply(model, delta, delta);
    auto outcome = ring::certify(model, xi, delta, oracle.basis, oracle.q, oracle.lambda0);
    ok = outcome.certified && rat_to_double(outcome.lambda) <= oracle.true_gap + 1e-12;
    j = provenance({{"toy_group", json::parse(spec.source_json)}});
    j["true_gap"] = oracle.true_gap;
    j["lambda0"] = rat_to_string(outcome.lambda0);
    j["residual_l1_approx"] = rat_to_double(outcome.residual_l1);
    j["wordlength_m"] = outcome.wordlen_m;
    j["certified"] = outcome.certified;
    j["lambda_approx"] = rat_to_double(outcome.lambda);
    j["sound"] = ok;
  } else {
    throw std::invalid_argument("need --cert or --toy-group");
  }
  std::cout << j.dump(2) << "\n";
  write_json(o.json_file, j);
  return ok ? kExitOk : kExitVerificationFailed;
}

struct SharpnessOpts {
  int k = 6;
  std::string json_file;
};

int run_sharpness(const SharpnessOpts& o) {
  auto r = schreier::sharpness_check(o.k);
  json j = provenance({{"k", o.k}});
  j["vertices"] = r.vertices;
  j["v_norm_sq"] = r.v_norm_sq.get_str();
  j["max_displacement_sq"] = r.max_displacement_sq.get_str();
  j["rayleigh"] = rat_to_string(r.rayleigh);
  j["rayleigh_approx"] = rat_to_double(r.rayleigh);
  j["rayleigh_upper_8k"] = 8 * o.k;
  j["transitive"] = r.transitive;
  std::cout << j.dump(2) << "\n";
  write_json(o.json_file, j);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"product replacement accumulator sampling and verification"};
  app.require_subcommand(1);

  SampleOpts sample;
  auto* cmd_sample = app.add_subcommand("sample", "sample group elements via the accumulator walk");
  cmd_sample->add_option("--group", sample.group_file, "group description JSON")->required();
  cmd_sample->add_option("--k", sample.k, "tuple length")->required();
  cmd_sample->add_option("--steps", sample.steps, "walk length or 'auto'");
  cmd_sample->add_option("--eps", sample.eps, "target TV distance for auto steps");
  cmd_sample->add_option("--seed", sample.seed, "RNG seed");
  cmd_sample->add_option("--count", sample.count, "number of samples");
  cmd_sample->add_option("--threads", sample.threads, "worker threads (0 = hardware)");
  cmd_sample->add_option("--out", sample.out_file, "output CSV (default stdout)");

  BoundOpts bound;
  auto* cmd_bound = app.add_subcommand("bound", "step bound guaranteeing TV < eps (natural logs)");
  cmd_bound->add_option("--k", bound.k)->required();
  cmd_bound->add_option("--order", bound.order, "group order (arbitrary precision)");
  cmd_bound->add_option("--log-order", bound.log_order, "natural log of the group order");
  cmd_bound->add_option("--eps", bound.eps, "target TV distance (default 1/e)");
  cmd_bound->add_option("--json", bound.json_file, "also write a JSON report");

  ExploreOpts explore;
  auto* cmd_explore = app.add_subcommand("explore", "enumerate a component and analyze it");
  cmd_explore->add_option("--group", explore.group_file)->required();
  cmd_explore->add_option("--k", explore.k)->required();
  cmd_explore->add_option("--family", explore.family, "cn (accumulator walk) or n (tuple walk)");
  cmd_explore->add_option("--out-summary", explore.out_summary, "summary JSON path");
  cmd_explore->add_option("--out-edges", explore.out_edges, "edge list path (u v label)");
  cmd_explore->add_option("--out-tv", explore.out_tv, "TV decay CSV path");
  cmd_explore->add_option("--tv-max-t", explore.tv_max_t, "last step of the TV table");
  cmd_explore->add_option("--tv-stride", explore.tv_stride, "stride of the TV table");

  VerifyRingOpts vr;
  auto* cmd_vr = app.add_subcommand("verify-ring", "exact Laplacian identity suites");
  cmd_vr->add_option("--k", vr.k, "decomposition rank")->required();
  cmd_vr->add_option("--K", vr.K, "symmetrization target rank")->required();
  cmd_vr->add_option("--json", vr.json_file, "also write a JSON report");

  CertifyOpts cert;
  auto* cmd_cert = app.add_subcommand("certify", "verify a positivity certificate");
  cmd_cert->add_option("--cert", cert.cert_file, "certificate JSON");
  cmd_cert->add_option("--toy-group", cert.toy_group, "run the finite-group oracle demo");
  cmd_cert->add_option("--json", cert.json_file, "also write a JSON report");

  SharpnessOpts sharp;
  auto* cmd_sharp = app.add_subcommand("sharpness", "transvection-action sharpness witness");
  cmd_sharp->add_option("--k", sharp.k)->required();
  cmd_sharp->add_option("--json", sharp.json_file, "also write a JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (cmd_sample->parsed()) return run_sample(sample);
    if (cmd_bound->parsed()) return run_bound(bound);
    if (cmd_explore->parsed()) return run_explore(explore);
    if (cmd_vr->parsed()) return run_verify_ring(vr);
    if (cmd_cert->parsed()) return run_certify(cert);
    if (cmd_sharp->parsed()) return run_sharpness(sharp);
  } catch (const praa::ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const praa::UnverifiableError& e) {
    std::cerr << "unverifiable: " << e.what() << "\n";
    return kExitVerificationFailed;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::out_of_range& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerificationFailed;
  }
  return kExitConfig;
}
