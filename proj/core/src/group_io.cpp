#include "praa/group_io.hpp"

#include <fstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace praa::blackbox {

namespace {

using nlohmann::json;

GroupElement parse_element(const json& j, const std::string& type) {
  GroupElement e;
  if (type == "cyclic") {
    e.v = {j.get<std::uint32_t>()};
  } else if (type == "vector" || type == "matrix") {
    if (j.is_array() && !j.empty() && j[0].is_array()) {
      for (const auto& row : j)
        for (const auto& x : row) e.v.push_back(x.get<std::uint32_t>());
    } else {
      e.v = j.get<std::vector<std::uint32_t>>();
    }
  } else if (type == "permutation") {
    auto imgs = j.get<std::vector<std::uint32_t>>();
    for (std::uint32_t img : imgs) {
      if (img < 1) throw std::invalid_argument("permutation images are 1-based");
      e.v.push_back(img - 1);
    }
  } else {
    throw std::invalid_argument("unknown element type " + type);
  }
  return e;
}

}  // namespace

GroupSpec parse_group(const std::string& json_text) {
  json j = json::parse(json_text);
  const std::string type = j.at("type").get<std::string>();

  GroupSpec spec;
  if (type == "cyclic") {
    auto n = j.at("n").get<std::uint64_t>();
    spec.handle = make_cyclic(n);
    spec.seed_elements = {GroupElement{{1}}};
  } else if (type == "vector") {
    auto n = j.at("n").get<std::uint64_t>();
    auto d = j.at("d").get<std::uint32_t>();
    spec.handle = make_vector(n, d);
    for (std::uint32_t i = 0; i < d; ++i) {
      GroupElement e;
      e.v.assign(d, 0);
      e.v[i] = 1;
      spec.seed_elements.push_back(std::move(e));
    }
  } else if (type == "permutation") {
    auto degree = j.at("degree").get<std::uint32_t>();
    auto gens = j.at("generators").get<std::vector<std::vector<std::uint32_t>>>();
    spec.handle = make_permutation(degree, gens);
    for (const auto& g : gens) spec.seed_elements.push_back(parse_element(json(g), type));
  } else if (type == "matrix") {
    auto mod = j.at("mod").get<std::uint64_t>();
    auto dim = j.at("dim").get<std::uint32_t>();
    std::vector<std::vector<std::uint32_t>> flat;
    for (const auto& g : j.at("generators")) flat.push_back(parse_element(g, type).v);
    spec.handle = make_matrix(mod, dim, flat);
    for (const auto& g : flat) spec.seed_elements.push_back(GroupElement{g});
  } else {
    throw std::invalid_argument("unknown group type: " + type);
  }

  if (j.contains("tuple")) {
    spec.seed_elements.clear();
    for (const auto& e : j.at("tuple"))
      spec.seed_elements.push_back(parse_element(e, type));
  }
  spec.source_json = j.dump();
  return spec;
}

GroupSpec load_group(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw std::invalid_argument("cannot open group file " + file.string());
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_group(text);
}

GenTuple default_tuple(const GroupSpec& spec, int k) {
  if (k < static_cast<int>(spec.seed_elements.size()))
    throw std::invalid_argument("k must be at least the number of seed elements (" +
                                std::to_string(spec.seed_elements.size()) + ")");
  GenTuple t = spec.seed_elements;
  while (static_cast<int>(t.size()) < k) t.push_back(spec.handle->identity());
  return t;
}

}  // namespace praa::blackbox
