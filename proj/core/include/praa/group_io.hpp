#pragma once

#include <filesystem>
#include <string>

#include "praa/blackbox.hpp"

namespace praa::blackbox {

// A group loaded from its JSON description plus the data needed to start
// walks on it. Formats:
//   {"type":"cyclic","n":7}
//   {"type":"vector","n":4,"d":2}
//   {"type":"permutation","degree":3,"generators":[[2,1,3],[2,3,1]]}
//   {"type":"matrix","mod":3,"dim":2,"generators":[[1,1,0,1],[0,2,1,0]]}
// Permutations are 1-based image arrays; matrices are row-major. An optional
// "tuple" field overrides the default starting tuple (same element syntax as
// generators; cyclic elements are plain integers, vector elements arrays).
struct GroupSpec {
  HandlePtr handle;
  GenTuple seed_elements;  // elements a default tuple is built from
  std::string source_json; // resolved description, for provenance output
};

GroupSpec load_group(const std::filesystem::path& file);
GroupSpec parse_group(const std::string& json_text);

// Starting k-tuple: the seed elements padded with identities. Throws if
// k is smaller than the number of seed elements.
GenTuple default_tuple(const GroupSpec& spec, int k);

}  // namespace praa::blackbox
