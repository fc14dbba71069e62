#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "facering/corpus.hpp"
#include "facering/poset.hpp"
#include "facering/random.hpp"

namespace testing_support {

using facering::ElementId;
using facering::SimplicialPoset;

/// Element by name; aborts the test binary on a typo.
inline ElementId el(const SimplicialPoset& p, const std::string& name) {
  auto id = p.find(name);
  if (!id) throw std::runtime_error("no element named " + name);
  return *id;
}

inline SimplicialPoset digon() { return facering::corpus_poset("digon"); }
inline SimplicialPoset rp2() { return facering::corpus_poset("rp2_six_vertex"); }

/// Corpus members plus `random` seeded random posets.
inline std::vector<std::pair<std::string, SimplicialPoset>> sample_posets(unsigned random,
                                                                          std::uint64_t first_seed = 1) {
  std::vector<std::pair<std::string, SimplicialPoset>> out;
  for (const auto& name : facering::corpus_names()) out.emplace_back(name, facering::corpus_poset(name));
  for (unsigned k = 0; k < random; ++k) {
    auto file = facering::random_simplicial_poset(first_seed + k);
    out.emplace_back(file.name, file.build());
  }
  return out;
}

inline const std::vector<facering::FieldSpec>& both_fields() {
  static const std::vector<facering::FieldSpec> fields = {facering::FieldSpec::rational(),
                                                          facering::FieldSpec::gf(2)};
  return fields;
}

}  // namespace testing_support
