#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "facering/field.hpp"
#include "facering/io.hpp"

namespace facering::cli {

struct OracleOptions {
  std::uint64_t seed = 1;
  unsigned products = 200;   // straightening vs M-graded multiplication
  unsigned triples = 100;    // associativity and commutativity
  unsigned complexes = 10;   // random complexes for 𝔻∘𝔻
  unsigned modules = 5;      // random modules whose resolutions go through 𝔻∘𝔻
};

struct OracleCheck {
  std::string name;
  bool passed = true;
  std::string detail;  // first counterexample, with the seed
};

/// Runs every applicable cross-check on one poset.
std::vector<OracleCheck> run_oracles(const PosetFile& file, const FieldSpec& field,
                                     const OracleOptions& options = {});

/// Individual checks, also used by the acceptance suite.
OracleCheck check_ring_oracle(const SimplicialPoset& p, const FieldSpec& field,
                              std::uint64_t seed, unsigned products, unsigned triples);
OracleCheck check_boundaries(const SimplicialPoset& p, const FieldSpec& field);
OracleCheck check_duality_involution(const SimplicialPoset& p, const FieldSpec& field,
                                     std::uint64_t seed, unsigned complexes, unsigned modules);
OracleCheck check_skeleton_depth(const SimplicialPoset& p, const FieldSpec& field);
/// Compares the K_x table with link cohomology; `facets` must generate `p`.
OracleCheck check_link_oracle(const SimplicialPoset& p,
                              const std::vector<std::vector<std::string>>& facets,
                              const FieldSpec& field);

}  // namespace facering::cli
