#pragma once

// JSON file formats.
//
// Poset files name the poset and give exactly one of
//   "hasse":  [{"id": "e1", "covers": ["v1", "v2"]}, ...]
//   "facets": [["1", "2"], ["2", "3"], ...]   (labels may be strings or integers)
// Atoms list empty covers. The least element is implicit in both forms and
// its reserved name "<0>" may not be used as an id.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "facering/classify.hpp"
#include "facering/poset.hpp"

namespace facering {

struct PosetFile {
  struct HasseRecord {
    std::string id;
    std::vector<std::string> covers;
  };

  std::string name;
  std::vector<HasseRecord> hasse;                 // used when `facets` is empty
  std::vector<std::vector<std::string>> facets;

  bool has_facets() const { return !facets.empty(); }

  RawPoset to_raw() const;
  /// Validates; throws `PosetError` on a violated axiom.
  SimplicialPoset build() const;
};

/// Throws `Error(kInvalidInput)` on malformed JSON or a schema violation.
PosetFile parse_poset_file(const std::string& text);
PosetFile read_poset_file(const std::string& path);

/// Pretty-printed JSON, deterministic.
std::string emit_poset_file(const PosetFile& file);

/// Hasse form of a validated poset; 0̂ is left implicit.
PosetFile to_poset_file(const std::string& name, const SimplicialPoset& p);

/// {"name", "field", "d", "f_vector", "h_vector", "reduced_cohomology_X",
///  "local_cohomology": [{"element", "rank", "dims": [H^0..H^d]}]}
std::string report_json(const std::string& name, const SimplicialPoset& p,
                        const LocalCohomologyTable& table);

/// The classification as JSON. "max_serre_r" is "CM", "fails S_2" or the
/// integer r as a string; "dualizing_cohomology_dims" uses null for the
/// zero module.
std::string classification_json(const std::string& name, const ClassificationReport& r);

}  // namespace facering
