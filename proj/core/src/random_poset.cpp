#include <algorithm>
#include <numeric>

#include "facering/random.hpp"

namespace facering {

std::vector<std::vector<std::string>> random_facets(std::mt19937_64& rng,
                                                    const RandomPosetParams& params) {
  const unsigned n = std::uniform_int_distribution<unsigned>(1, std::max(1u, params.max_vertices))(rng);
  const unsigned count = std::uniform_int_distribution<unsigned>(1, std::max(1u, params.max_facets))(rng);
  const unsigned largest = std::min(n, std::max(1u, params.max_facet_size));
  std::vector<unsigned> vertices(n);
  std::iota(vertices.begin(), vertices.end(), 1u);
  std::vector<std::vector<std::string>> facets;
  for (unsigned f = 0; f < count; ++f) {
    const unsigned size = std::uniform_int_distribution<unsigned>(1, largest)(rng);
    std::shuffle(vertices.begin(), vertices.end(), rng);
    std::vector<unsigned> chosen(vertices.begin(), vertices.begin() + size);
    std::sort(chosen.begin(), chosen.end());
    std::vector<std::string> facet;
    for (unsigned v : chosen) facet.push_back(std::to_string(v));
    facets.push_back(std::move(facet));
  }
  return facets;
}

PosetFile random_simplicial_poset(std::uint64_t seed, const RandomPosetParams& params) {
  std::mt19937_64 rng(seed);
  const std::string name = "random:" + std::to_string(seed);
  PosetFile file{name, {}, random_facets(rng, params)};
  const unsigned doublings = std::uniform_int_distribution<unsigned>(0, params.max_doublings)(rng);
  if (doublings == 0) return file;

  const PosetFile facet_form = file;
  SimplicialPoset p = file.build();
  file = to_poset_file(name, p);
  unsigned copies = 0;
  for (unsigned k = 0; k < doublings; ++k) {
    std::vector<ElementId> candidates;
    for (ElementId x : p.maximal_elements())
      if (p.rank(x) >= 2) candidates.push_back(x);
    if (candidates.empty()) break;
    const ElementId x =
        candidates[std::uniform_int_distribution<std::size_t>(0, candidates.size() - 1)(rng)];
    PosetFile::HasseRecord copy{"copy" + std::to_string(++copies) + ":" + p.name(x), {}};
    for (ElementId y : p.lower_covers(x)) copy.covers.push_back(p.name(y));
    file.hasse.push_back(std::move(copy));
    p = file.build();
  }
  return copies == 0 ? facet_form : file;
}

}  // namespace facering
