#include "facering/corpus.hpp"

#include <charconv>

namespace facering {

namespace {

[[noreturn]] void unknown(const std::string& name) {
  throw Error(ErrorKind::kInvalidInput, "unknown corpus member '" + name + "'");
}

unsigned parse_count(const std::string& name, const std::string& arg, unsigned max) {
  unsigned v = 0;
  auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), v);
  if (ec != std::errc{} || ptr != arg.data() + arg.size() || v > max) unknown(name);
  return v;
}

std::vector<std::vector<std::string>> subsets_of_size(unsigned n, unsigned k) {
  std::vector<std::vector<std::string>> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<unsigned>(__builtin_popcount(mask)) != k) continue;
    std::vector<std::string> s;
    for (unsigned i = 0; i < n; ++i)
      if (mask & (1u << i)) s.push_back(std::to_string(i + 1));
    out.push_back(std::move(s));
  }
  return out;
}

PosetFile with_name(PosetFile f, const std::string& name) {
  f.name = name;
  return f;
}

}  // namespace

std::vector<std::string> corpus_names() {
  return {"boolean:0",
          "boolean:1",
          "boolean:2",
          "boolean:3",
          "boolean:4",
          "simplex_boundary:1",
          "simplex_boundary:2",
          "simplex_boundary:3",
          "simplex_boundary:4",
          "digon",
          "glued_simplices:1",
          "glued_simplices:2",
          "glued_simplices:3",
          "rp2_six_vertex",
          "edge_plus_triangle",
          "two_triangles",
          "cone:digon",
          "cone:simplex_boundary:2",
          "cone:rp2_six_vertex",
          "disjoint:digon+boolean:2"};
}

PosetFile corpus_file(const std::string& name) {
  const auto colon = name.find(':');
  const std::string kind = name.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : name.substr(colon + 1);
  const bool has_arg = colon != std::string::npos;

  if (kind == "boolean" && has_arg) {
    const unsigned m = parse_count(name, arg, 16);
    if (m == 0) return with_name({}, name);
    return with_name({name, {}, subsets_of_size(m, m)}, name);
  }
  if (kind == "simplex_boundary" && has_arg) {
    const unsigned m = parse_count(name, arg, 12);
    if (m == 0) unknown(name);
    return {name, {}, subsets_of_size(m + 1, m)};
  }
  if (kind == "glued_simplices" && has_arg) {
    const unsigned d = parse_count(name, arg, 10);
    if (d == 0) unknown(name);
    const auto boundary = from_facets(subsets_of_size(d + 1, d));
    PosetFile f = to_poset_file(name, boundary);
    std::vector<std::string> facets;
    for (ElementId x : boundary.maximal_elements()) facets.push_back(boundary.name(x));
    f.hasse.push_back({"top1", facets});
    f.hasse.push_back({"top2", facets});
    return f;
  }
  if (kind == "digon" && !has_arg) {
    PosetFile f;
    f.name = name;
    f.hasse = {{"v1", {}}, {"v2", {}}, {"e1", {"v1", "v2"}}, {"e2", {"v1", "v2"}}};
    return f;
  }
  if (kind == "rp2_six_vertex" && !has_arg) {
    return {name,
            {},
            {{"1", "2", "3"}, {"1", "3", "4"}, {"1", "4", "5"}, {"1", "5", "6"}, {"1", "2", "6"},
             {"2", "3", "5"}, {"3", "4", "6"}, {"2", "4", "5"}, {"3", "5", "6"}, {"2", "4", "6"}}};
  }
  if (kind == "edge_plus_triangle" && !has_arg) {
    return {name, {}, {{"1", "2"}, {"3", "4", "5"}}};
  }
  if (kind == "two_triangles" && !has_arg) {
    return {name, {}, {{"1", "2", "3"}, {"4", "5", "6"}}};
  }
  if (kind == "cone" && has_arg) {
    return to_poset_file(name, product(boolean(1), corpus_poset(arg)));
  }
  if (kind == "disjoint" && has_arg) {
    const auto plus = arg.find('+');
    if (plus == std::string::npos) unknown(name);
    return to_poset_file(name, disjoint_union(corpus_poset(arg.substr(0, plus)),
                                              corpus_poset(arg.substr(plus + 1))));
  }
  unknown(name);
}

SimplicialPoset corpus_poset(const std::string& name) { return corpus_file(name).build(); }

}  // namespace facering
