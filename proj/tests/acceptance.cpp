// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "facering/classify.hpp"
#include "facering/corpus.hpp"
#include "facering/face_ring.hpp"
#include "facering/incidence.hpp"
#include "facering/random.hpp"
#include "oracle_runner.hpp"

using namespace facering;

namespace {

const std::vector<FieldSpec> kFields = {FieldSpec::rational(), FieldSpec::gf(2)};

/// Collects the first few failure messages of one criterion.
struct Outcome {
  std::vector<std::string> failures;
  void fail(const std::string& why) { failures.push_back(why); }
  void expect(bool ok, const std::string& why) {
    if (!ok) fail(why);
  }
  bool passed() const { return failures.empty(); }
};

template <class T>
std::string show(const std::vector<T>& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

std::vector<std::pair<std::string, SimplicialPoset>> corpus() {
  std::vector<std::pair<std::string, SimplicialPoset>> out;
  for (const auto& name : corpus_names()) out.emplace_back(name, corpus_poset(name));
  return out;
}

void structural(Outcome& o) {
  for (const auto& [name, p] : corpus()) {
    for (const auto& field : kFields) {
      auto c = cli::check_boundaries(p, field);
      o.expect(c.passed, name + " " + field.name() + ": " + c.detail);
    }
  }
  // Crafted violations: three atoms under one element, and a rank-2 element over a single atom.
  const std::vector<RawPoset> bad = {
      {{"0", "a", "b", "c", "t"}, {{"a", "0"}, {"b", "0"}, {"c", "0"}, {"t", "a"}, {"t", "b"}, {"t", "c"}}},
      {{"0", "a", "b", "t", "u"}, {{"a", "0"}, {"b", "0"}, {"t", "a"}, {"t", "b"}, {"u", "a"}}},
  };
  for (const auto& raw : bad) {
    try {
      validate(raw);
      o.fail("a crafted non-boolean interval was accepted");
    } catch (const PosetError& e) {
      o.expect(e.kind() == ErrorKind::kNonBooleanInterval, std::string("wrong rejection ") + to_string(e.kind()));
    }
  }
}

void digon(Outcome& o) {
  const auto p = corpus_poset("digon");
  o.expect(h_vector(p) == std::vector<long long>{1, 0, 1}, "h = " + show(h_vector(p)));
  for (const auto& field : kFields) {
    const auto t = local_cohomology_table(p, field);
    o.expect(reduced_cohomology_X(t) == std::vector<std::size_t>{0, 1},
             field.name() + " cohomology of X " + show(reduced_cohomology_X(t)));
    o.expect(depth(t) == 2, field.name() + " depth");
    o.expect(is_cohen_macaulay(t), field.name() + " CM");
    o.expect(is_gorenstein_star(p, field), field.name() + " Gorenstein*");
  }
}

void glued(Outcome& o) {
  const auto p = corpus_poset("glued_simplices:3");
  o.expect(f_vector(p) == std::vector<long long>{1, 4, 6, 4, 2}, "f = " + show(f_vector(p)));
  o.expect(h_vector(p) == std::vector<long long>{1, 0, 0, 0, 1}, "h = " + show(h_vector(p)));
  for (const auto& field : kFields) {
    o.expect(is_gorenstein_star(p, field), field.name() + " Gorenstein*");
    const auto x = reduced_cohomology_X(p, field);
    o.expect(x == std::vector<std::size_t>{0, 0, 0, 1}, field.name() + " cohomology of X " + show(x));
  }
}

void sphere(Outcome& o) {
  const auto p = corpus_poset("simplex_boundary:3");
  o.expect(h_vector(p) == std::vector<long long>{1, 1, 1, 1}, "h = " + show(h_vector(p)));
  for (const auto& field : kFields) o.expect(is_gorenstein_star(p, field), field.name() + " Gorenstein*");
}

void projective_plane(Outcome& o) {
  const auto p = corpus_poset("rp2_six_vertex");
  const auto q = FieldSpec::rational();
  const auto two = FieldSpec::gf(2);
  o.expect(is_cohen_macaulay(p, q), "rational: not CM");
  o.expect(!is_gorenstein_star(p, q), "rational: Gorenstein*");
  const auto t = local_cohomology_table(p, two);
  o.expect(depth(t) == 2, "gf:2 depth " + std::to_string(depth(t)));
  o.expect(!is_cohen_macaulay(t), "gf:2 CM");
  o.expect(is_buchsbaum(t), "gf:2 not Buchsbaum");
  const auto s = serre_max_r(p, t);
  o.expect(s.kind == SerreResult::Kind::kFinite && s.r == 2, "gf:2 serre " + s.to_string());
  o.expect(murai_terai_check(p, two), "gf:2 Murai-Terai");
  const auto h = h_vector(p);
  o.expect(h[0] >= 0 && h[1] >= 0 && h[2] >= 0, "h = " + show(h));
  const auto link = cli::check_link_oracle(p, corpus_file("rp2_six_vertex").facets, two);
  o.expect(link.passed, "link oracle: " + link.detail);
}

void skeletons(Outcome& o) {
  for (const auto& [name, p] : corpus())
    for (const auto& field : kFields) o.expect(skeleton_depth_crosscheck(p, field), name + " " + field.name());
  for (const auto& field : kFields) {
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
      const auto p = random_simplicial_poset(seed).build();
      o.expect(skeleton_depth_crosscheck(p, field), "random seed " + std::to_string(seed) + " " + field.name());
    }
  }
}

void links(Outcome& o) {
  std::mt19937_64 rng(2024);
  for (int k = 0; k < 25; ++k) {
    const auto facets = random_facets(rng);
    const auto p = from_facets(facets);
    for (const auto& field : kFields) {
      const auto c = cli::check_link_oracle(p, facets, field);
      o.expect(c.passed, "complex " + std::to_string(k) + " (rng seed 2024) " + field.name() + ": " + c.detail);
    }
  }
}

void duality(Outcome& o) {
  // 5 posets x (10 complexes + 4 module resolutions) = 50 + 20 per field.
  const char* names[] = {"digon", "boolean:2", "two_triangles", "glued_simplices:2", "cone:digon"};
  std::uint64_t seed = 100;
  for (const auto& field : kFields) {
    for (const char* name : names) {
      const auto c = cli::check_duality_involution(corpus_poset(name), field, ++seed, 10, 4);
      o.expect(c.passed, std::string(name) + " " + field.name() + " seed " + std::to_string(seed) + ": " + c.detail);
    }
  }
}

void ring(Outcome& o) {
  std::uint64_t seed = 7;
  for (const auto& [name, p] : corpus()) {
    for (const auto& field : kFields) {
      const auto c = cli::check_ring_oracle(p, field, ++seed, 200, 100);
      o.expect(c.passed, name + " " + field.name() + " seed " + std::to_string(seed) + ": " + c.detail);
    }
  }
}

void murai_terai(Outcome& o) {
  for (const auto& field : kFields) {
    for (const auto& [name, p] : corpus()) o.expect(murai_terai_check(p, field), name + " " + field.name());
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
      const auto p = random_simplicial_poset(seed).build();
      o.expect(murai_terai_check(p, field), "random seed " + std::to_string(seed) + " " + field.name());
    }
  }
}

void factorization(Outcome& o) {
  for (unsigned m = 0; m <= 4; ++m) {
    const auto g = gorenstein_factor(boolean(m));
    std::vector<unsigned> all(m);
    std::iota(all.begin(), all.end(), 0u);
    o.expect(g.cone_atoms == all && g.core.size() == 1, "boolean:" + std::to_string(m));
  }
  const auto cone = corpus_poset("cone:digon");
  const auto g = gorenstein_factor(cone);
  o.expect(g.cone_atoms.size() == 1, "cone:digon cone set size " + std::to_string(g.cone_atoms.size()));
  o.expect(isomorphic(g.core, corpus_poset("digon")), "cone:digon core is not the digon");
  for (const auto& field : kFields) o.expect(is_gorenstein(cone, field), "cone:digon not Gorenstein " + field.name());
  for (const auto& [name, p] : corpus()) {
    if (p.atom_count() > 5) continue;
    const auto reference = gorenstein_factor(p);
    std::vector<unsigned> order(p.atom_count());
    std::iota(order.begin(), order.end(), 0u);
    do {
      const auto h = gorenstein_factor(p, order);
      o.expect(h.cone_atoms == reference.cone_atoms && isomorphic(h.core, reference.core),
               name + " order " + show(order));
    } while (std::next_permutation(order.begin(), order.end()));
  }
}

void relative_cm(Outcome& o) {
  for (const auto& [name, p] : corpus()) {
    for (const auto& field : kFields) {
      const auto t = local_cohomology_table(p, field);
      if (!is_cohen_macaulay(t)) continue;
      for (ElementId x = 0; x < p.size(); ++x) {
        const auto jx = jx_local_cohomology(p, x, t);
        for (ElementId y = 0; y < p.size(); ++y)
          for (unsigned i = 0; i < p.rank(); ++i)
            o.expect(jx[y][i] == 0, name + " " + field.name() + " x=" + p.name(x) + " y=" + p.name(y) +
                                        " i=" + std::to_string(i));
      }
    }
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
      {"structural validation and boundaries", structural},
      {"digon", digon},
      {"glued_simplices:3", glued},
      {"simplex_boundary:3", sphere},
      {"rp2_six_vertex characteristic dependence", projective_plane},
      {"skeleton depth", skeletons},
      {"link cohomology oracle", links},
      {"duality involution", duality},
      {"ring oracle", ring},
      {"Murai-Terai nonnegativity", murai_terai},
      {"Gorenstein factorization", factorization},
      {"relative Cohen-Macaulay ideals", relative_cm},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[k].second(o);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    std::cout << (o.passed() ? "PASS" : "FAIL") << " " << (k + 1) << " " << criteria[k].first << " ("
              << ms.count() << " ms)\n";
    for (std::size_t i = 0; i < std::min<std::size_t>(o.failures.size(), 5); ++i)
      std::cout << "    " << o.failures[i] << "\n";
    if (!o.passed()) ++failed;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
