#include "facering/poset.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

namespace facering {

namespace {

// Fixed-width bitset over element indices, used for down-sets during
// validation before the dense order table exists.
class Bits {
 public:
  explicit Bits(std::size_t n = 0) : words_((n + 63) / 64, 0) {}
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
  Bits& operator|=(const Bits& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    return *this;
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

 private:
  std::vector<std::uint64_t> words_;
};

std::string describe_atoms(AtomSet s, const std::vector<std::string>& atom_names) {
  std::string out = "{";
  bool first = true;
  for (unsigned i : s.members()) {
    if (!first) out += ",";
    out += atom_names[i];
    first = false;
  }
  return out + "}";
}

}  // namespace

unsigned SimplicialPoset::atom_index(ElementId a) const {
  auto it = std::find(atoms_.begin(), atoms_.end(), a);
  if (it == atoms_.end()) {
    throw Error(ErrorKind::kNotMember, "element " + names_[a] + " is not an atom");
  }
  return static_cast<unsigned>(it - atoms_.begin());
}

bool SimplicialPoset::covers(ElementId upper, ElementId lower) const {
  const auto& lc = lower_covers_[upper];
  return std::binary_search(lc.begin(), lc.end(), lower);
}

std::vector<ElementId> SimplicialPoset::up_set(ElementId x) const {
  std::vector<ElementId> out;
  for (ElementId y = x; y < size(); ++y)
    if (leq(x, y)) out.push_back(y);
  return out;
}

ElementId SimplicialPoset::element_below(ElementId x, AtomSet subset) const {
  for (ElementId y : down_sets_[x]) {
    if (support_[y] == subset) return y;
  }
  throw Error(ErrorKind::kNotMember, "no element below " + names_[x] + " with the requested atoms");
}

std::vector<ElementId> SimplicialPoset::elements_of_rank(unsigned r) const {
  std::vector<ElementId> out;
  for (ElementId x = 0; x < size(); ++x)
    if (rank(x) == r) out.push_back(x);
  return out;
}

std::vector<ElementId> SimplicialPoset::maximal_elements() const {
  std::vector<ElementId> out;
  for (ElementId x = 0; x < size(); ++x)
    if (upper_covers_[x].empty()) out.push_back(x);
  return out;
}

bool SimplicialPoset::is_pure() const {
  for (ElementId x : maximal_elements())
    if (rank(x) != rank_) return false;
  return true;
}

std::optional<ElementId> SimplicialPoset::find(const std::string& name) const {
  for (ElementId x = 0; x < size(); ++x)
    if (names_[x] == name) return x;
  return std::nullopt;
}

RawPoset SimplicialPoset::to_raw() const {
  RawPoset raw;
  raw.elements = names_;
  for (ElementId x = 0; x < size(); ++x)
    for (ElementId y : lower_covers_[x]) raw.covers.emplace_back(names_[x], names_[y]);
  return raw;
}

SimplicialPoset validate(const RawPoset& raw) {
  const std::size_t n = raw.elements.size();
  if (n == 0) throw PosetError(ErrorKind::kNoLeastElement, "", "the poset is empty");

  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) {
    if (!index.emplace(raw.elements[i], i).second) {
      throw PosetError(ErrorKind::kNotAPoset, raw.elements[i], "duplicate element id");
    }
  }
  std::vector<std::vector<std::size_t>> lower(n);
  std::vector<std::vector<std::size_t>> upper(n);
  std::vector<std::pair<std::size_t, std::size_t>> cover_pairs;
  for (const auto& [hi, lo] : raw.covers) {
    auto ih = index.find(hi);
    auto il = index.find(lo);
    if (ih == index.end() || il == index.end()) {
      throw PosetError(ErrorKind::kNotAPoset, ih == index.end() ? hi : lo,
                       "cover relation mentions an unknown element");
    }
    if (ih->second == il->second) {
      throw PosetError(ErrorKind::kNotAPoset, hi, "element covers itself");
    }
    lower[ih->second].push_back(il->second);
    upper[il->second].push_back(ih->second);
    cover_pairs.emplace_back(ih->second, il->second);
  }

  // Kahn's algorithm, lower elements first.
  std::vector<std::size_t> pending(n);
  std::vector<std::size_t> order;
  order.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    pending[i] = lower[i].size();
    if (pending[i] == 0) order.push_back(i);
  }
  for (std::size_t k = 0; k < order.size(); ++k) {
    for (std::size_t u : upper[order[k]]) {
      if (--pending[u] == 0) order.push_back(u);
    }
  }
  if (order.size() != n) {
    std::size_t witness = 0;
    while (pending[witness] == 0) ++witness;
    throw PosetError(ErrorKind::kNotAPoset, raw.elements[witness],
                     "the cover relation contains a cycle through this element");
  }

  std::vector<Bits> below(n, Bits(n));
  for (std::size_t x : order) {
    below[x].set(x);
    for (std::size_t y : lower[x]) below[x] |= below[y];
  }

  std::size_t least = order.front();
  for (std::size_t x = 0; x < n; ++x) {
    if (!below[x].test(least)) {
      throw PosetError(ErrorKind::kNoLeastElement, raw.elements[x],
                       "not above " + raw.elements[least] + ", the only candidate");
    }
  }

  std::vector<std::size_t> atom_inputs;
  for (std::size_t x = 0; x < n; ++x) {
    if (x != least && below[x].count() == 2) atom_inputs.push_back(x);
  }
  if (atom_inputs.size() > AtomSet::kCapacity) {
    throw PosetError(ErrorKind::kTooManyAtoms, "",
                     std::to_string(atom_inputs.size()) + " atoms exceed the supported " +
                         std::to_string(AtomSet::kCapacity));
  }
  std::vector<std::string> atom_names;
  for (std::size_t a : atom_inputs) atom_names.push_back(raw.elements[a]);

  std::vector<AtomSet> support(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (unsigned i = 0; i < atom_inputs.size(); ++i) {
      if (below[x].test(atom_inputs[i])) support[x].insert(i);
    }
  }

  // Boolean intervals: U restricted to [0̂, x] is a bijection onto the power
  // set of U(x), and each y below x has, for every missing atom i of U(x),
  // an element above it with atom set U(y) + {i}.
  for (std::size_t x : order) {
    std::vector<std::size_t> interval;
    for (std::size_t y = 0; y < n; ++y)
      if (below[x].test(y)) interval.push_back(y);
    const unsigned r = support[x].size();
    if (r >= 40 || interval.size() != (std::size_t{1} << r)) {
      throw PosetError(ErrorKind::kNonBooleanInterval, raw.elements[x],
                       "the interval below has " + std::to_string(interval.size()) +
                           " elements but " + std::to_string(r) + " atoms (expected " +
                           (r >= 40 ? std::string("2^") + std::to_string(r)
                                    : std::to_string(std::size_t{1} << r)) +
                           ")");
    }
    std::map<AtomSet, std::size_t> by_support;
    for (std::size_t y : interval) {
      auto [it, fresh] = by_support.emplace(support[y], y);
      if (!fresh) {
        throw PosetError(ErrorKind::kNonBooleanInterval, raw.elements[x],
                         raw.elements[it->second] + " and " + raw.elements[y] +
                             " lie below it with the same atom set " +
                             describe_atoms(support[y], atom_names));
      }
    }
    for (std::size_t y : interval) {
      for (unsigned i : (support[x] - support[y]).members()) {
        AtomSet bigger = support[y];
        bigger.insert(i);
        auto it = by_support.find(bigger);
        if (it == by_support.end() || !below[it->second].test(y)) {
          throw PosetError(ErrorKind::kNonBooleanInterval, raw.elements[x],
                           "no element between " + raw.elements[y] + " and it with atom set " +
                               describe_atoms(bigger, atom_names));
        }
      }
    }
  }

  for (const auto& [hi, lo] : cover_pairs) {
    if (support[hi].size() != support[lo].size() + 1) {
      throw PosetError(ErrorKind::kRankMismatch, raw.elements[hi],
                       "declared to cover " + raw.elements[lo] + " but the ranks are " +
                           std::to_string(support[hi].size()) + " and " +
                           std::to_string(support[lo].size()));
    }
  }

  // Renumber by (rank, input position).
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    return support[a].size() < support[b].size();
  });
  std::vector<ElementId> new_id(n);
  for (std::size_t k = 0; k < n; ++k) new_id[perm[k]] = static_cast<ElementId>(k);

  SimplicialPoset p;
  p.names_.resize(n);
  p.support_.resize(n);
  p.leq_.assign(n * n, false);
  p.lower_covers_.resize(n);
  p.upper_covers_.resize(n);
  p.down_sets_.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t old = perm[k];
    p.names_[k] = raw.elements[old];
    p.support_[k] = support[old];
    p.rank_ = std::max(p.rank_, support[old].size());
  }
  for (std::size_t a : atom_inputs) p.atoms_.push_back(new_id[a]);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (below[x].test(y)) p.leq_[new_id[y] * n + new_id[x]] = true;
    }
  }
  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y = 0; y <= x; ++y) {
      if (!p.leq(y, x)) continue;
      p.down_sets_[x].push_back(y);
      if (p.rank(x) == p.rank(y) + 1) {
        p.lower_covers_[x].push_back(y);
        p.upper_covers_[y].push_back(x);
      }
    }
  }
  return p;
}

std::vector<ElementId> join_set(const SimplicialPoset& p, ElementId x, ElementId y) {
  std::vector<ElementId> bounds;
  for (ElementId z = std::max(x, y); z < p.size(); ++z) {
    if (!p.leq(x, z) || !p.leq(y, z)) continue;
    bool minimal = std::none_of(bounds.begin(), bounds.end(),
                                [&](ElementId w) { return p.leq(w, z); });
    if (minimal) bounds.push_back(z);
  }
  return bounds;
}

std::vector<ElementId> multi_join_set(const SimplicialPoset& p, std::span<const ElementId> xs) {
  std::vector<ElementId> bounds;
  for (ElementId z = 0; z < p.size(); ++z) {
    if (!std::all_of(xs.begin(), xs.end(), [&](ElementId x) { return p.leq(x, z); })) continue;
    bool minimal = std::none_of(bounds.begin(), bounds.end(),
                                [&](ElementId w) { return p.leq(w, z); });
    if (minimal) bounds.push_back(z);
  }
  return bounds;
}

ElementId meet(const SimplicialPoset& p, ElementId x, ElementId y) {
  if (join_set(p, x, y).empty()) {
    throw Error(ErrorKind::kMeetUndefined,
                "meet of " + p.name(x) + " and " + p.name(y) + " is undefined: no common upper bound");
  }
  return p.element_below(x, p.support(x) & p.support(y));
}

SimplicialPoset induced_subposet(const SimplicialPoset& p, std::span<const ElementId> keep) {
  std::vector<ElementId> sorted(keep.begin(), keep.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<char> kept(p.size(), 0);
  for (ElementId x : sorted) kept[x] = 1;
  RawPoset raw;
  for (ElementId x : sorted) {
    raw.elements.push_back(p.name(x));
    for (ElementId y : p.lower_covers(x)) {
      if (kept[y]) raw.covers.emplace_back(p.name(x), p.name(y));
    }
  }
  return validate(raw);
}

SimplicialPoset skeleton(const SimplicialPoset& p, int i) {
  if (i < 0 || i > static_cast<int>(p.rank()) - 1) {
    throw Error(ErrorKind::kIndexOutOfRange,
                "skeleton index " + std::to_string(i) + " outside [0, " +
                    std::to_string(static_cast<int>(p.rank()) - 1) + "]");
  }
  std::vector<ElementId> keep;
  for (ElementId x = 0; x < p.size(); ++x)
    if (static_cast<int>(p.rank(x)) <= i + 1) keep.push_back(x);
  return induced_subposet(p, keep);
}

SimplicialPoset product(const SimplicialPoset& a, const SimplicialPoset& b) {
  // Names like "(1,2,3)" can arise from two different pairs; primes keep them apart.
  std::map<std::pair<ElementId, ElementId>, std::string> names;
  std::set<std::string> taken;
  auto pair_name = [&](ElementId x, ElementId y) -> const std::string& {
    auto it = names.find({x, y});
    if (it != names.end()) return it->second;
    std::string name = "(" + a.name(x) + "," + b.name(y) + ")";
    while (!taken.insert(name).second) name += "'";
    return names.emplace(std::make_pair(x, y), std::move(name)).first->second;
  };
  std::vector<std::pair<ElementId, ElementId>> order;
  order.emplace_back(0, 0);
  for (ElementId x : a.atoms()) order.emplace_back(x, 0);
  for (ElementId y : b.atoms()) order.emplace_back(0, y);
  for (ElementId x = 0; x < a.size(); ++x) {
    for (ElementId y = 0; y < b.size(); ++y) {
      if (a.rank(x) + b.rank(y) >= 2) order.emplace_back(x, y);
    }
  }
  std::stable_sort(order.begin(), order.end(), [&](const auto& u, const auto& v) {
    return a.rank(u.first) + b.rank(u.second) < a.rank(v.first) + b.rank(v.second);
  });
  RawPoset raw;
  for (const auto& [x, y] : order) {
    raw.elements.push_back(pair_name(x, y));
    for (ElementId lx : a.lower_covers(x)) raw.covers.emplace_back(pair_name(x, y), pair_name(lx, y));
    for (ElementId ly : b.lower_covers(y)) raw.covers.emplace_back(pair_name(x, y), pair_name(x, ly));
  }
  return validate(raw);
}

SimplicialPoset from_facets(const std::vector<std::vector<std::string>>& facets) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, unsigned> vertex;
  std::vector<AtomSet> facet_sets;
  for (const auto& facet : facets) {
    AtomSet s;
    for (const auto& label : facet) {
      auto [it, fresh] = vertex.emplace(label, static_cast<unsigned>(labels.size()));
      if (fresh) {
        if (labels.size() == AtomSet::kCapacity) {
          throw PosetError(ErrorKind::kTooManyAtoms, label, "more than 64 vertices");
        }
        labels.push_back(label);
      }
      s.insert(it->second);
    }
    facet_sets.push_back(s);
  }
  std::set<std::uint64_t> faces{0};
  for (AtomSet f : facet_sets) {
    // Enumerate all submasks of the facet.
    const std::uint64_t full = f.bits();
    for (std::uint64_t sub = full;; sub = (sub - 1) & full) {
      faces.insert(sub);
      if (sub == 0) break;
    }
  }
  std::vector<AtomSet> ordered;
  for (std::uint64_t bits : faces) ordered.emplace_back(bits);
  std::sort(ordered.begin(), ordered.end(), [](AtomSet u, AtomSet v) {
    if (u.size() != v.size()) return u.size() < v.size();
    return u.members() < v.members();
  });
  auto face_name = [&](AtomSet s) {
    if (s.empty()) return std::string(kBottomName);
    std::string out;
    for (unsigned i : s.members()) {
      if (!out.empty()) out += ",";
      out += labels[i];
    }
    return out;
  };
  RawPoset raw;
  for (AtomSet s : ordered) {
    raw.elements.push_back(face_name(s));
    for (unsigned i : s.members()) {
      AtomSet smaller = s;
      smaller.erase(i);
      raw.covers.emplace_back(face_name(s), face_name(smaller));
    }
  }
  return validate(raw);
}

SimplicialPoset from_facets(const std::vector<std::vector<int>>& facets) {
  std::vector<std::vector<std::string>> labelled;
  for (const auto& f : facets) {
    std::vector<std::string> l;
    for (int v : f) l.push_back(std::to_string(v));
    labelled.push_back(std::move(l));
  }
  return from_facets(labelled);
}

SimplicialPoset boolean(unsigned m) {
  std::vector<int> facet(m);
  std::iota(facet.begin(), facet.end(), 1);
  if (m == 0) return from_facets(std::vector<std::vector<int>>{});
  return from_facets(std::vector<std::vector<int>>{facet});
}

SimplicialPoset disjoint_union(const SimplicialPoset& a, const SimplicialPoset& b) {
  std::set<std::string> taken;
  for (ElementId x = 0; x < a.size(); ++x) taken.insert(a.name(x));
  std::vector<std::string> b_names(b.size());
  b_names[0] = a.name(0);
  for (ElementId y = 1; y < b.size(); ++y) {
    std::string name = b.name(y);
    while (taken.count(name)) name += "'";
    taken.insert(name);
    b_names[y] = name;
  }
  RawPoset raw = a.to_raw();
  for (ElementId y = 1; y < b.size(); ++y) {
    raw.elements.push_back(b_names[y]);
    for (ElementId z : b.lower_covers(y)) raw.covers.emplace_back(b_names[y], b_names[z]);
  }
  return validate(raw);
}

namespace {

bool match_with_atom_map(const SimplicialPoset& a, const SimplicialPoset& b,
                         const std::vector<unsigned>& atom_map) {
  auto map_support = [&](AtomSet s) {
    AtomSet out;
    for (unsigned i : s.members()) out.insert(atom_map[i]);
    return out;
  };
  std::map<AtomSet, std::vector<ElementId>> b_by_support;
  for (ElementId y = 0; y < b.size(); ++y) b_by_support[b.support(y)].push_back(y);

  std::vector<ElementId> image(a.size(), 0);
  std::vector<char> used(b.size(), 0);
  // Depth-first assignment in id order (lower elements first).
  std::vector<std::size_t> choice(a.size(), 0);
  ElementId x = 1;
  image[0] = 0;
  used[0] = 1;
  while (x >= 1 && x < a.size()) {
    const auto it = b_by_support.find(map_support(a.support(x)));
    const std::vector<ElementId> empty;
    const auto& candidates = it == b_by_support.end() ? empty : it->second;
    bool placed = false;
    while (choice[x] < candidates.size()) {
      const ElementId y = candidates[choice[x]++];
      if (used[y]) continue;
      std::vector<ElementId> mapped;
      for (ElementId l : a.lower_covers(x)) mapped.push_back(image[l]);
      std::sort(mapped.begin(), mapped.end());
      if (mapped == b.lower_covers(y)) {
        image[x] = y;
        used[y] = 1;
        placed = true;
        break;
      }
    }
    if (placed) {
      ++x;
      if (x < a.size()) choice[x] = 0;
    } else {
      choice[x] = 0;
      --x;
      if (x >= 1) used[image[x]] = 0;
    }
  }
  return x == a.size();
}

}  // namespace

bool isomorphic(const SimplicialPoset& a, const SimplicialPoset& b, unsigned max_permuted_atoms) {
  if (a.size() != b.size() || a.atom_count() != b.atom_count() || a.rank() != b.rank()) return false;
  if (rank_counts(a) != rank_counts(b)) return false;
  std::vector<unsigned> atom_map(a.atom_count());
  std::iota(atom_map.begin(), atom_map.end(), 0u);
  if (a.atom_count() > max_permuted_atoms) return match_with_atom_map(a, b, atom_map);
  do {
    if (match_with_atom_map(a, b, atom_map)) return true;
  } while (std::next_permutation(atom_map.begin(), atom_map.end()));
  return false;
}

std::vector<long long> rank_counts(const SimplicialPoset& p) {
  std::vector<long long> counts(p.rank() + 1, 0);
  for (ElementId x = 0; x < p.size(); ++x) ++counts[p.rank(x)];
  return counts;
}

}  // namespace facering
