#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "facering/face_ring.hpp"
#include "facering/io.hpp"

namespace facering {

using Json = nlohmann::ordered_json;

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::kInvalidInput, what); }

std::string label_of(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  bad("labels must be strings or integers");
}

void reject_reserved(const std::string& id) {
  if (id == kBottomName) bad(std::string("the id ") + kBottomName + " is reserved for the least element");
  if (id.empty()) bad("empty id");
}

}  // namespace

RawPoset PosetFile::to_raw() const {
  if (has_facets()) return from_facets(facets).to_raw();
  RawPoset raw;
  raw.elements.push_back(kBottomName);
  for (const auto& rec : hasse) {
    reject_reserved(rec.id);
    raw.elements.push_back(rec.id);
    if (rec.covers.empty()) raw.covers.emplace_back(rec.id, kBottomName);
    for (const auto& c : rec.covers) {
      reject_reserved(c);
      raw.covers.emplace_back(rec.id, c);
    }
  }
  return raw;
}

SimplicialPoset PosetFile::build() const {
  if (has_facets()) return from_facets(facets);
  return validate(to_raw());
}

PosetFile parse_poset_file(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    bad(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) bad("a poset file must be a JSON object");
  PosetFile file;
  if (j.contains("name")) {
    if (!j["name"].is_string()) bad("\"name\" must be a string");
    file.name = j["name"].get<std::string>();
  }
  const bool has_hasse = j.contains("hasse");
  const bool has_facets = j.contains("facets");
  if (has_hasse == has_facets) bad("exactly one of \"hasse\" and \"facets\" is required");
  if (has_hasse) {
    if (!j["hasse"].is_array()) bad("\"hasse\" must be an array");
    for (const auto& rec : j["hasse"]) {
      if (!rec.is_object() || !rec.contains("id")) bad("hasse records need an \"id\"");
      PosetFile::HasseRecord r;
      r.id = label_of(rec["id"]);
      reject_reserved(r.id);
      if (rec.contains("covers")) {
        if (!rec["covers"].is_array()) bad("\"covers\" must be an array");
        for (const auto& c : rec["covers"]) {
          r.covers.push_back(label_of(c));
          reject_reserved(r.covers.back());
        }
      }
      file.hasse.push_back(std::move(r));
    }
  } else {
    if (!j["facets"].is_array() || j["facets"].empty()) bad("\"facets\" must be a nonempty array");
    for (const auto& f : j["facets"]) {
      if (!f.is_array() || f.empty()) bad("every facet must be a nonempty array");
      std::vector<std::string> facet;
      std::set<std::string> seen;
      for (const auto& v : f) {
        facet.push_back(label_of(v));
        reject_reserved(facet.back());
        if (facet.back().find(',') != std::string::npos) bad("vertex labels may not contain ','");
        if (!seen.insert(facet.back()).second) bad("repeated vertex " + facet.back() + " in a facet");
      }
      file.facets.push_back(std::move(facet));
    }
  }
  return file;
}

PosetFile read_poset_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_poset_file(ss.str());
}

std::string emit_poset_file(const PosetFile& file) {
  Json j;
  j["name"] = file.name;
  if (file.has_facets()) {
    j["facets"] = file.facets;
  } else {
    Json arr = Json::array();
    for (const auto& rec : file.hasse) arr.push_back(Json{{"id", rec.id}, {"covers", rec.covers}});
    j["hasse"] = std::move(arr);
  }
  return j.dump(2) + "\n";
}

PosetFile to_poset_file(const std::string& name, const SimplicialPoset& p) {
  PosetFile file;
  file.name = name;
  for (ElementId x = 1; x < p.size(); ++x) {
    PosetFile::HasseRecord rec{p.name(x), {}};
    for (ElementId y : p.lower_covers(x))
      if (y != SimplicialPoset::bottom()) rec.covers.push_back(p.name(y));
    file.hasse.push_back(std::move(rec));
  }
  return file;
}

std::string report_json(const std::string& name, const SimplicialPoset& p,
                        const LocalCohomologyTable& table) {
  Json j;
  j["name"] = name;
  j["field"] = table.field.name();
  j["d"] = table.d;
  j["f_vector"] = f_vector(p);
  j["h_vector"] = h_vector(p);
  j["reduced_cohomology_X"] = reduced_cohomology_X(table);
  Json rows = Json::array();
  for (ElementId x = 0; x < p.size(); ++x) {
    rows.push_back(Json{{"element", x == SimplicialPoset::bottom() ? std::string(kBottomName) : p.name(x)},
                        {"rank", p.rank(x)},
                        {"dims", table.dims[x]}});
  }
  j["local_cohomology"] = std::move(rows);
  return j.dump(2) + "\n";
}

std::string classification_json(const std::string& name, const ClassificationReport& r) {
  Json j;
  j["name"] = name;
  j["field"] = r.field.name();
  j["d"] = r.d;
  j["depth"] = r.depth;
  j["f_vector"] = r.f_vector;
  j["h_vector"] = r.h_vector;
  j["cm"] = r.cohen_macaulay;
  j["buchsbaum"] = r.buchsbaum;
  j["gorenstein_star"] = r.gorenstein_star;
  j["gorenstein"] = r.gorenstein;
  j["cone_set"] = r.cone_set;
  j["max_serre_r"] = r.serre.to_string();
  Json dims = Json::array();
  for (const auto& v : r.dualizing_cohomology_dims) {
    if (v) {
      dims.push_back(*v);
    } else {
      dims.push_back(nullptr);
    }
  }
  j["dualizing_cohomology_dims"] = std::move(dims);
  return j.dump(2) + "\n";
}

}  // namespace facering
