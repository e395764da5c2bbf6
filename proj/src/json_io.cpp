#include "gfchordal/json_io.hpp"

#include <istream>
#include <ostream>
#include <string>

#include "gfchordal/error.hpp"
#include "gfchordal/field.hpp"
#include "gfchordal/iso.hpp"

namespace gfc {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(Errc::malformed_document, what); }

int int_field(const Json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_number_integer()) {
    malformed(std::string("missing or non-integer field '") + key + "'");
  }
  return doc[key].get<int>();
}

Json labels_json(const Matroid& m, ElementSet s) { return m.labels_of(s); }

}  // namespace

Json encode_matroid(const Matroid& m) {
  Json pts = Json::array();
  for (int i = 0; i < m.size(); ++i) {
    Json v = Json::array();
    for (Elem x : m.point(i)) v.push_back(static_cast<int>(x));
    pts.push_back(std::move(v));
  }
  return Json{{"q", m.q()}, {"rank", m.rank()}, {"points", std::move(pts)}, {"labels", m.labels()}};
}

Matroid decode_matroid(const Json& doc, std::optional<int> q_override) {
  if (!doc.is_object()) malformed("matroid document must be an object");
  const int q = q_override.value_or(int_field(doc, "q"));
  if (!is_supported_order(q)) malformed("unsupported field order " + std::to_string(q));
  const int rank = int_field(doc, "rank");
  if (rank < 0 || rank > kMaxDim) malformed("rank out of range");
  if (!doc.contains("points") || !doc["points"].is_array()) malformed("missing 'points' array");

  std::vector<Coords> pts;
  for (const auto& v : doc["points"]) {
    if (!v.is_array() || static_cast<int>(v.size()) != rank) {
      malformed("every point must be a vector of length rank");
    }
    Coords c;
    for (const auto& x : v) {
      if (!x.is_number_integer() || x.get<int>() < 0 || x.get<int>() >= q) {
        malformed("point entry is not an element of GF(" + std::to_string(q) + ")");
      }
      c.push_back(static_cast<Elem>(x.get<int>()));
    }
    pts.push_back(std::move(c));
  }
  std::vector<std::string> labels;
  if (doc.contains("labels")) {
    if (!doc["labels"].is_array()) malformed("'labels' must be an array");
    for (const auto& l : doc["labels"]) {
      if (!l.is_string()) malformed("labels must be strings");
      labels.push_back(l.get<std::string>());
    }
  }

  const Field& f = field_of(q);
  if (pts.empty()) {
    if (!labels.empty()) malformed("labels given for an empty matroid");
    return Matroid::empty(f);
  }
  try {
    return Matroid(f, rank, std::move(pts), std::move(labels));
  } catch (const Error& e) {
    if (e.code() == Errc::invalid_argument) malformed(e.what());
    throw;
  }
}

Json to_json(const SeparationReport& s, const Matroid& m) {
  return Json{{"X", labels_json(m, s.x)},
              {"Y", labels_json(m, s.y)},
              {"k", s.k},
              {"exact", s.exact},
              {"local_conn", s.local_conn},
              {"intersection_flat", labels_json(m, s.intersection_flat)}};
}

Json to_json(const ConstructionCertificate& c) {
  using Kind = ConstructionCertificate::Kind;
  Json out;
  switch (c.kind) {
    case Kind::pg_leaf:
      out["leaf"] = "P" + std::to_string(c.pg_rank);
      break;
    case Kind::round_leaf:
      out["leaf"] = "round";
      out["rank"] = c.pg_rank;
      break;
    case Kind::join: {
      Json parts = Json::array();
      for (const auto& ch : c.children) parts.push_back(to_json(ch));
      out["join"] = Json{{"glue", c.glue}, {"glue_rank", c.glue_rank}, {"parts", std::move(parts)}};
      break;
    }
  }
  out["elements"] = c.elements;
  return out;
}

Json to_json(const ForbiddenWitness& w) {
  return Json{{"target", w.target}, {"contract_flat", w.contract_flat}, {"restrict_flat", w.restrict_flat}};
}

Json chordal_json(const ChordalResult& r, const Matroid& m) {
  Json cert;
  if (r.member) {
    cert["kind"] = "construction";
    cert.update(to_json(*r.construction));
  } else {
    cert["kind"] = "forbidden";
    if (r.witness) {
      cert.update(to_json(*r.witness));
    } else {
      cert["target"] = nullptr;
    }
    if (r.failed_split) {
      // the split refers to a restriction of m; re-index against its labels
      const Matroid part = m.restrict_to(m.elements(r.failed_split_ground));
      cert["failed_split"] = to_json(*r.failed_split, part);
    } else if (!r.failed_split_ground.empty()) {
      cert["non_projective_round_part"] = r.failed_split_ground;
    }
  }
  return Json{{"member", r.member}, {"certificate", std::move(cert)}};
}

Json nq_json(const NqResult& r, const Matroid& m) {
  Json cert;
  if (r.member) {
    cert["kind"] = "construction";
    if (r.construction) cert.update(to_json(*r.construction));
  } else {
    cert["kind"] = "failing_divider";
    cert["divider"] = to_json(*r.failing, m);
  }
  return Json{{"member", r.member}, {"certificate", std::move(cert)}};
}

Json analyze_json(const Matroid& m) {
  const FlatLattice lattice(m);
  Json flat_counts = Json::array();
  for (int k = 0; k <= lattice.rank(); ++k) flat_counts.push_back(lattice.flats(k).size());
  Json circs = Json::array();
  for (ElementSet c : circuits(m)) circs.push_back(labels_json(m, c));
  Json divs = Json::array();
  for (const auto& d : dividers(m, lattice)) divs.push_back(to_json(d, m));
  Json mins = Json::array();
  for (const auto& d : minimal_dividers(m, lattice)) mins.push_back(to_json(d, m));
  return Json{{"rank", m.rank()},
              {"size", m.size()},
              {"flats_by_rank", std::move(flat_counts)},
              {"circuits", std::move(circs)},
              {"round", is_round(lattice)},
              {"dividers", std::move(divs)},
              {"minimal_dividers", std::move(mins)}};
}

void save_catalog(std::ostream& out, const OrbitCatalog& cat) {
  const Json header{{"q", cat.q},
                    {"r", cat.r},
                    {"group_order", cat.group_order},
                    {"group_checksum", cat.group_checksum},
                    {"all_orbit_count", cat.all_orbit_count},
                    {"all_orbit_sum", cat.all_orbit_sum},
                    {"samples", cat.samples},
                    {"entries", cat.entries.size()}};
  out << header.dump() << '\n';
  for (const auto& e : cat.entries) {
    const Json line{{"mask", e.mask},
                    {"orbit_size", e.orbit_size},
                    {"spanning", e.spanning},
                    {"matroid", encode_matroid(e.matroid)}};
    out << line.dump() << '\n';
  }
}

OrbitCatalog load_catalog(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) malformed("empty catalog");
  OrbitCatalog cat;
  try {
    const Json h = Json::parse(line);
    cat.q = h.at("q").get<int>();
    cat.r = h.at("r").get<int>();
    cat.group_order = h.at("group_order").get<std::size_t>();
    cat.group_checksum = h.at("group_checksum").get<std::string>();
    cat.all_orbit_count = h.at("all_orbit_count").get<std::size_t>();
    cat.all_orbit_sum = h.at("all_orbit_sum").get<std::uint64_t>();
    cat.samples = h.at("samples").get<std::size_t>();
    const auto expected = h.at("entries").get<std::size_t>();
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      const Json e = Json::parse(line);
      cat.entries.push_back({e.at("mask").get<std::uint64_t>(), e.at("orbit_size").get<std::uint64_t>(),
                             e.at("spanning").get<bool>(), decode_matroid(e.at("matroid"))});
    }
    if (cat.entries.size() != expected) malformed("catalog is truncated");
  } catch (const Json::exception& e) {
    malformed(std::string("catalog: ") + e.what());
  }
  return cat;
}

}  // namespace gfc
