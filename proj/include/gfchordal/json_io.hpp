#pragma once

#include <iosfwd>
#include <optional>

#include <json.hpp>

#include "gfchordal/chordal.hpp"
#include "gfchordal/enumerate.hpp"
#include "gfchordal/matroid.hpp"
#include "gfchordal/structure.hpp"

namespace gfc {

using Json = nlohmann::ordered_json;

/// {"q", "rank", "points", "labels"}; points are normalized coordinate
/// vectors of length rank, entries are field-element encodings.
Json encode_matroid(const Matroid& m);

/// Throws malformed_document on shape errors. `q_override` reinterprets the
/// coordinates over another field (entries must still be valid encodings).
Matroid decode_matroid(const Json& doc, std::optional<int> q_override = {});

Json to_json(const SeparationReport& s, const Matroid& m);
Json to_json(const ConstructionCertificate& c);
Json to_json(const ForbiddenWitness& w);

/// {"member", "certificate"}; the certificate kind is "construction" or "forbidden".
Json chordal_json(const ChordalResult& r, const Matroid& m);
Json nq_json(const NqResult& r, const Matroid& m);

/// {rank, size, flats_by_rank, circuits, round, dividers, minimal_dividers}.
Json analyze_json(const Matroid& m);

/// JSON lines: a header object, then one object per representative.
void save_catalog(std::ostream& out, const OrbitCatalog& cat);
OrbitCatalog load_catalog(std::istream& in);

}  // namespace gfc
