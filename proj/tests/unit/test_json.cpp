#include <doctest.h>

#include <sstream>

#include "gfchordal/error.hpp"
#include "gfchordal/geometry.hpp"
#include "gfchordal/iso.hpp"
#include "gfchordal/json_io.hpp"
#include "oracles.hpp"

using namespace gfc;

namespace {

Errc decode_error(const std::string& text) {
  try {
    decode_matroid(Json::parse(text));
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::precondition_violation;
}

}  // namespace

TEST_CASE("matroid documents round-trip") {
  for (const Matroid& m : oracle::small_corpus(15)) {
    const Json doc = encode_matroid(m);
    const Matroid back = decode_matroid(doc);
    CHECK(back.labels() == m.labels());
    CHECK(is_isomorphic(back, m));
    CHECK(encode_matroid(back) == doc);
  }
  const Matroid k4 = construct_mk4();
  const Json doc = encode_matroid(k4);
  CHECK(doc["q"] == 2);
  CHECK(doc["rank"] == 3);
  CHECK(doc["points"].size() == 6);
}

TEST_CASE("labels default and q can be overridden") {
  const Matroid m = decode_matroid(Json::parse(R"({"q":2,"rank":2,"points":[[1,0],[0,1],[1,1]]})"));
  CHECK(m.labels() == std::vector<std::string>{"e0", "e1", "e2"});
  const Matroid m3 = decode_matroid(Json::parse(R"({"q":2,"rank":2,"points":[[1,0],[0,1],[1,1]]})"), 3);
  CHECK(m3.q() == 3);
  CHECK_FALSE(is_projective_geometry(m3));
}

TEST_CASE("malformed documents") {
  CHECK(decode_error(R"([1,2])") == Errc::malformed_document);
  CHECK(decode_error(R"({"q":6,"rank":1,"points":[[1]]})") == Errc::malformed_document);
  CHECK(decode_error(R"({"q":2,"rank":2,"points":[[1,0,0]]})") == Errc::malformed_document);
  CHECK(decode_error(R"({"q":2,"rank":2,"points":[[1,2]]})") == Errc::malformed_document);
  CHECK(decode_error(R"({"q":2,"rank":2,"points":[[1,0],[1,0]]})") == Errc::malformed_document);
  CHECK(decode_error(R"({"q":3,"rank":1,"points":[[2]]})") == Errc::malformed_document);
  CHECK(decode_error(R"({"q":2,"points":[]})") == Errc::malformed_document);
}

TEST_CASE("catalogs round-trip through JSON lines") {
  const auto cat = enumerate_matroids(3, field_of(3), false);
  std::stringstream ss;
  save_catalog(ss, cat);
  const auto back = load_catalog(ss);
  CHECK(back.q == 3);
  CHECK(back.r == 3);
  CHECK(back.group_order == cat.group_order);
  CHECK(back.group_checksum == cat.group_checksum);
  CHECK(back.all_orbit_sum == cat.all_orbit_sum);
  REQUIRE(back.entries.size() == cat.entries.size());
  for (std::size_t i = 0; i < cat.entries.size(); ++i) {
    CHECK(back.entries[i].mask == cat.entries[i].mask);
    CHECK(back.entries[i].orbit_size == cat.entries[i].orbit_size);
    CHECK(back.entries[i].matroid.labels() == cat.entries[i].matroid.labels());
  }
  std::stringstream truncated(ss.str().substr(0, ss.str().find('\n') + 1));
  try {
    load_catalog(truncated);
    FAIL("expected malformed-document");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::malformed_document);
  }
}

TEST_CASE("certificate JSON shapes") {
  const Matroid k4 = construct_mk4();
  const Json no = chordal_json(is_gfq_chordal(k4), k4);
  CHECK(no["member"] == false);
  CHECK(no["certificate"]["kind"] == "forbidden");
  CHECK(no["certificate"]["target"] == "M(K4)");

  const Matroid f7 = construct_pg(3, field_of(2));
  const Json yes = chordal_json(is_gfq_chordal(f7), f7);
  CHECK(yes["member"] == true);
  CHECK(yes["certificate"]["kind"] == "construction");
  CHECK(yes["certificate"]["leaf"] == "P3");

  const Json a = analyze_json(k4);
  CHECK(a["rank"] == 3);
  CHECK(a["flats_by_rank"] == Json::parse("[1,6,7,1]"));
  CHECK(a["round"] == true);
  CHECK(a["circuits"].size() == 7);
  CHECK(a["dividers"].empty());
}
