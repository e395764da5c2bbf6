#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gfchordal/enumerate.hpp"
#include "gfchordal/iso.hpp"
#include "gfchordal/json_io.hpp"

namespace gfc {

struct Counterexample {
  Json matroid;  // MatroidDocument
  std::string expected;
  std::string got;
  Json certificate;
};

struct SuiteReport {
  std::string name;
  std::size_t instances = 0;
  bool pass = true;
  std::vector<Counterexample> counterexamples;
  double wall_seconds = 0.0;
  /// Suite-specific findings (minimal non-members, seeds, sample sizes).
  Json details = Json::object();

  void fail(const Matroid& m, std::string expected, std::string got, Json certificate = nullptr);
};

Json to_json(const SuiteReport& r);

struct VerifyOptions {
  /// Directory holding catalog-q<q>-r<r>.jsonl files; read when the group
  /// checksum matches, written after a rebuild.
  std::optional<std::string> catalog_dir;
  std::uint64_t seed = 0;
  std::size_t q4_samples = 10000;
};

/// Simple GF(q) matroids deduplicated by canonical form, in catalog order.
struct Corpus {
  int q = 0;
  std::vector<Matroid> members;
  std::vector<CanonicalForm> forms;
};

/// Union of the spanning catalogs for ranks 0..max_rank.
Corpus exhaustive_corpus(int q, int max_rank, const VerifyOptions& opt);
/// Rank-3 GF(4) orbit representatives hit by opt.q4_samples random subsets.
Corpus sampled_q4_corpus(const VerifyOptions& opt);

/// Loads the catalog from opt.catalog_dir when valid, otherwise enumerates it.
OrbitCatalog obtain_catalog(int r, int q, const VerifyOptions& opt);

SuiteReport verify_theorem3(const VerifyOptions& opt);
SuiteReport verify_theorem4(int q, const VerifyOptions& opt);  // q = 3 exhaustive, q = 4 sampled
SuiteReport verify_lemma1(const VerifyOptions& opt);
SuiteReport verify_lemma6(const VerifyOptions& opt);
SuiteReport verify_lemma7(const VerifyOptions& opt);
SuiteReport verify_nq_equals_rq(const VerifyOptions& opt);
SuiteReport verify_cfk(const VerifyOptions& opt);
SuiteReport verify_closure(const VerifyOptions& opt);
SuiteReport verify_normal_form(const VerifyOptions& opt);
SuiteReport verify_corollary1(const VerifyOptions& opt);
SuiteReport verify_bose(const VerifyOptions& opt);
SuiteReport verify_field_axioms(const VerifyOptions& opt);
/// Lemmas 4, 8, 9, 13, 20 and roundness of contractions of round matroids.
SuiteReport verify_lemmas_misc(const VerifyOptions& opt);

/// Suite names accepted by run_suite, in acceptance order.
const std::vector<std::string>& suite_names();
/// Throws invalid_argument for an unknown name.
SuiteReport run_suite(const std::string& name, const VerifyOptions& opt);

/// Non-members of M_q all of whose proper induced minors are members.
std::vector<Matroid> minimal_non_members(const Corpus& corpus);

}  // namespace gfc
