#include "gfchordal/verify.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <random>
#include <set>

#include "gfchordal/chordal.hpp"
#include "gfchordal/error.hpp"
#include "gfchordal/geometry.hpp"
#include "gfchordal/gpc.hpp"
#include "gfchordal/structure.hpp"

namespace gfc {

void SuiteReport::fail(const Matroid& m, std::string expected, std::string got, Json certificate) {
  pass = false;
  counterexamples.push_back({encode_matroid(m), std::move(expected), std::move(got), std::move(certificate)});
}

Json to_json(const SuiteReport& r) {
  Json cx = Json::array();
  for (const auto& c : r.counterexamples) {
    cx.push_back(Json{{"matroid", c.matroid}, {"expected", c.expected}, {"got", c.got}, {"certificate", c.certificate}});
  }
  return Json{{"suite", r.name},
              {"instances", r.instances},
              {"pass", r.pass},
              {"counterexamples", std::move(cx)},
              {"wall_seconds", r.wall_seconds},
              {"details", r.details}};
}

namespace {

using Clock = std::chrono::steady_clock;

struct Timer {
  Clock::time_point start = Clock::now();
  double seconds() const { return std::chrono::duration<double>(Clock::now() - start).count(); }
};

// Runs body(i, out) for every index in parallel; per-index findings are
// merged in index order so reports do not depend on scheduling.
template <class Body>
void sweep(SuiteReport& report, const std::vector<Matroid>& items, Body body) {
  const auto n = static_cast<std::int64_t>(items.size());
  std::vector<std::vector<Counterexample>> found(items.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      body(static_cast<std::size_t>(i), found[i]);
    } catch (const std::exception& e) {
      found[i].push_back({encode_matroid(items[i]), "no exception", e.what(), nullptr});
    }
  }
  report.instances += items.size();
  for (auto& f : found) {
    for (auto& c : f) {
      report.pass = false;
      report.counterexamples.push_back(std::move(c));
    }
  }
}

Counterexample cx(const Matroid& m, std::string expected, std::string got, Json cert = nullptr) {
  return {encode_matroid(m), std::move(expected), std::move(got), std::move(cert)};
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

// U(r, n) for r in {2, 3}, built over a field large enough to hold it.
// Canonical forms do not depend on the field.
Matroid uniform_matroid(int r, int n) {
  if (r == 2) return construct_uniform_line(n, field_of(9));
  if (r == 3 && n <= 10) return construct_hyperoval(field_of(8)).restrict_to(ElementSet::first(n));
  throw Error(Errc::invalid_argument, "uniform_matroid supports U(2, n <= 10) and U(3, n <= 10)");
}

std::optional<Matroid> named_matroid(const std::string& name) {
  if (name == "M(K4)") return construct_mk4();
  int r = 0;
  int n = 0;
  if (std::sscanf(name.c_str(), "U(%d,%d)", &r, &n) == 2) return uniform_matroid(r, n);
  return std::nullopt;
}

CanonicalForm form_of(const Matroid& m) { return canonical_form(m); }

bool witness_checks_out(const Matroid& m, const ForbiddenWitness& w) {
  const Matroid contracted = contract_simplify(m, m.elements(w.contract_flat));
  const ElementSet g = contracted.elements(w.restrict_flat);
  if (!contracted.is_flat(g) || !m.is_flat(m.elements(w.contract_flat))) return false;
  const auto target = named_matroid(w.target);
  return target && is_isomorphic(contracted.restrict_to(g), *target);
}

// Single-step induced minors: restrictions to proper flats and si(M/e).
std::vector<Matroid> single_moves(const Matroid& m) {
  std::vector<Matroid> out;
  const FlatLattice lattice(m);
  for (int k = 0; k < lattice.rank(); ++k) {
    for (ElementSet f : lattice.flats(k)) out.push_back(m.restrict_to(f));
  }
  for (int e = 0; e < m.size(); ++e) out.push_back(contract_simplify(m, ElementSet::single(e)));
  return out;
}

// Membership memo keyed by canonical form; shared across threads.
class MembershipOracle {
 public:
  bool member(const Matroid& m) { return member(m, form_of(m)); }

  // Every proper induced minor of m is a member.
  bool downset_members(const Matroid& m) {
    const CanonicalForm cf = form_of(m);
    {
      std::lock_guard lock(mu_);
      if (auto it = down_.find(cf); it != down_.end()) return it->second;
    }
    bool ok = true;
    for (const Matroid& y : single_moves(m)) {
      if (!member(y) || !downset_members(y)) {
        ok = false;
        break;
      }
    }
    std::lock_guard lock(mu_);
    down_.emplace(cf, ok);
    return ok;
  }

 private:
  bool member(const Matroid& m, const CanonicalForm& cf) {
    {
      std::lock_guard lock(mu_);
      if (auto it = member_.find(cf); it != member_.end()) return it->second;
    }
    const bool b = decompose(m, LeafMode::projective).ok;
    std::lock_guard lock(mu_);
    member_.emplace(cf, b);
    return b;
  }

  std::mutex mu_;
  std::map<CanonicalForm, bool> member_;
  std::map<CanonicalForm, bool> down_;
};

std::string describe(const Matroid& m) {
  if (is_isomorphic(m, construct_mk4())) return "M(K4)";
  if (m.rank() >= 2 && m.rank() <= 3 && m.size() <= 10 && is_uniform(m)) {
    return "U(" + std::to_string(m.rank()) + "," + std::to_string(m.size()) + ")";
  }
  return "rank " + std::to_string(m.rank()) + ", " + std::to_string(m.size()) + " elements, digest " +
         form_of(m).digest();
}

std::string catalog_path(const std::string& dir, int q, int r, const std::string& suffix = "") {
  return (std::filesystem::path(dir) / ("catalog-q" + std::to_string(q) + "-r" + std::to_string(r) + suffix + ".jsonl"))
      .string();
}

std::optional<OrbitCatalog> try_load(const std::string& path, int q, int r, const std::string& checksum,
                                     std::size_t samples) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  try {
    OrbitCatalog cat = load_catalog(in);
    if (cat.q == q && cat.r == r && cat.group_checksum == checksum && cat.samples == samples) return cat;
  } catch (const Error&) {
  }
  return std::nullopt;
}

void try_save(const std::string& path, const OrbitCatalog& cat) {
  std::filesystem::create_directories(std::filesystem::path(path).parent_path());
  std::ofstream out(path);
  save_catalog(out, cat);
}

Corpus corpus_from(int q, const std::vector<const OrbitCatalog*>& cats, bool spanning_only) {
  Corpus c;
  c.q = q;
  std::set<CanonicalForm> seen;
  for (const OrbitCatalog* cat : cats) {
    for (const auto& e : cat->entries) {
      if (spanning_only && !e.spanning) continue;
      CanonicalForm cf = form_of(e.matroid);
      if (!seen.insert(cf).second) continue;
      c.members.push_back(e.matroid);
      c.forms.push_back(std::move(cf));
    }
  }
  return c;
}

// Corpora are reused across suites within one process.
std::mutex corpus_mu;
std::map<std::string, Corpus> corpus_cache;

std::string cache_key(const std::string& what, const VerifyOptions& opt) {
  return what + "|" + opt.catalog_dir.value_or("") + "|" + std::to_string(opt.seed) + "|" +
         std::to_string(opt.q4_samples);
}

std::set<CanonicalForm> forms_of(const std::vector<Matroid>& ms) {
  std::set<CanonicalForm> out;
  for (const auto& m : ms) out.insert(form_of(m));
  return out;
}

// Forbidden set for Theorem 3 (q = 2) or Theorem 4 (q > 2).
std::vector<std::pair<std::string, Matroid>> forbidden_targets(int q) {
  std::vector<std::pair<std::string, Matroid>> out;
  if (q == 2) {
    out.emplace_back("M(K4)", construct_mk4());
    out.emplace_back("U(3,4)", uniform_matroid(3, 4));
    return out;
  }
  for (int k = 3; k <= q; ++k) out.emplace_back("U(2," + std::to_string(k) + ")", uniform_matroid(2, k));
  out.emplace_back("U(3," + std::to_string(q + 2) + ")", uniform_matroid(3, q + 2));
  return out;
}

// The set N of Lemmas 8 and 9: short lines and U(3, q+2).
std::set<CanonicalForm> lemma_n_forms(int q) {
  std::set<CanonicalForm> out;
  for (int k = 3; k <= q; ++k) out.insert(form_of(uniform_matroid(2, k)));
  out.insert(form_of(uniform_matroid(3, q + 2)));
  return out;
}

bool has_induced_minor_in(const Matroid& m, const std::set<CanonicalForm>& targets) {
  int largest = 0;
  for (const auto& t : targets) largest = std::max(largest, t.size);
  for (const auto& cf : induced_minors(m, largest)) {
    if (targets.count(cf) != 0) return true;
  }
  return false;
}

// Decider agreement, certificate checks and minimal non-members.
SuiteReport decider_suite(std::string name, const Corpus& corpus, const VerifyOptions& opt,
                          bool assert_minimal_set) {
  Timer timer;
  SuiteReport report;
  report.name = std::move(name);
  const int q = corpus.q;
  std::vector<char> membership(corpus.members.size(), 0);

  sweep(report, corpus.members, [&](std::size_t i, std::vector<Counterexample>& out) {
    const Matroid& m = corpus.members[i];
    const ChordalResult res = is_gfq_chordal(m);
    membership[i] = res.member ? 1 : 0;
    const auto forbidden = res.member ? find_forbidden_induced_minor(m) : res.witness;
    if (res.member == forbidden.has_value()) {
      out.push_back(cx(m, "deciders agree", "decomposition says " + yes_no(res.member) +
                                                 ", forbidden-minor search says " + yes_no(!forbidden),
                       chordal_json(res, m)));
      return;
    }
    if (res.member) {
      if (!is_isomorphic(replay(m, *res.construction), m)) {
        out.push_back(cx(m, "certificate replays to M", "non-isomorphic replay", chordal_json(res, m)));
      }
    } else if (!witness_checks_out(m, *res.witness)) {
      out.push_back(cx(m, "witness is an induced minor isomorphic to its target", "invalid witness",
                       chordal_json(res, m)));
    }
    std::mt19937_64 rng(opt.seed ^ (0x9e3779b97f4a7c15ULL * (i + 1)));
    const auto alt = decompose(m, LeafMode::projective, [&rng](std::size_t n) { return rng() % n; });
    if (alt.ok != res.member) {
      out.push_back(cx(m, "decision independent of the minimal divider chosen",
                       "randomized choice gives " + yes_no(alt.ok)));
    }
  });

  std::size_t members = 0;
  for (char c : membership) members += c;
  report.details["members"] = members;
  report.details["non_members"] = corpus.members.size() - members;

  const auto minimal = minimal_non_members(corpus);
  Json found = Json::array();
  for (const auto& m : minimal) found.push_back(describe(m));
  report.details["minimal_non_members"] = found;

  const auto targets = forbidden_targets(q);
  Json target_names = Json::array();
  for (const auto& [n, t] : targets) target_names.push_back(n);
  report.details["forbidden_set"] = target_names;

  if (assert_minimal_set) {
    const auto found_forms = forms_of(minimal);
    std::set<CanonicalForm> target_forms;
    for (const auto& [n, t] : targets) {
      target_forms.insert(form_of(t));
      if (found_forms.count(form_of(t)) == 0) {
        report.pass = false;
        report.counterexamples.push_back(
            {encode_matroid(t), "minimal non-member " + n + " present in the corpus", "absent", nullptr});
      }
    }
    for (const auto& m : minimal) {
      if (target_forms.count(form_of(m)) == 0) {
        report.fail(m, "minimal non-members within the forbidden set", "extra minimal non-member " + describe(m));
      }
    }
  }
  report.wall_seconds = timer.seconds();
  return report;
}

std::vector<Matroid> binary_members(const VerifyOptions& opt) { return exhaustive_corpus(2, 4, opt).members; }

std::vector<Matroid> both_corpora(const VerifyOptions& opt) {
  std::vector<Matroid> out = exhaustive_corpus(2, 4, opt).members;
  const Corpus t = exhaustive_corpus(3, 3, opt);
  out.insert(out.end(), t.members.begin(), t.members.end());
  return out;
}

}  // namespace

OrbitCatalog obtain_catalog(int r, int q, const VerifyOptions& opt) {
  const Field& f = field_of(q);
  if (opt.catalog_dir) {
    const std::string path = catalog_path(*opt.catalog_dir, q, r);
    if (auto cat = try_load(path, q, r, group_elements(r, f).checksum(), 0)) return *cat;
    OrbitCatalog cat = enumerate_matroids(r, f, false);
    try_save(path, cat);
    return cat;
  }
  return enumerate_matroids(r, f, false);
}

Corpus exhaustive_corpus(int q, int max_rank, const VerifyOptions& opt) {
  const std::string key = cache_key("exhaustive-" + std::to_string(q) + "-" + std::to_string(max_rank), opt);
  {
    std::lock_guard lock(corpus_mu);
    if (auto it = corpus_cache.find(key); it != corpus_cache.end()) return it->second;
  }
  std::vector<OrbitCatalog> cats;
  for (int r = 0; r <= max_rank; ++r) cats.push_back(obtain_catalog(r, q, opt));
  std::vector<const OrbitCatalog*> ptrs;
  for (const auto& c : cats) ptrs.push_back(&c);
  Corpus c = corpus_from(q, ptrs, true);
  std::lock_guard lock(corpus_mu);
  return corpus_cache.emplace(key, std::move(c)).first->second;
}

Corpus sampled_q4_corpus(const VerifyOptions& opt) {
  const std::string key = cache_key("sampled-q4", opt);
  {
    std::lock_guard lock(corpus_mu);
    if (auto it = corpus_cache.find(key); it != corpus_cache.end()) return it->second;
  }
  const Field& f = field_of(4);
  std::optional<OrbitCatalog> cat;
  std::string path;
  if (opt.catalog_dir) {
    path = catalog_path(*opt.catalog_dir, 4, 3,
                        "-sample-s" + std::to_string(opt.seed) + "-n" + std::to_string(opt.q4_samples));
    cat = try_load(path, 4, 3, group_elements(3, f).checksum(), opt.q4_samples);
  }
  if (!cat) {
    cat = sample_matroids(3, f, opt.q4_samples, opt.seed, false);
    if (opt.catalog_dir) try_save(path, *cat);
  }
  Corpus c = corpus_from(4, {&*cat}, false);
  std::lock_guard lock(corpus_mu);
  return corpus_cache.emplace(key, std::move(c)).first->second;
}

std::vector<Matroid> minimal_non_members(const Corpus& corpus) {
  MembershipOracle oracle;
  const auto n = static_cast<std::int64_t>(corpus.members.size());
  std::vector<char> minimal(corpus.members.size(), 0);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < n; ++i) {
    const Matroid& m = corpus.members[i];
    minimal[i] = !oracle.member(m) && oracle.downset_members(m);
  }
  std::vector<Matroid> out;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    if (minimal[i]) out.push_back(corpus.members[i]);
  }
  return out;
}

SuiteReport verify_theorem3(const VerifyOptions& opt) {
  return decider_suite("theorem3", exhaustive_corpus(2, 4, opt), opt, true);
}

SuiteReport verify_theorem4(int q, const VerifyOptions& opt) {
  if (q == 3) return decider_suite("theorem4-q3", exhaustive_corpus(3, 3, opt), opt, true);
  if (q != 4) throw Error(Errc::invalid_argument, "theorem4 suite runs for q = 3 or q = 4");

  const Corpus corpus = sampled_q4_corpus(opt);
  SuiteReport report = decider_suite("theorem4-q4", corpus, opt, false);
  Timer timer;
  report.details["samples"] = opt.q4_samples;
  report.details["seed"] = opt.seed;
  report.details["distinct_matroids"] = corpus.members.size();

  const Matroid oval = construct_hyperoval(field_of(4));
  ++report.instances;
  const ChordalResult res = is_gfq_chordal(oval);
  if (res.member || !res.witness || res.witness->target != "U(3,6)") {
    report.fail(oval, "non-member with witness U(3,6)", res.member ? "member" : "other witness",
                chordal_json(res, oval));
  }
  std::set<CanonicalForm> lines;
  for (int k = 3; k <= 4; ++k) lines.insert(form_of(uniform_matroid(2, k)));
  for (const auto& cf : induced_minors_normal_form(oval, 4)) {
    if (lines.count(cf) != 0) report.fail(oval, "no U(2,3) or U(2,4) induced minor", "forbidden line found");
  }
  report.wall_seconds += timer.seconds();
  return report;
}

SuiteReport verify_lemma1(const VerifyOptions& opt) {
  Timer timer;
  SuiteReport report;
  report.name = "lemma1";
  report.details["seed"] = opt.seed;

  std::vector<std::vector<Matroid>> pools(2);
  for (const auto& m : exhaustive_corpus(2, 4, opt).members) {
    if (m.rank() >= 1 && m.size() <= 10) pools[0].push_back(m);
  }
  for (const auto& m : exhaustive_corpus(3, 3, opt).members) {
    if (m.rank() >= 1) pools[1].push_back(m);
  }

  std::mt19937_64 rng(opt.seed);
  Json glue_ranks = Json::array();
  for (int inst = 0; inst < 100; ++inst) {
    const auto& pool = pools[inst % 2];
    const Matroid& m1 = pool[rng() % pool.size()];
    const Matroid& m2 = pool[rng() % pool.size()];

    // shared projective modular flats up to rank 2
    std::vector<std::pair<ElementSet, ElementSet>> candidates;
    const FlatLattice l1(m1);
    const FlatLattice l2(m2);
    for (int t = 0; t <= std::min({2, l1.rank(), l2.rank()}); ++t) {
      auto pg_flats = [t](const Matroid& m, const FlatLattice& lat) {
        std::vector<ElementSet> out;
        for (ElementSet f : lat.flats(t)) {
          if (is_projective_geometry(m.restrict_to(f)) == t && is_modular_flat(lat, f)) out.push_back(f);
        }
        return out;
      };
      for (ElementSet a : pg_flats(m1, l1)) {
        for (ElementSet b : pg_flats(m2, l2)) candidates.emplace_back(a, b);
      }
    }
    const auto [f1, f2] = candidates[rng() % candidates.size()];

    // lexicographically first isomorphism that glues
    const auto a_labels = m1.labels_of(f1);
    auto b_labels = m2.labels_of(f2);
    std::sort(b_labels.begin(), b_labels.end());
    std::optional<Matroid> p;
    GpcSpec spec{m1, m2, {}};
    do {
      spec.glue.clear();
      for (std::size_t j = 0; j < a_labels.size(); ++j) spec.glue.emplace_back(a_labels[j], b_labels[j]);
      try {
        p = gpc(spec);
      } catch (const Error&) {
      }
    } while (!p && std::next_permutation(b_labels.begin(), b_labels.end()));
    ++report.instances;
    glue_ranks.push_back(m1.rank(f1));
    if (!p) {
      report.fail(m1, "a gluing isomorphism onto the second part", "none found");
      continue;
    }

    const ElementSet e1 = p->elements(m1.labels());
    const ElementSet e2 = p->elements(gpc_m2_labels(spec));
    const ElementSet t = e1 & e2;
    const FlatLattice lp(*p);
    bool identity = true;
    for (int k = 0; k <= lp.rank() && identity; ++k) {
      for (ElementSet f : lp.flats(k)) {
        if (p->rank(f) != p->rank(f & e1) + p->rank(f & e2) - p->rank(f & t)) {
          report.fail(*p, "r(F) = r(F n E1) + r(F n E2) - r(F n T)", "identity fails", Json(p->labels_of(f)));
          identity = false;
          break;
        }
      }
    }
    const FlatsCheck fc = verify_flats_definition(*p, spec);
    if (!fc.ok) report.fail(*p, "flats are the unions F1 u F2 agreeing on T", fc.reason);
  }
  report.details["glue_ranks"] = glue_ranks;
  report.wall_seconds = timer.seconds();
  return report;
}

SuiteReport verify_lemma6(const VerifyOptions& opt) {
  Timer timer;
  SuiteReport report;
  report.name = "lemma6";
  const Field& f = field_of(2);
  std::vector<Matroid> items;
  for (const auto& m : exhaustive_corpus(2, 4, opt).members) {
    if (m.rank() >= 1) items.push_back(m);
  }
  std::vector<char> hits(items.size(), 0);
  sweep(report, items, [&](std::size_t i, std::vector<Counterexample>& out) {
    const Matroid& m = items[i];
    const int r = m.rank() - 1;
    const Matroid pr = construct_pg(r, f);
    bool all_contractions = true;
    for (int e = 0; e < m.size() && all_contractions; ++e) {
      all_contractions = is_isomorphic(contract_simplify(m, ElementSet::single(e)), pr);
    }
    bool shape = false;
    for (int j = 0; j <= r && !shape; ++j) shape = is_isomorphic(m, construct_pg_minus_flat(r + 1, j + 1, f));
    hits[i] = shape;
    if (all_contractions != shape) {
      out.push_back(cx(m, "all contractions P_r iff P_{r+1} minus a flat",
                       "contractions " + yes_no(all_contractions) + ", shape " + yes_no(shape)));
    }
  });
  report.details["matches"] = static_cast<int>(std::count(hits.begin(), hits.end(), 1));
  report.wall_seconds = timer.seconds();
  return report;
}

SuiteReport verify_lemma7(const VerifyOptions&) {
  Timer timer;
  SuiteReport report;
  report.name = "lemma7";
  const Matroid mk4 = construct_mk4();
  const Matroid u34 = uniform_matroid(3, 4);
  Json found = Json::array();
  for (int r = 3; r <= 4; ++r) {
    for (int i = 1; i <= r - 1; ++i) {
      const Matroid m = construct_pg_minus_flat(r, i, field_of(2));
      ++report.instances;
      std::string hit;
      const FlatLattice lat(m);
      for (ElementSet fl : lat.flats(3)) {
        const Matroid part = m.restrict_to(fl);
        if (is_isomorphic(part, mk4)) hit = "M(K4)";
        else if (is_isomorphic(part, u34)) hit = "U(3,4)";
        if (!hit.empty()) break;
      }
      found.push_back("P" + std::to_string(r) + "\\P" + std::to_string(r - i) + ": " + (hit.empty() ? "none" : hit));
      if (hit.empty()) report.fail(m, "a flat isomorphic to M(K4) or U(3,4)", "none");
    }
  }
  report.details["witnesses"] = found;
  report.wall_seconds = timer.seconds();
  return report;
}

SuiteReport verify_nq_equals_rq(const VerifyOptions& opt) {
  Timer timer;
  SuiteReport report;
  report.name = "nq-equals-rq";
  const auto items = binary_members(opt);
  std::vector<char> in(items.size(), 0);
  std::vector<char> pools_differ(items.size(), 0);
  sweep(report, items, [&](std::size_t i, std::vector<Counterexample>& out) {
    const Matroid& m = items[i];
    const bool def = nq_definition_holds(m);
    const auto dec = decompose(m, LeafMode::round);
    in[i] = def;
    const auto literal = minimal_dividers(m, MinimalityPool::all_vertical);
    const auto exact = minimal_dividers(m, MinimalityPool::dividers_only);
    pools_differ[i] = literal.size() != exact.size() ||
                      !std::equal(literal.begin(), literal.end(), exact.begin(), [](const auto& a, const auto& b) {
                        return a.x == b.x && a.y == b.y;
                      });
    if (def != dec.ok) {
      out.push_back(cx(m, "definition and round-leaf decomposition agree",
                       "definition " + yes_no(def) + ", decomposition " + yes_no(dec.ok)));
    } else if (dec.ok && !is_isomorphic(replay(m, *dec.certificate), m)) {
      out.push_back(cx(m, "certificate replays to M", "non-isomorphic replay", to_json(*dec.certificate)));
    }
  });
  report.details["members"] = static_cast<int>(std::count(in.begin(), in.end(), 1));
  report.details["minimality_pools_differ"] = static_cast<int>(std::count(pools_differ.begin(), pools_differ.end(), 1));
  report.wall_seconds = timer.seconds();
  return report;
}

SuiteReport verify_cfk(const VerifyOptions& opt) {
  Timer timer;
  SuiteReport report;
  report.name = "cfk";
  const auto items = binary_members(opt);
  const CanonicalForm u34 = form_of(uniform_matroid(3, 4));
  sweep(report, items, [&](std::size_t i, std::vector<Counterexample>& out) {
    const Matroid& m = items[i];
    const bool chordal = cfk_chordal(m);
    const bool has_u34 = induced_minors(m, 4).count(u34) != 0;
    if (chordal == has_u34) {
      out.push_back(cx(m, "chordal iff no U(3,4) induced minor",
                       "chordal " + yes_no(chordal) + ", U(3,4) induced minor " + yes_no(has_u34)));
    }
    if (is_gfq_chordal(m).member && !chordal) out.push_back(cx(m, "GF(2)-chordal implies chordal", "not chordal"));
  });
  report.wall_seconds = timer.seconds();
  return report;
}

SuiteReport verify_closure(const VerifyOptions& opt) {
  Timer timer;
  SuiteReport report;
  report.name = "closure";
  const auto items = both_corpora(opt);
  sweep(report, items, [&](std::size_t i, std::vector<Counterexample>& out) {
    const Matroid& m = items[i];
    if (!is_gfq_chordal(m).member) return;
    const FlatLattice lat(m);
    for (int k = 0; k <= lat.rank(); ++k) {
      for (ElementSet f : lat.flats(k)) {
        if (!is_gfq_chordal(m.restrict_to(f)).member) {
          out.push_back(cx(m, "every flat restriction accepted", "rejected", Json(m.labels_of(f))));
        }
      }
    }
    for (int e = 0; e < m.size(); ++e) {
      if (!is_gfq_chordal(contract_simplify(m, ElementSet::single(e))).member) {
        out.push_back(cx(m, "every si(M/e) accepted", "rejected", Json(m.label(e))));
      }
    }
  });
  report.wall_seconds = timer.seconds();
  return report;
}

SuiteReport verify_normal_form(const VerifyOptions& opt) {
  Timer timer;
  SuiteReport report;
  report.name = "normal-form";
  std::vector<Matroid> items;
  for (const auto& m : both_corpora(opt)) {
    if (m.size() <= 9) items.push_back(m);
  }
  sweep(report, items, [&](std::size_t i, std::vector<Counterexample>& out) {
    const Matroid& m = items[i];
    const auto bfs = induced_minors(m, m.size());
    const auto nf = induced_minors_normal_form(m, m.size());
    if (bfs != nf) {
      out.push_back(cx(m, "BFS closure equals one contraction then one restriction",
                       std::to_string(bfs.size()) + " vs " + std::to_string(nf.size()) + " forms"));
    }
  });
  report.wall_seconds = timer.seconds();
  return report;
}

SuiteReport verify_corollary1(const VerifyOptions& opt) {
  Timer timer;
  SuiteReport report;
  report.name = "corollary1";
  std::vector<Matroid> minimal = minimal_non_members(exhaustive_corpus(2, 4, opt));
  for (auto& m : minimal_non_members(exhaustive_corpus(3, 3, opt))) minimal.push_back(std::move(m));
  Json names = Json::array();
  for (const auto& m : minimal) names.push_back(describe(m));
  report.details["minimal_non_members"] = names;
  sweep(report, minimal, [&](std::size_t i, std::vector<Counterexample>& out) {
    if (!is_round(minimal[i])) out.push_back(cx(minimal[i], "round", "has a vertical separation"));
  });
  if (minimal.empty()) {
    report.pass = false;
    report.counterexamples.push_back({nullptr, "minimal non-members found", "none", nullptr});
  }
  report.wall_seconds = timer.seconds();
  return report;
}

SuiteReport verify_bose(const VerifyOptions&) {
  Timer timer;
  SuiteReport report;
  report.name = "bose";
  for (int q : {2, 4, 8}) {
    ++report.instances;
    const Matroid h = construct_hyperoval(field_of(q));
    if (h.size() != q + 2 || h.rank() != 3 || !is_uniform(h)) {
      report.fail(h, "a (q+2)-arc", "not an arc");
    }
  }
  for (int q : {3, 5, 7, 9}) {
    ++report.instances;
    try {
      construct_hyperoval(field_of(q));
      report.counterexamples.push_back({nullptr, "odd-characteristic for q = " + std::to_string(q), "constructed", nullptr});
      report.pass = false;
    } catch (const Error& e) {
      if (e.code() != Errc::odd_characteristic) {
        report.pass = false;
        report.counterexamples.push_back({nullptr, "odd-characteristic", std::string(errc_name(e.code())), nullptr});
      }
    }
  }
  // no 5-arc in PG(2,3)
  const Field& f3 = field_of(3);
  const Matroid plane = construct_pg(3, f3);
  std::size_t arcs = 0;
  std::size_t subsets = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << plane.size()); ++mask) {
    if (__builtin_popcountll(mask) != 5) continue;
    ++subsets;
    const Matroid s = plane.restrict_to(ElementSet(mask));
    if (s.rank() == 3 && is_uniform(s)) {
      ++arcs;
      if (arcs == 1) report.fail(s, "no 5-arc in PG(2,3)", "5-arc found");
    }
  }
  ++report.instances;
  report.details["pg23_five_subsets"] = subsets;
  report.details["pg23_five_arcs"] = arcs;
  report.wall_seconds = timer.seconds();
  return report;
}

SuiteReport verify_field_axioms(const VerifyOptions&) {
  Timer timer;
  SuiteReport report;
  report.name = "field-axioms";
  for (int q : {2, 3, 4, 5, 7, 8, 9}) {
    ++report.instances;
    const Field& f = field_of(q);
    std::string bad;
    auto check = [&](bool ok, const char* what) {
      if (!ok && bad.empty()) bad = what;
    };
    for (int a = 0; a < q; ++a) {
      const auto x = static_cast<Elem>(a);
      check(f.add(x, 0) == x, "additive identity");
      check(f.mul(x, 1) == x, "multiplicative identity");
      check(f.add(x, f.neg(x)) == 0, "additive inverse");
      check(a == 0 || f.mul(x, f.inv(x)) == 1, "multiplicative inverse");
      check(f.frobenius(x, f.degree()) == x, "Frobenius order divides the degree");
      Elem px = 0;
      for (int i = 0; i < f.characteristic(); ++i) px = f.add(px, x);
      check(px == 0, "characteristic");
      for (int b = 0; b < q; ++b) {
        const auto y = static_cast<Elem>(b);
        check(f.add(x, y) == f.add(y, x), "additive commutativity");
        check(f.mul(x, y) == f.mul(y, x), "multiplicative commutativity");
        check(f.add(f.sub(x, y), y) == x, "subtraction");
        check(a == 0 || b == 0 || f.mul(x, y) != 0, "no zero divisors");
        check(b == 0 || f.mul(f.div(x, y), y) == x, "division");
        check(f.frobenius(f.add(x, y)) == f.add(f.frobenius(x), f.frobenius(y)), "Frobenius additive");
        check(f.frobenius(f.mul(x, y)) == f.mul(f.frobenius(x), f.frobenius(y)), "Frobenius multiplicative");
        for (int c = 0; c < q; ++c) {
          const auto z = static_cast<Elem>(c);
          check(f.add(f.add(x, y), z) == f.add(x, f.add(y, z)), "additive associativity");
          check(f.mul(f.mul(x, y), z) == f.mul(x, f.mul(y, z)), "multiplicative associativity");
          check(f.mul(x, f.add(y, z)) == f.add(f.mul(x, y), f.mul(x, z)), "distributivity");
        }
      }
    }
    if (!bad.empty()) {
      report.pass = false;
      report.counterexamples.push_back({nullptr, "field axioms for GF(" + std::to_string(q) + ")", bad, nullptr});
    }
  }
  report.wall_seconds = timer.seconds();
  return report;
}

SuiteReport verify_lemmas_misc(const VerifyOptions& opt) {
  Timer timer;
  SuiteReport report;
  report.name = "lemmas-misc";
  const auto items = both_corpora(opt);
  const CanonicalForm u34 = form_of(uniform_matroid(3, 4));
  const CanonicalForm u23 = form_of(uniform_matroid(2, 3));
  // N is only defined for q > 2; binary glue failures are reported, not asserted
  std::mutex binary_mu;
  Json binary_glue = Json::array();

  sweep(report, items, [&](std::size_t i, std::vector<Counterexample>& out) {
    const Matroid& m = items[i];
    const int q = m.q();
    const FlatLattice lat(m);
    const bool member = is_gfq_chordal(m).member;
    const bool round = is_round(lat);

    // Lemma 13
    if (member && round != is_projective_geometry(m).has_value()) {
      out.push_back(cx(m, "member: round iff projective geometry", "round " + yes_no(round)));
    }
    // contractions of round matroids stay round
    if (round) {
      for (int e = 0; e < m.size(); ++e) {
        if (!is_round(contract_simplify(m, ElementSet::single(e)))) {
          out.push_back(cx(m, "si(M/e) round", "not round", Json(m.label(e))));
        }
      }
    }
    // Lemma 20 on minimal dividers
    for (const auto& d : minimal_dividers(m, lat)) {
      const ElementSet cx_ = lat.closure(d.x);
      if ((cx_ & lat.closure(d.y)) != (cx_ & lat.closure(d.y - cx_))) {
        out.push_back(cx(m, "cl(X) n cl(Y) = cl(X) n cl(Y - cl(X))", "differs", to_json(d, m)));
      }
    }
    // Lemmas 4 and 9 on dividers whose sides close up to members
    std::optional<std::set<CanonicalForm>> minors;
    auto minor_forms = [&]() -> const std::set<CanonicalForm>& {
      if (!minors) minors = induced_minors(m, std::max(4, q + 2));
      return *minors;
    };
    for (const auto& d : dividers(m, lat)) {
      const bool sides = is_gfq_chordal(m.restrict_to(lat.closure(d.x))).member &&
                         is_gfq_chordal(m.restrict_to(lat.closure(d.y))).member;
      if (!sides) continue;
      const int glue = d.intersection_flat.count();
      if (d.k == 2) {
        if (glue == 1 && !member) out.push_back(cx(m, "|cl(X) n cl(Y)| = 1 gives a member", "non-member", to_json(d, m)));
        if (glue == 0 && !(minor_forms().count(u34) && minor_forms().count(u23))) {
          out.push_back(cx(m, "empty glue forces U(3,4) and U(2,3) induced minors", "missing", to_json(d, m)));
        }
      }
      const auto pg = is_projective_geometry(m.restrict_to(d.intersection_flat));
      if (pg != d.k - 1 && q == 2) {
        const std::lock_guard lock(binary_mu);
        binary_glue.push_back({{"matroid", encode_matroid(m)}, {"separation", to_json(d, m)}});
      } else if (pg != d.k - 1) {
        bool n_minor = false;
        for (const auto& t : lemma_n_forms(q)) n_minor = n_minor || minor_forms().count(t) != 0;
        if (!n_minor) {
          out.push_back(cx(m, "projective glue of rank k-1 or an N induced minor", "neither", to_json(d, m)));
        }
      }
    }
    // Lemma 8 (q > 2)
    if (q > 2 && m.rank() >= 3 && !is_projective_geometry(m)) {
      const Matroid lower = construct_pg(m.rank() - 1, m.field());
      bool all = true;
      for (int e = 0; e < m.size() && all; ++e) all = is_isomorphic(contract_simplify(m, ElementSet::single(e)), lower);
      if (all && !find_forbidden_induced_minor(m)) {
        out.push_back(cx(m, "a member of N as an induced minor", "none"));
      }
    }
  });
  // sweep order is nondeterministic
  std::sort(binary_glue.begin(), binary_glue.end(), [](const Json& a, const Json& b) { return a.dump() < b.dump(); });
  report.details["binary_nonprojective_glue_count"] = binary_glue.size();
  if (!binary_glue.empty()) report.details["binary_nonprojective_glue_first"] = binary_glue.front();
  report.wall_seconds = timer.seconds();
  return report;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "theorem3", "theorem4-q3", "theorem4-q4", "lemma1",     "lemma6", "lemma7",       "nq-equals-rq",
      "cfk",      "closure",     "normal-form", "corollary1", "bose",   "field-axioms", "lemmas-misc"};
  return names;
}

SuiteReport run_suite(const std::string& name, const VerifyOptions& opt) {
  if (name == "theorem3") return verify_theorem3(opt);
  if (name == "theorem4-q3") return verify_theorem4(3, opt);
  if (name == "theorem4-q4") return verify_theorem4(4, opt);
  if (name == "lemma1") return verify_lemma1(opt);
  if (name == "lemma6") return verify_lemma6(opt);
  if (name == "lemma7") return verify_lemma7(opt);
  if (name == "nq-equals-rq") return verify_nq_equals_rq(opt);
  if (name == "cfk") return verify_cfk(opt);
  if (name == "closure") return verify_closure(opt);
  if (name == "normal-form") return verify_normal_form(opt);
  if (name == "corollary1") return verify_corollary1(opt);
  if (name == "bose") return verify_bose(opt);
  if (name == "field-axioms") return verify_field_axioms(opt);
  if (name == "lemmas-misc") return verify_lemmas_misc(opt);
  throw Error(Errc::invalid_argument, "unknown suite '" + name + "'");
}

}  // namespace gfc
