// gfchordal: construct matroids, decide GF(q)-chordality, run verification suites.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "gfchordal/chordal.hpp"
#include "gfchordal/enumerate.hpp"
#include "gfchordal/error.hpp"
#include "gfchordal/geometry.hpp"
#include "gfchordal/gpc.hpp"
#include "gfchordal/json_io.hpp"
#include "gfchordal/verify.hpp"

namespace {

using gfc::Errc;
using gfc::Error;
using gfc::Json;

constexpr int kExitMalformed = 2;
constexpr int kExitTooLarge = 3;

Json read_json(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw Error(Errc::malformed_document, "cannot open '" + path + "'");
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(Errc::malformed_document, std::string("invalid JSON: ") + e.what());
  }
}

gfc::Matroid read_matroid(const std::string& path, std::optional<int> q_override = {}) {
  return gfc::decode_matroid(read_json(path), q_override);
}

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

std::vector<std::pair<std::string, std::string>> parse_glue(const std::string& text) {
  std::vector<std::pair<std::string, std::string>> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw Error(Errc::malformed_document, "glue pair '" + item + "' lacks ':'");
    out.emplace_back(item.substr(0, colon), item.substr(colon + 1));
  }
  return out;
}

int exit_code_for(Errc code) { return code == Errc::too_large ? kExitTooLarge : kExitMalformed; }

int report_error(Errc code, const std::string& message) {
  std::cout << Json{{"error", std::string(gfc::errc_name(code))}, {"message", message}}.dump(2) << '\n';
  return exit_code_for(code);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"GF(q)-chordal matroid toolkit"};
  app.require_subcommand(1);

  auto* construct = app.add_subcommand("construct", "emit a MatroidDocument for a named matroid");
  std::string cname;
  std::vector<int> cparams;
  construct->add_option("name", cname, "pg | uniform-line | hyperoval | pg-minus-flat | mk4")->required();
  construct->add_option("params", cparams,
                        "pg <r> <q>; uniform-line <k> <q>; hyperoval <q>; pg-minus-flat <r> <i> <q>");

  auto* gpc_cmd = app.add_subcommand("gpc", "generalized parallel connection of two documents");
  std::string g1;
  std::string g2;
  std::string glue;
  gpc_cmd->add_option("file1", g1)->required();
  gpc_cmd->add_option("file2", g2)->required();
  gpc_cmd->add_option("--glue", glue, "label pairs a:b,c:d (empty for a direct sum)");

  auto* analyze = app.add_subcommand("analyze", "flats, circuits, roundness and dividers");
  std::string afile;
  analyze->add_option("file", afile)->required();

  auto* chordal = app.add_subcommand("chordal", "GF(q)-chordality with a certificate");
  std::string chfile;
  std::optional<int> q_override;
  chordal->add_option("file", chfile)->required();
  chordal->add_option("--q-override", q_override, "decide over GF(q) instead of the document's field");

  auto* nq = app.add_subcommand("nq", "membership of N_q with a certificate");
  std::string nqfile;
  nq->add_option("file", nqfile)->required();

  auto* cfk = app.add_subcommand("cfk", "circuit-chordality");
  std::string cfkfile;
  cfk->add_option("file", cfkfile)->required();

  auto* verify = app.add_subcommand("verify", "run a verification suite (or 'all')");
  std::string suite;
  gfc::VerifyOptions vopt;
  std::string catalog;
  verify->add_option("suite", suite)->required();
  verify->add_option("--catalog", catalog, "catalog directory");
  verify->add_option("--seed", vopt.seed, "seed for randomized suites")->default_val(0);
  verify->add_option("--samples", vopt.q4_samples, "random subsets for the sampled GF(4) suite")->default_val(10000);

  auto* enumerate = app.add_subcommand("enumerate", "orbit catalog of PG(r-1, q) subsets");
  int er = 0;
  int eq = 0;
  std::string eout;
  enumerate->add_option("r", er)->required();
  enumerate->add_option("q", eq)->required();
  enumerate->add_option("--out", eout, "output file (default: standard output)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    return report_error(Errc::malformed_document, e.what());
  }

  try {
    if (*construct) {
      auto param = [&](std::size_t i) {
        if (i >= cparams.size()) throw Error(Errc::invalid_argument, "missing parameter for " + cname);
        return cparams[i];
      };
      auto field = [&](std::size_t i) -> const gfc::Field& {
        if (!gfc::is_supported_order(param(i))) {
          throw Error(Errc::unsupported_order, "unsupported field order " + std::to_string(param(i)));
        }
        return gfc::field_of(param(i));
      };
      if (cname == "pg") {
        emit(gfc::encode_matroid(gfc::construct_pg(param(0), field(1))));
      } else if (cname == "uniform-line") {
        emit(gfc::encode_matroid(gfc::construct_uniform_line(param(0), field(1))));
      } else if (cname == "hyperoval") {
        emit(gfc::encode_matroid(gfc::construct_hyperoval(field(0))));
      } else if (cname == "pg-minus-flat") {
        emit(gfc::encode_matroid(gfc::construct_pg_minus_flat(param(0), param(1), field(2))));
      } else if (cname == "mk4") {
        emit(gfc::encode_matroid(gfc::construct_mk4()));
      } else {
        return report_error(Errc::invalid_argument, "unknown construction '" + cname + "'");
      }
    } else if (*gpc_cmd) {
      gfc::GpcSpec spec{read_matroid(g1), read_matroid(g2), parse_glue(glue)};
      emit(gfc::encode_matroid(gfc::gpc(spec)));
    } else if (*analyze) {
      emit(gfc::analyze_json(read_matroid(afile)));
    } else if (*chordal) {
      const gfc::Matroid m = read_matroid(chfile, q_override);
      emit(gfc::chordal_json(gfc::is_gfq_chordal(m), m));
    } else if (*nq) {
      const gfc::Matroid m = read_matroid(nqfile);
      emit(gfc::nq_json(gfc::is_nq(m), m));
    } else if (*cfk) {
      emit(Json{{"chordal", gfc::cfk_chordal(read_matroid(cfkfile))}});
    } else if (*verify) {
      if (!catalog.empty()) vopt.catalog_dir = catalog;
      if (suite == "all") {
        Json reports = Json::array();
        bool pass = true;
        for (const auto& name : gfc::suite_names()) {
          const auto r = gfc::run_suite(name, vopt);
          pass = pass && r.pass;
          reports.push_back(gfc::to_json(r));
        }
        emit(reports);
        return pass ? 0 : 1;
      }
      const auto r = gfc::run_suite(suite, vopt);
      emit(gfc::to_json(r));
      return r.pass ? 0 : 1;
    } else if (*enumerate) {
      if (!gfc::is_supported_order(eq)) {
        throw Error(Errc::unsupported_order, "unsupported field order " + std::to_string(eq));
      }
      const auto cat = gfc::enumerate_matroids(er, gfc::field_of(eq), false);
      if (eout.empty()) {
        gfc::save_catalog(std::cout, cat);
      } else {
        std::ofstream out(eout);
        if (!out) throw Error(Errc::malformed_document, "cannot write '" + eout + "'");
        gfc::save_catalog(out, cat);
      }
    }
  } catch (const Error& e) {
    return report_error(e.code(), e.what());
  }
  return 0;
}
