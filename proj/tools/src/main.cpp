#include <CLI11.hpp>

#include <iostream>

#include "commands.hpp"
#include "lsawb/mu.hpp"

using namespace lsawb;
using namespace lsawb::cli;

namespace {

int emit(const Report& r, bool json) {
  const bool failed = r.result.contains("error");
  if (json) std::cout << render_json(r);
  else (failed ? std::cerr : std::cout) << render_text(r);
  return r.exit_code;
}

template <class F>
int guarded(const char* command, bool json, F body) {
  try {
    return emit(body(), json);
  } catch (const std::exception& e) {
    return emit(error_report(command, e), json);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact workbench for left- and right-symmetric algebras"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "lsawb 0.1.0");

  GlobalOptions g;
  std::string seed_text = "0xC0FFEE";
  app.add_option("--seed", seed_text, "Probe seed (decimal or 0x hex)")->capture_default_str();
  app.add_option("--samples", g.samples, "Random probe vectors per test")->capture_default_str()->check(CLI::Range(0, 4096));
  app.add_option("--degree-cap", g.degree_cap, "Highest LSA cohomology degree")->capture_default_str()->check(CLI::Range(0, 3));
  app.add_flag("--json", g.json, "Emit the machine-readable report");

  auto* check = app.add_subcommand("check", "Check the identity of the declared kind")->fallthrough();
  std::string check_file, check_kind;
  check->add_option("FILE", check_file, "Algebra document, '-' or catalog:NAME")->required();
  check->add_option("--kind", check_kind, "Override the declared kind (lsa, rsa, lie, plain)");

  auto* analyze = app.add_subcommand("analyze", "Full structural report of LSAs")->fallthrough();
  std::vector<std::string> analyze_files;
  std::size_t threads = 1;
  analyze->add_option("FILE", analyze_files, "Algebra documents")->required();
  analyze->add_option("--threads", threads, "Worker threads")->capture_default_str()->check(CLI::Range(1, 256));

  auto* cohomology = app.add_subcommand("cohomology", "LSA cohomology dimensions up to --degree-cap")->fallthrough();
  std::string cohomology_file;
  cohomology->add_option("FILE", cohomology_file)->required();

  auto* simple = app.add_subcommand("simple", "Simplicity verdict with certificate or witness")->fallthrough();
  std::string simple_file;
  simple->add_option("FILE", simple_file)->required();

  auto* mu = app.add_subcommand("mu", "Bounds for the minimal faithful module dimension")->fallthrough();
  MuArgs mu_args;
  std::size_t table_n = 0;
  mu->add_option("--pair", mu_args.pair, "N K: print n^k+1, C(n+k,k), p(n,k)")->expected(2);
  auto* table_opt = mu->add_option("--table", table_n, "Rows p(n,k), b(n,k), n^k+1 up to N");
  mu->add_option("--unimodal", mu_args.unimodal, "N or LO HI")->expected(1, 2);
  mu->add_option("--asymptotic", mu_args.asymptotic, "LO HI")->expected(2);
  mu->add_option("--formula", mu_args.formula, "KIND PARAM (abelian, heisenberg, two-step-center, schur-jacobson)")->expected(2);

  auto* trees = app.add_subcommand("trees", "Rooted trees and the grafting product")->fallthrough();
  TreeArgs tree_args;
  std::size_t count_n = 0, list_n = 0;
  auto* count_opt = trees->add_option("--count", count_n, "Number of rooted trees of order M");
  auto* list_opt = trees->add_option("--list", list_n, "List rooted trees of order M");
  trees->add_option("--graft", tree_args.graft, "T1 T2")->expected(2);
  trees->add_option("--assoc", tree_args.assoc, "T1 T2 T3")->expected(3);
  trees->add_option("--bullet", tree_args.bullet, "T1 T2 (labelled)")->expected(2);
  trees->add_option("--circ", tree_args.circ, "T1 T2 (labelled)")->expected(2);

  auto* words = app.add_subcommand("words", "Word-insertion algebra")->fallthrough();
  WordArgs word_args;
  words->add_option("--prod", word_args.prod, "X Y")->expected(2);
  words->add_option("--assoc", word_args.assoc, "X Y Z")->expected(3);
  words->add_flag("--pretty", word_args.pretty, "Exponent notation");

  auto* witt = app.add_subcommand("witt", "Witt right-symmetric product property suite")->fallthrough();
  std::size_t witt_n = 1, witt_cap = 6;
  witt->add_option("--vars", witt_n, "Number of variables")->capture_default_str()->check(CLI::Range(1, 4));
  witt->add_option("--cap", witt_cap, "Degree cap")->capture_default_str()->check(CLI::Range(1, 8));

  auto* cat = app.add_subcommand("catalog", "Shipped algebra catalog")->fallthrough();
  std::string cat_action = "list";
  std::vector<std::string> cat_names;
  cat->add_option("ACTION", cat_action, "list or dump")->capture_default_str();
  cat->add_option("NAMES", cat_names, "Entries to dump");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    g.seed = std::stoull(seed_text, nullptr, 0);
  } catch (const std::exception&) {
    std::cerr << "lsawb: error: invalid --seed '" << seed_text << "'\n";
    return kUsage;
  }

  if (*check)
    return guarded("check", g.json, [&] {
      std::optional<Kind> kind;
      if (!check_kind.empty()) kind = parse_kind(check_kind);
      return cmd_check(g, check_file, kind);
    });
  if (*analyze) {
    const auto reports = cmd_analyze(g, analyze_files, threads);
    int worst = kOk;
    if (g.json && reports.size() > 1) {
      Json list = Json::array();
      for (const auto& r : reports) {
        list.push_back({{"command", r.command}, {"exit_code", r.exit_code}, {"result", r.result}});
        worst = std::max(worst, r.exit_code);
      }
      std::cout << list.dump(2) << "\n";
      return worst;
    }
    for (const auto& r : reports) worst = std::max(worst, emit(r, g.json));
    return worst;
  }
  if (*cohomology) return guarded("cohomology", g.json, [&] { return cmd_cohomology(g, cohomology_file); });
  if (*simple) return guarded("simple", g.json, [&] { return cmd_simple(g, simple_file); });
  if (*mu)
    return guarded("mu", g.json, [&] {
      if (*table_opt) mu_args.table = table_n;
      return cmd_mu(g, mu_args);
    });
  if (*trees)
    return guarded("trees", g.json, [&] {
      if (*count_opt) tree_args.count = count_n;
      if (*list_opt) tree_args.list = list_n;
      return cmd_trees(g, tree_args);
    });
  if (*words) return guarded("words", g.json, [&] { return cmd_words(g, word_args); });
  if (*witt) return guarded("witt", g.json, [&] { return cmd_witt(g, witt_n, witt_cap); });
  if (*cat) return guarded("catalog", g.json, [&] { return cmd_catalog(g, cat_action, cat_names); });
  return kUsage;
}
