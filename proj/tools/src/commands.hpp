#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lsawb/document.hpp"
#include "report.hpp"

namespace lsawb::cli {

struct GlobalOptions {
  std::uint64_t seed = kDefaultSeed;
  std::size_t samples = kDefaultSamples;
  std::size_t degree_cap = 3;
  bool json = false;
};

/// "catalog:NAME", "-" for stdin, or a path.
AlgebraDocument load_document(const std::string& source);

Report cmd_check(const GlobalOptions& g, const std::string& source, std::optional<Kind> kind_override);
Report cmd_analyze_one(const GlobalOptions& g, const std::string& source);
/// Results in input order regardless of thread count.
std::vector<Report> cmd_analyze(const GlobalOptions& g, const std::vector<std::string>& sources,
                                std::size_t threads);
Report cmd_cohomology(const GlobalOptions& g, const std::string& source);
Report cmd_simple(const GlobalOptions& g, const std::string& source);

struct MuArgs {
  std::vector<std::size_t> pair;        // n k
  std::optional<std::size_t> table;     // n_max
  std::vector<std::size_t> unimodal;    // lo [hi]
  std::vector<std::size_t> asymptotic;  // lo hi
  std::vector<std::string> formula;     // kind parameter
};
Report cmd_mu(const GlobalOptions& g, const MuArgs& args);

struct TreeArgs {
  std::optional<std::size_t> count;
  std::optional<std::size_t> list;
  std::vector<std::string> graft;  // t1 t2
  std::vector<std::string> assoc;  // t1 t2 t3
  std::vector<std::string> bullet;
  std::vector<std::string> circ;
};
Report cmd_trees(const GlobalOptions& g, const TreeArgs& args);

struct WordArgs {
  std::vector<std::string> prod;   // x y
  std::vector<std::string> assoc;  // x y z
  bool pretty = false;
};
Report cmd_words(const GlobalOptions& g, const WordArgs& args);

Report cmd_witt(const GlobalOptions& g, std::size_t nvars, std::size_t cap);

Report cmd_catalog(const GlobalOptions& g, const std::string& action, const std::vector<std::string>& names);

/// Report for an exception escaping a command, with the matching exit code.
Report error_report(const std::string& command, const std::exception& e);

}  // namespace lsawb::cli
