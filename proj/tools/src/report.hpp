#pragma once

#include "json.hpp"

#include <optional>
#include <string>
#include <vector>

#include "lsawb/algebra.hpp"
#include "lsawb/matrix.hpp"
#include "lsawb/subspace.hpp"

namespace lsawb::cli {

using Json = nlohmann::json;

/// Exit statuses shared by every subcommand.
enum ExitCode : int { kOk = 0, kPropertyFailure = 1, kUsage = 2, kInternal = 3 };

struct Report {
  Report() = default;
  explicit Report(std::string cmd, int code = kOk) : command(std::move(cmd)), exit_code(code) {}

  std::string command;
  int exit_code = kOk;
  Json result = Json::object();
  /// Plain-text rendering; empty means "flatten result".
  std::string text;
};

/// "2*e1 - 1/2*e3"; "0" for the zero vector.
std::string vector_text(const Vector& v);
Json vector_json(const Vector& v);
/// {"dim": d, "basis": [...], "span": "span{...}"}
Json subspace_json(const Subspace& s);
Json matrix_json(const Matrix& m);
Json triple_json(const Triple& t);
std::string triple_text(const Triple& t);

/// Whole report as sorted-key JSON (trailing newline).
std::string render_json(const Report& r);
/// "key.sub: value" lines.
std::string render_text(const Report& r);

}  // namespace lsawb::cli
