#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "lsawb/algebra.hpp"
#include "lsawb/lie.hpp"

namespace lsawb {

/// Which defining identity a document claims.
enum class Kind { Lsa, Rsa, Lie, Plain };

std::string to_string(Kind k);
/// Throws ParseError for anything but lsa, rsa, lie, plain.
Kind parse_kind(std::string_view text);

/// Textual algebra description, as read from or written to JSON:
///
///   {"name": "A_2", "kind": "lsa", "dim": 3, "params": {"lambda": "1/2"},
///    "table": [{"i": 1, "j": 1, "k": 1, "c": "3/2"}, ...]}
///
/// Indices are 1-based in the text and 0-based here. For kind "lie" the table
/// lists [e_i, e_j] for i < j only.
struct AlgebraDocument {
  std::string name;
  Kind kind = Kind::Plain;
  std::size_t dim = 0;
  std::map<std::string, Scalar> params;
  std::vector<StructureConstant> table;

  friend bool operator==(const AlgebraDocument&, const AlgebraDocument&) = default;
};

/// Parses one document. Syntax errors carry "line:column"; semantic errors
/// carry a JSON path such as "table[2].c". The table is canonicalized.
AlgebraDocument parse_document(std::string_view text);

/// Parses {"algebras": [document, ...]}.
std::vector<AlgebraDocument> parse_document_list(std::string_view text);

/// Canonical JSON: sorted keys, two-space indentation, trailing newline.
std::string serialize(const AlgebraDocument& doc);
std::string serialize(const std::vector<AlgebraDocument>& docs);

/// The product table (for kind "lie", the antisymmetric bracket table).
Algebra to_algebra(const AlgebraDocument& doc);
/// Requires kind "lie".
LieAlgebra to_lie(const AlgebraDocument& doc);

AlgebraDocument to_document(const Algebra& a, Kind kind, std::map<std::string, Scalar> params = {});
AlgebraDocument to_document(const LieAlgebra& g, std::map<std::string, Scalar> params = {});

}  // namespace lsawb
