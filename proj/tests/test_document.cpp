#include <doctest.h>

#include <fstream>
#include <regex>
#include <set>
#include <sstream>

#include "lsawb/catalog.hpp"
#include "lsawb/document.hpp"
#include "lsawb/error.hpp"
#include "oracles.hpp"

using namespace lsawb;

namespace {

std::string read_file(const char* path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string where_of(std::string_view text) {
  try {
    parse_document(text);
  } catch (const ParseError& e) {
    return e.where();
  }
  return "<no error>";
}

const char* kSmall = R"({"name": "t", "kind": "plain", "dim": 2, "table": [{"i": 1, "j": 2, "k": 2, "c": "3/4"}]})";

}  // namespace

TEST_CASE("round trip") {
  for (const auto& doc : catalog()) {
    INFO(doc.name);
    CHECK(parse_document(serialize(doc)) == doc);
    if (doc.kind == Kind::Lie) {
      CHECK(to_document(to_lie(doc), doc.params) == doc);
    } else {
      CHECK(to_document(to_algebra(doc), doc.kind, doc.params) == doc);
    }
  }
  const auto d = parse_document(kSmall);
  CHECK(d.dim == 2);
  REQUIRE(d.table.size() == 1);
  CHECK(d.table[0] == StructureConstant{0, 1, 1, rational(3, 4)});
  CHECK(d.params.empty());
  CHECK(serialize(d).back() == '\n');
  CHECK(parse_document_list(serialize(catalog())) == catalog());
}

TEST_CASE("the serialized catalog is the data file byte for byte") {
  const auto file = read_file(LSAWB_CATALOG_PATH);
  REQUIRE_FALSE(file.empty());
  CHECK(serialize(catalog()) == file);
}

TEST_CASE("tables are canonicalized") {
  const auto d = parse_document(
      R"({"name": "t", "kind": "plain", "dim": 2, "table": [
          {"i": 2, "j": 1, "k": 1, "c": "1"}, {"i": 1, "j": 1, "k": 1, "c": "2/4"},
          {"i": 2, "j": 1, "k": 1, "c": "-1"}, {"i": 1, "j": 1, "k": 1, "c": "1/2"}]})");
  REQUIRE(d.table.size() == 1);
  CHECK(d.table[0] == StructureConstant{0, 0, 0, 1});
}

TEST_CASE("errors carry a location") {
  const std::regex line_col(R"(\d+:\d+)");
  CHECK(std::regex_match(where_of("{\"name\": \"x\",\n  \"dim\": }"), line_col));
  CHECK(where_of("{\"name\": \"x\",\n  \"dim\": }") == "2:10");
  CHECK(std::regex_match(where_of("{"), line_col));

  CHECK(where_of(R"({"name": "t", "kind": "plain", "dim": 0, "table": []})") == "dim");
  CHECK(where_of(R"({"name": "t", "kind": "plain", "dim": -2, "table": []})") == "dim");
  CHECK(where_of(R"({"name": "t", "kind": "group", "dim": 1, "table": []})") == "kind");
  CHECK(where_of(R"({"name": "t", "kind": "plain", "dim": 1})") == "table");
  CHECK(where_of(R"({"name": "t", "kind": "plain", "dim": 1, "table": [], "extra": 1})") == "extra");
  CHECK(where_of(R"({"name": "t", "kind": "plain", "dim": 2, "table": [{"i": 1, "j": 1, "k": 1, "c": "1/0"}]})") ==
        "table[0].c");
  CHECK(where_of(R"({"name": "t", "kind": "plain", "dim": 2, "table": [{"i": 1, "j": 1, "k": 1, "c": 1}]})") ==
        "table[0].c");
  CHECK(where_of(R"({"name": "t", "kind": "plain", "dim": 2, "table": [{"i": 1, "j": 1, "k": 1, "c": "x"}]})") ==
        "table[0].c");
  CHECK(where_of(R"({"name": "t", "kind": "plain", "dim": 2, "table": [{}]})").rfind("table[0].", 0) == 0);
  CHECK(where_of(R"({"name": "t", "kind": "plain", "dim": 2, "table": [{"i": 3, "j": 1, "k": 1, "c": "1"}]})") ==
        "table[0].i");
  CHECK(where_of(R"({"name": "t", "kind": "lie", "dim": 2, "table": [{"i": 2, "j": 1, "k": 1, "c": "1"}]})") ==
        "table[0]");
  CHECK_THROWS_AS(parse_document_list(R"({"algebras": 3})"), ParseError);
  CHECK_THROWS_AS(parse_kind("group"), ParseError);
  CHECK_THROWS_AS(to_lie(parse_document(kSmall)), DomainError);
}

TEST_CASE("lie documents") {
  const auto h = catalog_entry("heisenberg-1");
  CHECK(h.kind == Kind::Lie);
  CHECK(h.table.size() == 1);
  const auto g = to_lie(h);
  CHECK(g.bracket(0, 1) == unit_vector(3, 2));
  CHECK(g.bracket(1, 0) == Scalar(-1) * unit_vector(3, 2));
  // the algebra view is the antisymmetric table
  const auto a = to_algebra(h);
  CHECK(a.product(1, 0) == Scalar(-1) * unit_vector(3, 2));
  CHECK(a.entries().size() == 2);
}

TEST_CASE("parametric generators agree with the catalog") {
  for (const char* l : {"-1", "1/2", "1"}) {
    const std::string name = std::string("A_1,") + l;
    INFO(name);
    const auto& doc = catalog_entry(name);
    CHECK(doc.params.at("lambda") == parse_scalar(l));
    CHECK(a1_lambda(parse_scalar(l)) == to_algebra(doc));
  }
  for (std::size_t n = 3; n <= 5; ++n) {
    const auto name = "incomplete-simple-" + std::to_string(n);
    CHECK(incomplete_simple(n) == catalog_algebra(name));
    CHECK(catalog_entry(name).params.at("n") == static_cast<long>(n));
  }
  CHECK(heisenberg(1) == catalog_lie("heisenberg-1"));
  CHECK(heisenberg(2) == catalog_lie("heisenberg-2"));
  CHECK(strictly_upper(3) == catalog_algebra("strict-upper-3"));
  CHECK(matrix_algebra(2) == catalog_algebra("matrix-units-2"));

  // the generators against their defining formulas
  const Scalar l = rational(-2, 3);
  const auto a = a1_lambda(l);
  CHECK(a.product(0, 0) == (l + 1) * unit_vector(3, 0));
  CHECK(a.product(0, 1) == unit_vector(3, 1));
  CHECK(a.product(0, 2) == l * unit_vector(3, 2));
  CHECK(a.product(1, 2) == unit_vector(3, 0));
  CHECK(a.product(2, 1) == unit_vector(3, 0));
  CHECK(a.product(1, 0) == Vector(3));
  const auto s = incomplete_simple(6);
  for (std::size_t j = 1; j < 6; ++j) {
    CHECK(s.product(0, j) == unit_vector(6, j));
    CHECK(s.product(j, j) == unit_vector(6, 0));
    CHECK(s.product(j, 0) == Vector(6));
  }
  CHECK(s.product(0, 0) == Scalar(2) * unit_vector(6, 0));
  CHECK_THROWS_AS(catalog_entry("no-such-algebra"), DomainError);
}

TEST_CASE("catalog names are unique and in file order") {
  const auto names = catalog_names();
  CHECK(names.front() == "lsa-rsa-2d");
  CHECK(std::set<std::string>(names.begin(), names.end()).size() == names.size());
  for (std::size_t i = 0; i < names.size(); ++i) CHECK(catalog()[i].name == names[i]);
  for (const auto& a : catalog_lsas()) CHECK(is_left_symmetric(a));
}
