#include "lsawb/document.hpp"

#include <algorithm>
#include <json.hpp>

#include "lsawb/error.hpp"

namespace lsawb {

using nlohmann::json;

namespace {

std::string line_col(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  const std::size_t end = std::min(byte == 0 ? 0 : byte - 1, text.size());
  for (std::size_t t = 0; t < end; ++t) {
    if (text[t] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return std::to_string(line) + ":" + std::to_string(col);
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::string msg = e.what();
    if (auto p = msg.find("syntax error"); p != std::string::npos) msg = msg.substr(p);
    throw ParseError(msg, line_col(text, e.byte));
  }
}

std::size_t read_index(const json& v, const std::string& path, std::size_t dim) {
  if (!v.is_number_integer()) throw ParseError("expected an integer index", path);
  const auto x = v.get<long long>();
  if (x < 1 || static_cast<std::size_t>(x) > dim)
    throw ParseError("index " + std::to_string(x) + " outside 1.." + std::to_string(dim), path);
  return static_cast<std::size_t>(x - 1);
}

Scalar read_scalar(const json& v, const std::string& path) {
  if (!v.is_string()) throw ParseError("expected a rational string", path);
  try {
    return parse_scalar(v.get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError(e.what(), path);
  }
}

AlgebraDocument document_from_json(const json& j, const std::string& prefix) {
  if (!j.is_object()) throw ParseError("expected an object", prefix.empty() ? "$" : prefix);
  auto at = [&](const std::string& key) { return prefix.empty() ? key : prefix + "." + key; };
  for (auto it = j.begin(); it != j.end(); ++it) {
    static const char* known[] = {"name", "kind", "dim", "params", "table"};
    if (std::none_of(std::begin(known), std::end(known), [&](const char* k) { return it.key() == k; }))
      throw ParseError("unknown key", at(it.key()));
  }
  for (const char* key : {"name", "kind", "dim", "table"})
    if (!j.contains(key)) throw ParseError("missing key", at(key));

  AlgebraDocument doc;
  if (!j["name"].is_string()) throw ParseError("expected a string", at("name"));
  doc.name = j["name"].get<std::string>();
  if (!j["kind"].is_string()) throw ParseError("expected a string", at("kind"));
  try {
    doc.kind = parse_kind(j["kind"].get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError(e.what(), at("kind"));
  }
  if (!j["dim"].is_number_integer() || j["dim"].get<long long>() < 1)
    throw ParseError("dim must be an integer >= 1", at("dim"));
  doc.dim = static_cast<std::size_t>(j["dim"].get<long long>());

  if (j.contains("params")) {
    const json& p = j["params"];
    if (!p.is_object()) throw ParseError("expected an object", at("params"));
    for (auto it = p.begin(); it != p.end(); ++it) doc.params[it.key()] = read_scalar(it.value(), at("params." + it.key()));
  }

  const json& t = j["table"];
  if (!t.is_array()) throw ParseError("expected an array", at("table"));
  for (std::size_t r = 0; r < t.size(); ++r) {
    const std::string path = at("table[" + std::to_string(r) + "]");
    const json& e = t[r];
    if (!e.is_object()) throw ParseError("expected an object", path);
    for (auto it = e.begin(); it != e.end(); ++it)
      if (it.key() != "i" && it.key() != "j" && it.key() != "k" && it.key() != "c")
        throw ParseError("unknown key", path + "." + it.key());
    for (const char* key : {"i", "j", "k", "c"})
      if (!e.contains(key)) throw ParseError("missing key", path + "." + key);
    StructureConstant sc{read_index(e["i"], path + ".i", doc.dim), read_index(e["j"], path + ".j", doc.dim),
                         read_index(e["k"], path + ".k", doc.dim), read_scalar(e["c"], path + ".c")};
    if (doc.kind == Kind::Lie && sc.i >= sc.j)
      throw ParseError("lie tables list [e_i, e_j] with i < j only", path);
    doc.table.push_back(std::move(sc));
  }
  // Canonical table: merged, zero-free, sorted.
  doc.table = Algebra(doc.name, doc.dim, std::move(doc.table)).entries();
  return doc;
}

json document_to_json(const AlgebraDocument& doc) {
  json j;
  j["name"] = doc.name;
  j["kind"] = to_string(doc.kind);
  j["dim"] = doc.dim;
  json params = json::object();
  for (const auto& [k, v] : doc.params) params[k] = to_string(v);
  j["params"] = params;
  json table = json::array();
  const Algebra canonical(doc.name, doc.dim, doc.table);
  for (const auto& e : canonical.entries())
    table.push_back({{"i", e.i + 1}, {"j", e.j + 1}, {"k", e.k + 1}, {"c", to_string(e.c)}});
  j["table"] = table;
  return j;
}

}  // namespace

std::string to_string(Kind k) {
  switch (k) {
    case Kind::Lsa:
      return "lsa";
    case Kind::Rsa:
      return "rsa";
    case Kind::Lie:
      return "lie";
    default:
      return "plain";
  }
}

Kind parse_kind(std::string_view text) {
  if (text == "lsa") return Kind::Lsa;
  if (text == "rsa") return Kind::Rsa;
  if (text == "lie") return Kind::Lie;
  if (text == "plain") return Kind::Plain;
  throw ParseError("unknown kind '" + std::string(text) + "' (expected lsa, rsa, lie or plain)");
}

AlgebraDocument parse_document(std::string_view text) { return document_from_json(parse_json(text), ""); }

std::vector<AlgebraDocument> parse_document_list(std::string_view text) {
  const json j = parse_json(text);
  if (!j.is_object() || !j.contains("algebras") || !j["algebras"].is_array())
    throw ParseError("expected an object with an \"algebras\" array", "$");
  std::vector<AlgebraDocument> out;
  const json& list = j["algebras"];
  for (std::size_t r = 0; r < list.size(); ++r) out.push_back(document_from_json(list[r], "algebras[" + std::to_string(r) + "]"));
  return out;
}

std::string serialize(const AlgebraDocument& doc) { return document_to_json(doc).dump(2) + "\n"; }

std::string serialize(const std::vector<AlgebraDocument>& docs) {
  json list = json::array();
  for (const auto& d : docs) list.push_back(document_to_json(d));
  json j;
  j["algebras"] = list;
  return j.dump(2) + "\n";
}

Algebra to_algebra(const AlgebraDocument& doc) {
  if (doc.kind != Kind::Lie) return Algebra(doc.name, doc.dim, doc.table);
  std::vector<StructureConstant> full;
  for (const auto& e : doc.table) {
    full.push_back(e);
    full.push_back({e.j, e.i, e.k, -e.c});
  }
  return Algebra(doc.name, doc.dim, std::move(full));
}

LieAlgebra to_lie(const AlgebraDocument& doc) {
  if (doc.kind != Kind::Lie) throw DomainError("document '" + doc.name + "' is not of kind lie");
  const Algebra a = to_algebra(doc);
  return LieAlgebra(doc.name, doc.dim, a.entries());
}

AlgebraDocument to_document(const Algebra& a, Kind kind, std::map<std::string, Scalar> params) {
  AlgebraDocument doc{a.name(), kind, a.dim(), std::move(params), a.entries()};
  if (kind == Kind::Lie) {
    doc.table.clear();
    for (const auto& e : a.entries())
      if (e.i < e.j) doc.table.push_back(e);
  }
  return doc;
}

AlgebraDocument to_document(const LieAlgebra& g, std::map<std::string, Scalar> params) {
  return to_document(g.table(), Kind::Lie, std::move(params));
}

}  // namespace lsawb
