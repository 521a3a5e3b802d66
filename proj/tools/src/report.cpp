#include "report.hpp"

#include <sstream>

namespace lsawb::cli {

std::string vector_text(const Vector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (is_zero(v[i])) continue;
    Scalar c = v[i];
    const bool negative = sgn(c) < 0;
    if (negative) c = -c;
    if (out.empty()) out += negative ? "-" : "";
    else out += negative ? " - " : " + ";
    if (c != 1) out += to_string(c) + "*";
    out += "e" + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

Json vector_json(const Vector& v) {
  Json j = Json::array();
  for (const auto& x : v) j.push_back(to_string(x));
  return j;
}

Json subspace_json(const Subspace& s) {
  Json basis = Json::array();
  std::string span = "span{";
  bool first = true;
  for (const auto& v : s.basis_vectors()) {
    basis.push_back(vector_text(v));
    span += (first ? "" : ", ") + vector_text(v);
    first = false;
  }
  span += "}";
  return {{"dim", s.dim()}, {"basis", basis}, {"span", span}};
}

Json matrix_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

Json triple_json(const Triple& t) { return Json::array({t.i + 1, t.j + 1, t.k + 1}); }

std::string triple_text(const Triple& t) {
  return "(e" + std::to_string(t.i + 1) + ", e" + std::to_string(t.j + 1) + ", e" + std::to_string(t.k + 1) + ")";
}

std::string render_json(const Report& r) {
  const Json doc = {{"command", r.command}, {"exit_code", r.exit_code}, {"result", r.result}};
  return doc.dump(2) + "\n";
}

namespace {

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

bool is_flat_array(const Json& j) {
  for (const auto& e : j)
    if (e.is_structured()) return false;
  return true;
}

void flatten(const Json& j, const std::string& prefix, std::ostringstream& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
  } else if (j.is_array() && is_flat_array(j)) {
    out << prefix << ": [";
    for (std::size_t i = 0; i < j.size(); ++i) out << (i ? ", " : "") << scalar_text(j[i]);
    out << "]\n";
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else {
    out << prefix << ": " << scalar_text(j) << "\n";
  }
}

}  // namespace

std::string render_text(const Report& r) {
  if (!r.text.empty()) return r.text;
  std::ostringstream out;
  flatten(r.result, "", out);
  return out.str();
}

}  // namespace lsawb::cli
