#include "lsawb/catalog.hpp"

#include <algorithm>

#include "catalog_data.hpp"
#include "lsawb/error.hpp"

namespace lsawb {

const std::vector<AlgebraDocument>& catalog() {
  static const std::vector<AlgebraDocument> docs = parse_document_list(detail::kCatalogJson);
  return docs;
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> out;
  for (const auto& d : catalog()) out.push_back(d.name);
  return out;
}

const AlgebraDocument& catalog_entry(std::string_view name) {
  const auto& docs = catalog();
  auto it = std::find_if(docs.begin(), docs.end(), [&](const AlgebraDocument& d) { return d.name == name; });
  if (it == docs.end()) throw DomainError("no catalog entry named '" + std::string(name) + "'");
  return *it;
}

Algebra catalog_algebra(std::string_view name) { return to_algebra(catalog_entry(name)); }
LieAlgebra catalog_lie(std::string_view name) { return to_lie(catalog_entry(name)); }

std::vector<Algebra> catalog_lsas() {
  std::vector<Algebra> out;
  for (const auto& d : catalog())
    if (d.kind == Kind::Lsa) out.push_back(to_algebra(d));
  return out;
}

Algebra a1_lambda(const Scalar& lambda) {
  return Algebra("A_1," + to_string(lambda), 3,
                 {{0, 0, 0, lambda + 1}, {0, 1, 1, 1}, {0, 2, 2, lambda}, {1, 2, 0, 1}, {2, 1, 0, 1}});
}

Algebra incomplete_simple(std::size_t n) {
  if (n < 2) throw DomainError("the incomplete simple family starts at n = 2");
  std::vector<StructureConstant> t{{0, 0, 0, 2}};
  for (std::size_t j = 1; j < n; ++j) {
    t.push_back({0, j, j, 1});
    t.push_back({j, j, 0, 1});
  }
  return Algebra("incomplete-simple-" + std::to_string(n), n, std::move(t));
}

LieAlgebra heisenberg(std::size_t m) {
  if (m < 1) throw DomainError("Heisenberg algebras need m >= 1");
  std::vector<StructureConstant> t;
  for (std::size_t i = 0; i < m; ++i) {
    t.push_back({i, m + i, 2 * m, 1});
    t.push_back({m + i, i, 2 * m, -1});
  }
  return LieAlgebra("heisenberg-" + std::to_string(m), 2 * m + 1, std::move(t));
}

LieAlgebra standard_filiform(std::size_t n) {
  if (n < 3) throw DomainError("filiform algebras need n >= 3");
  std::vector<StructureConstant> t;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    t.push_back({0, i, i + 1, 1});
    t.push_back({i, 0, i + 1, -1});
  }
  return LieAlgebra("filiform-" + std::to_string(n), n, std::move(t));
}

Algebra strictly_upper(std::size_t m) {
  if (m < 2) throw DomainError("strictly upper triangular algebras need m >= 2");
  std::vector<std::pair<std::size_t, std::size_t>> basis;
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t q = p + 1; q < m; ++q) basis.emplace_back(p, q);
  auto index = [&](std::size_t p, std::size_t q) {
    return static_cast<std::size_t>(std::find(basis.begin(), basis.end(), std::make_pair(p, q)) - basis.begin());
  };
  std::vector<StructureConstant> t;
  for (std::size_t x = 0; x < basis.size(); ++x)
    for (std::size_t y = 0; y < basis.size(); ++y)
      if (basis[x].second == basis[y].first) t.push_back({x, y, index(basis[x].first, basis[y].second), 1});
  return Algebra("strict-upper-" + std::to_string(m), basis.size(), std::move(t));
}

Algebra matrix_algebra(std::size_t m) {
  if (m < 1) throw DomainError("matrix algebras need m >= 1");
  std::vector<StructureConstant> t;
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t q = 0; q < m; ++q)
      for (std::size_t s = 0; s < m; ++s) t.push_back({p * m + q, q * m + s, p * m + s, 1});
  return Algebra("matrix-units-" + std::to_string(m), m * m, std::move(t));
}

}  // namespace lsawb
