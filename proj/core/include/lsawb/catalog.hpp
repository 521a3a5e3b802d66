#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "lsawb/algebra.hpp"
#include "lsawb/document.hpp"
#include "lsawb/lie.hpp"

namespace lsawb {

/// Every named algebra shipped with the library, in file order. Loaded once
/// from the embedded catalog data file.
const std::vector<AlgebraDocument>& catalog();

std::vector<std::string> catalog_names();

/// Throws DomainError for an unknown name.
const AlgebraDocument& catalog_entry(std::string_view name);
Algebra catalog_algebra(std::string_view name);
LieAlgebra catalog_lie(std::string_view name);

/// Catalog entries whose kind is lsa.
std::vector<Algebra> catalog_lsas();

// Parametric families.

/// e1e1 = (l+1)e1, e1e2 = e2, e1e3 = l e3, e2e3 = e1, e3e2 = e1
Algebra a1_lambda(const Scalar& lambda);
/// e1e1 = 2e1, e1ej = ej, ejej = e1 for 2 <= j <= n; n >= 2
Algebra incomplete_simple(std::size_t n);
/// Basis x_1..x_m, y_1..y_m, z with [x_i, y_i] = z.
LieAlgebra heisenberg(std::size_t m);
/// [x_1, x_i] = x_{i+1} for 2 <= i <= n-1.
LieAlgebra standard_filiform(std::size_t n);
/// Strictly upper triangular m x m matrices, basis E_pq (p < q) in row order.
Algebra strictly_upper(std::size_t m);
/// All m x m matrices, basis E_pq in row-major order.
Algebra matrix_algebra(std::size_t m);

}  // namespace lsawb
