#include "lsawb/repdim.hpp"

#include <string>

#include "lsawb/error.hpp"

namespace lsawb {

namespace {

std::string pair_text(std::size_t i, std::size_t j) {
  return "[e_" + std::to_string(i + 1) + ", e_" + std::to_string(j + 1) + "]";
}

Matrix combine(const std::vector<Matrix>& images, const Vector& x, std::size_t d) {
  Matrix m(d, d);
  for (std::size_t t = 0; t < x.size(); ++t)
    if (!is_zero(x[t])) m += x[t] * images[t];
  return m;
}

bool is_cocycle(const Representation& rep, const Matrix& omega) {
  const std::size_t n = rep.source().dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector lhs = omega * rep.source().bracket(i, j);
      const Vector rhs = rep.image(i) * omega.column(j) - rep.image(j) * omega.column(i);
      if (lhs != rhs) return false;
    }
  return true;
}

}  // namespace

std::optional<std::pair<std::size_t, std::size_t>> bracket_compatibility_violation(
    const LieAlgebra& g, const std::vector<Matrix>& images) {
  const std::size_t n = g.dim();
  if (images.size() != n) throw DimensionError("need one image per basis vector");
  const std::size_t d = images.empty() ? 0 : images.front().rows();
  for (const auto& m : images)
    if (m.rows() != d || m.cols() != d) throw DimensionError("representation images must be square of equal size");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (combine(images, g.bracket(i, j), d) != commutator(images[i], images[j])) return std::make_pair(i, j);
  return std::nullopt;
}

Representation::Representation(LieAlgebra source, std::vector<Matrix> images)
    : source_(std::move(source)), images_(std::move(images)) {
  if (auto v = bracket_compatibility_violation(source_, images_))
    throw IdentityViolation("not a representation: rho" + pair_text(v->first, v->second) +
                                " differs from the commutator of the images",
                            v->first, v->second, v->second);
  degree_ = images_.front().rows();
}

Matrix Representation::act(const Vector& x) const {
  if (x.size() != source_.dim()) throw DimensionError("element has the wrong length");
  return combine(images_, x, degree_);
}

Subspace Representation::kernel() const {
  const std::size_t n = source_.dim();
  Matrix m(degree_ * degree_, n);
  for (std::size_t t = 0; t < n; ++t) {
    const auto& e = images_[t].entries();
    for (std::size_t r = 0; r < e.size(); ++r) m(r, t) = e[r];
  }
  return lsawb::kernel(m);
}

Representation adjoint_representation(const LieAlgebra& g) {
  std::vector<Matrix> images;
  for (std::size_t i = 0; i < g.dim(); ++i) images.push_back(g.ad(i));
  return Representation(g, std::move(images));
}

Representation left_representation(const Algebra& a) {
  std::vector<Matrix> images;
  for (std::size_t i = 0; i < a.dim(); ++i) images.push_back(left_mult(a, i));
  return Representation(commutator_lie(a), std::move(images));
}

CocycleSpaces cocycle_space(const Representation& rep) {
  const std::size_t n = rep.source().dim();
  const std::size_t d = rep.degree();
  auto var = [n](std::size_t r, std::size_t i) { return r * n + i; };
  const std::size_t pairs = n * (n - 1) / 2;
  Matrix eqs(pairs * d, d * n);
  std::size_t row = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t r = 0; r < d; ++r, ++row) {
        // omega([e_i, e_j])_r - (rho(e_i) omega(e_j))_r + (rho(e_j) omega(e_i))_r
        const Vector& br = rep.source().bracket(i, j);
        for (std::size_t t = 0; t < n; ++t)
          if (!is_zero(br[t])) eqs(row, var(r, t)) += br[t];
        for (std::size_t s = 0; s < d; ++s) {
          eqs(row, var(s, j)) -= rep.image(i)(r, s);
          eqs(row, var(s, i)) += rep.image(j)(r, s);
        }
      }
  CocycleSpaces out{kernel(eqs), Subspace(d * n)};
  std::vector<Vector> cob;
  for (std::size_t m = 0; m < d; ++m) {
    Vector w = zero_vector(d * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t r = 0; r < d; ++r) w[var(r, i)] = rep.image(i)(r, m);
    cob.push_back(std::move(w));
  }
  out.b1 = Subspace::span(d * n, cob);
  return out;
}

Algebra lsa_from_cocycle(const Representation& theta, const Matrix& phi) {
  const std::size_t n = theta.source().dim();
  if (theta.degree() != n || phi.rows() != n || phi.cols() != n)
    throw DimensionError("the construction needs a module of the same dimension as the Lie algebra");
  const auto inv = inverse(phi);
  if (!inv) throw DomainError("phi is singular");
  if (!is_cocycle(theta, phi)) throw DomainError("phi is not a 1-cocycle");
  std::vector<StructureConstant> table;
  for (std::size_t i = 0; i < n; ++i) {
    const Matrix l = *inv * theta.image(i) * phi;
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!is_zero(l(k, j))) table.push_back({i, j, k, l(k, j)});
  }
  return Algebra(theta.source().name() + "-lsa", n, std::move(table));
}

Representation faithful_extension(const Representation& theta, const Matrix& omega) {
  const std::size_t n = theta.source().dim();
  const std::size_t d = theta.degree();
  if (omega.rows() != d || omega.cols() != n) throw DimensionError("omega must be a d x n matrix");
  if (!is_cocycle(theta, omega)) throw DomainError("omega is not a 1-cocycle");
  std::vector<Matrix> images;
  for (std::size_t i = 0; i < n; ++i) {
    Matrix m(d + 1, d + 1);
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t c = 0; c < d; ++c) m(r, c) = theta.image(i)(r, c);
      m(r, d) = omega(r, i);
    }
    images.push_back(std::move(m));
  }
  return Representation(theta.source(), std::move(images));
}

std::vector<Matrix> affine_images(const Algebra& a) {
  const std::size_t n = a.dim();
  std::vector<Matrix> images;
  for (std::size_t i = 0; i < n; ++i) {
    const Matrix l = left_mult(a, i);
    Matrix m(n + 1, n + 1);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, c) = l(r, c);
    m(i, n) = 1;
    images.push_back(std::move(m));
  }
  return images;
}

std::optional<std::pair<std::size_t, std::size_t>> affine_violation(const Algebra& a) {
  const std::size_t n = a.dim();
  const auto images = affine_images(a);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector br = a.product(i, j) - a.product(j, i);
      if (combine(images, br, n + 1) != commutator(images[i], images[j])) return std::make_pair(i, j);
    }
  return std::nullopt;
}

Representation affine_embedding(const Algebra& a) {
  if (auto v = affine_violation(a))
    throw IdentityViolation("alpha is not a Lie homomorphism: alpha" + pair_text(v->first, v->second) +
                                " differs from [alpha(e_i), alpha(e_j)]; the table is not left-symmetric",
                            v->first, v->second, v->second);
  return Representation(commutator_lie(a), affine_images(a));
}

Matrix diagonal_derivation(const std::vector<Scalar>& weights) {
  Matrix d(weights.size(), weights.size());
  for (std::size_t i = 0; i < weights.size(); ++i) d(i, i) = weights[i];
  return d;
}

}  // namespace lsawb
