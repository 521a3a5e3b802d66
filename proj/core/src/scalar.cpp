#include "lsawb/scalar.hpp"

#include "lsawb/error.hpp"

namespace lsawb {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (ch < '0' || ch > '9') return false;
  }
  return true;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && body.front() == '-') body.remove_prefix(1);
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw ParseError("malformed rational '" + std::string(text) + "'");
  }
  Integer d(std::string(den), 10);
  if (sgn(d) == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Scalar q(Integer(std::string(num), 10), d);
  q.canonicalize();
  if (text.front() == '-') q = -q;
  return q;
}

Scalar rational(long num, long den) {
  if (den == 0) throw DomainError("zero denominator");
  Scalar q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Scalar& value) { return value.get_str(10); }

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector unit_vector(std::size_t n, std::size_t index) {
  Vector v(n);
  v.at(index) = 1;
  return v;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v) {
    if (!is_zero(x)) return false;
  }
  return true;
}

Vector operator+(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionError("vector length mismatch");
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vector operator-(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionError("vector length mismatch");
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vector operator*(const Scalar& s, const Vector& v) {
  Vector r(v.size());
  if (is_zero(s)) return r;
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
  return r;
}

Scalar dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionError("vector length mismatch");
  Scalar acc;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!is_zero(a[i]) && !is_zero(b[i])) acc += a[i] * b[i];
  }
  return acc;
}

SampleSource::SampleSource(std::uint64_t seed) : engine_(seed) {}

long SampleSource::integer(long lo, long hi) {
  // Rejection sampling keeps the stream identical across standard libraries.
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = engine_.max() - (engine_.max() % span);
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return lo + static_cast<long>(x % span);
}

Vector SampleSource::vector(std::size_t n, long lo, long hi) {
  Vector v(n);
  for (auto& x : v) x = integer(lo, hi);
  return v;
}

}  // namespace lsawb
