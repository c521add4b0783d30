#include "qsun/poly.hpp"

#include <stdexcept>

namespace qsun {

namespace {

void trim(std::vector<Elem>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

// Monic polynomial of `degree` whose lower coefficients are the base-q digits
// of `index`, most significant digit on the constant term. Iterating index
// upward therefore walks the constant-term-first lexicographic order.
Poly monic_by_index(const Field& field, int degree, std::uint64_t index) {
  const std::uint32_t q = field.order();
  std::vector<Elem> c(static_cast<std::size_t>(degree) + 1, 0);
  c[static_cast<std::size_t>(degree)] = field.one();
  for (int i = degree - 1; i >= 0; --i) {
    c[static_cast<std::size_t>(i)] = static_cast<Elem>(index % q);
    index /= q;
  }
  return Poly(field, std::move(c));
}

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

Poly::Poly(Field field, std::vector<Elem> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  for (Elem c : coeffs_) {
    if (!field_.contains(c)) throw std::invalid_argument("polynomial coefficient outside field");
  }
  trim(coeffs_);
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (!(a.field() == b.field())) throw std::invalid_argument("polynomials over different fields");
  if (a.is_zero() || b.is_zero()) return Poly(a.field(), {});
  const Field& f = a.field();
  std::vector<Elem> r(a.coeffs().size() + b.coeffs().size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) {
      r[i + j] = f.add(r[i + j], f.mul(a.coeffs()[i], b.coeffs()[j]));
    }
  }
  return Poly(f, std::move(r));
}

Poly poly_mod(const Poly& a, const Poly& b) {
  if (!(a.field() == b.field())) throw std::invalid_argument("polynomials over different fields");
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  const Field& f = a.field();
  std::vector<Elem> r = a.coeffs();
  const auto& d = b.coeffs();
  const Elem lead_inv = f.inv(b.leading());
  while (r.size() >= d.size()) {
    const Elem factor = f.mul(r.back(), lead_inv);
    const std::size_t shift = r.size() - d.size();
    for (std::size_t i = 0; i < d.size(); ++i) {
      r[shift + i] = f.sub(r[shift + i], f.mul(factor, d[i]));
    }
    trim(r);
  }
  return Poly(f, std::move(r));
}

bool is_irreducible(const Poly& f) {
  const int n = f.degree();
  if (n < 1) return false;
  const std::uint32_t q = f.field().order();
  for (int d = 1; d <= n / 2; ++d) {
    const std::uint64_t count = ipow(q, d);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      if (poly_mod(f, monic_by_index(f.field(), d, idx)).is_zero()) return false;
    }
  }
  return true;
}

Poly smallest_monic_irreducible(const Field& field, int degree) {
  if (degree < 1) throw std::invalid_argument("irreducible degree must be >= 1");
  const std::uint64_t count = ipow(field.order(), degree);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    Poly candidate = monic_by_index(field, degree, idx);
    if (is_irreducible(candidate)) return candidate;
  }
  // Irreducibles of every degree exist over every finite field.
  throw std::logic_error("no irreducible polynomial found");
}

}  // namespace qsun
