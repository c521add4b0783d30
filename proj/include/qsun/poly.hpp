#pragma once

// Dense univariate polynomials over a Field, constant term first.

#include <vector>

#include "qsun/gf.hpp"

namespace qsun {

class Poly {
 public:
  Poly(Field field, std::vector<Elem> coeffs);

  const Field& field() const { return field_; }
  /// Trimmed: no trailing zeros; the zero polynomial has no coefficients.
  const std::vector<Elem>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == field_.one(); }
  Elem leading() const { return coeffs_.back(); }

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
  }

 private:
  Field field_;
  std::vector<Elem> coeffs_;
};

Poly poly_mul(const Poly& a, const Poly& b);
/// Remainder of a modulo a nonzero b.
Poly poly_mod(const Poly& a, const Poly& b);

/// Trial division by every monic polynomial of degree 1..deg/2.
bool is_irreducible(const Poly& f);

/// Smallest monic irreducible of the given degree, comparing coefficient
/// lists constant term first by element code.
Poly smallest_monic_irreducible(const Field& field, int degree);

}  // namespace qsun
