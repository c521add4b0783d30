#pragma once

// Finite fields F_q, q = p^m, in polynomial basis over F_p.
//
// Elements are encoded as integers in [0, q): the coordinate vector
// (c_0, ..., c_{m-1}) with respect to 1, x, ..., x^{m-1} maps to
// sum c_i p^i. All arithmetic goes through precomputed tables, which keeps
// the matrix kernels branch-free. Fields are immutable and cheap to copy.

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qsun {

/// Raw element code. Valid only together with the Field it came from.
using Elem = std::uint8_t;

/// Hard ceiling imposed by the 8-bit element encoding.
inline constexpr std::uint32_t kMaxFieldOrder = 256;
/// Default ceiling; larger orders need FieldOptions::max_order.
inline constexpr std::uint32_t kDefaultMaxFieldOrder = 16;

struct FieldOptions {
  std::uint32_t max_order = kDefaultMaxFieldOrder;
};

class FieldElem;

class Field {
 public:
  /// F_p or F_{p^m}. Without `irreducible`, picks the lexicographically
  /// smallest monic irreducible of degree m (coefficients compared constant
  /// term first). For m = 1 that is x, so F_p carries the polynomial [0, 1].
  /// `irreducible` may be given with or without its leading 1.
  static Field make(std::uint32_t p, std::uint32_t m,
                    std::optional<std::vector<std::uint32_t>> irreducible = std::nullopt,
                    FieldOptions options = {});

  /// Splits a prime power q and calls make(p, m).
  static Field of_order(std::uint32_t q, FieldOptions options = {});

  std::uint32_t characteristic() const { return t_->p; }
  std::uint32_t degree() const { return t_->m; }
  std::uint32_t order() const { return t_->q; }
  /// Monic modulus, constant term first, length m + 1.
  const std::vector<std::uint32_t>& modulus() const { return t_->modulus; }
  bool is_prime() const { return t_->m == 1; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }

  Elem add(Elem a, Elem b) const { return t_->add[index(a, b)]; }
  Elem sub(Elem a, Elem b) const { return t_->add[index(a, t_->neg[b])]; }
  Elem mul(Elem a, Elem b) const { return t_->mul[index(a, b)]; }
  Elem neg(Elem a) const { return t_->neg[a]; }
  /// Throws std::domain_error on zero.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  /// Integer in [0, p) as an element of the prime subfield.
  Elem from_int(std::int64_t v) const;
  /// Polynomial-basis coordinates, constant term first.
  std::vector<std::uint32_t> coords(Elem a) const;
  Elem from_coords(const std::vector<std::uint32_t>& c) const;
  bool contains(std::uint32_t code) const { return code < t_->q; }

  FieldElem elem(Elem code) const;

  std::string describe() const;

  /// Two fields are the same iff p, m and the modulus agree.
  friend bool operator==(const Field& a, const Field& b);

 private:
  struct Tables {
    std::uint32_t p = 0;
    std::uint32_t m = 0;
    std::uint32_t q = 0;
    std::vector<std::uint32_t> modulus;
    std::vector<Elem> add;
    std::vector<Elem> mul;
    std::vector<Elem> neg;
    std::vector<Elem> inv;
  };

  explicit Field(std::shared_ptr<const Tables> t) : t_(std::move(t)) {}
  std::size_t index(Elem a, Elem b) const {
    return static_cast<std::size_t>(a) * t_->q + b;
  }
  static Field build(std::uint32_t p, std::vector<std::uint32_t> modulus);

  std::shared_ptr<const Tables> t_;
};

/// An element bound to its field; mixing fields throws std::invalid_argument.
class FieldElem {
 public:
  FieldElem(Field field, Elem code);

  const Field& field() const { return field_; }
  Elem code() const { return code_; }
  std::vector<std::uint32_t> coords() const { return field_.coords(code_); }
  bool is_zero() const { return code_ == 0; }

  FieldElem inv() const { return {field_, field_.inv(code_)}; }
  FieldElem operator-() const { return {field_, field_.neg(code_)}; }

  friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator-(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator/(const FieldElem& a, const FieldElem& b);
  friend bool operator==(const FieldElem& a, const FieldElem& b);

 private:
  Field field_;
  Elem code_;
};

enum class FieldOp { add, sub, mul, div, inv, neg };

/// Single entry point for scalar arithmetic; `b` is ignored for inv and neg.
FieldElem field_arith(const FieldElem& a, const FieldElem& b, FieldOp op);

bool is_prime(std::uint64_t n);

/// Returns (p, m) with q = p^m, or nullopt if q is not a prime power.
std::optional<std::pair<std::uint32_t, std::uint32_t>> split_prime_power(std::uint64_t q);

}  // namespace qsun
