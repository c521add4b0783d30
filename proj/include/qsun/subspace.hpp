#pragma once

// Subspaces of F_q^n held by their canonical RREF basis, so that value
// equality is subspace equality.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "qsun/bigint.hpp"
#include "qsun/matrix.hpp"

namespace qsun {

class Subspace {
 public:
  /// Span of the given rows, each of length n.
  static Subspace from_rows(const Field& field, std::size_t n,
                            const std::vector<std::vector<Elem>>& rows);
  /// Row space of m.
  static Subspace row_space(const Matrix& m);
  static Subspace zero(const Field& field, std::size_t n);
  static Subspace full(const Field& field, std::size_t n);

  const Field& field() const { return basis_.field(); }
  std::size_t ambient_dim() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  /// Canonical basis: RREF, no zero rows.
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(std::span<const Elem> v) const;
  /// True iff other is a subspace of *this.
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }
  /// Lexicographic on the canonical basis read row-major (dimension first).
  friend std::strong_ordering operator<=>(const Subspace& a, const Subspace& b) {
    return a.basis_ <=> b.basis_;
  }

 private:
  explicit Subspace(Rref r) : basis_(std::move(r.reduced)), pivots_(std::move(r.pivots)) {}
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

Subspace sum(std::span<const Subspace> spaces);
Subspace sum(std::initializer_list<Subspace> spaces);

/// Computed as the complement of the sum of complements.
Subspace intersect(std::span<const Subspace> spaces);
Subspace intersect(std::initializer_list<Subspace> spaces);

/// Perp under the standard dot product sum u_i v_i.
Subspace orthocomplement(const Subspace& u);

struct SubspaceFilter {
  std::optional<Subspace> through;        ///< member must contain this
  std::optional<Subspace> disjoint_from;  ///< member must meet this trivially
  std::optional<Subspace> within;         ///< member must lie inside this
};

struct EnumerationOptions {
  std::uint64_t max_count = 1'000'000;
};

/// All k-subspaces of F_q^n passing the filter, sorted lexicographically.
/// Throws LimitExceeded when the raw candidate count (the Gaussian binomial
/// over the ambient, or over `within` when given) is above the cap.
std::vector<Subspace> enumerate_subspaces(const Field& field, std::size_t n, std::size_t k,
                                          const SubspaceFilter& filter = {},
                                          EnumerationOptions options = {});

/// Number of k-subspaces of F_q^n.
BigInt gaussian_binomial(std::uint64_t q, std::uint64_t n, std::uint64_t k);

class LimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qsun
