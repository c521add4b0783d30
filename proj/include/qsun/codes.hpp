#pragma once

// Rank-metric codes, the Singleton-like bound, the matrix representation of
// F_{q^l}, and lifting to constant-dimension subspace codes.

#include <cstdint>
#include <vector>

#include "qsun/bigint.hpp"
#include "qsun/matrix.hpp"
#include "qsun/subspace.hpp"

namespace qsun {

/// A set of equal-shape matrices. Words are kept sorted; duplicates throw.
class RankMetricCode {
 public:
  RankMetricCode(Field field, std::size_t rows, std::size_t cols, std::vector<Matrix> words);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::vector<Matrix>& words() const { return words_; }
  std::size_t size() const { return words_.size(); }

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Matrix> words_;
};

/// Equal-dimension subspaces of a common ambient, without repeats. Members
/// are kept in lexicographic order so indices are canonical.
class ConstantDimensionFamily {
 public:
  ConstantDimensionFamily(Field field, std::size_t ambient_dim, std::size_t member_dim,
                          std::vector<Subspace> members);

  const Field& field() const { return field_; }
  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t member_dim() const { return member_dim_; }
  const std::vector<Subspace>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  const Subspace& operator[](std::size_t i) const { return members_[i]; }
  /// Index of s, if present.
  std::optional<std::size_t> find(const Subspace& s) const;

  friend bool operator==(const ConstantDimensionFamily&, const ConstantDimensionFamily&) = default;

 private:
  Field field_;
  std::size_t ambient_dim_;
  std::size_t member_dim_;
  std::vector<Subspace> members_;
};

std::size_t rank_distance(const Matrix& a, const Matrix& b);

/// Minimum of rank(A - B) over distinct words. Needs at least two words.
std::size_t min_rank_distance(const RankMetricCode& code);

/// q^{max(k,l) (min(k,l) - d + 1)} for 1 <= d <= min(k, l).
BigInt singleton_bound(std::size_t rows, std::size_t cols, std::size_t d, std::uint64_t q);

struct MrdVerdict {
  bool is_mrd;
  std::size_t size;
  BigInt bound;
  std::size_t d;
};

/// Compares |C| against the Singleton-like bound at d = d_R(C). Throws
/// std::logic_error if a code ever exceeds the bound.
MrdVerdict is_mrd(const RankMetricCode& code);

/// {c_0 I + c_1 A + ... + c_{l-1} A^{l-1}} with A the companion matrix of the
/// smallest monic irreducible of degree l over `base`.
RankMetricCode field_matrix_rep(const Field& base, std::size_t ell);

/// {rowspace [I | A] : A in C}; k = rows of C, n = rows + cols.
ConstantDimensionFamily lift(const RankMetricCode& code);

/// dim U + dim V - 2 dim(U n V).
std::size_t subspace_distance(const Subspace& u, const Subspace& v);

/// Minimum pairwise subspace distance of a family with at least two members.
std::size_t min_subspace_distance(const ConstantDimensionFamily& family);

}  // namespace qsun
