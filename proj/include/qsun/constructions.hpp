#pragma once

// Concrete objects: the three-subspace inclusion-exclusion counterexample,
// the planes-through-a-point family and the set-like sunflower inside it,
// and the dual lifted family that is set-like sunflower-free.

#include <optional>
#include <vector>

#include "qsun/codes.hpp"
#include "qsun/subspace.hpp"

namespace qsun {

struct InclExclReport {
  Subspace u, v, w;
  std::size_t dim_uv, dim_uw, dim_vw;
  std::size_t dim_uvw;  ///< triple intersection
  std::size_t sum_dim;
  /// dim U + dim V + dim W - pairwise + triple, as a signed value.
  long naive_rhs;
  bool pairwise_equal;  ///< all three pairwise intersections coincide
};

/// U = <e1, e2>, V = <e1, e3>, W = <e1, e2 + e3> in F_q^3.
InclExclReport incl_excl_demo(const Field& field);

/// The q^2 + 1 two-spaces of F_q^4 given by F_{q^2}-lines of F_{q^2}^2:
/// rowspace [I | M] for M in the matrix representation of F_{q^2}, plus
/// rowspace [0 | I]. Sorted.
std::vector<Subspace> field_reduction_spread(const Field& field);

/// q^2 + 1 three-spaces of F_q^5 through the 1-space T, pairwise meeting in
/// exactly T: the spread above, placed on the coordinates complementary to
/// T's pivot and joined with T. If `first` is given (a 3-space through T),
/// the spread is moved by a linear map of the quotient so that `first` is a
/// member, and it is returned in position 0. Otherwise position 0 holds the
/// lexicographically smallest member and the rest follow sorted.
std::vector<Subspace> build_spread_through(const Field& field, const Subspace& t,
                                           const std::optional<Subspace>& first = std::nullopt);

struct IkExample {
  Subspace t;
  std::vector<Subspace> planes;  ///< planes[0] is the plane contributing all its lines
  ConstantDimensionFamily family;
};

/// All 2-spaces of planes[0] plus, in every other plane, the 2-spaces missing
/// T; size q^4 + q^2 + q + 1. T = <e1>. Over F_2 planes[0] is
/// example4_plane().
IkExample build_ik_family(const Field& field);

/// rowspace of (1,0,0,0,0), (0,0,1,1,0), (0,0,0,0,1) over F_2.
Subspace example4_plane(const Field& field);

struct Example4 {
  Subspace s1, s2, s3, t, plane;
};

/// The three 2-spaces of example4_plane() through T = <e1>. F_2 only.
Example4 example4_triple(const Field& field);

struct ThmConstruction {
  Field field;
  std::size_t ell;
  std::size_t n;
  std::size_t k;  ///< n - ell
  RankMetricCode code;
  /// generators[i] = [I | A | [A^2]_1 | 0] for A = code.words()[i].
  std::vector<Matrix> generators;
  /// {rowspace(G)^perp}, sorted.
  ConstantDimensionFamily family;
};

/// Requires n >= 2 ell + 1; the zero block has width n - 2 ell - 1.
ThmConstruction build_thm_family(const Field& field, std::size_t ell, std::size_t n);

struct RankChainReport {
  std::size_t pairs_checked = 0;
  std::size_t triples_checked = 0;
  std::size_t pair_rank = 0;    ///< common stacked rank of generator pairs
  std::size_t triple_rank = 0;  ///< common stacked rank of generator triples
  std::size_t quotient_identities = 0;  ///< ordered pairs with (B-A)^-1 (B^2-A^2) = B+A
  std::size_t nonzero_columns = 0;      ///< ordered pairs with [C-B]_1 != 0
  std::size_t pair_intersection_dim = 0;
  std::size_t triple_intersection_dim = 0;
};

/// Replays the rank computations behind the freeness argument. Throws
/// std::logic_error on the first mismatch.
RankChainReport verify_thm_rank_chain(const ThmConstruction& thm);

}  // namespace qsun
