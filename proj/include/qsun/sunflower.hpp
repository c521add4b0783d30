#pragma once

// Sunflower predicates over subspace families, exhaustive freeness
// verification with certificates, and the q-analog Erdos-Rado bound.
//
// A set-like s-sunflower is s distinct equal-dimension subspaces whose
// pairwise intersections all equal one kernel K. A general-position
// sunflower additionally satisfies dim(S_1 + ... + S_s) = d + s(k - d),
// where d = dim K and k is the member dimension.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qsun/bigint.hpp"
#include "qsun/codes.hpp"
#include "qsun/subspace.hpp"

namespace qsun {

enum class SunflowerKind { set_like, general_position };

std::string_view to_string(SunflowerKind kind);

struct SunflowerDims {
  std::size_t kernel_dim = 0;
  std::size_t member_dim = 0;
  std::size_t sum_dim = 0;

  /// d + s(k - d), the sum dimension a general-position sunflower must reach.
  std::size_t general_position_target(std::size_t s) const {
    return kernel_dim + s * (member_dim - kernel_dim);
  }
  friend bool operator==(const SunflowerDims&, const SunflowerDims&) = default;
};

struct SunflowerWitness {
  std::vector<std::size_t> indices;  ///< strictly increasing
  Subspace kernel;
  SunflowerKind kind;
  SunflowerDims dims;
};

struct FreenessCertificate {
  SunflowerKind mode;
  std::size_t s;
  std::optional<SunflowerWitness> witness;
  /// C(|family|, s) when free; otherwise the lex rank of the witness plus one.
  std::uint64_t subsets_examined = 0;
  /// Set when the search only accepted sunflowers with this kernel.
  std::optional<Subspace> kernel_constraint;

  bool is_free() const { return !witness.has_value(); }
};

/// Common pairwise intersection of the members, if all C(s,2) agree.
/// Requires s >= 3 and distinct equal-dimension members of one ambient.
std::optional<Subspace> setlike_kernel(std::span<const Subspace> members);

struct GpReport {
  bool is_sunflower = false;
  std::optional<Subspace> kernel;
  /// kernel_dim is only meaningful when `kernel` is set.
  SunflowerDims dims;
};

/// Set-like kernel exists and the sum dimension equals d + s(k - d).
GpReport is_gp_sunflower(std::span<const Subspace> members);

struct VerifyOptions {
  unsigned jobs = 1;
  std::uint64_t max_subsets = 100'000'000;
  /// Restrict witnesses to sunflowers with exactly this kernel.
  std::optional<Subspace> kernel;
};

/// Exhaustive search over all s-subsets in lex order of index tuples. Returns
/// the lex-smallest witness or a free verdict; the result does not depend on
/// options.jobs. Throws LimitExceeded when C(|family|, s) exceeds the cap.
FreenessCertificate verify_free(const ConstantDimensionFamily& family, std::size_t s, SunflowerKind mode,
                                const VerifyOptions& options = {});

/// Rechecks a witness against the family from scratch.
bool validate_witness(const ConstantDimensionFamily& family, const SunflowerWitness& witness);

/// The bracket used in the bound: [m]_q = (q^m - 1) / (q - 1).
inline constexpr std::string_view kQIntegerAssumption =
    "[m]_q is taken to be the q-integer (q^m - 1)/(q - 1) = 1 + q + ... + q^(m-1)";

BigInt q_integer(std::uint64_t q, std::uint64_t m);

/// prod_{i=1..k} [i(s-1)]_q. Requires s >= 3, k >= 1, q >= 2.
BigInt erdos_rado_bound_q(std::uint64_t q, std::uint64_t k, std::uint64_t s);

struct ThreeImpliesSReport {
  std::size_t s;
  FreenessCertificate three;
  /// Absent when |family| < s.
  std::optional<FreenessCertificate> at_s;
  /// True when the 3-check found a witness, so nothing follows for s.
  bool vacuous;
  /// False only if 3-free held but an s-sunflower turned up.
  bool consistent;
  std::string note;
};

/// Set-like 3-freeness implies set-like s-freeness; runs both checks.
ThreeImpliesSReport three_implies_s(const ConstantDimensionFamily& family, std::size_t s,
                                    const VerifyOptions& options = {});

BigInt binomial(std::uint64_t n, std::uint64_t k);

}  // namespace qsun
