#pragma once

// JSON forms of fields, matrices, subspaces, families, codes and
// certificates. Key order is preserved on output so documents diff cleanly.
//
//   field:    {"p": 2, "m": 2, "irreducible": [1, 1, 1]}   constant term first
//   entry:    integer in [0, p) when m = 1, else [c_0, ..., c_{m-1}]
//   matrix:   array of rows
//   subspace: canonical basis rows
//   family:   {"field", "ambient_dim", "member_dim", "subspaces", "provenance"?}

#include <optional>
#include <stdexcept>

#include "json.hpp"
#include "qsun/codes.hpp"
#include "qsun/sunflower.hpp"

namespace qsun {

using Json = nlohmann::ordered_json;

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct FamilyDocument {
  ConstantDimensionFamily family;
  /// {"construction": ..., "parameters": {...}} when the family came from a builder.
  std::optional<Json> provenance;
};

Json field_to_json(const Field& field);
Field field_from_json(const Json& j, FieldOptions options = {});

Json elem_to_json(const Field& field, Elem e);
Elem elem_from_json(const Field& field, const Json& j);

Json matrix_to_json(const Matrix& m);
/// `cols` is required to type empty matrices; rows must all have that length.
Matrix matrix_from_json(const Field& field, std::size_t cols, const Json& j);

Json subspace_to_json(const Subspace& s);
Subspace subspace_from_json(const Field& field, std::size_t n, const Json& j);

/// Members are emitted in the family's (lexicographic) order.
Json family_to_json(const FamilyDocument& doc);
FamilyDocument family_from_json(const Json& j, FieldOptions options = {});

Json code_to_json(const RankMetricCode& code);
RankMetricCode code_from_json(const Json& j, FieldOptions options = {});

Json witness_to_json(const SunflowerWitness& w);
Json certificate_to_json(const FreenessCertificate& cert);

}  // namespace qsun
