#include "qsun/json_io.hpp"

#include <string>

namespace qsun {

namespace {

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

std::uint64_t as_uint(const Json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0)) {
    throw ParseError(std::string(what) + " must be a non-negative integer");
  }
  return j.get<std::uint64_t>();
}

std::uint32_t as_u32(const Json& j, const char* what) {
  const auto v = as_uint(j, what);
  if (v > 0xFFFFFFFFu) throw ParseError(std::string(what) + " out of range");
  return static_cast<std::uint32_t>(v);
}

}  // namespace

Json field_to_json(const Field& field) {
  Json j;
  j["p"] = field.characteristic();
  j["m"] = field.degree();
  j["irreducible"] = field.modulus();
  return j;
}

Field field_from_json(const Json& j, FieldOptions options) {
  const auto p = as_u32(member(j, "p"), "p");
  const auto m = as_u32(member(j, "m"), "m");
  std::optional<std::vector<std::uint32_t>> poly;
  if (j.contains("irreducible") && !j.at("irreducible").is_null()) {
    const Json& arr = j.at("irreducible");
    if (!arr.is_array()) throw ParseError("irreducible must be an array");
    std::vector<std::uint32_t> c;
    for (const auto& e : arr) c.push_back(as_u32(e, "polynomial coefficient"));
    poly = std::move(c);
  }
  try {
    return Field::make(p, m, poly, options);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

Json elem_to_json(const Field& field, Elem e) {
  if (field.is_prime()) return e;
  return field.coords(e);
}

Elem elem_from_json(const Field& field, const Json& j) {
  if (field.is_prime()) {
    const auto v = as_uint(j, "matrix entry");
    if (v >= field.order()) throw ParseError("matrix entry outside [0, p)");
    return static_cast<Elem>(v);
  }
  if (!j.is_array() || j.size() != field.degree()) {
    throw ParseError("extension-field entries must be arrays of length m");
  }
  std::vector<std::uint32_t> c;
  for (const auto& x : j) c.push_back(as_u32(x, "entry coordinate"));
  try {
    return field.from_coords(c);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Elem e : m.row(r)) row.push_back(elem_to_json(m.field(), e));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const Field& field, std::size_t cols, const Json& j) {
  if (!j.is_array()) throw ParseError("matrix must be an array of rows");
  std::vector<std::vector<Elem>> rows;
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != cols) {
      throw ParseError("matrix row must have exactly " + std::to_string(cols) + " entries");
    }
    auto& out = rows.emplace_back();
    for (const auto& e : row) out.push_back(elem_from_json(field, e));
  }
  return Matrix(field, cols, rows);
}

Json subspace_to_json(const Subspace& s) { return matrix_to_json(s.basis()); }

Subspace subspace_from_json(const Field& field, std::size_t n, const Json& j) {
  return Subspace::row_space(matrix_from_json(field, n, j));
}

Json family_to_json(const FamilyDocument& doc) {
  const auto& f = doc.family;
  Json j;
  j["field"] = field_to_json(f.field());
  j["ambient_dim"] = f.ambient_dim();
  j["member_dim"] = f.member_dim();
  Json subs = Json::array();
  for (const auto& s : f.members()) subs.push_back(subspace_to_json(s));
  j["subspaces"] = std::move(subs);
  if (doc.provenance) j["provenance"] = *doc.provenance;
  return j;
}

FamilyDocument family_from_json(const Json& j, FieldOptions options) {
  const Field field = field_from_json(member(j, "field"), options);
  const auto n = static_cast<std::size_t>(as_uint(member(j, "ambient_dim"), "ambient_dim"));
  const auto k = static_cast<std::size_t>(as_uint(member(j, "member_dim"), "member_dim"));
  if (k > n) throw ParseError("member_dim exceeds ambient_dim");
  const Json& subs = member(j, "subspaces");
  if (!subs.is_array()) throw ParseError("subspaces must be an array");
  std::vector<Subspace> members;
  for (const auto& s : subs) members.push_back(subspace_from_json(field, n, s));
  std::optional<Json> provenance;
  if (j.contains("provenance")) provenance = j.at("provenance");
  try {
    return {ConstantDimensionFamily(field, n, k, std::move(members)), std::move(provenance)};
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

Json code_to_json(const RankMetricCode& code) {
  Json j;
  j["field"] = field_to_json(code.field());
  j["shape"] = {code.rows(), code.cols()};
  Json words = Json::array();
  for (const auto& w : code.words()) words.push_back(matrix_to_json(w));
  j["words"] = std::move(words);
  return j;
}

RankMetricCode code_from_json(const Json& j, FieldOptions options) {
  const Field field = field_from_json(member(j, "field"), options);
  const Json& shape = member(j, "shape");
  if (!shape.is_array() || shape.size() != 2) throw ParseError("shape must be [rows, cols]");
  const auto rows = static_cast<std::size_t>(as_uint(shape[0], "shape"));
  const auto cols = static_cast<std::size_t>(as_uint(shape[1], "shape"));
  const Json& words = member(j, "words");
  if (!words.is_array()) throw ParseError("words must be an array");
  std::vector<Matrix> ws;
  for (const auto& w : words) {
    Matrix m = matrix_from_json(field, cols, w);
    if (m.rows() != rows) throw ParseError("code word has the wrong number of rows");
    ws.push_back(std::move(m));
  }
  try {
    return RankMetricCode(field, rows, cols, std::move(ws));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

Json witness_to_json(const SunflowerWitness& w) {
  Json j;
  j["indices"] = w.indices;
  j["kernel"] = subspace_to_json(w.kernel);
  j["kind"] = std::string(to_string(w.kind));
  j["dims"] = {{"kernel_dim", w.dims.kernel_dim}, {"member_dim", w.dims.member_dim}, {"sum_dim", w.dims.sum_dim}};
  return j;
}

Json certificate_to_json(const FreenessCertificate& cert) {
  Json j;
  j["mode"] = std::string(to_string(cert.mode));
  j["s"] = cert.s;
  j["verdict"] = cert.is_free() ? "free" : "witness";
  j["witness"] = cert.witness ? witness_to_json(*cert.witness) : Json(nullptr);
  j["subsets_examined"] = cert.subsets_examined;
  if (cert.kernel_constraint) j["kernel_constraint"] = subspace_to_json(*cert.kernel_constraint);
  return j;
}

}  // namespace qsun
