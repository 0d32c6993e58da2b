#include "trialg/cli/json_codec.hpp"

#include <string>

#include "trialg/error.hpp"

namespace trialg {

json encode(const Scalar& s) { return s.to_string(); }

json encode(const Vector& v) {
  json out = json::array();
  for (const auto& s : v) out.push_back(encode(s));
  return out;
}

json encode(const Matrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(encode(m.row(r)));
  return out;
}

json encode(const Subspace& s) {
  json out = json::array();
  for (const auto& v : s.basis()) out.push_back(encode(v));
  return out;
}

json encode(const LinearEndo& f) { return encode(f.matrix()); }

Scalar decode_scalar(Field field, const json& j) {
  if (j.is_number_integer()) return field.from_int(j.get<long long>());
  if (j.is_string()) return field.parse(j.get<std::string>());
  throw InvalidParameter("expected an integer or a \"num/den\" string, got " + j.dump());
}

Vector decode_vector(Field field, const json& j, std::size_t expected_size) {
  if (!j.is_array()) throw InvalidParameter("expected an array, got " + j.dump());
  if (j.size() != expected_size) {
    throw InvalidParameter("expected " + std::to_string(expected_size) + " entries, got " +
                           std::to_string(j.size()));
  }
  Vector v;
  v.reserve(j.size());
  for (const auto& e : j) v.push_back(decode_scalar(field, e));
  return v;
}

Matrix decode_matrix(Field field, const json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows) {
    throw InvalidParameter("expected a " + std::to_string(rows) + "x" + std::to_string(cols) +
                           " matrix as a list of rows");
  }
  std::vector<Vector> row_vectors;
  for (const auto& r : j) row_vectors.push_back(decode_vector(field, r, cols));
  return Matrix::from_rows(field, cols, row_vectors);
}

}  // namespace trialg
