#pragma once

// JSON encoding of exact values. Scalars travel as strings ("3", "-1/2", or a
// residue) so nothing is lost; decoding also accepts JSON integers.

#include "json.hpp"

#include "trialg/exactlin/matrix.hpp"
#include "trialg/exactlin/subspace.hpp"
#include "trialg/maps/linear_endo.hpp"

namespace trialg {

using json = nlohmann::json;

json encode(const Scalar& s);
json encode(const Vector& v);
/// List of rows.
json encode(const Matrix& m);
/// List of canonical basis vectors.
json encode(const Subspace& s);
json encode(const LinearEndo& f);

/// Decoders throw InvalidParameter on malformed input or wrong sizes.
Scalar decode_scalar(Field field, const json& j);
Vector decode_vector(Field field, const json& j, std::size_t expected_size);
Matrix decode_matrix(Field field, const json& j, std::size_t rows, std::size_t cols);

}  // namespace trialg
