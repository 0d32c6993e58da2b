#include "trialg/algebra/families.hpp"

#include <functional>
#include <map>
#include <numeric>
#include <string>

#include "trialg/error.hpp"

namespace trialg {
namespace {

using Position = std::pair<std::size_t, std::size_t>;

std::string unit_label(std::size_t i, std::size_t j, std::size_t n) {
  if (n < 10) return "e" + std::to_string(i + 1) + std::to_string(j + 1);
  return "e" + std::to_string(i + 1) + "," + std::to_string(j + 1);
}

std::string matrix_family_name(const std::string& stem, Field field) {
  return stem + "(" + field.name() + ")";
}

// Span of the given matrix units, closed under multiplication. Labels use the
// global matrix size `n` so split blocks keep their original names.
FDAlgebra pattern_algebra(Field field, std::size_t n, const std::vector<Position>& positions,
                          std::string name) {
  const std::size_t dim = positions.size();
  std::map<Position, std::size_t> index;
  for (std::size_t k = 0; k < dim; ++k) index[positions[k]] = k;

  StructureConstants table(dim, std::vector<Vector>(dim, zero_vector(field, dim)));
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = 0; b < dim; ++b) {
      const auto [i, j] = positions[a];
      const auto [k, l] = positions[b];
      if (j != k) continue;
      auto it = index.find({i, l});
      if (it == index.end()) throw InvalidParameter("matrix pattern is not multiplicatively closed");
      table[a][b][it->second] = field.one();
    }

  std::vector<std::string> labels;
  for (const auto& [i, j] : positions) labels.push_back(unit_label(i, j, n));

  std::optional<Vector> unit = zero_vector(field, dim);
  for (std::size_t k = 0; k < dim; ++k) {
    if (positions[k].first == positions[k].second) (*unit)[k] = field.one();
  }
  // Only the 1x1 case (the field itself) is idempotent-free among these.
  const bool trivial_idempotents = dim == 1;
  return make_algebra(field, std::move(labels), std::move(table), std::move(unit),
                      trivial_idempotents, std::move(name));
}

// Splits the pattern algebra on {0..n-1} given by `allowed` at index `split`.
TriangularAlgebra split_pattern(Field field, std::size_t n, std::size_t split,
                                const std::function<bool(std::size_t, std::size_t)>& allowed,
                                const std::string& a_name, const std::string& b_name,
                                const std::string& name) {
  std::vector<Position> pa, pm, pb;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!allowed(i, j)) continue;
      if (i < split && j < split) pa.emplace_back(i, j);
      else if (i < split && j >= split) pm.emplace_back(i, j);
      else if (i >= split && j >= split) pb.emplace_back(i, j);
      else throw InvalidParameter("pattern is not block upper triangular at the split");
    }
  FDAlgebra A = pattern_algebra(field, n, pa, a_name);
  FDAlgebra B = pattern_algebra(field, n, pb, b_name);

  std::map<Position, std::size_t> m_index;
  for (std::size_t k = 0; k < pm.size(); ++k) m_index[pm[k]] = k;
  const std::size_t dm = pm.size();
  LeftAction left(pa.size(), std::vector<Vector>(dm, zero_vector(field, dm)));
  RightAction right(dm, std::vector<Vector>(pb.size(), zero_vector(field, dm)));
  for (std::size_t a = 0; a < pa.size(); ++a)
    for (std::size_t k = 0; k < dm; ++k) {
      if (pa[a].second != pm[k].first) continue;
      left[a][k][m_index.at({pa[a].first, pm[k].second})] = field.one();
    }
  for (std::size_t k = 0; k < dm; ++k)
    for (std::size_t b = 0; b < pb.size(); ++b) {
      if (pm[k].second != pb[b].first) continue;
      right[k][b][m_index.at({pm[k].first, pb[b].second})] = field.one();
    }
  std::vector<std::string> m_labels;
  for (const auto& [i, j] : pm) m_labels.push_back(unit_label(i, j, n));
  Bimodule M = make_bimodule(A, B, std::move(m_labels), std::move(left), std::move(right));

  MatrixLayout layout{n, {}};
  for (const auto* part : {&pa, &pm, &pb})
    layout.positions.insert(layout.positions.end(), part->begin(), part->end());
  return make_triangular(std::move(A), std::move(M), std::move(B),
                         TriangularOptions{false, name, std::move(layout)});
}

}  // namespace

FDAlgebra scalar_algebra(Field field) {
  StructureConstants table{{Vector{field.one()}}};
  return make_algebra(field, {"1"}, std::move(table), Vector{field.one()}, true, field.name());
}

FDAlgebra trunc_poly(std::size_t N, Field field) {
  if (N < 1) throw InvalidParameter("truncation degree must be at least 1");
  StructureConstants table(N, std::vector<Vector>(N, zero_vector(field, N)));
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; i + j < N; ++j) table[i][j][i + j] = field.one();
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < N; ++i) {
    labels.push_back(i == 0 ? "1" : (i == 1 ? "x" : "x^" + std::to_string(i)));
  }
  return make_algebra(field, std::move(labels), std::move(table), unit_vector(field, N, 0), true,
                      field.name() + "[x]/(x^" + std::to_string(N) + ")");
}

FDAlgebra full_matrix_algebra(std::size_t n, Field field) {
  if (n < 1) throw InvalidParameter("matrix size must be positive");
  std::vector<Position> positions;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) positions.emplace_back(i, j);
  return pattern_algebra(field, n, positions,
                         matrix_family_name("M_" + std::to_string(n), field));
}

FDAlgebra upper_triangular_algebra(std::size_t n, Field field) {
  if (n < 1) throw InvalidParameter("matrix size must be positive");
  std::vector<Position> positions;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) positions.emplace_back(i, j);
  return pattern_algebra(field, n, positions,
                         matrix_family_name("T_" + std::to_string(n), field));
}

TriangularAlgebra upper_triangular(std::size_t n, Field field, std::size_t split) {
  if (n < 2) throw InvalidParameter("T_n requires n >= 2");
  if (split < 1 || split > n - 1) throw InvalidParameter("split must lie in 1..n-1");
  return split_pattern(
      field, n, split, [](std::size_t i, std::size_t j) { return i <= j; },
      matrix_family_name("T_" + std::to_string(split), field),
      matrix_family_name("T_" + std::to_string(n - split), field),
      matrix_family_name("T_" + std::to_string(n), field));
}

TriangularAlgebra block_upper(const std::vector<std::size_t>& dims, std::size_t split_k,
                              Field field) {
  if (dims.size() < 2) throw InvalidParameter("block upper triangular needs at least two blocks");
  if (split_k < 1 || split_k > dims.size() - 1) {
    throw InvalidParameter("block split must lie in 1..m-1");
  }
  std::vector<std::size_t> block_of;
  for (std::size_t b = 0; b < dims.size(); ++b) {
    if (dims[b] == 0) throw InvalidParameter("block sizes must be positive");
    block_of.insert(block_of.end(), dims[b], b);
  }
  const std::size_t n = block_of.size();
  const std::size_t split = std::accumulate(dims.begin(), dims.begin() + static_cast<long>(split_k),
                                            std::size_t{0});
  auto tuple = [](auto first, auto last) {
    std::string s = "(";
    for (auto it = first; it != last; ++it) s += (it == first ? "" : ",") + std::to_string(*it);
    return s + ")";
  };
  const std::string all = tuple(dims.begin(), dims.end());
  const auto cut = dims.begin() + static_cast<long>(split_k);
  return split_pattern(
      field, n, split, [&](std::size_t i, std::size_t j) { return block_of[i] <= block_of[j]; },
      matrix_family_name("B" + tuple(dims.begin(), cut), field),
      matrix_family_name("B" + tuple(cut, dims.end()), field),
      matrix_family_name("B" + all + "[k=" + std::to_string(split_k) + "]", field));
}

TriangularAlgebra poly_triangular(std::size_t N, Field field) {
  FDAlgebra A = trunc_poly(N, field);
  Bimodule M = regular_bimodule(A);
  FDAlgebra B = A;
  return make_triangular(std::move(A), std::move(M), std::move(B),
                         TriangularOptions{false,
                                           "Trian(" + field.name() + "[x]/(x^" +
                                               std::to_string(N) + "), regular, same)",
                                           std::nullopt});
}

N3Fixture fixture_n3(Field field) {
  const Scalar one = field.one();
  StructureConstants table(3, std::vector<Vector>(3, zero_vector(field, 3)));
  table[0][2][1] = one;  // e12 e23 = e13
  FDAlgebra n3 = make_algebra(field, {"e12", "e13", "e23"}, std::move(table), std::nullopt, false,
                              "N_3(" + field.name() + ")");
  Matrix sigma(field, 3, 3), theta(field, 3, 3);
  sigma(0, 0) = -one;
  sigma(1, 1) = one;
  sigma(2, 2) = -one;
  theta(0, 0) = one;
  theta(2, 2) = one;
  return {std::move(n3), LinearEndo(std::move(sigma)), LinearEndo(std::move(theta))};
}

Vector TrianAA0Fixture::element(const std::vector<long long>& a,
                                const std::vector<long long>& b) const {
  const Field field = algebra.field();
  Vector x = algebra.zero();
  for (std::size_t i = 0; i < a.size() && i < N; ++i) x[i] = field.from_int(a[i]);
  for (std::size_t i = 0; i < b.size() && i < N; ++i) x[N + i] = field.from_int(b[i]);
  return x;
}

Vector TrianAA0Fixture::first_slot(const Vector& x) const { return slice(x, 0, N); }
Vector TrianAA0Fixture::second_slot(const Vector& x) const { return slice(x, N, N); }

TrianAA0Fixture fixture_trian_AA0(std::size_t N, Field field) {
  if (N < 2) throw InvalidParameter("trian_AA0 requires N >= 2");
  const std::size_t n = 2 * N;
  StructureConstants table(n, std::vector<Vector>(n, zero_vector(field, n)));
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; i + j < N; ++j) {
      table[i][j][i + j] = field.one();          // (x^i, 0)(x^j, 0)
      table[i][N + j][N + i + j] = field.one();  // (x^i, 0)(0, x^j)
    }
  std::vector<std::string> labels;
  const FDAlgebra poly = trunc_poly(N, field);
  for (const auto& l : poly.labels()) labels.push_back("(" + l + ",0)");
  for (const auto& l : poly.labels()) labels.push_back("(0," + l + ")");
  FDAlgebra alg = make_algebra(field, std::move(labels), std::move(table), std::nullopt, false,
                               "Trian(" + poly.name() + ", same, 0)");

  Matrix sa(field, N, N);
  for (std::size_t i = 0; i < N; ++i) sa(i, i) = field.from_int(i % 2 == 0 ? 1 : -1);
  Matrix s(field, n, n), d(field, n, n), D(field, n, n);
  for (std::size_t i = 0; i < N; ++i) {
    s(i, i) = sa(i, i);
    s(N + i, N + i) = sa(i, i);
    d(N + i, i) = sa(i, i);
    D(i, i) = field.one();
    D(N + i, i) = sa(i, i);
    D(N + i, N + i) = field.one();
  }
  return {std::move(alg), N, LinearEndo(std::move(sa)), LinearEndo(std::move(s)),
          LinearEndo(std::move(d)), LinearEndo(std::move(D))};
}

}  // namespace trialg
