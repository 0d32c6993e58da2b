#include "trialg/algebra/triangular.hpp"

#include <stdexcept>

#include "trialg/error.hpp"
#include "trialg/exactlin/subspace.hpp"

namespace trialg {

std::size_t TriangularAlgebra::block_offset(Block b) const noexcept {
  switch (b) {
    case Block::A: return 0;
    case Block::M: return a_.dim();
    case Block::B: return a_.dim() + m_.dim();
  }
  return 0;
}

std::size_t TriangularAlgebra::block_dim(Block b) const noexcept {
  switch (b) {
    case Block::A: return a_.dim();
    case Block::M: return m_.dim();
    case Block::B: return b_.dim();
  }
  return 0;
}

Vector TriangularAlgebra::embed(const Vector& a, const Vector& m, const Vector& b) const {
  if (a.size() != a_.dim() || m.size() != m_.dim() || b.size() != b_.dim()) {
    throw std::invalid_argument("block coordinate length mismatch");
  }
  Vector x = a;
  x.insert(x.end(), m.begin(), m.end());
  x.insert(x.end(), b.begin(), b.end());
  return x;
}

Vector TriangularAlgebra::embed(Block block, const Vector& coords) const {
  if (coords.size() != block_dim(block)) throw std::invalid_argument("block length mismatch");
  Vector x = t_.zero();
  const std::size_t off = block_offset(block);
  for (std::size_t i = 0; i < coords.size(); ++i) x[off + i] = coords[i];
  return x;
}

Vector TriangularAlgebra::project(Block block, const Vector& x) const {
  if (x.size() != dim()) throw std::invalid_argument("element length mismatch");
  return slice(x, block_offset(block), block_dim(block));
}

namespace {

// Columns: one per algebra basis element, holding its action on every m_k.
Matrix action_matrix(std::size_t algebra_dim, const Bimodule& M, bool left) {
  Matrix m(M.field(), M.dim() * M.dim(), algebra_dim);
  for (std::size_t i = 0; i < algebra_dim; ++i)
    for (std::size_t k = 0; k < M.dim(); ++k) {
      const Vector& img = left ? M.left_basis_action(i, k) : M.right_basis_action(k, i);
      for (std::size_t r = 0; r < M.dim(); ++r) m(k * M.dim() + r, i) = img[r];
    }
  return m;
}

}  // namespace

std::vector<Vector> left_annihilator(const FDAlgebra& A, const Bimodule& M) {
  return kernel_basis(action_matrix(A.dim(), M, true)).basis();
}

std::vector<Vector> right_annihilator(const FDAlgebra& B, const Bimodule& M) {
  return kernel_basis(action_matrix(B.dim(), M, false)).basis();
}

TriangularAlgebra make_triangular(FDAlgebra A, Bimodule M, FDAlgebra B,
                                  TriangularOptions options) {
  if (!A.is_unital() || !B.is_unital()) {
    throw InvalidParameter("triangular assembly requires unital A and B");
  }
  if (M.dim() == 0) throw ZeroModule();
  if (A.field() != B.field() || A.field() != M.field()) {
    throw InvalidParameter("A, M, B over different fields");
  }
  if (M.dim_left() != A.dim() || M.dim_right() != B.dim()) {
    throw InvalidParameter("bimodule tables do not match A and B");
  }

  const auto left_ann = left_annihilator(A, M);
  const auto right_ann = right_annihilator(B, M);
  if (!options.allow_unfaithful) {
    if (!left_ann.empty()) throw NotFaithful(Side::left, A.format(left_ann.front()));
    if (!right_ann.empty()) throw NotFaithful(Side::right, B.format(right_ann.front()));
  }

  const Field field = A.field();
  const std::size_t da = A.dim(), dm = M.dim(), db = B.dim();
  const std::size_t n = da + dm + db;
  const std::size_t om = da, ob = da + dm;

  StructureConstants table(n, std::vector<Vector>(n, zero_vector(field, n)));
  auto place = [&](std::size_t i, std::size_t j, std::size_t offset, const Vector& v) {
    for (std::size_t k = 0; k < v.size(); ++k) table[i][j][offset + k] = v[k];
  };
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j) place(i, j, 0, A.basis_product(i, j));
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t k = 0; k < dm; ++k) place(i, om + k, om, M.left_basis_action(i, k));
  for (std::size_t k = 0; k < dm; ++k)
    for (std::size_t j = 0; j < db; ++j) place(om + k, ob + j, om, M.right_basis_action(k, j));
  for (std::size_t i = 0; i < db; ++i)
    for (std::size_t j = 0; j < db; ++j) place(ob + i, ob + j, ob, B.basis_product(i, j));

  std::vector<std::string> labels;
  for (const auto& l : A.labels()) labels.push_back(l);
  for (const auto& l : M.labels()) labels.push_back(l);
  for (const auto& l : B.labels()) labels.push_back(l);

  // Labels must be unique across blocks; disambiguate when A, M, B reuse names.
  bool clash = false;
  for (std::size_t i = 0; i < n && !clash; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (labels[i] == labels[j]) {
        clash = true;
        break;
      }
  if (clash) {
    for (std::size_t i = 0; i < n; ++i) {
      const char* prefix = i < om ? "A:" : (i < ob ? "M:" : "B:");
      labels[i] = prefix + labels[i];
    }
  }

  Vector unit = concat(concat(A.one(), zero_vector(field, dm)), B.one());
  std::string name = options.name.empty()
                         ? "Trian(" + A.name() + ", M, " + B.name() + ")"
                         : options.name;
  FDAlgebra T = make_algebra(field, std::move(labels), std::move(table), unit, false, name);

  TriangularAlgebra tri(std::move(A), std::move(M), std::move(B), std::move(T));
  tri.p_ = tri.embed(tri.a_.one(), tri.m_.zero(), zero_vector(field, db));
  tri.q_ = tri.embed(zero_vector(field, da), tri.m_.zero(), tri.b_.one());
  tri.faithful_left_ = left_ann.empty();
  tri.faithful_right_ = right_ann.empty();
  if (options.layout) {
    if (options.layout->positions.size() != n) {
      throw InvalidParameter("matrix layout does not cover the basis");
    }
    tri.layout_ = std::move(options.layout);
  }
  return tri;
}

}  // namespace trialg
