#include "trialg/algebra/center.hpp"

#include "trialg/error.hpp"
#include "trialg/maps/predicates.hpp"

namespace trialg {
namespace {

Subspace kernel_of_stack(const std::vector<Matrix>& blocks, Field field, std::size_t cols) {
  RowReducer reducer(field, cols);
  for (const auto& m : blocks)
    for (std::size_t r = 0; r < m.rows(); ++r) reducer.insert(m.row(r));
  return kernel_basis(reducer);
}

Subspace project_span(const TriangularAlgebra& T, Block block, const Subspace& s) {
  std::vector<Vector> images;
  for (const auto& v : s.basis()) images.push_back(T.project(block, v));
  return Subspace::span(T.field(), T.block_dim(block), images);
}

// Kernel of (a, b) -> (a m_k - nu(m_k) b)_k; nu given by images of the M basis.
Subspace block_kernel(const TriangularAlgebra& T, const std::vector<Vector>& nu_images) {
  const auto& M = T.M();
  const std::size_t da = T.A().dim(), db = T.B().dim(), dm = M.dim();
  Matrix sys(T.field(), dm * dm, da + db);
  for (std::size_t k = 0; k < dm; ++k) {
    for (std::size_t i = 0; i < da; ++i) {
      const Vector& am = M.left_basis_action(i, k);
      for (std::size_t r = 0; r < dm; ++r) sys(k * dm + r, i) = am[r];
    }
    for (std::size_t j = 0; j < db; ++j) {
      const Vector mb = M.right_act(nu_images[k], T.B().basis_element(j));
      for (std::size_t r = 0; r < dm; ++r) sys(k * dm + r, da + j) = -mb[r];
    }
  }
  return kernel_basis(sys);
}

// Solves for y in `unknown_dim` coordinates with lhs(y) = rhs_k for every M-basis
// index k, where lhs is linear and given by its action on unit vectors.
template <class Lhs, class Rhs>
std::optional<Vector> solve_intertwiner(const TriangularAlgebra& T, std::size_t unknown_dim,
                                        Lhs lhs, Rhs rhs) {
  const std::size_t dm = T.M().dim();
  Matrix sys(T.field(), dm * dm, unknown_dim);
  Vector b = zero_vector(T.field(), dm * dm);
  for (std::size_t k = 0; k < dm; ++k) {
    for (std::size_t u = 0; u < unknown_dim; ++u) {
      const Vector col = lhs(k, unit_vector(T.field(), unknown_dim, u));
      for (std::size_t r = 0; r < dm; ++r) sys(k * dm + r, u) = col[r];
    }
    const Vector target = rhs(k);
    for (std::size_t r = 0; r < dm; ++r) b[k * dm + r] = target[r];
  }
  return solve_linear(sys, b);
}

}  // namespace

Subspace center_of(const FDAlgebra& A) {
  std::vector<Matrix> blocks;
  for (std::size_t i = 0; i < A.dim(); ++i) {
    const Vector e = A.basis_element(i);
    blocks.push_back(A.right_multiplication(e) - A.left_multiplication(e));
  }
  return kernel_of_stack(blocks, A.field(), A.dim());
}

Subspace sigma_center_of(const FDAlgebra& A, const LinearEndo& sigma) {
  std::vector<Matrix> blocks;
  for (std::size_t i = 0; i < A.dim(); ++i) {
    blocks.push_back(A.left_multiplication(sigma.image(i)) -
                     A.right_multiplication(A.basis_element(i)));
  }
  return kernel_of_stack(blocks, A.field(), A.dim());
}

CenterData center(const TriangularAlgebra& T) {
  const Subspace oracle = center_of(T.algebra());

  std::vector<Vector> identity_nu;
  for (std::size_t k = 0; k < T.M().dim(); ++k) identity_nu.push_back(T.M().basis_element(k));
  const Subspace ab = block_kernel(T, identity_nu);
  const std::size_t da = T.A().dim(), db = T.B().dim();
  std::vector<Vector> embedded;
  for (const auto& v : ab.basis()) {
    embedded.push_back(T.embed(slice(v, 0, da), T.M().zero(), slice(v, da, db)));
  }
  const Subspace structural = Subspace::span(T.field(), T.dim(), embedded);
  if (structural != oracle) {
    throw StructuralMismatch("commutator-kernel center differs from the block description");
  }

  CenterData data{oracle, project_span(T, Block::A, oracle), project_span(T, Block::B, oracle),
                  Matrix(T.field(), db, 0)};
  std::vector<Vector> tau_cols;
  for (const auto& a : data.pi_a_center.basis()) {
    auto b = solve_intertwiner(
        T, db, [&](std::size_t k, const Vector& y) { return T.M().right_act(T.M().basis_element(k), y); },
        [&](std::size_t k) { return T.M().left_act(a, T.M().basis_element(k)); });
    if (!b || !data.pi_b_center.contains(*b)) {
      throw StructuralMismatch("no tau(a) in pi_B(Z(T)) with a m = m tau(a)");
    }
    tau_cols.push_back(std::move(*b));
  }
  data.tau = Matrix::from_columns(T.field(), db, tau_cols);
  return data;
}

SigmaCenterData sigma_center(const TriangularAlgebra& T, const LinearEndo& sigma) {
  const CheckResult aut = is_automorphism(T.algebra(), sigma);
  if (!aut) throw NotAutomorphism(aut.witness->reason);

  SigmaCenterData data{sigma_center_of(T.algebra(), sigma), false, std::nullopt};
  if (!T.hypothesis_flags() && !sigma.is_identity()) return data;

  const auto& M = T.M();
  const std::size_t da = T.A().dim(), db = T.B().dim();
  const Vector m_sigma = T.project(Block::M, sigma(T.p()));
  std::vector<Vector> nu_images;
  for (std::size_t k = 0; k < M.dim(); ++k) {
    nu_images.push_back(T.project(Block::M, sigma(T.embed(Block::M, M.basis_element(k)))));
  }
  const Subspace ab = block_kernel(T, nu_images);
  std::vector<Vector> embedded;
  for (const auto& v : ab.basis()) {
    const Vector b = slice(v, da, db);
    embedded.push_back(T.embed(slice(v, 0, da), -M.right_act(m_sigma, b), b));
  }
  if (Subspace::span(T.field(), T.dim(), embedded) != data.sigma_center) {
    throw StructuralMismatch("sigma-center kernel differs from the block description");
  }

  auto nu = [&](const Vector& m) {
    Vector out = M.zero();
    for (std::size_t k = 0; k < m.size(); ++k) axpy(m[k], nu_images[k], out);
    return out;
  };
  const Subspace pi_b = project_span(T, Block::B, data.sigma_center);
  const Subspace pi_a = project_span(T, Block::A, data.sigma_center);
  std::vector<Vector> eta_cols;
  for (const auto& b : pi_b.basis()) {
    auto a = solve_intertwiner(
        T, da, [&](std::size_t k, const Vector& y) { return M.left_act(y, M.basis_element(k)); },
        [&](std::size_t k) { return M.right_act(nu(M.basis_element(k)), b); });
    if (!a || !pi_a.contains(*a)) {
      throw StructuralMismatch("no eta(b) in pi_A(Z_sigma(T)) with eta(b) m = nu(m) b");
    }
    eta_cols.push_back(std::move(*a));
  }
  data.structural_checked = true;
  data.eta = Matrix::from_columns(T.field(), da, eta_cols);
  return data;
}

}  // namespace trialg
