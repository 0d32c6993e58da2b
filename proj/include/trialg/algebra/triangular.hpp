#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "trialg/algebra/bimodule.hpp"
#include "trialg/algebra/fd_algebra.hpp"

namespace trialg {

/// Peirce block of a triangular algebra.
enum class Block { A, M, B };

/// Matrix units (row, col) behind each basis element of a matrix family.
struct MatrixLayout {
  std::size_t size = 0;
  std::vector<std::pair<std::size_t, std::size_t>> positions;
};

struct TriangularOptions {
  bool allow_unfaithful = false;
  std::string name;
  std::optional<MatrixLayout> layout;
};

/// Trian(A, M, B): formal 2x2 upper-triangular matrices [[a, m], [0, b]].
///
/// The assembled algebra orders its basis as A-basis, then M-basis, then
/// B-basis; block coordinates are contiguous slices.
class TriangularAlgebra {
 public:
  const FDAlgebra& A() const noexcept { return a_; }
  const FDAlgebra& B() const noexcept { return b_; }
  const Bimodule& M() const noexcept { return m_; }
  /// The assembled algebra T.
  const FDAlgebra& algebra() const noexcept { return t_; }

  Field field() const noexcept { return t_.field(); }
  std::size_t dim() const noexcept { return t_.dim(); }
  const std::string& name() const noexcept { return t_.name(); }

  std::size_t block_offset(Block b) const noexcept;
  std::size_t block_dim(Block b) const noexcept;

  const Vector& p() const noexcept { return p_; }
  const Vector& q() const noexcept { return q_; }

  Vector embed(const Vector& a, const Vector& m, const Vector& b) const;
  Vector embed(Block block, const Vector& coords) const;
  Vector project(Block block, const Vector& x) const;

  /// Both A and B declared to have only trivial idempotents.
  bool hypothesis_flags() const noexcept {
    return a_.only_trivial_idempotents() && b_.only_trivial_idempotents();
  }
  bool faithful_left() const noexcept { return faithful_left_; }
  bool faithful_right() const noexcept { return faithful_right_; }

  /// Present for matrix families only.
  const std::optional<MatrixLayout>& matrix_layout() const noexcept { return layout_; }

 private:
  friend TriangularAlgebra make_triangular(FDAlgebra, Bimodule, FDAlgebra, TriangularOptions);
  TriangularAlgebra(FDAlgebra a, Bimodule m, FDAlgebra b, FDAlgebra t)
      : a_(std::move(a)), b_(std::move(b)), m_(std::move(m)), t_(std::move(t)) {}

  FDAlgebra a_;
  FDAlgebra b_;
  Bimodule m_;
  FDAlgebra t_;
  Vector p_;
  Vector q_;
  bool faithful_left_ = false;
  bool faithful_right_ = false;
  std::optional<MatrixLayout> layout_;
};

/// Kernel of a -> (m -> a m): the A-elements annihilating M. Zero iff faithful.
std::vector<Vector> left_annihilator(const FDAlgebra& A, const Bimodule& M);
/// Kernel of b -> (m -> m b).
std::vector<Vector> right_annihilator(const FDAlgebra& B, const Bimodule& M);

/// Assembles T with block multiplication
/// (a, m, b)(a', m', b') = (aa', am' + mb', bb').
///
/// Requires unital A and B. Throws NotFaithful with the first annihilating
/// element unless `allow_unfaithful` is set.
TriangularAlgebra make_triangular(FDAlgebra A, Bimodule M, FDAlgebra B,
                                  TriangularOptions options = {});

}  // namespace trialg
