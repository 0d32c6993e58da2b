#include "internal.hpp"
#include "trialg/algebra/center.hpp"
#include "trialg/maps/predicates.hpp"

namespace trialg {
namespace {

std::string pair_witness(const std::string& x, const std::string& y) { return x + ", " + y; }

std::string describe(const CheckResult& r, const FDAlgebra& A) {
  if (r.witness && r.witness->element) return "x = " + A.format(*r.witness->element);
  if (r.witness && r.witness->pair) {
    return pair_witness(A.labels()[r.witness->pair->first], A.labels()[r.witness->pair->second]);
  }
  return r.witness ? r.witness->reason : std::string{};
}

std::optional<std::size_t> first_column_outside(const Matrix& m, const Subspace& s) {
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!s.contains(m.column(c))) return c;
  return std::nullopt;
}

}  // namespace

LinearEndo compose_centralizing(const TriangularAlgebra& T, const AutParts& s,
                                const CentParts& p) {
  const auto& M = T.M();
  const Vector d1_one = p.delta1.apply(T.A().one());
  const Vector mu1_one = p.mu1.apply(T.A().one());
  return assemble_map(T, [&](Block b, std::size_t k) {
    const Matrix& to_a = b == Block::A ? p.delta1 : (b == Block::M ? p.delta2 : p.delta3);
    const Matrix& to_b = b == Block::A ? p.mu1 : (b == Block::M ? p.mu2 : p.mu3);
    const Vector a = to_a.column(k);
    const Vector bb = to_b.column(k);
    Vector m = -M.right_act(s.m_sigma, bb);
    if (b == Block::M) {
      const Vector mk = M.basis_element(k);
      m = m + M.left_act(d1_one, mk) - M.right_act(s.nu.image(k), mu1_one);
    }
    return T.embed(a, m, bb);
  });
}

std::vector<ConditionResult> check_centralizing_conditions(const TriangularAlgebra& T,
                                                           const AutParts& s,
                                                           const CentParts& p) {
  const FDAlgebra& A = T.A();
  const FDAlgebra& B = T.B();
  const auto& M = T.M();
  const Vector one_a = A.one(), one_b = B.one();
  const Vector d1_one = p.delta1.apply(one_a), mu1_one = p.mu1.apply(one_a);
  const Vector d3_one = p.delta3.apply(one_b), mu3_one = p.mu3.apply(one_b);
  std::vector<ConditionResult> out;
  auto record = [&](std::string label, std::optional<std::string> witness) {
    out.push_back({std::move(label), !witness.has_value(), witness.value_or("")});
  };

  {
    const CheckResult r = check_bracket_condition(A, LinearEndo(p.delta1), s.f, BracketMode::commuting);
    record("i", r ? std::nullopt : std::optional(describe(r, A)));
  }
  {
    const CheckResult r = check_bracket_condition(B, LinearEndo(p.mu3), s.g, BracketMode::commuting);
    record("ii", r ? std::nullopt : std::optional(describe(r, B)));
  }

  // (iii) delta1(a)m - nu(m)mu1(a) = f(a)(delta1(1)m - nu(m)mu1(1))
  std::optional<std::string> w;
  for (std::size_t k = 0; k < M.dim() && !w; ++k) {
    const Vector mk = M.basis_element(k), nk = s.nu.image(k);
    const Vector base = M.left_act(d1_one, mk) - M.right_act(nk, mu1_one);
    for (std::size_t i = 0; i < A.dim() && !w; ++i) {
      const Vector lhs = M.left_act(p.delta1.column(i), mk) - M.right_act(nk, p.mu1.column(i));
      if (lhs != M.left_act(s.f.image(i), base)) w = pair_witness(A.labels()[i], M.labels()[k]);
    }
  }
  record("iii", w);

  // (iv) nu(m)mu3(b) - delta3(b)m = (nu(m)mu3(1) - delta3(1)m) b
  w.reset();
  for (std::size_t k = 0; k < M.dim() && !w; ++k) {
    const Vector mk = M.basis_element(k), nk = s.nu.image(k);
    const Vector base = M.right_act(nk, mu3_one) - M.left_act(d3_one, mk);
    for (std::size_t j = 0; j < B.dim() && !w; ++j) {
      const Vector lhs = M.right_act(nk, p.mu3.column(j)) - M.left_act(p.delta3.column(j), mk);
      if (lhs != M.right_act(base, B.basis_element(j))) {
        w = pair_witness(M.labels()[k], B.labels()[j]);
      }
    }
  }
  record("iv", w);

  // (v) delta2(m)m = nu(m)mu2(m), quadratic in m: polarized over basis pairs.
  w.reset();
  auto beta = [&](std::size_t x, std::size_t y) {
    return M.left_act(p.delta2.column(x), M.basis_element(y)) -
           M.right_act(s.nu.image(y), p.mu2.column(x));
  };
  for (std::size_t k = 0; k < M.dim() && !w; ++k)
    for (std::size_t l = k; l < M.dim() && !w; ++l) {
      const Vector term = k == l ? beta(k, k) : beta(k, l) + beta(l, k);
      if (!is_zero(term)) w = pair_witness(M.labels()[k], M.labels()[l]);
    }
  record("v", w);

  // (vi) delta1(1)m - nu(m)mu1(1) = nu(m)mu3(1) - delta3(1)m
  w.reset();
  for (std::size_t k = 0; k < M.dim() && !w; ++k) {
    const Vector mk = M.basis_element(k), nk = s.nu.image(k);
    if (M.left_act(d1_one, mk) - M.right_act(nk, mu1_one) !=
        M.right_act(nk, mu3_one) - M.left_act(d3_one, mk)) {
      w = M.labels()[k];
    }
  }
  record("vi", w);

  // (vii) [a, delta3(b)]_f in Z(A)
  w.reset();
  const Subspace za = center_of(A);
  for (std::size_t i = 0; i < A.dim() && !w; ++i)
    for (std::size_t j = 0; j < B.dim() && !w; ++j) {
      const Vector d3b = p.delta3.column(j);
      if (!za.contains(A.mul(s.f.image(i), d3b) - A.mul(d3b, A.basis_element(i)))) {
        w = pair_witness(A.labels()[i], B.labels()[j]);
      }
    }
  record("vii", w);

  // (viii) [b, mu1(a)]_g in Z(B)
  w.reset();
  const Subspace zb = center_of(B);
  for (std::size_t j = 0; j < B.dim() && !w; ++j)
    for (std::size_t i = 0; i < A.dim() && !w; ++i) {
      const Vector m1a = p.mu1.column(i);
      if (!zb.contains(B.mul(s.g.image(j), m1a) - B.mul(m1a, B.basis_element(j)))) {
        w = pair_witness(B.labels()[j], A.labels()[i]);
      }
    }
  record("viii", w);

  const auto d2 = first_column_outside(p.delta2, sigma_center_of(A, s.f));
  record("delta2_range", d2 ? std::optional(M.labels()[*d2]) : std::nullopt);
  const auto m2 = first_column_outside(p.mu2, sigma_center_of(B, s.g));
  record("mu2_range", m2 ? std::optional(M.labels()[*m2]) : std::nullopt);
  return out;
}

CentParts decompose_centralizing(const TriangularAlgebra& T, const LinearEndo& sigma,
                                 const LinearEndo& theta) {
  const AutParts s = decompose_automorphism(T, sigma);
  if (!check_bracket_condition(T.algebra(), theta, sigma, BracketMode::centralizing)) {
    throw InvalidParameter("map is not sigma-centralizing on T");
  }
  CentParts parts{block_matrix(T, theta, Block::A, Block::A),
                  block_matrix(T, theta, Block::M, Block::A),
                  block_matrix(T, theta, Block::B, Block::A),
                  block_matrix(T, theta, Block::A, Block::B),
                  block_matrix(T, theta, Block::M, Block::B),
                  block_matrix(T, theta, Block::B, Block::B)};
  for (const auto& c : check_centralizing_conditions(T, s, parts)) {
    if (!c.ok) throw ConditionFailure(c.label, c.witness);
  }
  detail::require_reconstruction(compose_centralizing(T, s, parts), theta,
                                 "centralizing decomposition");
  return parts;
}

bool commuting_criterion(const TriangularAlgebra& T, const AutParts& s, const CentParts& parts) {
  return !first_column_outside(parts.delta3, sigma_center_of(T.A(), s.f)) &&
         !first_column_outside(parts.mu1, sigma_center_of(T.B(), s.g));
}

}  // namespace trialg
