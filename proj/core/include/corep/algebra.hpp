#pragma once

#include <string>
#include <vector>

#include "corep/linalg.hpp"

namespace corep {

// Finite-dimensional associative algebra over the scalar field, given by a
// dense structure-constant table. Small dimensions only (duals of coradicals,
// endomorphism algebras).
struct FinAlgebra {
  int order = 1;
  std::vector<std::vector<Vec>> table;  // table[i][j] = coords of b_i * b_j
  Vec unit;

  size_t dim() const { return table.size(); }
  Vec mul(const Vec& a, const Vec& b) const;
  // Matrix of left multiplication by a on the whole algebra (column-action:
  // coords of a*b_j in column j).
  Mat left_mul_matrix(const Vec& a) const;
};

// Jacobson radical via the trace form of the regular representation
// (characteristic zero).
Subspace radical(const FinAlgebra& a);

// Quotient by a two-sided ideal, in the coordinates of the non-pivot
// complement of the ideal.
FinAlgebra quotient_algebra(const FinAlgebra& a, const Subspace& ideal);

// Polynomials over Scalar, low degree first.
namespace spoly {
using Poly = std::vector<Scalar>;
void trim(Poly& p);
Poly mul(const Poly& a, const Poly& b);
Poly divmod(const Poly& a, const Poly& b, Poly& rem);
Poly gcd(Poly a, Poly b);
Poly derivative(const Poly& p);
Scalar eval(const Poly& p, const Scalar& x);
}  // namespace spoly

// Monic minimal polynomial of the linear operator given by matrix m.
spoly::Poly minimal_polynomial(const Mat& m);

// Roots of p lying in the ground field. Complete for roots that are rational
// or of the form (rational)*zeta^j, and for whatever remains linear after
// deflation; other algebraic roots are not searched for.
std::vector<Scalar> roots_in_field(const spoly::Poly& p, int order);

// Central primitive idempotents of a semisimple algebra. Splitting proceeds
// by two-sided-ideal support refinement on the center followed by eigenvalue
// refinement against roots_in_field, all in deterministic basis order; throws
// NonSplit if some cell cannot be reduced to dimension one over this field.
std::vector<Vec> central_primitive_idempotents(const FinAlgebra& a);

// Matrix units of the simple block e*A (e a central primitive idempotent of
// the semisimple algebra a): units[p*r+q] multiply as E_pq E_lm = d_ql E_pm
// and sum of E_pp = e. Throws NonSplit when the block is not split.
struct MatrixUnits {
  size_t r = 0;
  std::vector<Vec> units;
};
MatrixUnits block_matrix_units(const FinAlgebra& a, const Vec& e);

}  // namespace corep
