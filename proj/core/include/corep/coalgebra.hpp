#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "corep/algebra.hpp"
#include "corep/linalg.hpp"

namespace corep {

struct DeltaTerm {
  size_t left, right;
  Scalar coeff;
};

// Structure-constant coalgebra: Delta(b_i) = sum of coeff * b_left (x) b_right.
struct Coalgebra {
  int order = 1;
  std::vector<std::string> basis;
  std::vector<std::vector<DeltaTerm>> delta;
  Vec counit;

  size_t dim() const { return basis.size(); }
  void validate() const;  // throws Structural on malformed tensors

  // Delta applied to a coefficient vector, as a sparse pair-coefficient map.
  std::map<std::pair<size_t, size_t>, Scalar> delta_of(const Vec& v) const;
};

struct CheckReport {
  bool pass = true;
  std::vector<std::string> failures;
  std::vector<std::string> notes;  // flagged but non-failing conditions

  std::string first_violation() const { return failures.empty() ? "" : failures.front(); }
  void fail(std::string what) {
    pass = false;
    failures.push_back(std::move(what));
  }
};

CheckReport verify_coalgebra(const Coalgebra& c);

// Matrix with entries in the coalgebra (each entry a coefficient vector).
struct CoeffMatrix {
  size_t rows = 0, cols = 0;
  std::vector<Vec> entries;  // row-major

  CoeffMatrix() = default;
  CoeffMatrix(size_t r, size_t c, size_t dim, int order = 1)
      : rows(r), cols(c), entries(r * c, linalg::zero_vec(dim, order)) {}
  Vec& at(size_t r, size_t c) { return entries[r * cols + c]; }
  const Vec& at(size_t r, size_t c) const { return entries[r * cols + c]; }
};

bool is_multiplicative(const CoeffMatrix& g, const Coalgebra& c);
bool is_basic(const CoeffMatrix& g, const Coalgebra& c);

enum class Primitivity { NotPrimitive, Trivial, NonTrivial };
Primitivity is_primitive(const CoeffMatrix& x, const CoeffMatrix& cmat, const CoeffMatrix& dmat,
                         const Coalgebra& c, const Subspace& coradical_space);

bool is_subcoalgebra(const Subspace& a, const Coalgebra& c);

// wedge(A, B) = preimage under Delta of A (x) C + C (x) B; contains A + B.
Subspace wedge(const Subspace& a, const Subspace& b, const Coalgebra& c);

struct SimpleBlock {
  std::string label;
  size_t sqrt_dim = 0;
  Subspace space;
  CoeffMatrix comatrix;  // basic multiplicative matrix spanning the block
  Vec idempotent;        // dual central idempotent (functional coords on the block's home basis)
};

struct CoradicalData {
  Subspace h0;
  std::vector<SimpleBlock> blocks;
  // Home coordinates of the dual functionals: for cosemisimple inputs these
  // are the ambient basis coordinates; otherwise they refer to h0's RREF rows.
  bool functionals_ambient = false;
  std::vector<MatrixUnits> units;  // per block, same order as blocks
};

// Coradical as the annihilator of the dual radical, split into simple blocks
// each carrying a comatrix basis. Throws NonSplit when a block is not a full
// matrix coalgebra over the field.
CoradicalData coradical(const Coalgebra& c);

// H_0 c= H_1 c= ... = C with H_n = wedge(H_{n-1}, H_0); the chain length is
// the Loewy length.
std::vector<Subspace> coradical_filtration(const Coalgebra& c);

// Multiplication on (a span containing) the coalgebra, supplied by whoever
// built it. mul_basis may throw Escape when a product leaves the span.
class ProductStructure {
public:
  using MulFn = std::function<Vec(size_t, size_t)>;
  ProductStructure() = default;
  ProductStructure(Vec unit, MulFn fn) : unit_(std::move(unit)), fn_(std::move(fn)) {}

  bool valid() const { return static_cast<bool>(fn_); }
  const Vec& unit() const { return unit_; }
  const Vec& mul_basis(size_t i, size_t j) const;
  Vec mul(const Vec& a, const Vec& b) const;

private:
  Vec unit_;
  MulFn fn_;
  mutable std::map<std::pair<size_t, size_t>, Vec> memo_;
};

// Entrywise-product matrix pairings: odot_prime(A,B) has block (i,j) equal to
// A scaled by entry b_ij; odot(A,B) has block (i,j) equal to B scaled by a_ij.
CoeffMatrix odot_prime(const CoeffMatrix& a, const CoeffMatrix& b, const ProductStructure& prod);
CoeffMatrix odot(const CoeffMatrix& a, const CoeffMatrix& b, const ProductStructure& prod);

}  // namespace corep
