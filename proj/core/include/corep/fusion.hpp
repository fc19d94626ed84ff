#pragma once

#include <set>

#include "corep/comodule.hpp"

namespace corep::fusion {

using ZCombo = std::map<size_t, long>;

// Based ring on a finite label window. Products that leave the window are
// recorded in `escaped` rather than silently truncated.
struct BasedRing {
  std::vector<std::string> basis;
  size_t unit = 0;
  std::vector<long> dims;  // square roots of the block dimensions
  std::map<std::pair<size_t, size_t>, std::map<size_t, long>> alpha;
  std::set<std::pair<size_t, size_t>> escaped;
  std::vector<size_t> star;

  size_t index_of(const std::string& label) const;
  bool known(size_t i, size_t j) const { return alpha.count({i, j}) != 0; }
};

CheckReport verify_based_ring(const BasedRing& r);

// Bilinear product of formal Z-combinations; throws Escape naming the first
// label pair whose product is outside the window.
ZCombo mult(const BasedRing& r, const ZCombo& a, const ZCombo& b);

// Commutation with every basis element. Pairs escaped on both sides are
// skipped; a pair computable on one side only throws Escape.
bool is_central(const BasedRing& r, size_t a);

// Block diagonalization of bmat (.)' cmat over a cosemisimple coalgebra:
// similarity L with L G L^{-1} block diagonal, the blocks matching simple
// blocks of the coradical. Indices refer to cor.blocks.
struct Decomposition {
  std::vector<size_t> parts;  // multiset of block indices
  Mat similarity;
  std::vector<CoeffMatrix> blocks;
};
Decomposition tensor_decompose(const Coalgebra& c0, const CoradicalData& cor,
                               const ProductStructure& prod, const CoeffMatrix& bmat,
                               const CoeffMatrix& cmat);

// Fusion ring of a cosemisimple coalgebra with a multiplication: labels and
// dims from the coradical blocks, alpha from tensor_decompose on all pairs,
// involution supplied by the caller (the antipode's block permutation).
BasedRing fusion_ring_from_coalgebra(const Coalgebra& c0, const CoradicalData& cor,
                                     const ProductStructure& prod, const std::vector<size_t>& star);

// Coefficient-coalgebra multiplicativity of the Grothendieck-ring map: for
// each comodule pair, cf(M_i (x) M_j) must be the span of the fusion-predicted
// blocks and the semisimple decomposition must match alpha. Pairs whose
// product escapes the window are reported as skipped, not failed.
struct GrothendieckReport {
  CheckReport checks;
  std::vector<std::string> skipped;
};
GrothendieckReport grothendieck_check(const Coalgebra& c0, const CoradicalData& cor,
                                      const ProductStructure& prod, const BasedRing& ring,
                                      const std::vector<comod::Comodule>& simples);

}  // namespace corep::fusion
