#pragma once

#include <memory>
#include <optional>

#include "corep/coalgebra.hpp"
#include "corep/hopf.hpp"

namespace corep::comod {

struct RhoTerm {
  size_t vec, coef;  // rho(m_i) = sum m_vec (x) coeff * b_coef
  Scalar coeff;
};

// Finite-dimensional right comodule over a structure-constant coalgebra.
struct Comodule {
  std::shared_ptr<const Coalgebra> coalgebra;
  std::vector<std::vector<RhoTerm>> rho;

  size_t dim() const { return rho.size(); }
  void validate() const;
  // coaction applied to a coordinate vector: sparse (vec, coef) -> scalar map
  std::map<std::pair<size_t, size_t>, Scalar> rho_of(const Vec& v) const;
};

CheckReport verify_comodule(const Comodule& m);

// Smallest subcoalgebra D with rho(M) c= M (x) D.
Subspace coefficient_coalgebra(const Comodule& m);

// Comodule structure induced by Delta on a Delta-stable subspace (rows span);
// throws Structural when the span is not a left coideal.
Comodule comodule_from_span(std::shared_ptr<const Coalgebra> c, const Mat& spanning);

// Simple comodule carried by the first row of a basic multiplicative matrix.
Comodule simple_comodule(std::shared_ptr<const Coalgebra> c, const CoeffMatrix& comatrix);

Comodule direct_sum(const Comodule& a, const Comodule& b);
Comodule tensor(const Comodule& a, const Comodule& b, const ProductStructure& prod);

// Socle filtration M_1 c= M_2 c= ... = M against the coradical filtration of
// the coefficient coalgebra; Loewy length = chain length.
std::vector<Subspace> socle_filtration(const Comodule& m);

// Jordan-Hoelder multiplicities per simple block of the coefficient
// coalgebra's coradical: (block label, multiplicity), weighted total = dim.
std::vector<std::pair<std::string, size_t>> dimension_vector(const Comodule& m);

// Basis of comodule maps M -> N (matrices acting on coordinate columns).
std::vector<Mat> hom_space(const Comodule& m, const Comodule& n);

struct EndAlgebra {
  std::vector<Mat> basis;
  FinAlgebra alg;      // structure constants in the hom basis
  Subspace radical;    // coordinates in the hom basis
  size_t semisimple_dim() const { return basis.size() - radical.dim(); }
};
EndAlgebra end_analysis(const Comodule& m);

enum class Indecomposability { Absolutely, OverBaseField, Decomposable };
Indecomposability indecomposability(const Comodule& m);
bool is_abs_indecomposable(const Comodule& m);

// Invertible comodule map M -> N if one exists; the nonvanishing test
// evaluates det over a deterministic integer grid of side dim+1, which is
// exhaustive for the degree, so a null answer is a certificate.
std::optional<Mat> are_isomorphic(const Comodule& m, const Comodule& n);

// Multiset of simple blocks of a comodule over a cosemisimple coalgebra
// (indices into cor.blocks), via isotypic projections.
std::vector<size_t> decompose_semisimple(const Comodule& m, const CoradicalData& cor);

// The small comodules attached to a Hefuv truncation (N >= 2): the simple
// row S of C_1, the length-2 extension U = <1, u, v>, the three-step V, the
// parameter family W(k) (k != 0), and the Loewy-length-3 coideal V0.
Comodule build_S(const hopf::Truncation& t);
Comodule build_U(const hopf::Truncation& t);
Comodule build_V(const hopf::Truncation& t);
Comodule build_W(const hopf::Truncation& t, const Scalar& k);
Comodule build_V0(const hopf::Truncation& t);

}  // namespace corep::comod
