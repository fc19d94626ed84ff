#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "corep/coalgebra.hpp"

namespace corep::hopf {

enum class Family { Hefuv, A, Anq, Hinf, Bmn };

// Canonical normal-form monomial; field meaning depends on the family:
//   Hefuv: a = index, t1 = 0 (e-component) / 1 (f-component),
//          t2 = tail bits (1 = u, 2 = v, 3 = uv)
//   A / Anq / Hinf: g^a x^b
//   Bmn: g^a h^b x^t1 y^t2 with (a, b) the canonical coset representative
struct Mono {
  long a = 0;
  long b = 0;
  int t1 = 0;
  int t2 = 0;
  auto operator<=>(const Mono&) const = default;
};

using Element = std::map<Mono, Scalar>;

template <size_t N>
using Tensor = std::map<std::array<Mono, N>, Scalar>;

void add_term(Element& e, const Mono& m, const Scalar& c);
Element scale(const Element& e, const Scalar& c);
Element add(const Element& a, const Element& b);
Element sub(const Element& a, const Element& b);
bool is_zero(const Element& e);

// Relation side: sum of coeff * (word of generator images); the empty word
// is the unit.
struct FormalTerm {
  Scalar coeff;
  std::vector<Element> word;
};
struct FormalRelation {
  std::string name;
  std::vector<FormalTerm> lhs, rhs;
};

class PresentedHopf {
public:
  PresentedHopf() = default;  // same as Hefuv(); prefer the named builders

  static PresentedHopf Hefuv();
  static PresentedHopf A(long n, long d, const Scalar& mu, const Scalar& q);
  static PresentedHopf Anq(long n, const Scalar& q);
  static PresentedHopf Hinf(const Scalar& chi_g, const Scalar& lambda_g);
  static PresentedHopf Bmn(long m, long n, const Scalar& lambda, const Scalar& s, const Scalar& t,
                           const Scalar& k);

  Family family() const { return family_; }
  int field_order() const { return order_; }
  std::string family_name() const;
  bool finite_dimensional() const;

  Element unit() const;
  Element mono_element(const Mono& m) const;
  // Named generators: Hefuv accepts "u", "v", "g", "e<i>", "f<i>";
  // the others "g", "h", "x", "y", "g^-1", "h^-1".
  Element generator(const std::string& name) const;

  Element mul(const Element& x, const Element& y) const;
  Element mul_mono(const Mono& x, const Mono& y) const;
  Tensor<2> delta(const Element& x) const;
  Tensor<2> delta_mono(const Mono& m) const;
  Scalar counit(const Element& x) const;
  Element antipode(const Element& x) const;
  Element antipode_mono(const Mono& m) const;

  Tensor<2> tensor_mul(const Tensor<2>& x, const Tensor<2>& y) const;
  Tensor<3> tensor_mul(const Tensor<3>& x, const Tensor<3>& y) const;

  std::string mono_str(const Mono& m) const;
  std::string element_str(const Element& e) const;

  // Generators and defining relations instantiated over a finite index
  // window (only Hefuv has infinitely many generators; the window bounds the
  // e_i / f_i indices there).
  std::vector<std::pair<std::string, Element>> generator_list(long window) const;
  std::vector<FormalRelation> relation_list(long window) const;

  // Random normal monomial with indices bounded by the window (for property
  // tests); deterministic in the rng state.
  Mono sample_mono(unsigned long rng_word, long window) const;

  long param_n() const { return n_; }
  long param_m() const { return m_; }
  long param_d() const { return d_; }

private:

  Family family_ = Family::Hefuv;
  int order_ = 1;
  long n_ = 0, d_ = 0, m_ = 0;        // integral parameters (n, d) / (m, n)
  Scalar mu_, q_, chi_, lam_, s_, t_, k_;

  Mono canonical_group_(long a, long b) const;  // Bmn coset representative
  Mono canonical_group_plus(const Mono& m, long da, long db, int dt1, int dt2) const;
  Scalar lambda_of_power_(long a) const;      // Hinf cocycle values
  Element append_x_(const Element& e) const;  // Bmn right-multiplications
  Element append_y_(const Element& e) const;
  Tensor<2> delta_letter_u_() const;
  Tensor<2> delta_letter_v_() const;
  Element antipode_letter_u_() const;
  Element antipode_letter_v_() const;
};

struct HopfAxiomReport {
  CheckReport step1;  // comultiplication and counit respect the relations
  CheckReport step2;  // coassociativity and counit identities on generators
  CheckReport step3;  // antipode reverses the relations
  CheckReport step4;  // antipode axiom on generators
  bool pass() const { return step1.pass && step2.pass && step3.pass && step4.pass; }
};

HopfAxiomReport verify_hopf_axioms(const PresentedHopf& h, long window = 3);

// Finite-dimensional coalgebra slice of the presented Hopf algebra, with the
// span's multiplication attached for tensor-product work.
struct Truncation {
  PresentedHopf hopf;
  Coalgebra coalgebra;
  std::vector<Mono> basis_monos;
  std::map<Mono, size_t> index;

  Vec coords(const Element& e) const;  // throws Escape when outside the span
  Element element(const Vec& v) const;
  ProductStructure product() const;
};

// Coalgebra on an explicit monomial span; verifies closure under the
// comultiplication and throws Escape naming the offending monomial and term.
Truncation truncate_span(const PresentedHopf& h, std::vector<Mono> monos);

// Family-specific truncation span (checked to be a subcoalgebra):
//   Hefuv: indices |i| <= N plus the boundary simple block
//   A: the whole (finite-dimensional) algebra, any N
//   Anq / Hinf: staircase -N <= a, a + b <= N
//   Bmn: canonical representatives with -N <= a, b and a + t1 <= N, b + t2 <= N
Truncation truncate(const PresentedHopf& h, long N);

// Human label for a simple subcoalgebra of a truncation; recognizes the unit
// block, group-like blocks, and the comatrix blocks of Hefuv (C1, C2, ...).
std::string name_simple_block(const Truncation& t, const Subspace& block);

// Rename coradical blocks in place using name_simple_block.
void label_blocks(const Truncation& t, CoradicalData& cor);

// Permutation of the coradical blocks induced by the antipode (the based
// ring's involution); throws Escape if an image leaves the truncation span.
std::vector<size_t> antipode_block_permutation(const Truncation& t, const CoradicalData& cor);

}  // namespace corep::hopf
