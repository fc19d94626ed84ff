#include "doctest.h"

#include "corep/coalgebra.hpp"

using namespace corep;

namespace {

// comatrix coalgebra M_r: basis e_pq, Delta(e_pq) = sum_t e_pt (x) e_tq
Coalgebra matrix_coalgebra(size_t r) {
  Coalgebra c;
  c.order = 1;
  auto idx = [r](size_t p, size_t q) { return p * r + q; };
  for (size_t p = 0; p < r; ++p)
    for (size_t q = 0; q < r; ++q)
      c.basis.push_back("e" + std::to_string(p + 1) + std::to_string(q + 1));
  c.delta.resize(r * r);
  c.counit = linalg::zero_vec(r * r);
  for (size_t p = 0; p < r; ++p)
    for (size_t q = 0; q < r; ++q) {
      for (size_t t = 0; t < r; ++t) c.delta[idx(p, q)].push_back({idx(p, t), idx(t, q), Scalar(1)});
      c.counit[idx(p, q)] = p == q ? Scalar(1) : Scalar(0);
    }
  return c;
}

// group-like coalgebra on n points
Coalgebra grouplike_coalgebra(size_t n) {
  Coalgebra c;
  c.order = 1;
  for (size_t a = 0; a < n; ++a) {
    c.basis.push_back("g" + std::to_string(a));
    c.delta.push_back({{a, a, Scalar(1)}});
    c.counit.push_back(Scalar(1));
  }
  return c;
}

// the Z_4 group coalgebra written in the Fourier basis x_k = sum_a zeta^{ak} g^a
Coalgebra fourier_z4() {
  Coalgebra c;
  c.order = 4;
  for (size_t k = 0; k < 4; ++k) {
    c.basis.push_back("x" + std::to_string(k));
    std::vector<DeltaTerm> terms;
    for (size_t j = 0; j < 4; ++j) terms.push_back({j, (k + 4 - j) % 4, Scalar(Rat(1, 4), 4)});
    c.delta.push_back(terms);
    c.counit.push_back(k == 0 ? Scalar(4, 4) : Scalar(0, 4));
  }
  return c;
}

// dual of Q(i) as a Q-algebra: a 2-dimensional simple coalgebra that only
// splits once i is in the ground field
Coalgebra gauss_simple(int order) {
  Coalgebra c;
  c.order = order;
  c.basis = {"c0", "c1"};
  c.delta = {{{0, 0, Scalar(1, order)}, {1, 1, Scalar(-1, order)}},
             {{0, 1, Scalar(1, order)}, {1, 0, Scalar(1, order)}}};
  c.counit = {Scalar(1, order), Scalar(0, order)};
  return c;
}

// two group-likes a, b and a skew primitive p between them
Coalgebra staircase() {
  Coalgebra c;
  c.order = 1;
  c.basis = {"a", "b", "p"};
  c.delta = {{{0, 0, Scalar(1)}},
             {{1, 1, Scalar(1)}},
             {{0, 2, Scalar(1)}, {2, 1, Scalar(1)}}};
  c.counit = {Scalar(1), Scalar(1), Scalar(0)};
  return c;
}

Vec unit_vec(size_t n, size_t i) {
  Vec v = linalg::zero_vec(n);
  v[i] = Scalar(1);
  return v;
}

}  // namespace

TEST_CASE("matrix coalgebra satisfies the axioms") {
  Coalgebra m2 = matrix_coalgebra(2);
  CHECK(verify_coalgebra(m2).pass);

  SUBCASE("perturbing one coefficient breaks coassociativity") {
    m2.delta[0][0].coeff = Scalar(2);
    auto rep = verify_coalgebra(m2);
    CHECK(!rep.pass);
    CHECK(rep.first_violation().find("e11") != std::string::npos);
  }
  SUBCASE("malformed tensor is a structural error, not a failed check") {
    m2.delta[0].push_back({0, 17, Scalar(1)});
    CHECK_THROWS_AS(verify_coalgebra(m2), Error);
    try {
      verify_coalgebra(m2);
    } catch (const Error& e) {
      CHECK(e.kind() == Error::Kind::Structural);
    }
  }
}

TEST_CASE("multiplicative and basic matrices") {
  Coalgebra m2 = matrix_coalgebra(2);
  CoeffMatrix g(2, 2, 4);
  for (size_t p = 0; p < 2; ++p)
    for (size_t q = 0; q < 2; ++q) g.at(p, q) = unit_vec(4, p * 2 + q);
  CHECK(is_multiplicative(g, m2));
  CHECK(is_basic(g, m2));

  SUBCASE("a single group-like is a 1x1 basic multiplicative matrix") {
    Coalgebra gl = grouplike_coalgebra(2);
    CoeffMatrix one(1, 1, 2);
    one.at(0, 0) = unit_vec(2, 1);
    CHECK(is_multiplicative(one, gl));
    CHECK(is_basic(one, gl));
  }
  SUBCASE("repeated entries are multiplicative but not basic") {
    // diag(g, g) over the group-like coalgebra
    Coalgebra gl = grouplike_coalgebra(2);
    CoeffMatrix two(2, 2, 2);
    two.at(0, 0) = unit_vec(2, 1);
    two.at(1, 1) = unit_vec(2, 1);
    two.at(0, 1) = linalg::zero_vec(2);
    two.at(1, 0) = linalg::zero_vec(2);
    CHECK(is_multiplicative(two, gl));
    CHECK(!is_basic(two, gl));
  }
}

TEST_CASE("wedge on the staircase coalgebra") {
  Coalgebra c = staircase();
  REQUIRE(verify_coalgebra(c).pass);
  Subspace ka(3, {unit_vec(3, 0)});
  Subspace kb(3, {unit_vec(3, 1)});
  Subspace whole = Subspace::full(3);

  // p is (a,b)-primitive, so it sits inside a wedge b
  Subspace w = wedge(ka, kb, c);
  CHECK(w.dim() == 3);
  CHECK(w.contains(ka));
  CHECK(w.contains(kb));
  // the other order has no primitive
  CHECK(wedge(kb, ka, c).dim() == 2);
  // absorbing case
  CHECK(wedge(whole, whole, c) == whole);
  // computed twice: identical matrices
  CHECK(wedge(ka, kb, c) == w);

  SUBCASE("non-subcoalgebra input is rejected") {
    Subspace bad(3, {unit_vec(3, 2)});
    CHECK_THROWS_AS(wedge(bad, kb, c), Error);
  }
}

TEST_CASE("coradical of a matrix coalgebra is the whole block") {
  Coalgebra m2 = matrix_coalgebra(2);
  auto data = coradical(m2);
  CHECK(data.h0.dim() == 4);
  REQUIRE(data.blocks.size() == 1);
  CHECK(data.blocks[0].sqrt_dim == 2);
  CHECK(is_basic(data.blocks[0].comatrix, m2));
}

TEST_CASE("coradical of a group-like coalgebra") {
  Coalgebra gl = grouplike_coalgebra(2);
  auto data = coradical(gl);
  CHECK(data.h0.dim() == 2);
  CHECK(data.blocks.size() == 2);
  for (const auto& b : data.blocks) CHECK(b.sqrt_dim == 1);
}

TEST_CASE("block splitting needs eigenvalues from the cyclotomic field") {
  Coalgebra c = fourier_z4();
  REQUIRE(verify_coalgebra(c).pass);
  auto data = coradical(c);
  CHECK(data.h0.dim() == 4);
  CHECK(data.blocks.size() == 4);
}

TEST_CASE("non-split simple blocks are reported, larger fields split them") {
  Coalgebra c1 = gauss_simple(1);
  REQUIRE(verify_coalgebra(c1).pass);
  CHECK_THROWS_AS(coradical(c1), Error);
  try {
    coradical(c1);
  } catch (const Error& e) {
    CHECK(e.kind() == Error::Kind::NonSplit);
  }
  Coalgebra c4 = gauss_simple(4);
  auto data = coradical(c4);
  CHECK(data.blocks.size() == 2);
}

TEST_CASE("coradical filtration of the staircase has length 2") {
  Coalgebra c = staircase();
  auto chain = coradical_filtration(c);
  REQUIRE(chain.size() == 2);
  CHECK(chain[0].dim() == 2);
  CHECK(chain[1].dim() == 3);
}

TEST_CASE("cosemisimple filtration has length 1") {
  auto chain = coradical_filtration(grouplike_coalgebra(3));
  CHECK(chain.size() == 1);
}

TEST_CASE("primitivity classification on the staircase") {
  Coalgebra c = staircase();
  auto data = coradical(c);
  CoeffMatrix amat(1, 1, 3), bmat(1, 1, 3);
  amat.at(0, 0) = unit_vec(3, 0);
  bmat.at(0, 0) = unit_vec(3, 1);
  CoeffMatrix x(1, 1, 3);
  x.at(0, 0) = unit_vec(3, 2);
  CHECK(is_primitive(x, amat, bmat, c, data.h0) == Primitivity::NonTrivial);
  CoeffMatrix zero(1, 1, 3);
  CHECK(is_primitive(zero, amat, bmat, c, data.h0) == Primitivity::Trivial);
  CoeffMatrix wrong(1, 1, 3);
  wrong.at(0, 0) = unit_vec(3, 0);
  CHECK(is_primitive(wrong, amat, bmat, c, data.h0) == Primitivity::NotPrimitive);
  CoeffMatrix bad(1, 2, 3);
  CHECK_THROWS_AS(is_primitive(bad, amat, bmat, c, data.h0), Error);
}
