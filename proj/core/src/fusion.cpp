#include "corep/fusion.hpp"

#include <algorithm>
#include <sstream>

namespace corep::fusion {

size_t BasedRing::index_of(const std::string& label) const {
  for (size_t i = 0; i < basis.size(); ++i)
    if (basis[i] == label) return i;
  structural_error("based ring: unknown label '" + label + "'");
}

CheckReport verify_based_ring(const BasedRing& r) {
  CheckReport rep;
  size_t n = r.basis.size();
  if (r.dims.size() != n || r.star.size() != n)
    structural_error("based ring: field sizes disagree with the basis");
  for (long d : r.dims)
    if (d <= 0) structural_error("based ring: dims must be positive");
  for (size_t i = 0; i < n; ++i)
    if (r.star[i] >= n || r.star[r.star[i]] != i)
      structural_error("based ring: star is not an involution");

  for (const auto& [key, prod] : r.alpha) {
    auto [i, j] = key;
    // unit laws
    if (i == r.unit) {
      if (prod.size() != 1 || !prod.count(j) || prod.at(j) != 1)
        rep.fail("left unit law fails at " + r.basis[j]);
    }
    if (j == r.unit) {
      if (prod.size() != 1 || !prod.count(i) || prod.at(i) != 1)
        rep.fail("right unit law fails at " + r.basis[i]);
    }
    // tau condition
    long unit_coeff = prod.count(r.unit) ? prod.at(r.unit) : 0;
    long expected = (j == r.star[i]) ? 1 : 0;
    if (unit_coeff != expected)
      rep.fail("tau condition fails at " + r.basis[i] + " * " + r.basis[j]);
    // nonnegative structure constants and the dimension homomorphism
    long total = 0;
    for (const auto& [t, c] : prod) {
      if (c < 0) rep.fail("negative coefficient in " + r.basis[i] + " * " + r.basis[j]);
      total += c * r.dims[t];
    }
    if (total != r.dims[i] * r.dims[j])
      rep.fail("dimension homomorphism fails at " + r.basis[i] + " * " + r.basis[j]);
    // star anti-automorphism, where the partner product is known
    auto partner = r.alpha.find({r.star[j], r.star[i]});
    if (partner != r.alpha.end()) {
      std::map<size_t, long> starred;
      for (const auto& [t, c] : prod) starred[r.star[t]] = c;
      if (starred != partner->second)
        rep.fail("star anti-automorphism fails at " + r.basis[i] + " * " + r.basis[j]);
    }
  }
  for (const auto& [i, j] : r.escaped)
    rep.notes.push_back("product " + r.basis[i] + " * " + r.basis[j] + " escapes the window");
  return rep;
}

ZCombo mult(const BasedRing& r, const ZCombo& a, const ZCombo& b) {
  ZCombo out;
  for (const auto& [i, ci] : a)
    for (const auto& [j, cj] : b) {
      if (ci == 0 || cj == 0) continue;
      auto it = r.alpha.find({i, j});
      if (it == r.alpha.end())
        escape_error("product " + r.basis[i] + " * " + r.basis[j] + " escapes the window");
      for (const auto& [t, c] : it->second) {
        out[t] += ci * cj * c;
        if (out[t] == 0) out.erase(t);
      }
    }
  return out;
}

bool is_central(const BasedRing& r, size_t a) {
  if (a >= r.basis.size()) structural_error("is_central: label out of range");
  for (size_t b = 0; b < r.basis.size(); ++b) {
    bool ab = r.known(a, b), ba = r.known(b, a);
    if (!ab && !ba) continue;  // symmetric escape: nothing to compare
    if (ab != ba)
      escape_error("is_central: product with " + r.basis[b] + " known on one side only");
    if (r.alpha.at({a, b}) != r.alpha.at({b, a})) return false;
  }
  return true;
}

namespace {

// operator (id (x) f) rho on the comodule of a multiplicative matrix G:
// entry (i, j) = f(G_ij)
Mat functional_matrix(const CoeffMatrix& g, const Vec& f) {
  Mat m(g.rows, linalg::zero_vec(g.cols));
  for (size_t i = 0; i < g.rows; ++i)
    for (size_t j = 0; j < g.cols; ++j) {
      Scalar v = Scalar::zero();
      const Vec& entry = g.at(i, j);
      for (size_t k = 0; k < entry.size(); ++k)
        if (!entry[k].is_zero() && !f[k].is_zero()) v = v + entry[k] * f[k];
      m[i][j] = v;
    }
  return m;
}

Vec apply_columns(const Mat& m, const Vec& x) {
  size_t n = m.size();
  Vec out = linalg::zero_vec(n, x.empty() ? 1 : x[0].order());
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (!m[i][j].is_zero() && !x[j].is_zero()) out[i] = out[i] + m[i][j] * x[j];
  return out;
}

}  // namespace

Decomposition tensor_decompose(const Coalgebra& c0, const CoradicalData& cor,
                               const ProductStructure& prod, const CoeffMatrix& bmat,
                               const CoeffMatrix& cmat) {
  if (!cor.functionals_ambient)
    structural_error("tensor_decompose: coalgebra must be cosemisimple");
  CoeffMatrix g = odot_prime(bmat, cmat, prod);
  size_t n = g.rows;
  Decomposition dec;
  Mat new_basis;  // columns of V, collected as rows then transposed

  for (size_t bi = 0; bi < cor.blocks.size(); ++bi) {
    const auto& blk = cor.blocks[bi];
    const auto& mu = cor.units[bi];
    size_t r = blk.sqrt_dim;
    Mat t11 = functional_matrix(g, mu.units[0]);  // E_11
    // basis of the image of T_11 = highest-weight space of the isotypic part
    RowSpan image(n);
    for (size_t j = 0; j < n; ++j) {
      Vec col(n, Scalar::zero(c0.order));
      for (size_t i = 0; i < n; ++i) col[i] = t11[i][j];
      image.add(std::move(col));
    }
    Mat w = image.to_subspace().basis();
    for (const auto& wa : w) {
      dec.parts.push_back(bi);
      for (size_t p = 0; p < r; ++p) {
        Mat tp1 = functional_matrix(g, mu.units[p * r + 0]);
        new_basis.push_back(apply_columns(tp1, wa));
      }
    }
  }
  if (new_basis.size() != n)
    structural_error("tensor_decompose: isotypic pieces do not fill the comodule");

  // V has the new vectors as columns; G' = V^{-1} G V must be block diagonal
  Mat v(n, linalg::zero_vec(n, c0.order));
  for (size_t j = 0; j < n; ++j)
    for (size_t i = 0; i < n; ++i) v[i][j] = new_basis[j][i];
  auto vinv = linalg::inverse(v);
  if (!vinv) structural_error("tensor_decompose: new basis is singular");
  dec.similarity = *vinv;

  // conjugate the coefficient-matrix entries: G'_pq = sum L_pi G_ij (L^-1)_jq
  size_t dimc = c0.dim();
  CoeffMatrix gprime(n, n, dimc, c0.order);
  for (size_t p = 0; p < n; ++p)
    for (size_t i = 0; i < n; ++i) {
      if (dec.similarity[p][i].is_zero()) continue;
      for (size_t j = 0; j < n; ++j) {
        if (g.at(i, j).empty()) continue;
        for (size_t q = 0; q < n; ++q) {
          Scalar c = dec.similarity[p][i] * v[j][q];
          if (c.is_zero()) continue;
          linalg::add_scaled(gprime.at(p, q), g.at(i, j), c);
        }
      }
    }
  // read off the diagonal blocks, check block-diagonality and that each block
  // reproduces the coradical's comatrix basis exactly
  std::vector<size_t> part_of(n);
  {
    size_t offset = 0;
    for (size_t part = 0; part < dec.parts.size(); ++part) {
      size_t r = cor.blocks[dec.parts[part]].sqrt_dim;
      for (size_t k = 0; k < r; ++k) part_of[offset + k] = part;
      offset += r;
    }
  }
  for (size_t p = 0; p < n; ++p)
    for (size_t q = 0; q < n; ++q)
      if (part_of[p] != part_of[q] && !linalg::is_zero(gprime.at(p, q)))
        structural_error("tensor_decompose: conjugated matrix is not block diagonal");
  size_t offset = 0;
  for (size_t part = 0; part < dec.parts.size(); ++part) {
    size_t bi = dec.parts[part];
    size_t r = cor.blocks[bi].sqrt_dim;
    CoeffMatrix block(r, r, dimc, c0.order);
    for (size_t p = 0; p < r; ++p)
      for (size_t q = 0; q < r; ++q) {
        block.at(p, q) = gprime.at(offset + p, offset + q);
        if (block.at(p, q) != cor.blocks[bi].comatrix.at(p, q))
          structural_error("tensor_decompose: block does not reproduce the comatrix basis");
      }
    dec.blocks.push_back(std::move(block));
    offset += r;
  }
  return dec;
}

BasedRing fusion_ring_from_coalgebra(const Coalgebra& c0, const CoradicalData& cor,
                                     const ProductStructure& prod,
                                     const std::vector<size_t>& star) {
  BasedRing r;
  size_t n = cor.blocks.size();
  if (star.size() != n) structural_error("fusion ring: star permutation has wrong size");
  r.star = star;
  r.unit = n;  // found below
  for (size_t i = 0; i < n; ++i) {
    r.basis.push_back(cor.blocks[i].label);
    r.dims.push_back(static_cast<long>(cor.blocks[i].sqrt_dim));
    if (cor.blocks[i].space.contains(prod.unit())) r.unit = i;
  }
  if (r.unit == n) structural_error("fusion ring: no block contains the unit");
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      try {
        Decomposition dec =
            tensor_decompose(c0, cor, prod, cor.blocks[i].comatrix, cor.blocks[j].comatrix);
        auto& entry = r.alpha[{i, j}];
        for (size_t t : dec.parts) entry[t] += 1;
      } catch (const Error& e) {
        if (e.kind() != Error::Kind::Escape) throw;
        r.escaped.insert({i, j});
      }
    }
  return r;
}

GrothendieckReport grothendieck_check(const Coalgebra& c0, const CoradicalData& cor,
                                      const ProductStructure& prod, const BasedRing& ring,
                                      const std::vector<comod::Comodule>& simples) {
  GrothendieckReport rep;
  if (simples.size() != cor.blocks.size())
    structural_error("grothendieck_check: one simple comodule per block expected");
  for (size_t i = 0; i < simples.size(); ++i)
    for (size_t j = 0; j < simples.size(); ++j) {
      if (!ring.known(i, j)) {
        rep.skipped.push_back(ring.basis[i] + " (x) " + ring.basis[j]);
        continue;
      }
      const auto& expected = ring.alpha.at({i, j});
      comod::Comodule m;
      try {
        m = comod::tensor(simples[i], simples[j], prod);
      } catch (const Error& e) {
        if (e.kind() != Error::Kind::Escape) throw;
        rep.skipped.push_back(ring.basis[i] + " (x) " + ring.basis[j]);
        continue;
      }
      // coefficient coalgebra = span of the predicted blocks
      Subspace cf = comod::coefficient_coalgebra(m);
      Subspace predicted(c0.dim());
      for (const auto& [t, c] : expected)
        if (c > 0) predicted = predicted.sum(cor.blocks[t].space);
      if (!(cf == predicted))
        rep.checks.fail("cf(" + ring.basis[i] + " (x) " + ring.basis[j] +
                        ") differs from the fusion prediction");
      // multiplicities match the fusion coefficients
      std::map<size_t, long> counted;
      for (size_t t : comod::decompose_semisimple(m, cor)) counted[t] += 1;
      if (counted != expected)
        rep.checks.fail("decomposition of " + ring.basis[i] + " (x) " + ring.basis[j] +
                        " differs from the fusion coefficients");
    }
  return rep;
}

}  // namespace corep::fusion
