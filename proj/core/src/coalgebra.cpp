#include "corep/coalgebra.hpp"

#include <algorithm>
#include <sstream>

namespace corep {

void Coalgebra::validate() const {
  size_t n = dim();
  if (delta.size() != n || counit.size() != n)
    structural_error("coalgebra: tensor/counit size differs from basis size");
  for (size_t i = 0; i < n; ++i)
    for (const auto& t : delta[i])
      if (t.left >= n || t.right >= n)
        structural_error("coalgebra: delta index out of range at basis element " + basis[i]);
}

std::map<std::pair<size_t, size_t>, Scalar> Coalgebra::delta_of(const Vec& v) const {
  std::map<std::pair<size_t, size_t>, Scalar> out;
  for (size_t p = 0; p < v.size(); ++p) {
    if (v[p].is_zero()) continue;
    for (const auto& t : delta[p]) {
      auto key = std::make_pair(t.left, t.right);
      auto it = out.find(key);
      if (it == out.end())
        out.emplace(key, v[p] * t.coeff);
      else {
        it->second = it->second + v[p] * t.coeff;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  }
  return out;
}

CheckReport verify_coalgebra(const Coalgebra& c) {
  c.validate();
  CheckReport rep;
  size_t n = c.dim();
  using Triple = std::tuple<size_t, size_t, size_t>;
  for (size_t i = 0; i < n; ++i) {
    std::map<Triple, Scalar> lhs, rhs;
    for (const auto& t : c.delta[i]) {
      for (const auto& u : c.delta[t.left]) {
        auto key = std::make_tuple(u.left, u.right, t.right);
        auto it = lhs.find(key);
        Scalar add = t.coeff * u.coeff;
        if (it == lhs.end())
          lhs.emplace(key, add);
        else {
          it->second = it->second + add;
          if (it->second.is_zero()) lhs.erase(it);
        }
      }
      for (const auto& u : c.delta[t.right]) {
        auto key = std::make_tuple(t.left, u.left, u.right);
        auto it = rhs.find(key);
        Scalar add = t.coeff * u.coeff;
        if (it == rhs.end())
          rhs.emplace(key, add);
        else {
          it->second = it->second + add;
          if (it->second.is_zero()) rhs.erase(it);
        }
      }
    }
    if (lhs != rhs) {
      rep.fail("coassociativity fails at basis element " + c.basis[i]);
      continue;
    }
    // (eps (x) id) Delta = id = (id (x) eps) Delta
    Vec left = linalg::zero_vec(n, c.order), right = linalg::zero_vec(n, c.order);
    for (const auto& t : c.delta[i]) {
      left[t.right] = left[t.right] + c.counit[t.left] * t.coeff;
      right[t.left] = right[t.left] + c.counit[t.right] * t.coeff;
    }
    Vec unit_i = linalg::zero_vec(n, c.order);
    unit_i[i] = Scalar::one(c.order);
    if (left != unit_i) rep.fail("left counit identity fails at basis element " + c.basis[i]);
    if (right != unit_i) rep.fail("right counit identity fails at basis element " + c.basis[i]);
  }
  return rep;
}

namespace {

using PairMap = std::map<std::pair<size_t, size_t>, Scalar>;

void outer_accumulate(PairMap& acc, const Vec& a, const Vec& b, const Scalar& sign) {
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      if (b[j].is_zero()) continue;
      auto key = std::make_pair(i, j);
      Scalar add = sign * a[i] * b[j];
      auto it = acc.find(key);
      if (it == acc.end())
        acc.emplace(key, add);
      else {
        it->second = it->second + add;
        if (it->second.is_zero()) acc.erase(it);
      }
    }
  }
}

Scalar apply_counit(const Coalgebra& c, const Vec& v) {
  Scalar s = Scalar::zero(c.order);
  for (size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) s = s + v[i] * c.counit[i];
  return s;
}

}  // namespace

bool is_multiplicative(const CoeffMatrix& g, const Coalgebra& c) {
  if (g.rows != g.cols) structural_error("is_multiplicative: matrix not square");
  size_t r = g.rows;
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < r; ++j) {
      if (g.at(i, j).size() != c.dim()) structural_error("is_multiplicative: entry dimension mismatch");
      PairMap lhs = c.delta_of(g.at(i, j));
      PairMap rhs;
      for (size_t t = 0; t < r; ++t) outer_accumulate(rhs, g.at(i, t), g.at(t, j), Scalar::one(c.order));
      if (lhs != rhs) return false;
      Scalar eps = apply_counit(c, g.at(i, j));
      if (eps != (i == j ? Scalar::one(c.order) : Scalar::zero(c.order))) return false;
    }
  return true;
}

bool is_basic(const CoeffMatrix& g, const Coalgebra& c) {
  if (!is_multiplicative(g, c)) return false;
  Mat rows = g.entries;
  return linalg::rank(std::move(rows)) == g.rows * g.cols;
}

Primitivity is_primitive(const CoeffMatrix& x, const CoeffMatrix& cmat, const CoeffMatrix& dmat,
                         const Coalgebra& c, const Subspace& coradical_space) {
  if (cmat.rows != cmat.cols || dmat.rows != dmat.cols)
    structural_error("is_primitive: framing matrices must be square");
  if (x.rows != cmat.rows || x.cols != dmat.rows)
    structural_error("is_primitive: shape mismatch with framing matrices");
  for (size_t i = 0; i < x.rows; ++i)
    for (size_t j = 0; j < x.cols; ++j) {
      PairMap lhs = c.delta_of(x.at(i, j));
      PairMap rhs;
      for (size_t k = 0; k < cmat.rows; ++k)
        outer_accumulate(rhs, cmat.at(i, k), x.at(k, j), Scalar::one(c.order));
      for (size_t t = 0; t < dmat.rows; ++t)
        outer_accumulate(rhs, x.at(i, t), dmat.at(t, j), Scalar::one(c.order));
      if (lhs != rhs) return Primitivity::NotPrimitive;
    }
  for (const auto& entry : x.entries)
    if (!coradical_space.contains(entry)) return Primitivity::NonTrivial;
  return Primitivity::Trivial;
}

bool is_subcoalgebra(const Subspace& a, const Coalgebra& c) {
  if (a.ambient() != c.dim()) structural_error("is_subcoalgebra: ambient mismatch");
  for (const auto& row : a.basis()) {
    PairMap t = c.delta_of(row);
    // slices in either tensor factor must lie in the subspace
    std::map<size_t, Vec> left_slices, right_slices;
    for (const auto& [key, s] : t) {
      auto [l, r] = key;
      auto itl = left_slices.find(r);
      if (itl == left_slices.end()) itl = left_slices.emplace(r, linalg::zero_vec(c.dim(), c.order)).first;
      itl->second[l] = itl->second[l] + s;
      auto itr = right_slices.find(l);
      if (itr == right_slices.end())
        itr = right_slices.emplace(l, linalg::zero_vec(c.dim(), c.order)).first;
      itr->second[r] = itr->second[r] + s;
    }
    for (const auto& [_, v] : left_slices)
      if (!a.contains(v)) return false;
    for (const auto& [_, v] : right_slices)
      if (!a.contains(v)) return false;
  }
  return true;
}

Subspace wedge(const Subspace& a, const Subspace& b, const Coalgebra& c) {
  size_t n = c.dim();
  if (a.ambient() != n || b.ambient() != n) structural_error("wedge: ambient mismatch");
  if (!is_subcoalgebra(a, c)) structural_error("wedge: first argument is not a subcoalgebra");
  if (!is_subcoalgebra(b, c)) structural_error("wedge: second argument is not a subcoalgebra");

  // residues of the coordinate vectors modulo each subspace
  std::vector<Vec> red_a(n), red_b(n);
  for (size_t i = 0; i < n; ++i) {
    Vec e = linalg::zero_vec(n, c.order);
    e[i] = Scalar::one(c.order);
    red_a[i] = a.reduce(e);
    red_b[i] = b.reduce(e);
  }
  // constraint rows of (pi_A (x) pi_B) Delta, collected sparsely by pair
  std::map<std::pair<size_t, size_t>, Vec> rows;
  for (size_t p = 0; p < n; ++p) {
    for (const auto& t : c.delta[p]) {
      const Vec& ra = red_a[t.left];
      const Vec& rb = red_b[t.right];
      for (size_t i = 0; i < n; ++i) {
        if (ra[i].is_zero()) continue;
        for (size_t j = 0; j < n; ++j) {
          if (rb[j].is_zero()) continue;
          auto key = std::make_pair(i, j);
          auto it = rows.find(key);
          if (it == rows.end()) it = rows.emplace(key, linalg::zero_vec(n, c.order)).first;
          it->second[p] = it->second[p] + t.coeff * ra[i] * rb[j];
        }
      }
    }
  }
  RowSpan span(n);
  for (auto& [_, row] : rows) span.add(std::move(row));
  return span.kernel(c.order);
}

namespace {

// Coalgebra induced on a subcoalgebra (RREF basis rows); coordinates of
// elements are read off at the pivot columns.
Coalgebra restrict_to(const Coalgebra& c, const Subspace& sub) {
  size_t m = sub.dim();
  Coalgebra d;
  d.order = c.order;
  d.basis.reserve(m);
  d.delta.assign(m, {});
  d.counit = linalg::zero_vec(m, c.order);
  for (size_t a = 0; a < m; ++a) {
    d.basis.push_back("u" + std::to_string(a));
    PairMap t = c.delta_of(sub.basis()[a]);
    PairMap reconstructed;
    for (size_t b = 0; b < m; ++b)
      for (size_t cc = 0; cc < m; ++cc) {
        auto it = t.find(std::make_pair(sub.pivots()[b], sub.pivots()[cc]));
        if (it == t.end() || it->second.is_zero()) continue;
        d.delta[a].push_back({b, cc, it->second});
        outer_accumulate(reconstructed, sub.basis()[b], sub.basis()[cc], it->second);
      }
    if (reconstructed != t)
      structural_error("restriction: comultiplication does not close on the subspace");
    d.counit[a] = apply_counit(c, sub.basis()[a]);
  }
  return d;
}

FinAlgebra dual_algebra(const Coalgebra& c) {
  size_t n = c.dim();
  FinAlgebra a;
  a.order = c.order;
  a.table.assign(n, std::vector<Vec>(n, linalg::zero_vec(n, c.order)));
  for (size_t k = 0; k < n; ++k)
    for (const auto& t : c.delta[k]) a.table[t.left][t.right][k] = a.table[t.left][t.right][k] + t.coeff;
  a.unit = c.counit;
  return a;
}

}  // namespace

CoradicalData coradical(const Coalgebra& c) {
  c.validate();
  size_t n = c.dim();
  // Gram matrix of the dual trace form, assembled straight from the tensor.
  Vec tr(n, Scalar::zero(c.order));
  for (size_t k = 0; k < n; ++k)
    for (const auto& t : c.delta[k])
      if (t.right == k) tr[t.left] = tr[t.left] + t.coeff;
  Mat gram(n, linalg::zero_vec(n, c.order));
  for (size_t m = 0; m < n; ++m) {
    if (tr[m].is_zero()) continue;
    for (const auto& t : c.delta[m]) gram[t.left][t.right] = gram[t.left][t.right] + t.coeff * tr[m];
  }
  Mat rad_rows = linalg::kernel(gram, n, c.order);
  Subspace h0 = rad_rows.empty() ? Subspace::full(n, c.order) : Subspace(n, linalg::kernel(rad_rows, n, c.order));

  CoradicalData data;
  data.h0 = h0;
  data.functionals_ambient = (h0.dim() == n);

  Coalgebra d = restrict_to(c, h0);
  FinAlgebra dual = dual_algebra(d);
  std::vector<Vec> idems = central_primitive_idempotents(dual);

  size_t m = h0.dim();
  for (const auto& e : idems) {
    // block = image of (id (x) e) Delta on the restricted coalgebra
    RowSpan span(m);
    for (size_t a = 0; a < m; ++a) {
      Vec img = linalg::zero_vec(m, c.order);
      for (const auto& t : d.delta[a]) img[t.left] = img[t.left] + t.coeff * e[t.right];
      span.add(std::move(img));
    }
    Subspace block_local = span.to_subspace();
    MatrixUnits mu = block_matrix_units(dual, e);
    size_t r = mu.r;
    if (r * r != block_local.dim())
      nonsplit_error("block of dimension " + std::to_string(block_local.dim()) +
                     " disagrees with its matrix-unit rank " + std::to_string(r));

    // comatrix basis: solve E_ab(c_pq) = delta_ap delta_bq inside the block
    size_t bd = block_local.dim();
    Mat phi(r * r, linalg::zero_vec(bd, c.order));  // phi[(a,b)][t] = E_ab(blockbasis_t)
    for (size_t ab = 0; ab < r * r; ++ab)
      for (size_t t = 0; t < bd; ++t) {
        Scalar v = Scalar::zero(c.order);
        const Vec& bb = block_local.basis()[t];
        for (size_t i = 0; i < m; ++i)
          if (!bb[i].is_zero()) v = v + bb[i] * mu.units[ab][i];
        phi[ab][t] = v;
      }
    auto phi_inv = linalg::inverse(phi);
    if (!phi_inv) nonsplit_error("degenerate pairing between matrix units and block");

    SimpleBlock blk;
    blk.sqrt_dim = r;
    blk.idempotent = e;
    blk.comatrix = CoeffMatrix(r, r, n, c.order);
    Mat ambient_rows;
    for (size_t p = 0; p < r; ++p)
      for (size_t q = 0; q < r; ++q) {
        // coefficients of c_pq against the block basis: column (p,q) of phi^-1
        Vec local = linalg::zero_vec(m, c.order);
        for (size_t t = 0; t < bd; ++t)
          linalg::add_scaled(local, block_local.basis()[t], (*phi_inv)[t][p * r + q]);
        Vec ambient = linalg::zero_vec(n, c.order);
        for (size_t a = 0; a < m; ++a) linalg::add_scaled(ambient, h0.basis()[a], local[a]);
        blk.comatrix.at(p, q) = ambient;
        ambient_rows.push_back(blk.comatrix.at(p, q));
      }
    blk.space = Subspace(n, std::move(ambient_rows));
    if (blk.space.dim() != r * r) structural_error("coradical: comatrix entries are dependent");
    if (!is_multiplicative(blk.comatrix, c))
      structural_error("coradical: constructed comatrix is not multiplicative");
    data.blocks.push_back(std::move(blk));
    data.units.push_back(std::move(mu));
  }
  // deterministic block order: by first pivot of the block subspace
  std::vector<size_t> perm(data.blocks.size());
  for (size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::sort(perm.begin(), perm.end(), [&](size_t x, size_t y) {
    return data.blocks[x].space.pivots() < data.blocks[y].space.pivots();
  });
  std::vector<SimpleBlock> blocks;
  std::vector<MatrixUnits> units;
  for (size_t i : perm) {
    blocks.push_back(std::move(data.blocks[i]));
    units.push_back(std::move(data.units[i]));
  }
  data.blocks = std::move(blocks);
  data.units = std::move(units);
  for (size_t i = 0; i < data.blocks.size(); ++i) data.blocks[i].label = "S" + std::to_string(i);
  return data;
}

std::vector<Subspace> coradical_filtration(const Coalgebra& c) {
  std::vector<Subspace> chain;
  CoradicalData data = coradical(c);
  chain.push_back(data.h0);
  while (chain.back().dim() < c.dim()) {
    Subspace next = wedge(chain.back(), data.h0, c);
    if (next.dim() <= chain.back().dim())
      structural_error("coradical filtration stalled before exhausting the coalgebra");
    chain.push_back(std::move(next));
  }
  return chain;
}

const Vec& ProductStructure::mul_basis(size_t i, size_t j) const {
  if (!fn_) structural_error("no product structure available");
  auto key = std::make_pair(i, j);
  auto it = memo_.find(key);
  if (it == memo_.end()) it = memo_.emplace(key, fn_(i, j)).first;
  return it->second;
}

Vec ProductStructure::mul(const Vec& a, const Vec& b) const {
  size_t n = unit_.size();
  if (a.size() != n || b.size() != n) structural_error("product: coordinate size mismatch");
  Vec r;
  bool init = false;
  for (size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < n; ++j) {
      if (b[j].is_zero()) continue;
      const Vec& p = mul_basis(i, j);
      if (!init) {
        r = linalg::zero_vec(n, a[i].order());
        init = true;
      }
      linalg::add_scaled(r, p, a[i] * b[j]);
    }
  }
  if (!init) r = linalg::zero_vec(n);
  return r;
}

CoeffMatrix odot_prime(const CoeffMatrix& a, const CoeffMatrix& b, const ProductStructure& prod) {
  size_t n = prod.unit().size();
  CoeffMatrix out(b.rows * a.rows, b.cols * a.cols, n);
  for (size_t i = 0; i < b.rows; ++i)
    for (size_t j = 0; j < b.cols; ++j)
      for (size_t k = 0; k < a.rows; ++k)
        for (size_t l = 0; l < a.cols; ++l)
          out.at(i * a.rows + k, j * a.cols + l) = prod.mul(a.at(k, l), b.at(i, j));
  return out;
}

CoeffMatrix odot(const CoeffMatrix& a, const CoeffMatrix& b, const ProductStructure& prod) {
  size_t n = prod.unit().size();
  CoeffMatrix out(a.rows * b.rows, a.cols * b.cols, n);
  for (size_t i = 0; i < a.rows; ++i)
    for (size_t j = 0; j < a.cols; ++j)
      for (size_t k = 0; k < b.rows; ++k)
        for (size_t l = 0; l < b.cols; ++l)
          out.at(i * b.rows + k, j * b.cols + l) = prod.mul(a.at(i, j), b.at(k, l));
  return out;
}

}  // namespace corep
