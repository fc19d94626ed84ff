#include "corep/comodule.hpp"

#include <algorithm>
#include <sstream>

namespace corep::comod {

void Comodule::validate() const {
  if (!coalgebra) structural_error("comodule: missing coalgebra");
  size_t n = coalgebra->dim();
  for (size_t i = 0; i < rho.size(); ++i)
    for (const auto& t : rho[i])
      if (t.vec >= rho.size() || t.coef >= n)
        structural_error("comodule: coaction index out of range at vector " + std::to_string(i));
}

std::map<std::pair<size_t, size_t>, Scalar> Comodule::rho_of(const Vec& v) const {
  std::map<std::pair<size_t, size_t>, Scalar> out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    for (const auto& t : rho[i]) {
      auto key = std::make_pair(t.vec, t.coef);
      auto it = out.find(key);
      if (it == out.end())
        out.emplace(key, v[i] * t.coeff);
      else {
        it->second = it->second + v[i] * t.coeff;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  }
  return out;
}

CheckReport verify_comodule(const Comodule& m) {
  m.validate();
  CheckReport rep;
  const Coalgebra& c = *m.coalgebra;
  size_t d = m.dim();
  using Triple = std::tuple<size_t, size_t, size_t>;
  for (size_t i = 0; i < d; ++i) {
    // (rho (x) id) rho vs (id (x) Delta) rho
    std::map<Triple, Scalar> lhs, rhs;
    for (const auto& t : m.rho[i]) {
      for (const auto& u : m.rho[t.vec]) {
        auto key = std::make_tuple(u.vec, u.coef, t.coef);
        auto it = lhs.find(key);
        Scalar add = t.coeff * u.coeff;
        if (it == lhs.end())
          lhs.emplace(key, add);
        else {
          it->second = it->second + add;
          if (it->second.is_zero()) lhs.erase(it);
        }
      }
      for (const auto& u : c.delta[t.coef]) {
        auto key = std::make_tuple(t.vec, u.left, u.right);
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
    if (lhs != rhs) rep.fail("coaction coassociativity fails at vector " + std::to_string(i));
    Vec counit_img = linalg::zero_vec(d, c.order);
    for (const auto& t : m.rho[i]) counit_img[t.vec] = counit_img[t.vec] + t.coeff * c.counit[t.coef];
    Vec unit_i = linalg::zero_vec(d, c.order);
    unit_i[i] = Scalar::one(c.order);
    if (counit_img != unit_i) rep.fail("counit identity fails at vector " + std::to_string(i));
  }
  return rep;
}

Subspace coefficient_coalgebra(const Comodule& m) {
  const Coalgebra& c = *m.coalgebra;
  size_t n = c.dim();
  RowSpan span(n);
  for (size_t i = 0; i < m.dim(); ++i) {
    // components (m_j* (x) id) rho(m_i)
    std::map<size_t, Vec> by_vec;
    for (const auto& t : m.rho[i]) {
      auto it = by_vec.find(t.vec);
      if (it == by_vec.end()) it = by_vec.emplace(t.vec, linalg::zero_vec(n, c.order)).first;
      it->second[t.coef] = it->second[t.coef] + t.coeff;
    }
    for (auto& [_, v] : by_vec) span.add(std::move(v));
  }
  // saturate under the slice maps of Delta; a no-op for a valid coaction,
  // kept as a guard for malformed input
  Subspace cf = span.to_subspace();
  for (;;) {
    RowSpan bigger(n);
    for (const auto& row : cf.basis()) bigger.add(row);
    size_t before = cf.dim();
    for (const auto& row : cf.basis()) {
      auto t = c.delta_of(row);
      std::map<size_t, Vec> left, right;
      for (const auto& [key, s] : t) {
        auto [l, r] = key;
        auto itl = left.find(r);
        if (itl == left.end()) itl = left.emplace(r, linalg::zero_vec(n, c.order)).first;
        itl->second[l] = itl->second[l] + s;
        auto itr = right.find(l);
        if (itr == right.end()) itr = right.emplace(l, linalg::zero_vec(n, c.order)).first;
        itr->second[r] = itr->second[r] + s;
      }
      for (auto& [_, v] : left) bigger.add(std::move(v));
      for (auto& [_, v] : right) bigger.add(std::move(v));
    }
    Subspace next = bigger.to_subspace();
    if (next.dim() == before) break;
    cf = std::move(next);
  }
  return cf;
}

Comodule comodule_from_span(std::shared_ptr<const Coalgebra> c, const Mat& spanning) {
  const Coalgebra& co = *c;
  Subspace v(co.dim(), spanning);
  size_t d = v.dim();
  Comodule m;
  m.coalgebra = std::move(c);
  m.rho.assign(d, {});
  for (size_t a = 0; a < d; ++a) {
    auto t = co.delta_of(v.basis()[a]);
    // left tensorands grouped by the right (coalgebra) index
    std::map<size_t, Vec> slices;
    for (const auto& [key, s] : t) {
      auto [l, r] = key;
      auto it = slices.find(r);
      if (it == slices.end()) it = slices.emplace(r, linalg::zero_vec(co.dim(), co.order)).first;
      it->second[l] = it->second[l] + s;
    }
    for (const auto& [k, slice] : slices) {
      if (!v.contains(slice)) structural_error("comodule_from_span: the span is not a left coideal");
      for (size_t b = 0; b < d; ++b) {
        const Scalar& coeff = slice[v.pivots()[b]];
        if (!coeff.is_zero()) m.rho[a].push_back({b, k, coeff});
      }
    }
  }
  return m;
}

Comodule simple_comodule(std::shared_ptr<const Coalgebra> c, const CoeffMatrix& comatrix) {
  Mat rows;
  for (size_t q = 0; q < comatrix.cols; ++q) rows.push_back(comatrix.at(0, q));
  return comodule_from_span(std::move(c), rows);
}

Comodule direct_sum(const Comodule& a, const Comodule& b) {
  if (!a.coalgebra || !b.coalgebra || a.coalgebra->basis != b.coalgebra->basis)
    structural_error("direct_sum: comodules over different coalgebras");
  Comodule m;
  m.coalgebra = a.coalgebra;
  m.rho = a.rho;
  size_t off = a.dim();
  for (const auto& terms : b.rho) {
    std::vector<RhoTerm> shifted;
    for (const auto& t : terms) shifted.push_back({t.vec + off, t.coef, t.coeff});
    m.rho.push_back(std::move(shifted));
  }
  return m;
}

Comodule tensor(const Comodule& a, const Comodule& b, const ProductStructure& prod) {
  if (!prod.valid()) structural_error("tensor: no product structure on the coalgebra");
  Comodule m;
  m.coalgebra = a.coalgebra;
  size_t db = b.dim();
  m.rho.assign(a.dim() * db, {});
  for (size_t i = 0; i < a.dim(); ++i)
    for (size_t j = 0; j < db; ++j) {
      auto& out = m.rho[i * db + j];
      std::map<std::pair<size_t, size_t>, Vec> acc;  // (vec_a, vec_b) -> coalgebra coords
      for (const auto& ta : a.rho[i])
        for (const auto& tb : b.rho[j]) {
          const Vec& p = prod.mul_basis(ta.coef, tb.coef);
          auto key = std::make_pair(ta.vec, tb.vec);
          auto it = acc.find(key);
          if (it == acc.end())
            it = acc.emplace(key, linalg::zero_vec(p.size(), ta.coeff.order())).first;
          linalg::add_scaled(it->second, p, ta.coeff * tb.coeff);
        }
      for (const auto& [key, coords] : acc)
        for (size_t k = 0; k < coords.size(); ++k)
          if (!coords[k].is_zero()) out.push_back({key.first * db + key.second, k, coords[k]});
    }
  return m;
}

namespace {

// restriction of the comodule to its coefficient coalgebra, keeping the
// filtration work small
struct Restricted {
  Coalgebra coalg;
  Comodule m;
  Subspace cf;
};

Restricted restrict_to_cf(const Comodule& m) {
  const Coalgebra& c = *m.coalgebra;
  Subspace cf = coefficient_coalgebra(m);
  Restricted r;
  r.cf = cf;
  size_t k = cf.dim();
  r.coalg.order = c.order;
  r.coalg.basis.reserve(k);
  r.coalg.delta.assign(k, {});
  r.coalg.counit = linalg::zero_vec(k, c.order);
  for (size_t a = 0; a < k; ++a) {
    r.coalg.basis.push_back("d" + std::to_string(a));
    auto t = c.delta_of(cf.basis()[a]);
    for (size_t b = 0; b < k; ++b)
      for (size_t cc = 0; cc < k; ++cc) {
        auto it = t.find(std::make_pair(cf.pivots()[b], cf.pivots()[cc]));
        if (it != t.end() && !it->second.is_zero()) r.coalg.delta[a].push_back({b, cc, it->second});
      }
    Scalar eps = Scalar::zero(c.order);
    for (size_t i = 0; i < c.dim(); ++i)
      if (!cf.basis()[a][i].is_zero()) eps = eps + cf.basis()[a][i] * c.counit[i];
    r.coalg.counit[a] = eps;
  }
  r.m.coalgebra = std::make_shared<Coalgebra>(r.coalg);
  r.m.rho.assign(m.dim(), {});
  for (size_t i = 0; i < m.dim(); ++i) {
    std::map<size_t, Vec> by_vec;
    for (const auto& t : m.rho[i]) {
      auto it = by_vec.find(t.vec);
      if (it == by_vec.end()) it = by_vec.emplace(t.vec, linalg::zero_vec(c.dim(), c.order)).first;
      it->second[t.coef] = it->second[t.coef] + t.coeff;
    }
    for (const auto& [j, coords] : by_vec) {
      if (!cf.contains(coords))
        structural_error("restrict_to_cf: coaction leaves the coefficient coalgebra");
      for (size_t a = 0; a < k; ++a) {
        const Scalar& s = coords[cf.pivots()[a]];
        if (!s.is_zero()) r.m.rho[i].push_back({j, a, s});
      }
    }
  }
  return r;
}

// socle chain of a comodule over its own (small) coalgebra
std::vector<Subspace> socle_chain_local(const Comodule& m) {
  const Coalgebra& c = *m.coalgebra;
  auto filtration = coradical_filtration(c);
  size_t d = m.dim();
  std::vector<Subspace> chain;
  Subspace prev(d);
  for (size_t step = 0; prev.dim() < d; ++step) {
    const Subspace& hn = step < filtration.size() ? filtration[step] : filtration.back();
    std::vector<Vec> residues(c.dim());
    for (size_t k = 0; k < c.dim(); ++k) {
      Vec e = linalg::zero_vec(c.dim(), c.order);
      e[k] = Scalar::one(c.order);
      residues[k] = hn.reduce(e);
    }
    std::map<std::pair<size_t, size_t>, Vec> rows;
    for (size_t i = 0; i < d; ++i)
      for (const auto& t : m.rho[i]) {
        const Vec& res = residues[t.coef];
        for (size_t k = 0; k < c.dim(); ++k) {
          if (res[k].is_zero()) continue;
          auto key = std::make_pair(t.vec, k);
          auto it = rows.find(key);
          if (it == rows.end()) it = rows.emplace(key, linalg::zero_vec(d, c.order)).first;
          it->second[i] = it->second[i] + t.coeff * res[k];
        }
      }
    RowSpan span(d);
    for (auto& [_, row] : rows) span.add(std::move(row));
    Subspace next = span.kernel(c.order);
    if (next.dim() <= prev.dim())
      structural_error("socle filtration stalled before exhausting the comodule");
    chain.push_back(next);
    prev = chain.back();
  }
  return chain;
}

}  // namespace

std::vector<Subspace> socle_filtration(const Comodule& m) {
  if (m.dim() == 0) return {};
  Restricted r = restrict_to_cf(m);
  return socle_chain_local(r.m);
}

std::vector<std::pair<std::string, size_t>> dimension_vector(const Comodule& m) {
  Restricted r = restrict_to_cf(m);
  const Coalgebra& c = r.coalg;
  CoradicalData cor = coradical(c);
  auto chain = socle_chain_local(r.m);
  size_t d = m.dim();
  const Subspace& h0 = cor.h0;

  std::vector<size_t> mult(cor.blocks.size(), 0);
  Subspace prev(d);
  for (const auto& mi : chain) {
    for (size_t bi = 0; bi < cor.blocks.size(); ++bi) {
      const auto& blk = cor.blocks[bi];
      // m -> (id (x) e_B) rho(m), with the coalgebra leg read in h0 coords
      auto apply = [&](const Vec& x) {
        auto t = r.m.rho_of(x);
        std::map<size_t, Vec> by_vec;
        for (const auto& [key, s] : t) {
          auto [j, k] = key;
          auto it = by_vec.find(j);
          if (it == by_vec.end()) it = by_vec.emplace(j, linalg::zero_vec(c.dim(), c.order)).first;
          it->second[k] = it->second[k] + s;
        }
        Vec img = linalg::zero_vec(d, c.order);
        for (const auto& [j, coords] : by_vec) {
          Vec red = h0.reduce(coords);
          Vec inside = coords;
          for (size_t q = 0; q < coords.size(); ++q) inside[q] = coords[q] - red[q];
          Scalar val = Scalar::zero(c.order);
          for (size_t a = 0; a < h0.dim(); ++a) {
            const Scalar& coord = inside[h0.pivots()[a]];
            if (!coord.is_zero()) val = val + coord * blk.idempotent[a];
          }
          img[j] = img[j] + val;
        }
        return img;
      };
      RowSpan cur(d), before(d);
      for (const auto& row : mi.basis()) cur.add(apply(row));
      for (const auto& row : prev.basis()) before.add(apply(row));
      size_t diff = cur.rank() - before.rank();
      if (diff % blk.sqrt_dim != 0)
        structural_error("dimension_vector: isotypic dimension not divisible by the block rank");
      mult[bi] += diff / blk.sqrt_dim;
    }
    prev = mi;
  }
  std::vector<std::pair<std::string, size_t>> out;
  for (size_t bi = 0; bi < cor.blocks.size(); ++bi)
    if (mult[bi] > 0) out.emplace_back(cor.blocks[bi].label, mult[bi]);
  return out;
}

std::vector<Mat> hom_space(const Comodule& m, const Comodule& n) {
  if (!m.coalgebra || !n.coalgebra || m.coalgebra->basis != n.coalgebra->basis)
    structural_error("hom_space: comodules over different coalgebras");
  const Coalgebra& c = *m.coalgebra;
  size_t dm = m.dim(), dn = n.dim();
  size_t unknowns = dn * dm;  // F[q][i], f(m_i) = sum_q F[q][i] n_q
  std::map<std::tuple<size_t, size_t, size_t>, Vec> rows;  // (i, q, k) -> row
  auto row_of = [&](size_t i, size_t q, size_t k) -> Vec& {
    auto key = std::make_tuple(i, q, k);
    auto it = rows.find(key);
    if (it == rows.end()) it = rows.emplace(key, linalg::zero_vec(unknowns, c.order)).first;
    return it->second;
  };
  for (size_t i = 0; i < dm; ++i) {
    for (const auto& t : m.rho[i])  // (f (x) id) rho_M
      for (size_t q = 0; q < dn; ++q) {
        Vec& row = row_of(i, q, t.coef);
        row[q * dm + t.vec] = row[q * dm + t.vec] + t.coeff;
      }
    for (size_t p = 0; p < dn; ++p)  // minus rho_N of f
      for (const auto& t : n.rho[p]) {
        Vec& row = row_of(i, t.vec, t.coef);
        row[p * dm + i] = row[p * dm + i] - t.coeff;
      }
  }
  Mat sys;
  sys.reserve(rows.size());
  for (auto& [_, r] : rows) sys.push_back(std::move(r));
  Mat ker = linalg::kernel(sys, unknowns, c.order);
  std::vector<Mat> homs;
  for (const auto& flat : ker) {
    Mat f(dn, linalg::zero_vec(dm, c.order));
    for (size_t q = 0; q < dn; ++q)
      for (size_t i = 0; i < dm; ++i) f[q][i] = flat[q * dm + i];
    homs.push_back(std::move(f));
  }
  return homs;
}

EndAlgebra end_analysis(const Comodule& m) {
  EndAlgebra e;
  size_t d = m.dim();
  int order = m.coalgebra->order;
  Mat flat;
  for (const auto& f : hom_space(m, m)) {
    Vec v;
    v.reserve(d * d);
    for (const auto& row : f) v.insert(v.end(), row.begin(), row.end());
    flat.push_back(std::move(v));
  }
  Subspace homsp(d * d, flat);
  size_t k = homsp.dim();
  for (const auto& v : homsp.basis()) {
    Mat f(d, linalg::zero_vec(d, order));
    for (size_t q = 0; q < d; ++q)
      for (size_t i = 0; i < d; ++i) f[q][i] = v[q * d + i];
    e.basis.push_back(std::move(f));
  }
  auto coords_of = [&](const Mat& f) {
    Vec v;
    v.reserve(d * d);
    for (const auto& row : f) v.insert(v.end(), row.begin(), row.end());
    if (!homsp.contains(v)) structural_error("end_analysis: composition leaves the hom space");
    Vec out(k, Scalar::zero(order));
    for (size_t a = 0; a < k; ++a) out[a] = v[homsp.pivots()[a]];
    return out;
  };
  e.alg.order = order;
  e.alg.table.assign(k, std::vector<Vec>(k));
  for (size_t a = 0; a < k; ++a)
    for (size_t b = 0; b < k; ++b)
      e.alg.table[a][b] = coords_of(linalg::mat_mul(e.basis[a], e.basis[b]));
  Mat id(d, linalg::zero_vec(d, order));
  for (size_t i = 0; i < d; ++i) id[i][i] = Scalar::one(order);
  e.alg.unit = coords_of(id);
  e.radical = corep::radical(e.alg);
  return e;
}

Indecomposability indecomposability(const Comodule& m) {
  EndAlgebra e = end_analysis(m);
  if (e.semisimple_dim() == 1) return Indecomposability::Absolutely;
  FinAlgebra ss = quotient_algebra(e.alg, e.radical);
  std::vector<Vec> idems;
  try {
    idems = central_primitive_idempotents(ss);
  } catch (const Error& err) {
    if (err.kind() != Error::Kind::NonSplit) throw;
    return Indecomposability::OverBaseField;
  }
  if (idems.size() > 1) return Indecomposability::Decomposable;
  try {
    MatrixUnits mu = block_matrix_units(ss, idems[0]);
    return mu.r > 1 ? Indecomposability::Decomposable : Indecomposability::Absolutely;
  } catch (const Error& err) {
    if (err.kind() != Error::Kind::NonSplit) throw;
    return Indecomposability::OverBaseField;
  }
}

bool is_abs_indecomposable(const Comodule& m) {
  return indecomposability(m) == Indecomposability::Absolutely;
}

std::optional<Mat> are_isomorphic(const Comodule& m, const Comodule& n) {
  size_t d = m.dim();
  if (d != n.dim()) return std::nullopt;
  if (d == 0) return Mat{};
  auto homs = hom_space(m, n);
  if (homs.empty()) return std::nullopt;
  // det(sum lambda_a f_a) has degree <= d in each lambda_a; vanishing on the
  // whole grid {0..d}^k certifies the zero polynomial, hence no isomorphism
  size_t k = homs.size();
  std::vector<size_t> idx(k, 0);
  for (;;) {
    Mat f(d, linalg::zero_vec(d, m.coalgebra->order));
    for (size_t a = 0; a < k; ++a) {
      if (idx[a] == 0) continue;
      for (size_t q = 0; q < d; ++q)
        linalg::add_scaled(f[q], homs[a][q], Scalar(static_cast<long>(idx[a])));
    }
    if (!linalg::det(f).is_zero()) return f;
    size_t pos = 0;
    while (pos < k && idx[pos] == d) idx[pos++] = 0;
    if (pos == k) break;
    ++idx[pos];
  }
  return std::nullopt;
}

std::vector<size_t> decompose_semisimple(const Comodule& m, const CoradicalData& cor) {
  const Coalgebra& c = *m.coalgebra;
  if (cor.h0.dim() != c.dim())
    structural_error("decompose_semisimple: coalgebra is not cosemisimple");
  size_t d = m.dim();
  std::vector<size_t> out;
  size_t total = 0;
  for (size_t bi = 0; bi < cor.blocks.size(); ++bi) {
    const auto& blk = cor.blocks[bi];
    Mat a(d, linalg::zero_vec(d, c.order));
    for (size_t i = 0; i < d; ++i)
      for (const auto& t : m.rho[i]) a[t.vec][i] = a[t.vec][i] + t.coeff * blk.idempotent[t.coef];
    size_t iso = linalg::rank(std::move(a));
    if (iso % blk.sqrt_dim != 0)
      structural_error("decompose_semisimple: isotypic dimension not divisible by block rank");
    for (size_t copy = 0; copy < iso / blk.sqrt_dim; ++copy) out.push_back(bi);
    total += iso;
  }
  if (total != d)
    structural_error("decompose_semisimple: comodule is not semisimple over this coradical");
  return out;
}

// ---------------------------------------------------------------------------
// the small comodules over a Hefuv truncation

namespace {
Mat coords_rows(const hopf::Truncation& t, const std::vector<hopf::Element>& elems) {
  Mat rows;
  for (const auto& e : elems) rows.push_back(t.coords(e));
  return rows;
}
std::shared_ptr<const Coalgebra> shared_coalgebra(const hopf::Truncation& t) {
  return std::make_shared<Coalgebra>(t.coalgebra);
}
}  // namespace

Comodule build_S(const hopf::Truncation& t) {
  const auto& h = t.hopf;
  return comodule_from_span(shared_coalgebra(t),
                            coords_rows(t, {h.generator("e1"), h.generator("f1")}));
}

Comodule build_U(const hopf::Truncation& t) {
  const auto& h = t.hopf;
  return comodule_from_span(shared_coalgebra(t),
                            coords_rows(t, {h.unit(), h.generator("u"), h.generator("v")}));
}

Comodule build_V(const hopf::Truncation& t) {
  const auto& h = t.hopf;
  hopf::Element u = h.generator("u"), v = h.generator("v");
  hopf::Element e1u = h.mul(h.generator("e1"), u);
  hopf::Element f1v = h.mul(h.generator("f1"), v);
  hopf::Element y = hopf::add(h.mul(h.generator("f1"), u), h.mul(h.generator("e1"), v));
  return comodule_from_span(shared_coalgebra(t),
                            coords_rows(t, {h.generator("e1"), h.generator("f1"), e1u, f1v, y}));
}

Comodule build_W(const hopf::Truncation& t, const Scalar& k) {
  if (k.is_zero()) parameter_error("W(k): k must be nonzero");
  const auto& h = t.hopf;
  hopf::Element g = h.generator("g"), u = h.generator("u"), v = h.generator("v");
  hopf::Element gu = h.mul(g, u), gv = h.mul(g, v);
  hopf::Element w2 = hopf::scale(g, k);
  hopf::Element w3 = hopf::sub(u, hopf::scale(gu, k));
  hopf::Element w4 = hopf::add(v, hopf::scale(gv, k));
  return comodule_from_span(shared_coalgebra(t), coords_rows(t, {h.unit(), w2, w3, w4}));
}

Comodule build_V0(const hopf::Truncation& t) {
  const auto& h = t.hopf;
  hopf::Element u = h.generator("u"), v = h.generator("v");
  return comodule_from_span(shared_coalgebra(t), coords_rows(t, {h.unit(), u, v, h.mul(u, v)}));
}

}  // namespace corep::comod
