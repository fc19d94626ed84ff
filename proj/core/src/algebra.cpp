#include "corep/algebra.hpp"

#include <algorithm>
#include <map>

namespace corep {

Vec FinAlgebra::mul(const Vec& a, const Vec& b) const {
  size_t n = dim();
  if (a.size() != n || b.size() != n) structural_error("FinAlgebra: coordinate size mismatch");
  Vec r = linalg::zero_vec(n, order);
  for (size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < n; ++j) {
      if (b[j].is_zero()) continue;
      linalg::add_scaled(r, table[i][j], a[i] * b[j]);
    }
  }
  return r;
}

Mat FinAlgebra::left_mul_matrix(const Vec& a) const {
  size_t n = dim();
  Mat m(n, linalg::zero_vec(n, order));
  for (size_t j = 0; j < n; ++j) {
    Vec ej = linalg::zero_vec(n, order);
    ej[j] = Scalar::one(order);
    Vec col = mul(a, ej);
    for (size_t i = 0; i < n; ++i) m[i][j] = col[i];
  }
  return m;
}

Subspace radical(const FinAlgebra& a) {
  size_t n = a.dim();
  // trace of left multiplication by each basis element
  Vec tr(n, Scalar::zero(a.order));
  for (size_t k = 0; k < n; ++k)
    for (size_t m = 0; m < n; ++m) tr[k] = tr[k] + a.table[k][m][m];
  Mat gram(n, linalg::zero_vec(n, a.order));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      Scalar s = Scalar::zero(a.order);
      for (size_t k = 0; k < n; ++k) {
        if (a.table[i][j][k].is_zero()) continue;
        s = s + a.table[i][j][k] * tr[k];
      }
      gram[i][j] = s;
    }
  return Subspace(n, linalg::kernel(gram, n, a.order));
}

FinAlgebra quotient_algebra(const FinAlgebra& a, const Subspace& ideal) {
  size_t n = a.dim();
  if (ideal.ambient() != n) structural_error("quotient_algebra: ambient mismatch");
  std::vector<bool> is_piv(n, false);
  for (size_t p : ideal.pivots()) is_piv[p] = true;
  std::vector<size_t> rep;  // coordinates surviving in the quotient
  for (size_t i = 0; i < n; ++i)
    if (!is_piv[i]) rep.push_back(i);
  size_t m = rep.size();
  auto project = [&](const Vec& v) {
    Vec red = ideal.reduce(v);
    Vec out(m, Scalar::zero(a.order));
    for (size_t i = 0; i < m; ++i) out[i] = red[rep[i]];
    return out;
  };
  FinAlgebra q;
  q.order = a.order;
  q.table.assign(m, std::vector<Vec>(m));
  for (size_t i = 0; i < m; ++i) {
    Vec bi = linalg::zero_vec(n, a.order);
    bi[rep[i]] = Scalar::one(a.order);
    for (size_t j = 0; j < m; ++j) {
      Vec bj = linalg::zero_vec(n, a.order);
      bj[rep[j]] = Scalar::one(a.order);
      q.table[i][j] = project(a.mul(bi, bj));
    }
  }
  q.unit = project(a.unit);
  return q;
}

namespace spoly {

void trim(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Scalar::zero());
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
  trim(r);
  return r;
}

Poly divmod(const Poly& a, const Poly& b, Poly& rem) {
  if (b.empty()) structural_error("spoly: division by zero polynomial");
  rem = a;
  trim(rem);
  Poly q;
  if (rem.size() >= b.size()) q.assign(rem.size() - b.size() + 1, Scalar::zero());
  Scalar lead_inv = b.back().inverse();
  while (rem.size() >= b.size()) {
    size_t shift = rem.size() - b.size();
    Scalar c = rem.back() * lead_inv;
    q[shift] = c;
    for (size_t i = 0; i < b.size(); ++i) rem[shift + i] = rem[shift + i] - c * b[i];
    trim(rem);
  }
  trim(q);
  return q;
}

Poly gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r;
    divmod(a, b, r);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Scalar inv = a.back().inverse();
    for (auto& c : a) c = c * inv;
  }
  return a;
}

Poly derivative(const Poly& p) {
  if (p.size() <= 1) return {};
  Poly r(p.size() - 1);
  for (size_t i = 1; i < p.size(); ++i) r[i - 1] = p[i] * Scalar(static_cast<long>(i));
  trim(r);
  return r;
}

Scalar eval(const Poly& p, const Scalar& x) {
  Scalar r = Scalar::zero(x.order());
  for (size_t i = p.size(); i-- > 0;) r = r * x + p[i];
  return r;
}

}  // namespace spoly

spoly::Poly minimal_polynomial(const Mat& m) {
  size_t n = m.size();
  if (n == 0) return {Scalar::one()};
  Mat power(n, linalg::zero_vec(n));
  for (size_t i = 0; i < n; ++i) power[i][i] = Scalar::one();
  std::vector<Vec> flats;  // vectorized powers
  RowSpan span(n * n);
  for (size_t k = 0;; ++k) {
    Vec flat;
    flat.reserve(n * n);
    for (const auto& row : power) flat.insert(flat.end(), row.begin(), row.end());
    if (!span.add(flat)) {
      // solve sum_j x_j flats[j] = flat
      Mat sys;
      for (size_t idx = 0; idx < n * n; ++idx) {
        Vec row(k + 1, Scalar::zero());
        for (size_t j = 0; j < k; ++j) row[j] = flats[j][idx];
        row[k] = flat[idx];
        sys.push_back(std::move(row));
      }
      std::vector<size_t> piv = linalg::rref(sys);
      spoly::Poly p(k + 1, Scalar::zero());
      p[k] = Scalar::one();
      for (size_t r = 0; r < sys.size(); ++r) {
        if (piv[r] >= k) structural_error("minimal_polynomial: inconsistent solve");
        p[piv[r]] = -sys[r][k];
      }
      return p;
    }
    flats.push_back(std::move(flat));
    power = linalg::mat_mul(power, m);
  }
}

namespace {

// divisors of |v| up to a search cap; empty if v too large to enumerate
std::vector<mpz_class> bounded_divisors(mpz_class v) {
  v = abs(v);
  std::vector<mpz_class> divs;
  if (v == 0 || v > mpz_class("1000000000000")) return divs;
  for (mpz_class d = 1; d * d <= v; ++d) {
    if (v % d == 0) {
      divs.push_back(d);
      if (d * d != v) divs.push_back(v / d);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

// rational roots of a polynomial with all-rational coefficients
std::vector<Scalar> rational_roots(const spoly::Poly& p, int order) {
  std::vector<Scalar> roots;
  if (p.size() < 2) return roots;
  mpz_class den(1);
  for (const auto& c : p) den = lcm(den, c.rational().get_den());
  std::vector<mpz_class> ic(p.size());
  for (size_t i = 0; i < p.size(); ++i) {
    Rat r = p[i].rational() * Rat(den);
    ic[i] = r.get_num();
  }
  size_t low = 0;
  while (low < ic.size() && ic[low] == 0) ++low;
  if (low > 0) roots.push_back(Scalar::zero(order));
  if (low + 1 >= ic.size()) return roots;
  std::vector<mpz_class> ps = bounded_divisors(ic[low]);
  std::vector<mpz_class> qs = bounded_divisors(ic.back());
  for (const auto& pn : ps)
    for (const auto& qn : qs) {
      for (int sign : {1, -1}) {
        Rat cand(pn * sign, qn);
        cand.canonicalize();
        Rat v(0);
        for (size_t i = ic.size(); i-- > 0;) v = v * cand + Rat(ic[i]);
        if (v == 0) roots.push_back(Scalar(cand, order));
      }
    }
  std::sort(roots.begin(), roots.end(), [](const Scalar& a, const Scalar& b) {
    return a.rational() < b.rational();
  });
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

bool all_rational(const spoly::Poly& p) {
  return std::all_of(p.begin(), p.end(), [](const Scalar& c) { return c.is_rational(); });
}

std::optional<Scalar> sqrt_in_field(const Scalar& disc, int order) {
  if (disc.is_zero()) return Scalar::zero(order);
  if (!disc.is_constant()) return std::nullopt;
  for (int j = 0; j < std::max(order, 1); ++j) {
    Scalar rot = disc * Scalar::zeta(order, -2L * j);
    if (!rot.is_rational()) continue;
    Rat v = rot.rational();
    if (v < 0) continue;
    mpz_class sn, sd;
    if (mpz_perfect_square_p(v.get_num().get_mpz_t()) && mpz_perfect_square_p(v.get_den().get_mpz_t())) {
      mpz_sqrt(sn.get_mpz_t(), v.get_num().get_mpz_t());
      mpz_sqrt(sd.get_mpz_t(), v.get_den().get_mpz_t());
      return Scalar(Rat(sn, sd), order) * Scalar::zeta(order, j);
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<Scalar> roots_in_field(const spoly::Poly& p_in, int order) {
  spoly::Poly p = p_in;
  spoly::trim(p);
  std::vector<Scalar> roots;
  if (p.size() < 2) return roots;
  // squarefree part
  spoly::Poly g = spoly::gcd(p, spoly::derivative(p));
  if (g.size() > 1) {
    spoly::Poly rem;
    p = spoly::divmod(p, g, rem);
  }
  for (;;) {
    spoly::trim(p);
    if (p.size() < 2) break;
    std::optional<Scalar> found;
    if (p.size() == 2) {
      found = -p[0] / p[1];
    } else {
      if (all_rational(p)) {
        auto rs = rational_roots(p, order);
        if (!rs.empty()) found = rs.front();
      }
      if (!found) {
        // roots of the form r * zeta^j with rational r
        for (int j = 1; j < order && !found; ++j) {
          spoly::Poly q(p.size());
          for (size_t k = 0; k < p.size(); ++k)
            q[k] = p[k] * Scalar::zeta(order, static_cast<long>(j) * static_cast<long>(k));
          if (!all_rational(q)) continue;
          auto rs = rational_roots(q, order);
          if (!rs.empty()) found = rs.front() * Scalar::zeta(order, j);
        }
      }
      if (!found && p.size() == 3) {
        Scalar disc = p[1] * p[1] - Scalar(4) * p[2] * p[0];
        if (auto sq = sqrt_in_field(disc, order))
          found = (-p[1] + *sq) / (Scalar(2) * p[2]);
      }
    }
    if (!found) break;
    roots.push_back(*found);
    // synthetic division by (x - root)
    spoly::Poly q(p.size() - 1, Scalar::zero(order));
    Scalar carry = Scalar::zero(order);
    for (size_t i = p.size(); i-- > 1;) {
      carry = p[i] + carry * (*found);
      q[i - 1] = carry;
    }
    p = std::move(q);
  }
  return roots;
}

namespace {

// identity element of the (semisimple) ideal spanned by the given rows;
// solves e*w = w for all basis vectors w with e inside the ideal
std::optional<Vec> ideal_identity(const FinAlgebra& alg, const Mat& cell) {
  size_t m = cell.size();
  size_t n = alg.dim();
  if (m == 0) return std::nullopt;
  // products v_a * w_b
  std::vector<std::vector<Vec>> prod(m, std::vector<Vec>(m));
  for (size_t a = 0; a < m; ++a)
    for (size_t b = 0; b < m; ++b) prod[a][b] = alg.mul(cell[a], cell[b]);
  Mat sys;
  for (size_t b = 0; b < m; ++b)
    for (size_t i = 0; i < n; ++i) {
      Vec row(m + 1, Scalar::zero(alg.order));
      for (size_t a = 0; a < m; ++a) row[a] = prod[a][b][i];
      row[m] = cell[b][i];
      sys.push_back(std::move(row));
    }
  std::vector<size_t> piv = linalg::rref(sys);
  Vec alpha(m, Scalar::zero(alg.order));
  for (size_t r = 0; r < sys.size(); ++r) {
    if (piv[r] >= m) return std::nullopt;  // inconsistent
    alpha[piv[r]] = sys[r][m];
  }
  Vec e = linalg::zero_vec(n, alg.order);
  for (size_t a = 0; a < m; ++a) linalg::add_scaled(e, cell[a], alpha[a]);
  return e;
}

Mat span_products(const FinAlgebra& alg, const Mat& gens, const Mat& mults_left) {
  RowSpan span(alg.dim());
  for (const auto& z : mults_left)
    for (const auto& g : gens) span.add(alg.mul(z, g));
  return span.to_subspace().basis();
}

}  // namespace

std::vector<Vec> central_primitive_idempotents(const FinAlgebra& alg) {
  size_t n = alg.dim();
  // center: z b_i = b_i z for all i
  Mat sys;
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k) {
      Vec row(n, Scalar::zero(alg.order));
      bool nonzero = false;
      for (size_t j = 0; j < n; ++j) {
        row[j] = alg.table[j][i][k] - alg.table[i][j][k];
        nonzero = nonzero || !row[j].is_zero();
      }
      if (nonzero) sys.push_back(std::move(row));
    }
  Mat center = linalg::kernel(sys, n, alg.order);
  if (center.empty()) structural_error("central idempotents: empty center");

  std::vector<Mat> cells = {center};
  auto try_replace = [&](size_t idx, Mat part1, Mat part2) -> bool {
    if (part1.empty() || part2.empty()) return false;
    if (part1.size() + part2.size() != cells[idx].size())
      structural_error("central idempotents: ideal split dimension mismatch (radical leak?)");
    cells[idx] = std::move(part1);
    cells.push_back(std::move(part2));
    return true;
  };

  // pass 1: refine by ideal supports z*Z and their annihilators
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& z : center) {
      for (size_t idx = 0; idx < cells.size(); ++idx) {
        if (cells[idx].size() <= 1) continue;
        Mat zc = span_products(alg, cells[idx], Mat{z});
        if (zc.empty() || zc.size() == cells[idx].size()) continue;
        Subspace cell_space(n, cells[idx]);
        Subspace part(n, zc);
        // annihilator of z within the cell
        Mat ann_sys;
        for (const auto& w : cells[idx]) ann_sys.push_back(alg.mul(z, w));
        // solve sum_a alpha_a (z*w_a) = 0
        Mat coeff;
        size_t m = cells[idx].size();
        for (size_t i = 0; i < n; ++i) {
          Vec row(m, Scalar::zero(alg.order));
          for (size_t a = 0; a < m; ++a) row[a] = ann_sys[a][i];
          coeff.push_back(std::move(row));
        }
        Mat ann_coords = linalg::kernel(coeff, m, alg.order);
        Mat ann;
        for (const auto& ac : ann_coords) {
          Vec v = linalg::zero_vec(n, alg.order);
          for (size_t a = 0; a < m; ++a) linalg::add_scaled(v, cells[idx][a], ac[a]);
          ann.push_back(std::move(v));
        }
        if (try_replace(idx, part.basis(), Subspace(n, ann).basis())) changed = true;
      }
    }
  }

  // pass 2: eigenvalue refinement inside remaining cells
  changed = true;
  while (changed) {
    changed = false;
    for (const auto& z : center) {
      for (size_t idx = 0; idx < cells.size(); ++idx) {
        if (cells[idx].size() <= 1) continue;
        const Mat& cell = cells[idx];
        size_t m = cell.size();
        Subspace cs(n, cell);
        // matrix of multiplication by z on the cell, in cell coordinates
        Mat op(m, linalg::zero_vec(m, alg.order));
        for (size_t b = 0; b < m; ++b) {
          Vec w = alg.mul(z, cell[b]);
          // coordinates against RREF basis rows: entry at each pivot
          for (size_t a = 0; a < m; ++a) op[a][b] = w[cs.pivots()[a]];
          Vec check = linalg::zero_vec(n, alg.order);
          for (size_t a = 0; a < m; ++a) linalg::add_scaled(check, cell[a], op[a][b]);
          for (size_t i = 0; i < n; ++i)
            if (check[i] != w[i]) structural_error("central idempotents: cell not invariant");
        }
        auto mp = minimal_polynomial(op);
        if (mp.size() <= 2) continue;  // scalar action, no split from z
        auto roots = roots_in_field(mp, alg.order);
        bool split_done = false;
        for (const auto& lam : roots) {
          Mat shifted = op;
          for (size_t a = 0; a < m; ++a) shifted[a][a] = shifted[a][a] - lam;
          Mat ker_coords = linalg::kernel(shifted, m, alg.order);
          if (ker_coords.empty() || ker_coords.size() == m) continue;
          // image of (op - lam) in algebra coordinates
          Mat img;
          {
            RowSpan span(n);
            for (size_t b = 0; b < m; ++b) {
              Vec v = linalg::zero_vec(n, alg.order);
              for (size_t a = 0; a < m; ++a) linalg::add_scaled(v, cell[a], shifted[a][b]);
              span.add(std::move(v));
            }
            img = span.to_subspace().basis();
          }
          Mat ker;
          for (const auto& kc : ker_coords) {
            Vec v = linalg::zero_vec(n, alg.order);
            for (size_t a = 0; a < m; ++a) linalg::add_scaled(v, cell[a], kc[a]);
            ker.push_back(std::move(v));
          }
          if (try_replace(idx, Subspace(n, ker).basis(), std::move(img))) {
            changed = true;
            split_done = true;
            break;
          }
        }
        if (split_done) break;
      }
    }
  }

  for (const auto& cell : cells)
    if (cell.size() > 1)
      nonsplit_error("a central cell of dimension " + std::to_string(cell.size()) +
                     " could not be split over this cyclotomic field");

  // normalize each 1-dimensional cell to an idempotent
  std::vector<Vec> idems;
  for (const auto& cell : cells) {
    const Vec& v = cell[0];
    Vec v2 = alg.mul(v, v);
    size_t nz = 0;
    while (nz < n && v[nz].is_zero()) ++nz;
    if (nz == n) structural_error("central idempotents: zero cell");
    Scalar c = v2[nz] / v[nz];
    if (c.is_zero()) structural_error("central idempotents: nilpotent cell (algebra not semisimple)");
    Vec check = linalg::scaled(v, c);
    for (size_t i = 0; i < n; ++i)
      if (check[i] != v2[i]) structural_error("central idempotents: cell not closed under squaring");
    idems.push_back(linalg::scaled(v, c.inverse()));
  }
  // deterministic order: by first nonzero coordinate position, then dimension
  std::sort(idems.begin(), idems.end(), [](const Vec& a, const Vec& b) {
    size_t ia = 0, ib = 0;
    while (ia < a.size() && a[ia].is_zero()) ++ia;
    while (ib < b.size() && b[ib].is_zero()) ++ib;
    return ia < ib;
  });
  return idems;
}

MatrixUnits block_matrix_units(const FinAlgebra& alg, const Vec& e) {
  size_t n = alg.dim();
  // the block e*A (e central)
  Mat block;
  {
    RowSpan span(n);
    for (size_t i = 0; i < n; ++i) {
      Vec ei = linalg::zero_vec(n, alg.order);
      ei[i] = Scalar::one(alg.order);
      span.add(alg.mul(e, ei));
    }
    block = span.to_subspace().basis();
  }
  size_t d = block.size();
  size_t r = 0;
  while (r * r < d) ++r;
  if (r * r != d)
    nonsplit_error("block dimension " + std::to_string(d) + " is not a perfect square");
  if (r == 1) return MatrixUnits{1, {e}};

  auto left_ideal_of = [&](const Vec& x) {
    RowSpan span(n);
    for (const auto& b : block) span.add(alg.mul(b, x));
    return span.to_subspace().basis();
  };

  // minimal left ideal search, deterministic candidate order
  Mat best;
  auto consider = [&](const Vec& x) {
    if (linalg::is_zero(x)) return false;
    Mat li = left_ideal_of(x);
    if (li.size() == r) {
      best = std::move(li);
      return true;
    }
    if (!li.empty() && (best.empty() || li.size() < best.size())) best = std::move(li);
    return false;
  };
  bool found = false;
  for (const auto& b : block)
    if ((found = consider(b))) break;
  if (!found)
    for (size_t i = 0; i < block.size() && !found; ++i)
      for (size_t j = 0; j < block.size() && !found; ++j)
        if (i != j) found = consider(alg.mul(block[i], block[j]));
  // eigen-refinement of the smallest ideal found so far
  while (!found && !best.empty() && best.size() > r) {
    size_t before = best.size();
    for (const auto& y : block) {
      size_t m = best.size();
      Subspace bs(n, best);
      Mat op(m, linalg::zero_vec(m, alg.order));
      bool invariant = true;
      for (size_t b = 0; b < m && invariant; ++b) {
        Vec w = alg.mul(y, best[b]);
        for (size_t a = 0; a < m; ++a) op[a][b] = w[bs.pivots()[a]];
        Vec check = linalg::zero_vec(n, alg.order);
        for (size_t a = 0; a < m; ++a) linalg::add_scaled(check, best[a], op[a][b]);
        for (size_t i = 0; i < n; ++i)
          if (check[i] != w[i]) invariant = false;
      }
      if (!invariant) continue;
      for (const auto& lam : roots_in_field(minimal_polynomial(op), alg.order)) {
        Mat shifted = op;
        for (size_t a = 0; a < m; ++a) shifted[a][a] = shifted[a][a] - lam;
        Mat kc = linalg::kernel(shifted, m, alg.order);
        if (kc.empty() || kc.size() == m) continue;
        Mat ker;
        for (const auto& c : kc) {
          Vec v = linalg::zero_vec(n, alg.order);
          for (size_t a = 0; a < m; ++a) linalg::add_scaled(v, best[a], c[a]);
          ker.push_back(std::move(v));
        }
        // a kernel of a module map is a submodule; take the smaller ideal
        best = std::move(ker);
        break;
      }
      if (best.size() == r) {
        found = true;
        break;
      }
      if (best.size() < before) break;
    }
    if (best.size() >= before && !found) break;
  }
  if (best.size() != r)
    nonsplit_error("no minimal left ideal of rank " + std::to_string(r) + " found in block");
  Mat column = best;

  // idempotent generating the column: u * eps = u for all u in the column
  size_t m = column.size();
  std::vector<std::vector<Vec>> prod(m, std::vector<Vec>(m));
  for (size_t a = 0; a < m; ++a)
    for (size_t b = 0; b < m; ++b) prod[a][b] = alg.mul(column[b], column[a]);  // u_b * v_a
  Mat sys;
  for (size_t b = 0; b < m; ++b)
    for (size_t i = 0; i < n; ++i) {
      Vec row(m + 1, Scalar::zero(alg.order));
      for (size_t a = 0; a < m; ++a) row[a] = prod[a][b][i];
      row[m] = column[b][i];
      sys.push_back(std::move(row));
    }
  std::vector<size_t> piv = linalg::rref(sys);
  Vec alpha(m, Scalar::zero(alg.order));
  for (size_t rr = 0; rr < sys.size(); ++rr) {
    if (piv[rr] >= m) nonsplit_error("column ideal has no generating idempotent");
    alpha[piv[rr]] = sys[rr][m];
  }
  Vec eps = linalg::zero_vec(n, alg.order);
  for (size_t a = 0; a < m; ++a) linalg::add_scaled(eps, column[a], alpha[a]);

  // row space eps*A and column space A*eps
  Mat rows, cols;
  {
    RowSpan rs(n), csp(n);
    for (size_t i = 0; i < n; ++i) {
      Vec ei = linalg::zero_vec(n, alg.order);
      ei[i] = Scalar::one(alg.order);
      rs.add(alg.mul(eps, ei));
      csp.add(alg.mul(ei, eps));
    }
    rows = rs.to_subspace().basis();
    cols = csp.to_subspace().basis();
  }
  if (rows.size() != r || cols.size() != r)
    nonsplit_error("corner spaces of the block have wrong dimension");

  // eps*A*eps must be spanned by eps alone
  Vec e2 = alg.mul(eps, eps);
  for (size_t i = 0; i < n; ++i)
    if (e2[i] != eps[i]) structural_error("matrix units: eps not idempotent");

  // pairing rows x cols -> k*eps; gamma[q][p] from w_q * a_p = gamma * eps
  size_t pivot = 0;
  while (pivot < n && eps[pivot].is_zero()) ++pivot;
  Mat gamma(r, linalg::zero_vec(r, alg.order));
  for (size_t q = 0; q < r; ++q)
    for (size_t p = 0; p < r; ++p) {
      Vec w = alg.mul(rows[q], cols[p]);
      Scalar c = w[pivot] / eps[pivot];
      Vec check = linalg::scaled(eps, c);
      for (size_t i = 0; i < n; ++i)
        if (check[i] != w[i]) nonsplit_error("corner algebra is larger than the ground field");
      gamma[q][p] = c;
    }
  auto gamma_inv = linalg::inverse(gamma);
  if (!gamma_inv) nonsplit_error("degenerate pairing between row and column spaces");

  // dual rows b_p = sum_q inv[p][q] w_q, then E_pq = a_p * b_q
  std::vector<Vec> dual(r, linalg::zero_vec(n, alg.order));
  for (size_t p = 0; p < r; ++p)
    for (size_t q = 0; q < r; ++q) linalg::add_scaled(dual[p], rows[q], (*gamma_inv)[p][q]);

  MatrixUnits mu;
  mu.r = r;
  mu.units.resize(r * r);
  for (size_t p = 0; p < r; ++p)
    for (size_t q = 0; q < r; ++q) mu.units[p * r + q] = alg.mul(cols[p], dual[q]);

  // sanity: units sum to e and multiply like matrix units
  Vec sum = linalg::zero_vec(n, alg.order);
  for (size_t p = 0; p < r; ++p) linalg::add_scaled(sum, mu.units[p * r + p], Scalar::one(alg.order));
  for (size_t i = 0; i < n; ++i)
    if (sum[i] != e[i]) structural_error("matrix units do not sum to the block idempotent");
  return mu;
}

}  // namespace corep
