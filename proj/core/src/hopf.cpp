#include "corep/hopf.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace corep::hopf {

void add_term(Element& e, const Mono& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = e.find(m);
  if (it == e.end()) {
    e.emplace(m, c);
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) e.erase(it);
  }
}

Element scale(const Element& e, const Scalar& c) {
  Element r;
  if (c.is_zero()) return r;
  for (const auto& [m, s] : e) r.emplace(m, s * c);
  return r;
}

Element add(const Element& a, const Element& b) {
  Element r = a;
  for (const auto& [m, s] : b) add_term(r, m, s);
  return r;
}

Element sub(const Element& a, const Element& b) {
  Element r = a;
  for (const auto& [m, s] : b) add_term(r, m, -s);
  return r;
}

bool is_zero(const Element& e) { return e.empty(); }

namespace {

template <size_t N>
void add_tensor_term(Tensor<N>& t, const std::array<Mono, N>& key, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = t.find(key);
  if (it == t.end()) {
    t.emplace(key, c);
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) t.erase(it);
  }
}

Tensor<2> tensor_of(const Element& a, const Element& b) {
  Tensor<2> t;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) add_tensor_term<2>(t, {ma, mb}, ca * cb);
  return t;
}

long floordiv(long a, long b) {
  long q = a / b, r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

long posmod(long a, long b) {
  long r = a % b;
  if (r < 0) r += std::abs(b);
  return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// builders

PresentedHopf PresentedHopf::Hefuv() {
  PresentedHopf h;
  h.family_ = Family::Hefuv;
  h.order_ = 1;
  return h;
}

PresentedHopf PresentedHopf::A(long n, long d, const Scalar& mu, const Scalar& q) {
  PresentedHopf h;
  h.family_ = Family::A;
  if (n < 1) parameter_error("A(n,d,mu,q): n must be >= 1");
  if (d < 2) parameter_error("A(n,d,mu,q): d must be >= 2");
  if (n % d != 0) parameter_error("A(n,d,mu,q): d must divide n");
  if (!q.pow(d).is_one()) parameter_error("A(n,d,mu,q): q^d must be 1");
  for (long e = 1; e < d; ++e)
    if (q.pow(e).is_one()) parameter_error("A(n,d,mu,q): the order of q must be exactly d");
  h.order_ = std::lcm(mu.order(), q.order());
  h.n_ = n;
  h.d_ = d;
  h.mu_ = mu.promoted(h.order_);
  h.q_ = q.promoted(h.order_);
  return h;
}

PresentedHopf PresentedHopf::Anq(long n, const Scalar& q) {
  PresentedHopf h;
  h.family_ = Family::Anq;
  if (n < 2) parameter_error("A(n,q): n must be >= 2");
  if (!q.pow(n).is_one()) parameter_error("A(n,q): q^n must be 1");
  for (long e = 1; e < n; ++e)
    if (q.pow(e).is_one()) parameter_error("A(n,q): q must be a primitive n-th root of unity");
  h.order_ = q.order();
  h.n_ = n;
  h.q_ = q;
  return h;
}

PresentedHopf PresentedHopf::Hinf(const Scalar& chi_g, const Scalar& lambda_g) {
  PresentedHopf h;
  h.family_ = Family::Hinf;
  if (chi_g.is_zero()) parameter_error("H_inf(chi,lambda): chi(g) must be nonzero");
  if (!chi_g.is_one() && chi_g.is_root_of_unity())
    parameter_error("H_inf(chi,lambda): chi(g) must be 1 or not a root of unity");
  h.order_ = std::lcm(chi_g.order(), lambda_g.order());
  h.chi_ = chi_g.promoted(h.order_);
  h.lam_ = lambda_g.promoted(h.order_);
  return h;
}

PresentedHopf PresentedHopf::Bmn(long m, long n, const Scalar& lambda, const Scalar& s, const Scalar& t,
                                 const Scalar& k) {
  PresentedHopf h;
  h.family_ = Family::Bmn;
  if ((m == 1 && n == 1) || (m == -1 && n == -1)) parameter_error("B(m,n): (m,n) = +-(1,1) is excluded");
  if ((m + n) % 2 != 0) parameter_error("B(m,n): m + n must be even");
  if (lambda.is_zero()) parameter_error("B(m,n): lambda must be nonzero");
  if (m != 0 || n != 0) {
    // crossing x over g^m = h^n forces lambda^gcd(m,n) = 1
    long g = std::gcd(std::abs(m), std::abs(n));
    if (!lambda.pow(g).is_one())
      parameter_error("B(m,n): lambda^gcd(m,n) must be 1 for the presentation to be consistent");
  }
  h.order_ = std::lcm(std::lcm(lambda.order(), s.order()), std::lcm(t.order(), k.order()));
  h.m_ = m;
  h.n_ = n;
  h.lam_ = lambda.promoted(h.order_);
  h.s_ = s.promoted(h.order_);
  h.t_ = t.promoted(h.order_);
  h.k_ = k.promoted(h.order_);
  return h;
}

std::string PresentedHopf::family_name() const {
  switch (family_) {
    case Family::Hefuv: return "Hefuv";
    case Family::A: return "A";
    case Family::Anq: return "Anq";
    case Family::Hinf: return "Hinf";
    case Family::Bmn: return "Bmn";
  }
  return "?";
}

bool PresentedHopf::finite_dimensional() const { return family_ == Family::A; }

// ---------------------------------------------------------------------------
// normal forms and products

Mono PresentedHopf::canonical_group_(long a, long b) const {
  if (family_ != Family::Bmn) structural_error("canonical_group_: wrong family");
  // lattice generated by (m, -n)
  if (m_ != 0) {
    long aa = posmod(a, m_);
    long k = (aa - a) / m_;
    return Mono{aa, b - k * n_, 0, 0};
  }
  if (n_ != 0) {
    long bb = posmod(b, n_);
    return Mono{a, bb, 0, 0};
  }
  return Mono{a, b, 0, 0};
}

Scalar PresentedHopf::lambda_of_power_(long a) const {
  if (chi_.is_one()) return lam_ * Scalar(a, order_);
  // lambda(g^a) = lambda(g) * (chi^a - 1)/(chi - 1)
  return lam_ * (chi_.pow(a) - Scalar::one(order_)) / (chi_ - Scalar::one(order_));
}

Element PresentedHopf::unit() const {
  Element e;
  switch (family_) {
    case Family::Hefuv:
      e.emplace(Mono{0, 0, 0, 0}, Scalar::one(order_));
      e.emplace(Mono{0, 0, 1, 0}, Scalar::one(order_));
      break;
    default:
      e.emplace(Mono{0, 0, 0, 0}, Scalar::one(order_));
  }
  return e;
}

Element PresentedHopf::mono_element(const Mono& m) const {
  Mono mm = m;
  if (family_ == Family::Bmn) {
    Mono g = canonical_group_(m.a, m.b);
    mm.a = g.a;
    mm.b = g.b;
  } else if (family_ == Family::A) {
    mm.a = posmod(m.a, n_);
  }
  Element e;
  e.emplace(mm, Scalar::one(order_));
  return e;
}

Element PresentedHopf::generator(const std::string& name) const {
  auto mono1 = [&](Mono m) { return mono_element(m); };
  if (family_ == Family::Hefuv) {
    if (name == "u") return add(mono1({0, 0, 0, 1}), mono1({0, 0, 1, 1}));
    if (name == "v") return add(mono1({0, 0, 0, 2}), mono1({0, 0, 1, 2}));
    if (name == "g") return sub(mono1({0, 0, 0, 0}), mono1({0, 0, 1, 0}));
    if (name == "1") return unit();
    if ((name[0] == 'e' || name[0] == 'f') && name.size() > 1) {
      long i = std::stol(name.substr(1));
      return mono1({i, 0, name[0] == 'f' ? 1 : 0, 0});
    }
    parse_error("unknown Hefuv generator '" + name + "'");
  }
  if (name == "1") return unit();
  if (name == "g") return family_ == Family::A ? mono1({posmod(1, n_), 0, 0, 0})
                    : family_ == Family::Bmn  ? mono_element(canonical_group_(1, 0))
                                              : mono1({1, 0, 0, 0});
  if (name == "g^-1") {
    if (family_ == Family::A) return mono1({posmod(-1, n_), 0, 0, 0});
    if (family_ == Family::Bmn) return mono_element(canonical_group_(-1, 0));
    return mono1({-1, 0, 0, 0});
  }
  if (name == "x") return family_ == Family::Bmn ? mono1({0, 0, 1, 0}) : mono1({0, 1, 0, 0});
  if (family_ == Family::Bmn) {
    if (name == "h") return mono_element(canonical_group_(0, 1));
    if (name == "h^-1") return mono_element(canonical_group_(0, -1));
    if (name == "y") return mono1({0, 0, 0, 1});
  }
  parse_error("unknown generator '" + name + "' for family " + family_name());
}

Element PresentedHopf::append_x_(const Element& e) const {
  Element out;
  const Scalar one = Scalar::one(order_);
  for (const auto& [m, c] : e) {
    if (m.t2 == 0) {
      if (m.t1 == 0) {
        add_term(out, canonical_group_plus(m, 0, 0, 1, 0), c);
      } else {
        // x^2 = s (1 - g^2)
        add_term(out, canonical_group_plus(m, 0, 0, -1, 0), c * s_);
        add_term(out, canonical_group_plus(m, 2, 0, -1, 0), -(c * s_));
      }
    } else {
      // ... y x = lambda^{-1} k (1 - g h) ... - lambda^{-1} ... x y
      Scalar linv = lam_.inverse();
      add_term(out, canonical_group_plus(m, 0, 0, 0, -1), c * k_ * linv);
      add_term(out, canonical_group_plus(m, 1, 1, 0, -1), -(c * k_ * lam_.pow(m.t1 - 1)));
      if (m.t1 == 0) {
        add_term(out, canonical_group_plus(m, 0, 0, 1, 0), -(c * linv));
      } else {
        add_term(out, canonical_group_plus(m, 0, 0, -1, 0), -(c * linv * s_));
        add_term(out, canonical_group_plus(m, 2, 0, -1, 0), c * linv * s_);
      }
    }
  }
  return out;
}

Element PresentedHopf::append_y_(const Element& e) const {
  Element out;
  for (const auto& [m, c] : e) {
    if (m.t2 == 0) {
      add_term(out, canonical_group_plus(m, 0, 0, 0, 1), c);
    } else {
      // y^2 = t (1 - h^2)
      add_term(out, canonical_group_plus(m, 0, 0, 0, -1), c * t_);
      add_term(out, canonical_group_plus(m, 0, 2, 0, -1), -(c * t_ * lam_.pow(2 * m.t1)));
    }
  }
  return out;
}

Element PresentedHopf::mul_mono(const Mono& x, const Mono& y) const {
  Element out;
  const Scalar one = Scalar::one(order_);
  switch (family_) {
    case Family::Hefuv: {
      // cross the second group part over the first tail, then merge
      int tail1 = x.t2, tail2 = y.t2;
      int letters1 = (tail1 & 1 ? 1 : 0) + (tail1 & 2 ? 1 : 0);
      if (x.t1 != y.t1) return out;  // e-side times f-side vanishes
      if (tail1 & tail2) return out;
      long sgn = 1;
      if ((y.a * letters1) % 2 != 0) sgn = -sgn;
      if ((tail1 & 2) && (tail2 & 1)) sgn = -sgn;  // v before u
      add_term(out, Mono{x.a + y.a, 0, x.t1, tail1 | tail2}, Scalar(sgn, order_));
      return out;
    }
    case Family::A: {
      Scalar c = q_.pow(x.b * y.a);
      long a = posmod(x.a + y.a, n_);
      long b = x.b + y.b;
      if (b < d_) {
        add_term(out, Mono{a, b, 0, 0}, c);
      } else {
        // x^d = mu (1 - g^d)
        add_term(out, Mono{a, b - d_, 0, 0}, c * mu_);
        add_term(out, Mono{posmod(a + d_, n_), b - d_, 0, 0}, -(c * mu_));
      }
      return out;
    }
    case Family::Anq: {
      Scalar c = q_.pow(x.b * y.a);
      long a = x.a + y.a;
      long b = x.b + y.b;
      if (b < n_) {
        add_term(out, Mono{a, b, 0, 0}, c);
      } else {
        // x^n = 1 - g^n
        add_term(out, Mono{a, b - n_, 0, 0}, c);
        add_term(out, Mono{a + n_, b - n_, 0, 0}, -c);
      }
      return out;
    }
    case Family::Hinf: {
      // x^{b1} g^{a2} x^{b2}, then shift by g^{a1}
      Element acc;
      acc.emplace(Mono{y.a, 0, 0, 0}, one);
      for (long step = 0; step < x.b; ++step) {
        Element next;
        for (const auto& [m, c] : acc) {
          add_term(next, Mono{m.a, m.b + 1, 0, 0}, c * chi_.pow(m.a));
          Scalar lam_a = lambda_of_power_(m.a);
          if (!lam_a.is_zero()) {
            add_term(next, Mono{m.a, m.b, 0, 0}, c * lam_a);
            add_term(next, Mono{m.a + 1, m.b, 0, 0}, -(c * lam_a));
          }
        }
        acc = std::move(next);
      }
      for (const auto& [m, c] : acc) add_term(out, Mono{m.a + x.a, m.b + y.b, 0, 0}, c);
      return out;
    }
    case Family::Bmn: {
      // cross the first tail over the second group part
      Scalar c = one;
      if (x.t1) c = c * Scalar(-1, order_).pow(y.a) * (-lam_).pow(y.b);
      if (x.t2) c = c * (-lam_.inverse()).pow(y.a) * Scalar(-1, order_).pow(y.b);
      Mono base = canonical_group_(x.a + y.a, x.b + y.b);
      base.t1 = x.t1;
      base.t2 = x.t2;
      Element acc;
      acc.emplace(base, c);
      if (y.t1) acc = append_x_(acc);
      if (y.t2) acc = append_y_(acc);
      return acc;
    }
  }
  return out;
}

// Bmn helper: shift a monomial's group part and tail degrees, canonically.
Mono PresentedHopf::canonical_group_plus(const Mono& m, long da, long db, int dt1, int dt2) const {
  Mono g = canonical_group_(m.a + da, m.b + db);
  g.t1 = m.t1 + dt1;
  g.t2 = m.t2 + dt2;
  return g;
}

Element PresentedHopf::mul(const Element& x, const Element& y) const {
  Element out;
  for (const auto& [mx, cx] : x)
    for (const auto& [my, cy] : y) {
      Element part = mul_mono(mx, my);
      Scalar c = cx * cy;
      for (const auto& [m, s] : part) add_term(out, m, s * c);
    }
  return out;
}

Tensor<2> PresentedHopf::tensor_mul(const Tensor<2>& x, const Tensor<2>& y) const {
  Tensor<2> out;
  for (const auto& [kx, cx] : x)
    for (const auto& [ky, cy] : y) {
      Element left = mul_mono(kx[0], ky[0]);
      if (left.empty()) continue;
      Element right = mul_mono(kx[1], ky[1]);
      if (right.empty()) continue;
      Scalar c = cx * cy;
      for (const auto& [ml, cl] : left)
        for (const auto& [mr, cr] : right) add_tensor_term<2>(out, {ml, mr}, c * cl * cr);
    }
  return out;
}

Tensor<3> PresentedHopf::tensor_mul(const Tensor<3>& x, const Tensor<3>& y) const {
  Tensor<3> out;
  for (const auto& [kx, cx] : x)
    for (const auto& [ky, cy] : y) {
      Element a = mul_mono(kx[0], ky[0]);
      if (a.empty()) continue;
      Element b = mul_mono(kx[1], ky[1]);
      if (b.empty()) continue;
      Element c3 = mul_mono(kx[2], ky[2]);
      if (c3.empty()) continue;
      Scalar c = cx * cy;
      for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b)
          for (const auto& [mc, cc] : c3) add_tensor_term<3>(out, {ma, mb, mc}, c * ca * cb * cc);
    }
  return out;
}

Tensor<2> PresentedHopf::delta_mono(const Mono& m) const {
  const Scalar one = Scalar::one(order_);
  Tensor<2> t;
  switch (family_) {
    case Family::Hefuv: {
      Tensor<2> comp;
      if (m.t1 == 0) {
        add_tensor_term<2>(comp, {Mono{m.a, 0, 0, 0}, Mono{m.a, 0, 0, 0}}, one);
        add_tensor_term<2>(comp, {Mono{m.a, 0, 1, 0}, Mono{-m.a, 0, 1, 0}}, one);
      } else {
        add_tensor_term<2>(comp, {Mono{m.a, 0, 0, 0}, Mono{m.a, 0, 1, 0}}, one);
        add_tensor_term<2>(comp, {Mono{m.a, 0, 1, 0}, Mono{-m.a, 0, 0, 0}}, one);
      }
      t = std::move(comp);
      if (m.t2 & 1) t = tensor_mul(t, delta_letter_u_());
      if (m.t2 & 2) t = tensor_mul(t, delta_letter_v_());
      return t;
    }
    case Family::A:
    case Family::Anq:
    case Family::Hinf: {
      add_tensor_term<2>(t, {Mono{m.a, 0, 0, 0}, Mono{m.a, 0, 0, 0}}, one);
      Tensor<2> dx;
      if (family_ == Family::Anq) {
        // x (x) 1 + g (x) x
        add_tensor_term<2>(dx, {Mono{0, 1, 0, 0}, Mono{0, 0, 0, 0}}, one);
        add_tensor_term<2>(dx, {Mono{1, 0, 0, 0}, Mono{0, 1, 0, 0}}, one);
      } else {
        // 1 (x) x + x (x) g
        add_tensor_term<2>(dx, {Mono{0, 0, 0, 0}, Mono{0, 1, 0, 0}}, one);
        long ga = family_ == Family::A ? posmod(1, n_) : 1;
        add_tensor_term<2>(dx, {Mono{0, 1, 0, 0}, Mono{ga, 0, 0, 0}}, one);
      }
      for (long i = 0; i < m.b; ++i) t = tensor_mul(t, dx);
      return t;
    }
    case Family::Bmn: {
      add_tensor_term<2>(t, {Mono{m.a, m.b, 0, 0}, Mono{m.a, m.b, 0, 0}}, one);
      if (m.t1) {
        Tensor<2> dx;
        add_tensor_term<2>(dx, {canonical_group_(0, 0), Mono{canonical_group_(0, 0).a, canonical_group_(0, 0).b, 1, 0}}, one);
        Mono g1 = canonical_group_(1, 0);
        Mono xm = canonical_group_(0, 0);
        xm.t1 = 1;
        add_tensor_term<2>(dx, {xm, g1}, one);
        t = tensor_mul(t, dx);
      }
      if (m.t2) {
        Tensor<2> dy;
        Mono ym = canonical_group_(0, 0);
        ym.t2 = 1;
        add_tensor_term<2>(dy, {canonical_group_(0, 0), ym}, one);
        Mono h1 = canonical_group_(0, 1);
        add_tensor_term<2>(dy, {ym, h1}, one);
        t = tensor_mul(t, dy);
      }
      return t;
    }
  }
  return t;
}

Tensor<2> PresentedHopf::delta_letter_u_() const {
  const Scalar one = Scalar::one(order_);
  // 1 (x) u + u (x) e_1 + v (x) f_{-1}
  Tensor<2> t;
  for (int c1 : {0, 1})
    for (int c2 : {0, 1}) add_tensor_term<2>(t, {Mono{0, 0, c1, 0}, Mono{0, 0, c2, 1}}, one);
  for (int c1 : {0, 1}) {
    add_tensor_term<2>(t, {Mono{0, 0, c1, 1}, Mono{1, 0, 0, 0}}, one);
    add_tensor_term<2>(t, {Mono{0, 0, c1, 2}, Mono{-1, 0, 1, 0}}, one);
  }
  return t;
}

Tensor<2> PresentedHopf::delta_letter_v_() const {
  const Scalar one = Scalar::one(order_);
  // 1 (x) v + u (x) f_1 + v (x) e_{-1}
  Tensor<2> t;
  for (int c1 : {0, 1})
    for (int c2 : {0, 1}) add_tensor_term<2>(t, {Mono{0, 0, c1, 0}, Mono{0, 0, c2, 2}}, one);
  for (int c1 : {0, 1}) {
    add_tensor_term<2>(t, {Mono{0, 0, c1, 1}, Mono{1, 0, 1, 0}}, one);
    add_tensor_term<2>(t, {Mono{0, 0, c1, 2}, Mono{-1, 0, 0, 0}}, one);
  }
  return t;
}

Tensor<2> PresentedHopf::delta(const Element& x) const {
  Tensor<2> t;
  for (const auto& [m, c] : x) {
    Tensor<2> dm = delta_mono(m);
    for (const auto& [k, s] : dm) add_tensor_term<2>(t, k, s * c);
  }
  return t;
}

Scalar PresentedHopf::counit(const Element& x) const {
  Scalar r = Scalar::zero(order_);
  for (const auto& [m, c] : x) {
    bool nonzero;
    if (family_ == Family::Hefuv)
      nonzero = (m.t1 == 0 && m.t2 == 0);  // eps(e_i) = 1, eps(f_i) = 0
    else if (family_ == Family::Bmn)
      nonzero = (m.t1 == 0 && m.t2 == 0);
    else
      nonzero = (m.b == 0);
    if (nonzero) r = r + c;
  }
  return r;
}

Element PresentedHopf::antipode_mono(const Mono& m) const {
  const Scalar one = Scalar::one(order_);
  switch (family_) {
    case Family::Hefuv: {
      // S(comp_i w1 w2) = S(w2) S(w1) S(comp_i)
      Element comp = mono_element(Mono{m.t1 == 0 ? -m.a : m.a, 0, m.t1, 0});
      Element acc = comp;
      if (m.t2 & 1) acc = mul(antipode_letter_u_(), acc);
      if (m.t2 & 2) acc = mul(antipode_letter_v_(), acc);
      return acc;
    }
    case Family::A: {
      Element g_inv_a = mono_element(Mono{posmod(-m.a, n_), 0, 0, 0});
      Element sx;  // -x g^{n-1}
      sx.emplace(Mono{posmod(-1, n_), 1, 0, 0}, -q_.pow(posmod(-1, n_)));
      // S(g^a x^b) = S(x)^b S(g)^a
      Element acc = unit();
      for (long i = 0; i < m.b; ++i) acc = mul(acc, sx);
      return mul(acc, g_inv_a);
    }
    case Family::Anq: {
      Element sx;  // -g^{-1} x
      sx.emplace(Mono{-1, 1, 0, 0}, -one);
      Element acc = unit();
      for (long i = 0; i < m.b; ++i) acc = mul(acc, sx);
      return mul(acc, mono_element(Mono{-m.a, 0, 0, 0}));
    }
    case Family::Hinf: {
      Element sx = scale(mul_mono(Mono{0, 1, 0, 0}, Mono{-1, 0, 0, 0}), -one);  // -x g^{-1}
      Element acc = unit();
      for (long i = 0; i < m.b; ++i) acc = mul(acc, sx);
      return mul(acc, mono_element(Mono{-m.a, 0, 0, 0}));
    }
    case Family::Bmn: {
      Element acc = unit();
      if (m.t2) {  // S(y) = -y h^{-1}
        Mono y0 = canonical_group_(0, 0);
        y0.t2 = 1;
        acc = mul(acc, scale(mul_mono(y0, canonical_group_(0, -1)), -one));
      }
      if (m.t1) {  // S(x) = -x g^{-1}
        Mono x0 = canonical_group_(0, 0);
        x0.t1 = 1;
        acc = mul(acc, scale(mul_mono(x0, canonical_group_(-1, 0)), -one));
      }
      return mul(acc, mono_element(canonical_group_(-m.a, -m.b)));
    }
  }
  return {};
}

Element PresentedHopf::antipode_letter_u_() const {
  // S(u) = -v f_{-1} - u e_{-1}
  Element v = generator("v"), u = generator("u");
  return sub(scale(mul(v, mono_element(Mono{-1, 0, 1, 0})), Scalar(-1, order_)),
             mul(u, mono_element(Mono{-1, 0, 0, 0})));
}

Element PresentedHopf::antipode_letter_v_() const {
  // S(v) = -u f_1 - v e_1
  Element v = generator("v"), u = generator("u");
  return sub(scale(mul(u, mono_element(Mono{1, 0, 1, 0})), Scalar(-1, order_)),
             mul(v, mono_element(Mono{1, 0, 0, 0})));
}

Element PresentedHopf::antipode(const Element& x) const {
  Element out;
  for (const auto& [m, c] : x) {
    Element sm = antipode_mono(m);
    for (const auto& [mm, cc] : sm) add_term(out, mm, cc * c);
  }
  return out;
}

std::string PresentedHopf::mono_str(const Mono& m) const {
  std::ostringstream out;
  switch (family_) {
    case Family::Hefuv: {
      out << (m.t1 == 0 ? 'e' : 'f') << '[' << m.a << ']';
      if (m.t2 & 1) out << 'u';
      if (m.t2 & 2) out << 'v';
      return out.str();
    }
    case Family::Bmn: {
      bool any = false;
      auto pow_str = [&](char sym, long e) {
        if (e == 0) return;
        any = true;
        out << sym;
        if (e != 1) out << '^' << e;
      };
      pow_str('g', m.a);
      pow_str('h', m.b);
      if (m.t1) {
        out << 'x';
        any = true;
      }
      if (m.t2) {
        out << 'y';
        any = true;
      }
      if (!any) out << '1';
      return out.str();
    }
    default: {
      bool any = false;
      if (m.a != 0) {
        out << 'g';
        if (m.a != 1) out << '^' << m.a;
        any = true;
      }
      if (m.b != 0) {
        out << 'x';
        if (m.b != 1) out << '^' << m.b;
        any = true;
      }
      if (!any) out << '1';
      return out.str();
    }
  }
}

std::string PresentedHopf::element_str(const Element& e) const {
  if (e.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : e) {
    if (!first) out << " + ";
    out << "(" << c.str() << ")*" << mono_str(m);
    first = false;
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// generators, relations, axiom checks

std::vector<std::pair<std::string, Element>> PresentedHopf::generator_list(long window) const {
  std::vector<std::pair<std::string, Element>> gens;
  if (family_ == Family::Hefuv) {
    gens.emplace_back("u", generator("u"));
    gens.emplace_back("v", generator("v"));
    for (long i = -window; i <= window; ++i) {
      gens.emplace_back("e" + std::to_string(i), generator("e" + std::to_string(i)));
      gens.emplace_back("f" + std::to_string(i), generator("f" + std::to_string(i)));
    }
    return gens;
  }
  gens.emplace_back("g", generator("g"));
  if (family_ != Family::A) gens.emplace_back("g^-1", generator("g^-1"));
  gens.emplace_back("x", generator("x"));
  if (family_ == Family::Bmn) {
    gens.emplace_back("h", generator("h"));
    gens.emplace_back("h^-1", generator("h^-1"));
    gens.emplace_back("y", generator("y"));
  }
  return gens;
}

std::vector<FormalRelation> PresentedHopf::relation_list(long window) const {
  std::vector<FormalRelation> rels;
  const Scalar one = Scalar::one(order_);
  auto word = [&](std::initializer_list<Element> ws) { return std::vector<Element>(ws); };
  auto term = [&](const Scalar& c, std::vector<Element> w) { return FormalTerm{c, std::move(w)}; };
  auto rel = [&](std::string name, std::vector<FormalTerm> lhs, std::vector<FormalTerm> rhs) {
    rels.push_back({std::move(name), std::move(lhs), std::move(rhs)});
  };

  if (family_ == Family::Hefuv) {
    Element u = generator("u"), v = generator("v");
    auto E = [&](long i) { return mono_element(Mono{i, 0, 0, 0}); };
    auto F = [&](long i) { return mono_element(Mono{i, 0, 1, 0}); };
    rel("e_0 + f_0 = 1", {term(one, word({E(0)})), term(one, word({F(0)}))}, {term(one, {})});
    for (long i = -window; i <= window; ++i) {
      Scalar sgn = (posmod(i, 2) == 0) ? one : -one;
      rel("e_i u = (-1)^i u e_i, i=" + std::to_string(i), {term(one, word({E(i), u}))},
          {term(sgn, word({u, E(i)}))});
      rel("f_i u = (-1)^i u f_i, i=" + std::to_string(i), {term(one, word({F(i), u}))},
          {term(sgn, word({u, F(i)}))});
      rel("e_i v = (-1)^i v e_i, i=" + std::to_string(i), {term(one, word({E(i), v}))},
          {term(sgn, word({v, E(i)}))});
      rel("f_i v = (-1)^i v f_i, i=" + std::to_string(i), {term(one, word({F(i), v}))},
          {term(sgn, word({v, F(i)}))});
      for (long j = -window; j <= window; ++j) {
        std::string ij = " (i=" + std::to_string(i) + ", j=" + std::to_string(j) + ")";
        rel("e_i e_j = e_{i+j}" + ij, {term(one, word({E(i), E(j)}))}, {term(one, word({E(i + j)}))});
        rel("f_i f_j = f_{i+j}" + ij, {term(one, word({F(i), F(j)}))}, {term(one, word({F(i + j)}))});
        rel("e_i f_j = 0" + ij, {term(one, word({E(i), F(j)}))}, {});
        rel("f_j e_i = 0" + ij, {term(one, word({F(j), E(i)}))}, {});
      }
    }
    rel("u^2 = 0", {term(one, word({u, u}))}, {});
    rel("v^2 = 0", {term(one, word({v, v}))}, {});
    rel("uv = -vu", {term(one, word({u, v}))}, {term(-one, word({v, u}))});
    return rels;
  }

  Element g = generator("g"), x = generator("x");
  if (family_ == Family::A) {
    std::vector<Element> gn(static_cast<size_t>(n_), g), xd(static_cast<size_t>(d_), x);
    rel("g^n = 1", {term(one, gn)}, {term(one, {})});
    std::vector<Element> gd(static_cast<size_t>(d_), g);
    rel("x^d = mu (1 - g^d)", {term(one, xd)}, {term(mu_, {}), term(-mu_, gd)});
    rel("x g = q g x", {term(one, word({x, g}))}, {term(q_, word({g, x}))});
    return rels;
  }
  Element gi = generator("g^-1");
  rel("g g^-1 = 1", {term(one, word({g, gi}))}, {term(one, {})});
  rel("g^-1 g = 1", {term(one, word({gi, g}))}, {term(one, {})});
  if (family_ == Family::Anq) {
    std::vector<Element> xn(static_cast<size_t>(n_), x), gn(static_cast<size_t>(n_), g);
    rel("x^n = 1 - g^n", {term(one, xn)}, {term(one, {}), term(-one, gn)});
    rel("x g = q g x", {term(one, word({x, g}))}, {term(q_, word({g, x}))});
    return rels;
  }
  if (family_ == Family::Hinf) {
    rel("x g = chi(g) g x + lambda(g)(g - g^2)", {term(one, word({x, g}))},
        {term(chi_, word({g, x})), term(lam_, word({g})), term(-lam_, word({g, g}))});
    return rels;
  }
  // Bmn
  Element h = generator("h"), hi = generator("h^-1"), y = generator("y");
  rel("h h^-1 = 1", {term(one, word({h, hi}))}, {term(one, {})});
  rel("g h = h g", {term(one, word({g, h}))}, {term(one, word({h, g}))});
  {
    std::vector<FormalTerm> lhs, rhs;
    if (m_ >= 0)
      lhs.push_back(term(one, std::vector<Element>(static_cast<size_t>(m_), g)));
    else
      lhs.push_back(term(one, std::vector<Element>(static_cast<size_t>(-m_), gi)));
    if (n_ >= 0)
      rhs.push_back(term(one, std::vector<Element>(static_cast<size_t>(n_), h)));
    else
      rhs.push_back(term(one, std::vector<Element>(static_cast<size_t>(-n_), hi)));
    rel("g^m = h^n", std::move(lhs), std::move(rhs));
  }
  rel("x y + lambda y x = k (1 - g h)",
      {term(one, word({x, y})), term(lam_, word({y, x}))},
      {term(k_, {}), term(-k_, word({g, h}))});
  rel("g x + x g = 0", {term(one, word({g, x})), term(one, word({x, g}))}, {});
  rel("lambda h x + x h = 0", {term(lam_, word({h, x})), term(one, word({x, h}))}, {});
  rel("x^2 = s (1 - g^2)", {term(one, word({x, x}))}, {term(s_, {}), term(-s_, word({g, g}))});
  rel("h y + y h = 0", {term(one, word({h, y})), term(one, word({y, h}))}, {});
  rel("g y + lambda y g = 0", {term(one, word({g, y})), term(lam_, word({y, g}))}, {});
  rel("y^2 = t (1 - h^2)", {term(one, word({y, y}))}, {term(t_, {}), term(-t_, word({h, h}))});
  return rels;
}

namespace {

Element eval_id(const PresentedHopf& h, const std::vector<FormalTerm>& side) {
  Element acc;
  for (const auto& t : side) {
    Element w = h.unit();
    for (const auto& letter : t.word) w = h.mul(w, letter);
    acc = add(acc, scale(w, t.coeff));
  }
  return acc;
}

Tensor<2> eval_delta(const PresentedHopf& h, const std::vector<FormalTerm>& side) {
  Tensor<2> acc;
  for (const auto& t : side) {
    Tensor<2> w = h.delta(h.unit());
    for (const auto& letter : t.word) w = h.tensor_mul(w, h.delta(letter));
    for (const auto& [k, c] : w) {
      Scalar v = c * t.coeff;
      if (v.is_zero()) continue;
      auto it = acc.find(k);
      if (it == acc.end())
        acc.emplace(k, v);
      else {
        it->second = it->second + v;
        if (it->second.is_zero()) acc.erase(it);
      }
    }
  }
  return acc;
}

Scalar eval_counit(const PresentedHopf& h, const std::vector<FormalTerm>& side) {
  Scalar acc = Scalar::zero(h.field_order());
  for (const auto& t : side) {
    Scalar w = Scalar::one(h.field_order());
    for (const auto& letter : t.word) w = w * h.counit(letter);
    acc = acc + w * t.coeff;
  }
  return acc;
}

Element eval_antipode_reversed(const PresentedHopf& h, const std::vector<FormalTerm>& side) {
  Element acc;
  for (const auto& t : side) {
    Element w = h.unit();
    for (auto it = t.word.rbegin(); it != t.word.rend(); ++it) w = h.mul(w, h.antipode(*it));
    acc = add(acc, scale(w, t.coeff));
  }
  return acc;
}

std::string tensor_str(const PresentedHopf& h, const Tensor<2>& t) {
  if (t.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, c] : t) {
    if (!first) out << " + ";
    out << "(" << c.str() << ")*" << h.mono_str(k[0]) << "(x)" << h.mono_str(k[1]);
    first = false;
  }
  return out.str();
}

}  // namespace

HopfAxiomReport verify_hopf_axioms(const PresentedHopf& h, long window) {
  HopfAxiomReport rep;
  auto rels = h.relation_list(window);
  auto gens = h.generator_list(window);

  for (const auto& r : rels) {
    Element idl = eval_id(h, r.lhs), idr = eval_id(h, r.rhs);
    if (idl != idr)
      rep.step1.fail("engine does not close relation '" + r.name +
                     "', residual " + h.element_str(sub(idl, idr)));
    Tensor<2> dl = eval_delta(h, r.lhs), dr = eval_delta(h, r.rhs);
    if (dl != dr) {
      Tensor<2> diff = dl;
      for (const auto& [k, c] : dr) {
        auto it = diff.find(k);
        if (it == diff.end())
          diff.emplace(k, -c);
        else {
          it->second = it->second - c;
          if (it->second.is_zero()) diff.erase(it);
        }
      }
      rep.step1.fail("comultiplication breaks relation '" + r.name + "', residual " +
                     tensor_str(h, diff));
    }
    Scalar el = eval_counit(h, r.lhs), er = eval_counit(h, r.rhs);
    if (el != er)
      rep.step1.fail("counit breaks relation '" + r.name + "', residual " + (el - er).str());
  }

  for (const auto& [name, gen] : gens) {
    Tensor<2> d = h.delta(gen);
    Tensor<3> left, right;
    for (const auto& [k, c] : d) {
      Tensor<2> d0 = h.delta_mono(k[0]);
      for (const auto& [k2, c2] : d0) add_tensor_term<3>(left, {k2[0], k2[1], k[1]}, c * c2);
      Tensor<2> d1 = h.delta_mono(k[1]);
      for (const auto& [k2, c2] : d1) add_tensor_term<3>(right, {k[0], k2[0], k2[1]}, c * c2);
    }
    if (left != right) rep.step2.fail("coassociativity fails on generator " + name);
    Element eps_id, id_eps;
    for (const auto& [k, c] : d) {
      Scalar e0 = h.counit(h.mono_element(k[0])), e1 = h.counit(h.mono_element(k[1]));
      add_term(eps_id, k[1], c * e0);
      add_term(id_eps, k[0], c * e1);
    }
    if (eps_id != gen) rep.step2.fail("left counit identity fails on generator " + name);
    if (id_eps != gen) rep.step2.fail("right counit identity fails on generator " + name);
  }

  {
    Element s1 = h.antipode(h.unit());
    if (s1 != h.unit()) rep.step3.fail("S(1) != 1");
  }
  for (const auto& r : rels) {
    Element sl = eval_antipode_reversed(h, r.lhs), sr = eval_antipode_reversed(h, r.rhs);
    if (sl != sr)
      rep.step3.fail("antipode breaks relation '" + r.name + "', residual " +
                     h.element_str(sub(sl, sr)));
  }

  for (const auto& [name, gen] : gens) {
    Tensor<2> d = h.delta(gen);
    Element conv_l, conv_r;
    for (const auto& [k, c] : d) {
      conv_l = add(conv_l, scale(h.mul(h.antipode_mono(k[0]), h.mono_element(k[1])), c));
      conv_r = add(conv_r, scale(h.mul(h.mono_element(k[0]), h.antipode_mono(k[1])), c));
    }
    Element target = scale(h.unit(), h.counit(gen));
    if (conv_l != target)
      rep.step4.fail("m(S (x) id) Delta fails on generator " + name + ", residual " +
                     h.element_str(sub(conv_l, target)));
    if (conv_r != target)
      rep.step4.fail("m(id (x) S) Delta fails on generator " + name + ", residual " +
                     h.element_str(sub(conv_r, target)));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// truncation

Vec Truncation::coords(const Element& e) const {
  Vec v = linalg::zero_vec(coalgebra.dim(), coalgebra.order);
  for (const auto& [m, c] : e) {
    auto it = index.find(m);
    if (it == index.end())
      escape_error("element leaves the truncation span at monomial " + hopf.mono_str(m));
    v[it->second] = v[it->second] + c;
  }
  return v;
}

Element Truncation::element(const Vec& v) const {
  if (v.size() != coalgebra.dim()) structural_error("truncation: coordinate size mismatch");
  Element e;
  for (size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) add_term(e, basis_monos[i], v[i]);
  return e;
}

ProductStructure Truncation::product() const {
  const Truncation* self = this;
  return ProductStructure(coords(hopf.unit()), [self](size_t i, size_t j) {
    return self->coords(self->hopf.mul_mono(self->basis_monos[i], self->basis_monos[j]));
  });
}

Truncation truncate_span(const PresentedHopf& h, std::vector<Mono> monos) {
  std::set<Mono> uniq(monos.begin(), monos.end());
  Truncation t;
  t.hopf = h;
  t.basis_monos.assign(uniq.begin(), uniq.end());
  for (size_t i = 0; i < t.basis_monos.size(); ++i) t.index.emplace(t.basis_monos[i], i);

  Coalgebra& c = t.coalgebra;
  c.order = h.field_order();
  c.basis.reserve(t.basis_monos.size());
  for (const auto& m : t.basis_monos) c.basis.push_back(h.mono_str(m));
  c.delta.assign(t.basis_monos.size(), {});
  c.counit = linalg::zero_vec(t.basis_monos.size(), c.order);
  for (size_t i = 0; i < t.basis_monos.size(); ++i) {
    Tensor<2> d = h.delta_mono(t.basis_monos[i]);
    for (const auto& [k, s] : d) {
      auto l = t.index.find(k[0]);
      auto r = t.index.find(k[1]);
      if (l == t.index.end() || r == t.index.end())
        escape_error("truncation not a subcoalgebra: Delta(" + h.mono_str(t.basis_monos[i]) +
                     ") contains " + h.mono_str(k[0]) + " (x) " + h.mono_str(k[1]));
      c.delta[i].push_back({l->second, r->second, s});
    }
    c.counit[i] = h.counit(h.mono_element(t.basis_monos[i]));
  }
  c.validate();
  return t;
}

Truncation truncate(const PresentedHopf& h, long N) {
  if (N < 1) parameter_error("truncate: N must be >= 1");
  std::set<Mono> monos;
  switch (h.family()) {
    case Family::Hefuv: {
      for (long i = -(N + 1); i <= N + 1; ++i)
        for (int comp : {0, 1})
          for (int tail : {0, 1, 2, 3}) {
            if (std::abs(i) == N + 1 && tail != 0) continue;
            monos.insert(Mono{i, 0, comp, tail});
          }
      // Delta(e_N uv) has e_{N+1}v legs, so the span is a subcoalgebra only
      // with the inward primitives of the boundary block included.
      monos.insert(Mono{N + 1, 0, 0, 2});   // e_{N+1} v
      monos.insert(Mono{N + 1, 0, 1, 1});   // f_{N+1} u
      monos.insert(Mono{-(N + 1), 0, 0, 1});  // e_{-N-1} u
      monos.insert(Mono{-(N + 1), 0, 1, 2});  // f_{-N-1} v
      break;
    }
    case Family::A: {
      for (long a = 0; a < h.param_n(); ++a)
        for (long b = 0; b < h.param_d(); ++b) monos.insert(Mono{a, b, 0, 0});
      break;
    }
    case Family::Anq: {
      for (long a = -N; a <= N; ++a)
        for (long b = 0; b < h.param_n() && a + b <= N; ++b) monos.insert(Mono{a, b, 0, 0});
      break;
    }
    case Family::Hinf: {
      for (long a = -N; a <= N; ++a)
        for (long b = 0; a + b <= N; ++b) monos.insert(Mono{a, b, 0, 0});
      break;
    }
    case Family::Bmn: {
      for (long a = -N; a <= N; ++a)
        for (long b = -N; b <= N; ++b)
          for (int e : {0, 1})
            for (int d : {0, 1}) {
              if (a + e > N || b + d > N) continue;
              Mono m{a, b, e, d};
              Mono canon = m;  // canonical rep of the group part
              {
                Element el = h.mono_element(m);
                canon = el.begin()->first;
              }
              monos.insert(canon);
            }
      break;
    }
  }

  return truncate_span(h, std::vector<Mono>(monos.begin(), monos.end()));
}

std::string name_simple_block(const Truncation& t, const Subspace& block) {
  const PresentedHopf& h = t.hopf;
  size_t n = t.coalgebra.dim();
  auto unit_coords = t.coords(h.unit());
  if (block.dim() == 1) {
    if (block.contains(unit_coords)) return "1";
    if (h.family() == Family::Hefuv) {
      Vec g = t.coords(h.generator("g"));
      if (block.contains(g)) return "g";
    } else {
      // group-like basis monomial spanning the block
      const Vec& row = block.basis()[0];
      size_t nz = 0, count = 0, pos = 0;
      for (size_t i = 0; i < n; ++i)
        if (!row[i].is_zero()) {
          ++count;
          pos = i;
        }
      (void)nz;
      if (count == 1) return t.coalgebra.basis[pos];
    }
  }
  if (h.family() == Family::Hefuv && block.dim() == 4) {
    for (long i = 1; i <= t.basis_monos.back().a; ++i) {
      auto has = [&](Mono m) {
        auto it = t.index.find(m);
        if (it == t.index.end()) return false;
        Vec v = linalg::zero_vec(n, t.coalgebra.order);
        v[it->second] = Scalar::one(t.coalgebra.order);
        return block.contains(v);
      };
      if (has(Mono{i, 0, 0, 0}) && has(Mono{-i, 0, 0, 0}) && has(Mono{i, 0, 1, 0}) &&
          has(Mono{-i, 0, 1, 0}))
        return "C" + std::to_string(i);
    }
  }
  return "S@" + std::to_string(block.pivots().empty() ? 0 : block.pivots()[0]);
}

void label_blocks(const Truncation& t, CoradicalData& cor) {
  for (auto& blk : cor.blocks) blk.label = name_simple_block(t, blk.space);
}

std::vector<size_t> antipode_block_permutation(const Truncation& t, const CoradicalData& cor) {
  std::vector<size_t> perm(cor.blocks.size(), cor.blocks.size());
  for (size_t i = 0; i < cor.blocks.size(); ++i) {
    RowSpan span(t.coalgebra.dim());
    for (const auto& entry : cor.blocks[i].comatrix.entries)
      span.add(t.coords(t.hopf.antipode(t.element(entry))));
    Subspace image = span.to_subspace();
    for (size_t j = 0; j < cor.blocks.size(); ++j)
      if (cor.blocks[j].space == image) {
        perm[i] = j;
        break;
      }
    if (perm[i] == cor.blocks.size())
      structural_error("antipode image of block " + cor.blocks[i].label + " is not a block");
  }
  return perm;
}

Mono PresentedHopf::sample_mono(unsigned long w, long window) const {
  auto pick = [&](long lo, long hi) {
    unsigned long span = static_cast<unsigned long>(hi - lo + 1);
    long v = lo + static_cast<long>(w % span);
    w /= span;
    return v;
  };
  switch (family_) {
    case Family::Hefuv: {
      long i = pick(-window, window);
      int comp = static_cast<int>(pick(0, 1));
      int tail = static_cast<int>(pick(0, 3));
      return Mono{i, 0, comp, tail};
    }
    case Family::A:
      return Mono{pick(0, n_ - 1), pick(0, d_ - 1), 0, 0};
    case Family::Anq:
      return Mono{pick(-window, window), pick(0, n_ - 1), 0, 0};
    case Family::Hinf:
      return Mono{pick(-window, window), pick(0, 3), 0, 0};
    case Family::Bmn: {
      Mono m{pick(-window, window), pick(-window, window), static_cast<int>(pick(0, 1)),
             static_cast<int>(pick(0, 1))};
      Element e = mono_element(m);
      return e.begin()->first;
    }
  }
  return {};
}

}  // namespace corep::hopf
