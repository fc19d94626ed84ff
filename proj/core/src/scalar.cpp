#include "corep/scalar.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace corep {

namespace qpoly {

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int deg(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Poly add(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), Rat(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

Poly sub(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), Rat(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

Poly divmod(const Poly& a, const Poly& b, Poly& rem) {
  if (b.empty()) structural_error("qpoly: division by zero polynomial");
  rem = a;
  trim(rem);
  if (rem.size() < b.size()) return {};
  Poly q(rem.size() - b.size() + 1, Rat(0));
  const Rat& lead = b.back();
  while (rem.size() >= b.size()) {
    size_t shift = rem.size() - b.size();
    Rat c = rem.back() / lead;
    q[shift] = c;
    for (size_t i = 0; i < b.size(); ++i) rem[shift + i] -= c * b[i];
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
    Rat lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

Poly derivative(const Poly& a) {
  if (a.size() <= 1) return {};
  Poly r(a.size() - 1);
  for (size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * Rat(static_cast<long>(i));
  trim(r);
  return r;
}

Rat eval(const Poly& a, const Rat& x) {
  Rat r(0);
  for (size_t i = a.size(); i-- > 0;) r = r * x + a[i];
  return r;
}

namespace {
const Poly& cyclotomic_locked(int n, std::map<int, Poly>& cache) {
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  if (n < 1) structural_error("cyclotomic order must be positive");
  // Phi_n = (x^n - 1) / prod_{d|n, d<n} Phi_d
  Poly num(n + 1, Rat(0));
  num[0] = -1;
  num[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const Poly& phi_d = cyclotomic_locked(d, cache);
    Poly rem;
    num = divmod(num, phi_d, rem);
    if (!rem.empty()) structural_error("cyclotomic: nonzero remainder");
  }
  return cache.emplace(n, std::move(num)).first->second;
}
}  // namespace

const Poly& cyclotomic(int n) {
  static std::map<int, Poly> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  return cyclotomic_locked(n, cache);
}

int cyclotomic_degree(int n) { return deg(cyclotomic(n)); }

}  // namespace qpoly

// ---------------------------------------------------------------------------
// Cyc

Cyc::Cyc(const Rat& r, int order) : order_(order) {
  if (order < 1) structural_error("field order must be >= 1");
  Rat v = r;
  v.canonicalize();  // callers may pass mpq_class(num, den) raw pairs
  if (v != 0) c_.push_back(v);
}

Cyc Cyc::zeta(int order, long power) {
  if (order < 1) structural_error("field order must be >= 1");
  long p = power % order;
  if (p < 0) p += order;
  Cyc z;
  z.order_ = order;
  std::vector<Rat> raw(static_cast<size_t>(p) + 1, Rat(0));
  raw[static_cast<size_t>(p)] = 1;
  z.reduce_(std::move(raw));
  return z;
}

void Cyc::reduce_(std::vector<Rat> raw) {
  const qpoly::Poly& phi = qpoly::cyclotomic(order_);
  qpoly::trim(raw);
  if (qpoly::deg(raw) >= qpoly::deg(phi)) {
    qpoly::Poly rem;
    qpoly::divmod(raw, phi, rem);
    c_ = std::move(rem);
  } else {
    c_ = std::move(raw);
  }
}

bool Cyc::is_one() const { return c_.size() == 1 && c_[0] == 1; }

Rat Cyc::rational() const {
  if (!is_rational()) structural_error("Cyc: not a rational value: " + str());
  return c_.empty() ? Rat(0) : c_[0];
}

int Cyc::lcm_order_(int a, int b) { return a / std::gcd(a, b) * b; }

Cyc Cyc::promoted(int new_order) const {
  if (new_order == order_) return *this;
  if (new_order % order_ != 0) structural_error("Cyc: order does not divide target order");
  int k = new_order / order_;
  // zeta_m = zeta_n^k with n = m*k
  Cyc r;
  r.order_ = new_order;
  std::vector<Rat> raw(c_.size() * static_cast<size_t>(k) + 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) raw[i * static_cast<size_t>(k)] = c_[i];
  r.reduce_(std::move(raw));
  return r;
}

Cyc Cyc::operator-() const {
  Cyc r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Cyc operator+(const Cyc& a, const Cyc& b) {
  int n = Cyc::lcm_order_(a.order_, b.order_);
  Cyc x = a.promoted(n), y = b.promoted(n);
  Cyc r;
  r.order_ = n;
  r.c_ = qpoly::add(x.c_, y.c_);
  return r;
}

Cyc operator-(const Cyc& a, const Cyc& b) { return a + (-b); }

Cyc operator*(const Cyc& a, const Cyc& b) {
  int n = Cyc::lcm_order_(a.order_, b.order_);
  Cyc x = a.promoted(n), y = b.promoted(n);
  Cyc r;
  r.order_ = n;
  r.reduce_(qpoly::mul(x.c_, y.c_));
  return r;
}

Cyc Cyc::inverse() const {
  if (is_zero()) structural_error("Cyc: inverse of zero");
  if (is_rational()) {
    Cyc r;
    r.order_ = order_;
    r.c_ = {Rat(1) / c_[0]};
    return r;
  }
  // Extended Euclid against the (irreducible) cyclotomic modulus.
  qpoly::Poly r0 = qpoly::cyclotomic(order_), r1 = c_;
  qpoly::Poly s0 = {}, s1 = {Rat(1)};
  while (qpoly::deg(r1) > 0) {
    qpoly::Poly rem;
    qpoly::Poly q = qpoly::divmod(r0, r1, rem);
    qpoly::Poly s2 = qpoly::sub(s0, qpoly::mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r1.empty()) structural_error("Cyc: modulus not coprime (non-canonical element?)");
  Rat lead = r1[0];
  for (auto& c : s1) c /= lead;
  Cyc r;
  r.order_ = order_;
  r.reduce_(std::move(s1));
  return r;
}

Cyc operator/(const Cyc& a, const Cyc& b) { return a * b.inverse(); }

Cyc Cyc::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Cyc base = *this, acc = Cyc::one(order_);
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

bool operator==(const Cyc& a, const Cyc& b) {
  if (a.order_ == b.order_) return a.c_ == b.c_;
  int n = Cyc::lcm_order_(a.order_, b.order_);
  return a.promoted(n).c_ == b.promoted(n).c_;
}

bool Cyc::is_root_of_unity() const {
  if (is_zero()) return false;
  long torsion = std::lcm(2, order_);
  return pow(torsion).is_one();
}

std::string Cyc::str() const {
  if (c_.empty()) return "0";
  // common positive denominator -> integer-coefficient polynomial over it
  mpz_class den(1);
  for (const auto& r : c_) den = lcm(den, r.get_den());
  std::ostringstream out;
  bool first = true;
  int printed = 0;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    mpz_class num = c_[i].get_num() * (den / c_[i].get_den());
    if (!first)
      out << (num >= 0 ? "+" : "-");
    else if (num < 0)
      out << "-";
    mpz_class a = abs(num);
    if (a != 1 || i == 0) out << a.get_str();
    if (i > 0) {
      if (a != 1) out << "*";
      out << "z";
      if (i > 1) out << "^" << i;
    }
    first = false;
    ++printed;
  }
  std::string body = out.str();
  if (den == 1) return body;
  if (printed > 1) body = "(" + body + ")";
  return body + "/" + den.get_str();
}

// ---------------------------------------------------------------------------
// Scalar

namespace {

using CPoly = std::vector<Cyc>;

void ctrim(CPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

CPoly cadd(const CPoly& a, const CPoly& b, int order) {
  CPoly r(std::max(a.size(), b.size()), Cyc::zero(order));
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] = r[i] + b[i];
  ctrim(r);
  return r;
}

CPoly cmul(const CPoly& a, const CPoly& b, int order) {
  if (a.empty() || b.empty()) return {};
  CPoly r(a.size() + b.size() - 1, Cyc::zero(order));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
  ctrim(r);
  return r;
}

CPoly cneg(CPoly a) {
  for (auto& c : a) c = -c;
  return a;
}

CPoly cdivmod(const CPoly& a, const CPoly& b, CPoly& rem) {
  if (b.empty()) structural_error("Scalar: division by zero polynomial");
  rem = a;
  ctrim(rem);
  CPoly q;
  if (rem.size() >= b.size()) q.assign(rem.size() - b.size() + 1, Cyc::zero(b.back().order()));
  Cyc lead_inv = b.back().inverse();
  while (rem.size() >= b.size()) {
    size_t shift = rem.size() - b.size();
    Cyc c = rem.back() * lead_inv;
    q[shift] = c;
    for (size_t i = 0; i < b.size(); ++i) rem[shift + i] = rem[shift + i] - c * b[i];
    ctrim(rem);
  }
  ctrim(q);
  return q;
}

CPoly cgcd(CPoly a, CPoly b) {
  ctrim(a);
  ctrim(b);
  while (!b.empty()) {
    CPoly r;
    cdivmod(a, b, r);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Cyc inv = a.back().inverse();
    for (auto& c : a) c = c * inv;
  }
  return a;
}

CPoly cpromote(const CPoly& a, int order) {
  CPoly r = a;
  for (auto& c : r) c = c.promoted(order);
  return r;
}

}  // namespace

Scalar::Scalar(const Rat& r, int order) : order_(order), den_{Cyc::one(order)} {
  if (r != 0) num_.push_back(Cyc(r, order));
}

Scalar::Scalar(const Cyc& c) : order_(c.order()), den_{Cyc::one(c.order())} {
  if (!c.is_zero()) num_.push_back(c);
}

Scalar Scalar::marker(int order) {
  Scalar s;
  s.order_ = order;
  s.num_ = {Cyc::zero(order), Cyc::one(order)};
  s.den_ = {Cyc::one(order)};
  return s;
}

Scalar::Scalar(int order, std::vector<Cyc> num, std::vector<Cyc> den)
    : order_(order), num_(std::move(num)), den_(std::move(den)) {
  normalize_();
}

void Scalar::normalize_() {
  ctrim(num_);
  ctrim(den_);
  if (den_.empty()) structural_error("Scalar: zero denominator");
  if (num_.empty()) {
    den_ = {Cyc::one(order_)};
    return;
  }
  if (den_.size() > 1 || num_.size() > 1) {
    CPoly g = cgcd(num_, den_);
    if (g.size() > 1) {
      CPoly rem;
      num_ = cdivmod(num_, g, rem);
      den_ = cdivmod(den_, g, rem);
    }
  }
  if (!(den_.back().is_one())) {
    Cyc inv = den_.back().inverse();
    for (auto& c : num_) c = c * inv;
    for (auto& c : den_) c = c * inv;
  }
}

bool Scalar::is_one() const {
  return num_.size() == 1 && num_[0].is_one() && den_.size() == 1 && den_[0].is_one();
}

bool Scalar::is_constant() const { return num_.size() <= 1 && den_.size() == 1; }

bool Scalar::is_rational() const { return is_constant() && (num_.empty() || num_[0].is_rational()); }

const Cyc& Scalar::constant() const {
  static const Cyc kZero;
  if (!is_constant()) structural_error("Scalar: not constant: " + str());
  return num_.empty() ? kZero : num_[0];
}

Rat Scalar::rational() const { return constant().rational(); }

Scalar Scalar::promoted(int new_order) const {
  if (new_order == order_) return *this;
  Scalar r;
  r.order_ = new_order;
  r.num_ = cpromote(num_, new_order);
  r.den_ = cpromote(den_, new_order);
  return r;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.num_ = cneg(std::move(r.num_));
  return r;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  int n = a.order_ / std::gcd(a.order_, b.order_) * b.order_;
  Scalar x = a.promoted(n), y = b.promoted(n);
  if (x.is_constant() && y.is_constant()) {
    Cyc c = x.constant() + y.constant();
    return Scalar(c.promoted(n));
  }
  CPoly num = cadd(cmul(x.num_, y.den_, n), cmul(y.num_, x.den_, n), n);
  CPoly den = cmul(x.den_, y.den_, n);
  return Scalar(n, std::move(num), std::move(den));
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  int n = a.order_ / std::gcd(a.order_, b.order_) * b.order_;
  Scalar x = a.promoted(n), y = b.promoted(n);
  if (x.is_constant() && y.is_constant()) {
    if (x.is_zero() || y.is_zero()) return Scalar::zero(n);
    return Scalar(x.constant() * y.constant());
  }
  CPoly num = cmul(x.num_, y.num_, n);
  CPoly den = cmul(x.den_, y.den_, n);
  return Scalar(n, std::move(num), std::move(den));
}

Scalar Scalar::inverse() const {
  if (is_zero()) structural_error("Scalar: inverse of zero");
  if (is_constant()) return Scalar(num_[0].inverse());
  return Scalar(order_, den_, num_);
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

Scalar Scalar::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar base = *this, acc = Scalar::one(order_);
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

bool operator==(const Scalar& a, const Scalar& b) {
  int n = a.order_ / std::gcd(a.order_, b.order_) * b.order_;
  Scalar x = a.promoted(n), y = b.promoted(n);
  return x.num_ == y.num_ && x.den_ == y.den_;
}

bool Scalar::is_root_of_unity() const {
  if (!is_constant()) return false;  // T is transcendental by construction
  if (is_zero()) return false;
  return constant().is_root_of_unity();
}

std::string Scalar::str() const {
  if (is_constant()) return constant().str();
  auto poly_str = [](const CPoly& p) {
    std::ostringstream out;
    bool first = true;
    for (size_t i = 0; i < p.size(); ++i) {
      if (p[i].is_zero()) continue;
      if (!first) out << "+";
      out << "(" << p[i].str() << ")";
      if (i >= 1) {
        out << "*T";
        if (i > 1) out << "^" << i;
      }
      first = false;
    }
    return first ? std::string("0") : out.str();
  };
  std::string s = poly_str(num_);
  if (den_.size() == 1 && den_[0].is_one()) return s;
  return "(" + s + ")/(" + poly_str(den_) + ")";
}

// Parser for "p(z)/q" schema strings (also accepts T-polynomials and plain
// rationals). Grammar: sum of terms [+-] coeff [* ] [z|T [^k]], optionally
// wrapped as "(...)/(...)" or "(...)/int".
namespace {

struct Cursor {
  const std::string& s;
  size_t i = 0;
  void skip_ws() {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
  }
  bool eat(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
};

mpz_class parse_int(Cursor& cur) {
  cur.skip_ws();
  size_t start = cur.i;
  while (cur.i < cur.s.size() && std::isdigit(static_cast<unsigned char>(cur.s[cur.i]))) ++cur.i;
  if (cur.i == start) parse_error("scalar: expected integer in '" + cur.s + "'");
  return mpz_class(cur.s.substr(start, cur.i - start));
}

Scalar parse_sum(Cursor& cur, int order);

Scalar parse_atom(Cursor& cur, int order) {
  if (cur.eat('(')) {
    Scalar inner = parse_sum(cur, order);
    if (!cur.eat(')')) parse_error("scalar: missing ')' in '" + cur.s + "'");
    return inner;
  }
  char c = cur.peek();
  if (c == 'z' || c == 'T') {
    ++cur.i;
    long e = 1;
    if (cur.eat('^')) {
      bool neg = cur.eat('-');
      e = parse_int(cur).get_si();
      if (neg) e = -e;
    }
    Scalar base = (c == 'z') ? Scalar::zeta(order) : Scalar::marker(order);
    return base.pow(e);
  }
  if (std::isdigit(static_cast<unsigned char>(c))) {
    mpz_class n = parse_int(cur);
    return Scalar(Rat(n), order);
  }
  parse_error("scalar: unexpected character in '" + cur.s + "'");
}

Scalar parse_factor(Cursor& cur, int order) {
  Scalar r = parse_atom(cur, order);
  for (;;) {
    cur.skip_ws();
    if (cur.eat('*')) {
      r = r * parse_atom(cur, order);
    } else if (cur.eat('/')) {
      Scalar d = parse_atom(cur, order);
      if (d.is_zero()) parse_error("scalar: division by zero in '" + cur.s + "'");
      r = r / d;
    } else {
      char c = cur.peek();
      if (c == 'z' || c == 'T') {
        r = r * parse_atom(cur, order);  // juxtaposition: "2z^3"
      } else {
        break;
      }
    }
  }
  return r;
}

Scalar parse_sum(Cursor& cur, int order) {
  bool neg = false;
  if (cur.eat('-'))
    neg = true;
  else
    cur.eat('+');
  Scalar r = parse_factor(cur, order);
  if (neg) r = -r;
  for (;;) {
    char c = cur.peek();
    if (c == '+') {
      ++cur.i;
      r = r + parse_factor(cur, order);
    } else if (c == '-') {
      ++cur.i;
      r = r - parse_factor(cur, order);
    } else {
      break;
    }
  }
  return r;
}

}  // namespace

Scalar Scalar::parse(const std::string& text, int order) {
  Cursor cur{text};
  Scalar r = parse_sum(cur, order);
  if (!cur.done()) parse_error("scalar: trailing input in '" + text + "'");
  return r;
}

}  // namespace corep
