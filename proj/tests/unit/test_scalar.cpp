#include "doctest.h"

#include "corep/scalar.hpp"

using namespace corep;

TEST_CASE("cyclotomic polynomials") {
  auto str = [](const qpoly::Poly& p) {
    std::string s;
    for (const auto& c : p) s += c.get_str() + ",";
    return s;
  };
  CHECK(str(qpoly::cyclotomic(1)) == "-1,1,");
  CHECK(str(qpoly::cyclotomic(2)) == "1,1,");
  CHECK(str(qpoly::cyclotomic(4)) == "1,0,1,");
  CHECK(str(qpoly::cyclotomic(6)) == "1,-1,1,");
  CHECK(qpoly::cyclotomic_degree(12) == 4);
  CHECK(qpoly::cyclotomic_degree(8) == 4);
}

TEST_CASE("roots of unity arithmetic") {
  Cyc i = Cyc::zeta(4);
  CHECK(i * i == Cyc(Rat(-1), 4));
  CHECK((i * i * i * i).is_one());
  Cyc w = Cyc::zeta(3);
  CHECK(w * w + w + Cyc::one(3) == Cyc::zero(3));
  CHECK(i.inverse() * i == Cyc::one(4));
  CHECK((Cyc::one(4) + i) * (Cyc::one(4) - i) == Cyc(Rat(2), 4));
}

TEST_CASE("order promotion is compatible") {
  // zeta_2 = -1, and mixed orders land in the lcm field
  CHECK(Cyc::zeta(2) == Cyc(Rat(-1), 1));
  Cyc z4 = Cyc::zeta(4), z6 = Cyc::zeta(6);
  Cyc prod = z4 * z6;
  CHECK(prod.order() == 12);
  CHECK(prod == Cyc::zeta(12, 5));
  CHECK(Cyc::zeta(6, 3) == Cyc(Rat(-1), 6));
}

TEST_CASE("root of unity detection") {
  CHECK(Scalar::zeta(4).is_root_of_unity());
  CHECK(Scalar(-1).is_root_of_unity());
  CHECK(!Scalar(2).is_root_of_unity());
  CHECK(!Scalar(Rat(1, 2)).is_root_of_unity());
  CHECK(!Scalar::zero().is_root_of_unity());
  CHECK(!Scalar::marker().is_root_of_unity());
}

TEST_CASE("rational function scalars") {
  Scalar T = Scalar::marker();
  CHECK(T * T.inverse() == Scalar::one());
  // (T^2 - 1)/(T - 1) reduces to T + 1
  Scalar r = (T * T - Scalar(1)) / (T - Scalar(1));
  CHECK(r == T + Scalar(1));
  CHECK((T - T).is_zero());
  CHECK(!T.is_constant());
  CHECK((T / T).is_one());
  Scalar q = (T + Scalar(2)) / (T - Scalar(3));
  CHECK(q * (T - Scalar(3)) == T + Scalar(2));
}

TEST_CASE("scalar parsing round trips") {
  for (const char* text : {"0", "1", "-1/2", "z", "(z^2-2)/3", "(1-z)/2", "3/4", "z^3", "2*z+1"}) {
    Scalar s = Scalar::parse(text, 8);
    Scalar back = Scalar::parse(s.str(), 8);
    CHECK(s == back);
  }
  CHECK(Scalar::parse("z^2", 4) == Scalar(-1, 4));
  CHECK(Scalar::parse("T", 1) == Scalar::marker());
  CHECK_THROWS_AS(Scalar::parse("z+", 4), Error);
  CHECK_THROWS_AS(Scalar::parse("q", 4), Error);
}

TEST_CASE("field axioms on a deterministic sample") {
  // small pseudo-random walk through Q(zeta_12)
  std::vector<Scalar> pool;
  for (int k = 0; k < 6; ++k)
    pool.push_back(Scalar::zeta(12, k) + Scalar(Rat(k - 3, 2), 12));
  for (const auto& a : pool)
    for (const auto& b : pool) {
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      if (!b.is_zero()) CHECK(a * b / b == a);
      for (const auto& c : pool) {
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
      }
    }
}
