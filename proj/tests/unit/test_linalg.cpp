#include "doctest.h"

#include "corep/linalg.hpp"

using namespace corep;

namespace {
Vec vec(std::initializer_list<long> xs) {
  Vec v;
  for (long x : xs) v.push_back(Scalar(x));
  return v;
}
}  // namespace

TEST_CASE("rref and rank") {
  Mat m = {vec({1, 2, 3}), vec({2, 4, 6}), vec({1, 0, 1})};
  CHECK(linalg::rank(m) == 2);
  auto piv = linalg::rref(m);
  CHECK(piv == std::vector<size_t>{0, 1});
  CHECK(m.size() == 2);
}

TEST_CASE("kernel dimensions") {
  Mat m = {vec({1, 1, 0}), vec({0, 1, 1})};
  Mat k = linalg::kernel(m, 3);
  REQUIRE(k.size() == 1);
  // x - y + z = 0 direction (1, -1, 1)
  CHECK(k[0][0] * Scalar(-1) == k[0][1]);
  CHECK(k[0][0] == k[0][2]);
}

TEST_CASE("subspace canonical form") {
  Subspace a(3, {vec({1, 1, 0}), vec({0, 0, 1})});
  Subspace b(3, {vec({2, 2, 2}), vec({0, 0, 5}), vec({1, 1, 3})});
  CHECK(a == b);
  CHECK(a.dim() == 2);
  CHECK(a.contains(vec({3, 3, 7})));
  CHECK(!a.contains(vec({1, 0, 0})));
}

TEST_CASE("sum and intersection") {
  Subspace a(3, {vec({1, 0, 0})});
  Subspace b(3, {vec({0, 1, 0})});
  CHECK(a.sum(b).dim() == 2);
  CHECK(a.intersect(b).dim() == 0);
  Subspace c(3, {vec({1, 1, 0}), vec({0, 1, 1})});
  Subspace d(3, {vec({1, 0, 0}), vec({0, 0, 1})});
  Subspace meet = c.intersect(d);
  CHECK(meet.dim() == 1);
  CHECK(c.contains(meet));
  CHECK(d.contains(meet));
}

TEST_CASE("rowspan matches dense kernel") {
  Mat rows = {vec({1, 2, 0, 1}), vec({0, 1, 1, 0}), vec({1, 3, 1, 1}), vec({2, 4, 0, 2})};
  RowSpan span(4);
  for (auto& r : rows) span.add(r);
  CHECK(span.rank() == 2);
  Subspace k1 = span.kernel();
  Subspace k2(4, linalg::kernel(rows, 4));
  CHECK(k1 == k2);
  CHECK(k1.dim() == 2);
}

TEST_CASE("matrix inverse and determinant") {
  Mat m = {vec({2, 1}), vec({1, 1})};
  auto inv = linalg::inverse(m);
  REQUIRE(inv.has_value());
  Mat prod = linalg::mat_mul(m, *inv);
  CHECK(prod[0][0] == Scalar(1));
  CHECK(prod[0][1] == Scalar(0));
  CHECK(linalg::det(m) == Scalar(1));
  Mat sing = {vec({1, 2}), vec({2, 4})};
  CHECK(!linalg::inverse(sing).has_value());
  CHECK(linalg::det(sing).is_zero());
}
