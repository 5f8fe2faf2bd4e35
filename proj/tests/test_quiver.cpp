#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qcount/json_io.hpp"
#include "qcount/quiver.hpp"

using namespace qcount;

namespace {
DimVector dv(std::vector<int> v) { return DimVector(std::move(v)); }
}

TEST_CASE("euler form examples") {
  Quiver jordan = Quiver::jordan();
  CHECK(euler_form(jordan, dv({1}), dv({1})) == 0);

  Quiver kron = Quiver::kronecker();
  CHECK(euler_form(kron, dv({1, 0}), dv({0, 1})) == -2);
  CHECK(euler_form(kron, dv({0, 1}), dv({1, 0})) == 0);
  CHECK(euler_form(kron, dv({0, 0}), dv({2, 3})) == 0);
}

TEST_CASE("euler form is bilinear") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> comp(0, 4);
  std::uniform_int_distribution<int> arrows(0, 2);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 1 + trial % 3;
    std::vector<std::vector<int>> a(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
    for (auto& row : a)
      for (auto& x : row) x = arrows(rng);
    Quiver q(n, a);
    auto rand_dv = [&] {
      std::vector<int> v(static_cast<size_t>(n));
      for (auto& x : v) x = comp(rng);
      return dv(v);
    };
    DimVector x = rand_dv(), y = rand_dv(), z = rand_dv();
    CHECK(euler_form(q, x + y, z) == euler_form(q, x, z) + euler_form(q, y, z));
    CHECK(euler_form(q, x, y + z) == euler_form(q, x, y) + euler_form(q, x, z));
  }
}

TEST_CASE("rep_count examples") {
  CHECK(rep_count(Quiver::jordan(), dv({1})) == QPolynomial::q_power(1));
  CHECK(rep_count(Quiver::kronecker(), dv({1, 1})) == QPolynomial::q_power(2));
  CHECK(rep_count(Quiver::kronecker(), dv({0, 0})) == QPolynomial::one());
}

TEST_CASE("rep_count degrees are superadditive") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> comp(0, 3);
  Quiver kron = Quiver::kronecker();
  for (int trial = 0; trial < 25; ++trial) {
    DimVector a = dv({comp(rng), comp(rng)});
    DimVector b = dv({comp(rng), comp(rng)});
    CHECK(rep_count(kron, a + b).degree() >= rep_count(kron, a).degree() + rep_count(kron, b).degree());
  }
  // Disconnected supports multiply exactly.
  Quiver two_loops(2, {{1, 0}, {0, 1}});
  DimVector a = dv({2, 0}), b = dv({0, 3});
  CHECK(rep_count(two_loops, a) * rep_count(two_loops, b) == rep_count(two_loops, a + b));
}

TEST_CASE("gl_order examples") {
  CHECK(gl_order(dv({1})) == QPolynomial(std::vector<BigRational>{BigRational(-1), BigRational(1)}));
  // (q^2-1)(q^2-q)
  QPolynomial expect = QPolynomial(std::vector<BigRational>{BigRational(-1), BigRational(0), BigRational(1)}) *
                       QPolynomial(std::vector<BigRational>{BigRational(0), BigRational(-1), BigRational(1)});
  CHECK(gl_order(dv({2})) == expect);
  QPolynomial qm1(std::vector<BigRational>{BigRational(-1), BigRational(1)});
  CHECK(gl_order(dv({1, 1})) == qm1 * qm1);
  CHECK(gl_order(dv({0, 0})) == QPolynomial::one());
}

TEST_CASE("slope examples") {
  Stability theta({std::vector<int>{1, 0}});
  CHECK(slope(theta, dv({1, 1})) == make_rational(1, 2));
  CHECK(slope(theta, dv({1, 0})) == BigRational(1));
  Stability zero({std::vector<int>{0, 0}});
  CHECK(slope(zero, dv({2, 3})) == BigRational(0));
  CHECK_THROWS_WITH_AS(slope(theta, dv({0, 0})), "slope of zero vector", std::domain_error);
}

TEST_CASE("slope additivity at equal slopes") {
  std::mt19937 rng(29);
  std::uniform_int_distribution<int> comp(0, 4);
  std::uniform_int_distribution<int> w(-2, 2);
  int found = 0;
  while (found < 20) {
    Stability theta({std::vector<int>{w(rng), w(rng), w(rng)}});
    DimVector a = dv({comp(rng), comp(rng), comp(rng)});
    DimVector b = dv({comp(rng), comp(rng), comp(rng)});
    if (a.is_zero() || b.is_zero()) continue;
    if (slope(theta, a) != slope(theta, b)) continue;
    CHECK(slope(theta, a + b) == slope(theta, a));
    ++found;
  }
}

TEST_CASE("in_delta_plus examples") {
  Stability theta({std::vector<int>{1, 0}});
  CHECK(in_delta_plus(theta, make_rational(1, 2), dv({1, 1})));
  CHECK_FALSE(in_delta_plus(theta, make_rational(1, 2), dv({1, 0})));
  Stability zero({std::vector<int>{0, 0}});
  CHECK(in_delta_plus(zero, BigRational(0), dv({3, 1})));
  CHECK(in_delta_plus(theta, make_rational(1, 2), dv({0, 0})));  // zero vector is a member
}

TEST_CASE("quiver JSON") {
  Quiver kron = Quiver::kronecker();
  CHECK(quiver_from_json(quiver_to_json(kron)).arrows == kron.arrows);
  CHECK_THROWS_WITH_AS(quiver_from_json(json::parse(R"({"n":2,"arrows":[[0,2],[0]]})")),
                       "arrows must be n x n", std::invalid_argument);
  Stability theta({std::vector<int>{1, 0}});
  CHECK(stability_from_json(stability_to_json(theta)).weights == theta.weights);
}
