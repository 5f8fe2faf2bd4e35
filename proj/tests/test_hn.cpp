#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qcount/hn.hpp"
#include "qcount/oracle.hpp"

using namespace qcount;

namespace {

DimVector dv(std::vector<int> v) { return DimVector(std::move(v)); }

QPolynomial poly(std::vector<long> coeffs) {
  std::vector<BigRational> c;
  for (long v : coeffs) c.emplace_back(v);
  return QPolynomial(std::move(c));
}

}  // namespace

TEST_CASE("hn_decompositions examples") {
  Stability theta(std::vector<int>{1, 0});
  SlopeValue half = make_rational(1, 2);

  auto tuples = hn_decompositions(dv({1, 1}), half, theta);
  REQUIRE(tuples.size() == 2);
  // Lexicographic prefix order: (0,1)... fails the slope test, so the two
  // survivors are ((1,0),(0,1)) and ((1,1)).
  CHECK(tuples[0] == std::vector<DimVector>{dv({1, 0}), dv({0, 1})});
  CHECK(tuples[1] == std::vector<DimVector>{dv({1, 1})});

  Stability zero2(std::vector<int>{0, 0});
  for (auto alpha : {dv({1, 1}), dv({2, 1}), dv({2, 2})}) {
    auto only = hn_decompositions(alpha, BigRational(0), zero2);
    REQUIRE(only.size() == 1);
    CHECK(only[0] == std::vector<DimVector>{alpha});
  }

  Stability theta1(std::vector<int>{3});
  auto jordan = hn_decompositions(dv({2}), BigRational(3), theta1);
  REQUIRE(jordan.size() == 1);
  CHECK(jordan[0] == std::vector<DimVector>{dv({2})});

  CHECK_THROWS_AS(hn_decompositions(dv({0, 0}), half, theta), std::invalid_argument);
}

TEST_CASE("rss on the Jordan quiver with trivial stability") {
  HNContext ctx(Quiver::jordan(), Stability(std::vector<int>{0}), BigRational(0));
  for (int n = 1; n <= 3; ++n) {
    RatFunc r = rss_direct(ctx, dv({n}));
    CHECK(to_polynomial(r) == QPolynomial::q_power(n * n));
    CHECK(rss_recursive(ctx, dv({n})) == r);
  }
  CHECK(rss_recursive(ctx, dv({0})) == RatFunc(BigRational(1)));
}

TEST_CASE("rss Kronecker acceptance values") {
  HNContext ctx(Quiver::kronecker(), Stability(std::vector<int>{1, 0}), make_rational(1, 2));
  CHECK(to_polynomial(rss_direct(ctx, dv({1, 1}))) == poly({-1, 0, 1}));
  CHECK(rss_direct(ctx, dv({1, 0})).is_zero());
  CHECK(rss_recursive(ctx, dv({1, 0})).is_zero());
}

TEST_CASE("trivial stability gives the plain count") {
  Stability zero(std::vector<int>{0, 0});
  HNContext ctx(Quiver::kronecker(), zero, BigRational(0));
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b) {
      if (a == 0 && b == 0) continue;
      DimVector alpha = dv({a, b});
      CHECK(to_polynomial(rss_direct(ctx, alpha)) == rep_count(ctx.quiver(), alpha));
    }
}

TEST_CASE("direct and recursive implementations agree") {
  HNContext kron(Quiver::kronecker(), Stability(std::vector<int>{1, 0}), make_rational(1, 2));
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b) {
      DimVector alpha = dv({a, b});
      CHECK(rss_direct(kron, alpha) == rss_recursive(kron, alpha));
    }

  // Also at another slope on the same quiver.
  HNContext third(Quiver::kronecker(), Stability(std::vector<int>{1, 0}), make_rational(1, 3));
  CHECK(rss_direct(third, dv({1, 2})) == rss_recursive(third, dv({1, 2})));
  CHECK(rss_direct(third, dv({2, 4})) == rss_recursive(third, dv({2, 4})));
}

TEST_CASE("rss results are integer polynomials") {
  HNContext ctx(Quiver::kronecker(), Stability(std::vector<int>{1, 0}), make_rational(1, 2));
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b) {
      QPolynomial p = to_polynomial(rss_recursive(ctx, dv({a, b})));
      CHECK(p.integer_coefficients());
    }
}

TEST_CASE("rss agrees with the finite-field oracle") {
  OracleCaps caps;
  Quiver kron = Quiver::kronecker();
  Stability theta(std::vector<int>{1, 0});

  for (auto alpha : {dv({1, 1}), dv({2, 1}), dv({1, 2}), dv({2, 2})}) {
    SlopeValue mu = slope(theta, alpha);
    HNContext ctx(kron, theta, mu);
    QPolynomial formula = to_polynomial(rss_recursive(ctx, alpha));
    for (int q0 : {2, 3}) {
      if (kron.total_entries(alpha) > caps.entry_cap(q0)) continue;
      const SmallField& f = SmallField::of_order(q0);
      long long counted = count_reps_if(kron, alpha, f, caps, [&](const FFRep& m) {
        return member_rep_ss_mu(m, theta, mu);
      });
      CHECK(formula.eval(BigRational(q0)) == BigRational(static_cast<long>(counted)));
    }
  }

  // Semistable of slope 1/2 inside dimension (2,2): includes decomposables.
  HNContext half(kron, theta, make_rational(1, 2));
  QPolynomial r22 = to_polynomial(rss_recursive(half, dv({2, 2})));
  long long c22 = count_reps_if(kron, dv({2, 2}), SmallField::of_order(2), caps, [&](const FFRep& m) {
    return member_rep_ss_mu(m, theta, make_rational(1, 2));
  });
  CHECK(r22.eval(BigRational(2)) == BigRational(static_cast<long>(c22)));
}

TEST_CASE("the twist order in the exponent matters") {
  // Deliberate regression: summing q^{-sum_{i<j} <a^i, a^j>} (wrong argument
  // order) must not reproduce R^ss on the Kronecker instance.
  Quiver kron = Quiver::kronecker();
  Stability theta(std::vector<int>{1, 0});
  SlopeValue half = make_rational(1, 2);
  DimVector alpha = dv({1, 1});

  RatFunc wrong;
  for (const auto& tuple : hn_decompositions(alpha, half, theta)) {
    long long twist = 0;
    for (size_t i = 0; i < tuple.size(); ++i)
      for (size_t j = i + 1; j < tuple.size(); ++j)
        twist += euler_form(kron, tuple[i], tuple[j]);  // wrong: earlier first
    RatFunc term = RatFunc::q_power(static_cast<int>(-twist));
    for (const auto& piece : tuple)
      term *= RatFunc(rep_count(kron, piece), gl_order(piece));
    if (tuple.size() % 2 == 0) term = -term;
    wrong += term;
  }
  wrong *= RatFunc(gl_order(alpha));

  HNContext ctx(kron, theta, half);
  RatFunc right = rss_direct(ctx, alpha);
  CHECK(to_polynomial(right) == poly({-1, 0, 1}));
  CHECK_FALSE(wrong == right);
}

TEST_CASE("memo reuse is consistent across queries") {
  HNContext ctx(Quiver::kronecker(), Stability(std::vector<int>{1, 0}), make_rational(1, 2));
  RatFunc first = rss_recursive(ctx, dv({2, 2}));
  RatFunc again = rss_recursive(ctx, dv({2, 2}));
  CHECK(first == again);
  CHECK(rss_recursive(ctx, dv({1, 1})) == rss_direct(ctx, dv({1, 1})));
}
