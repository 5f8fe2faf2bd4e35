#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qcount/json_io.hpp"
#include "qcount/ratfunc.hpp"

using namespace qcount;

namespace {

QPolynomial poly(std::vector<long> coeffs) {
  std::vector<BigRational> c;
  for (long v : coeffs) c.emplace_back(v);
  return QPolynomial(std::move(c));
}

const QPolynomial kQ = poly({0, 1});
const QPolynomial kQm1 = poly({-1, 1});

RatFunc random_ratfunc(std::mt19937& rng) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> deg(0, 3);
  auto rand_poly = [&] {
    std::vector<BigRational> c(static_cast<size_t>(deg(rng)) + 1);
    for (auto& x : c) x = BigRational(coeff(rng));
    return QPolynomial(std::move(c));
  };
  QPolynomial den = rand_poly();
  while (den.is_zero()) den = rand_poly();
  return RatFunc(rand_poly(), den);
}

}  // namespace

TEST_CASE("polynomial basics") {
  CHECK(QPolynomial().is_zero());
  CHECK(QPolynomial().degree() == -1);
  CHECK(poly({0}).is_zero());
  CHECK(poly({1, 0, 0}).degree() == 0);
  CHECK((kQ * kQ).degree() == 2);
  CHECK(poly({-1, 0, 1}).to_string() == "q^2 - 1");
  CHECK(kQ.substitute_power(3) == poly({0, 0, 0, 1}));
  CHECK(poly({1, 2}).eval(BigRational(5)) == BigRational(11));
}

TEST_CASE("polynomial divmod and gcd") {
  auto [quot, rem] = QPolynomial::divmod(poly({-1, 0, 1}), kQm1);
  CHECK(quot == poly({1, 1}));
  CHECK(rem.is_zero());

  QPolynomial g = QPolynomial::gcd(poly({-1, 0, 1}), poly({1, -2, 1}));
  CHECK(g == kQm1);  // gcd(q^2-1, (q-1)^2), monic

  CHECK(QPolynomial::gcd(QPolynomial(), QPolynomial()).is_zero());
  CHECK(QPolynomial::gcd(poly({0, 2}), QPolynomial()) == kQ);
}

TEST_CASE("ratfunc_arith examples") {
  RatFunc q{kQ};
  CHECK(q + q == RatFunc(poly({0, 2})));

  RatFunc inv_qm1(QPolynomial::one(), kQm1);
  CHECK(inv_qm1 * RatFunc(kQm1) == RatFunc(BigRational(1)));

  CHECK(RatFunc(poly({-1, 0, 1})) / RatFunc(kQm1) == RatFunc(poly({1, 1})));
  CHECK_THROWS_WITH_AS(RatFunc(kQ) / RatFunc(), "zero divisor", std::domain_error);
}

TEST_CASE("ratfunc canonical form") {
  // (q^2-1)/(2q-2) reduces to (q+1)/2 with monic denominator.
  RatFunc f(poly({-1, 0, 1}), poly({-2, 2}));
  CHECK(f.den() == QPolynomial::one());
  CHECK(f.num() == QPolynomial(std::vector<BigRational>{make_rational(1, 2), make_rational(1, 2)}));

  RatFunc g(poly({0, 2}), poly({0, 0, 4}));
  CHECK(g.num() == poly({1}) * make_rational(1, 2));
  CHECK(g.den() == kQ);
}

TEST_CASE("adams_subst examples") {
  CHECK(adams_subst(RatFunc(poly({1, 1})), 2) == RatFunc(poly({1, 0, 1})));
  RatFunc f(QPolynomial::one(), kQm1);
  CHECK(adams_subst(f, 3) == RatFunc(QPolynomial::one(), poly({-1, 0, 0, 1})));
  std::mt19937 rng(7);
  for (int i = 0; i < 20; ++i) {
    RatFunc g = random_ratfunc(rng);
    CHECK(adams_subst(g, 1) == g);
  }
}

TEST_CASE("adams_subst composes multiplicatively") {
  std::mt19937 rng(11);
  for (int i = 0; i < 20; ++i) {
    RatFunc f = random_ratfunc(rng);
    CHECK(adams_subst(adams_subst(f, 2), 3) == adams_subst(f, 6));
    CHECK(adams_subst(adams_subst(f, 3), 2) == adams_subst(f, 6));
  }
}

TEST_CASE("eval_prime_power examples") {
  CHECK(eval_prime_power(RatFunc(poly({-1, 0, 1})), 2) == BigRational(3));
  RatFunc f(QPolynomial::one(), kQm1);
  CHECK(eval_prime_power(f, 2) == BigRational(1));
  CHECK_THROWS_WITH_AS(eval_prime_power(f, 1), "evaluation at pole", std::domain_error);
}

TEST_CASE("evaluation is a homomorphism") {
  std::mt19937 rng(23);
  for (int i = 0; i < 25; ++i) {
    RatFunc a = random_ratfunc(rng);
    RatFunc b = random_ratfunc(rng);
    for (long q0 : {2L, 3L, 5L}) {
      BigRational da, db;
      try {
        da = eval_prime_power(a, q0);
        db = eval_prime_power(b, q0);
      } catch (const std::domain_error&) {
        continue;  // pole at q0: identity not applicable
      }
      CHECK(eval_prime_power(a + b, q0) == da + db);
      CHECK(eval_prime_power(a * b, q0) == da * db);
    }
  }
}

TEST_CASE("to_polynomial examples") {
  CHECK(to_polynomial(RatFunc(poly({-1, 0, 1}), kQm1)) == poly({1, 1}));
  CHECK_THROWS_AS(to_polynomial(RatFunc(QPolynomial::one(), kQm1)), std::domain_error);
  CHECK(to_polynomial(RatFunc()).is_zero());
}

TEST_CASE("laurent monomials live in RatFunc") {
  RatFunc f = RatFunc::q_power(-3);
  CHECK(f.num() == QPolynomial::one());
  CHECK(f.den() == poly({0, 0, 0, 1}));
  CHECK(RatFunc::q_power(3) * f == RatFunc(BigRational(1)));
}

TEST_CASE("polynomial JSON round trip") {
  QPolynomial p(std::vector<BigRational>{make_rational(1, 2), BigRational(0), BigRational(-3)});
  CHECK(poly_to_json(p) == json::parse(R"(["1/2","0","-3"])"));
  CHECK(poly_from_json(poly_to_json(p)) == p);

  RatFunc f(poly({-1, 0, 1}), poly({0, 0, 1}));
  CHECK(ratfunc_from_json(ratfunc_to_json(f)) == f);

  std::mt19937 rng(41);
  for (int i = 0; i < 20; ++i) {
    RatFunc g = random_ratfunc(rng);
    CHECK(ratfunc_from_json(ratfunc_to_json(g)) == g);
  }
}
