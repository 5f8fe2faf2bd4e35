#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qcount/json_io.hpp"
#include "qcount/oracle.hpp"
#include "qcount/partition.hpp"

using namespace qcount;

namespace {
Partition pt(std::vector<int> parts) { return Partition(std::move(parts)); }
DimVector dv(std::vector<int> v) { return DimVector(std::move(v)); }
}

TEST_CASE("partition construction and views") {
  Partition p = pt({2, 3, 1, 2});
  CHECK(p.parts() == std::vector<int>{3, 2, 2, 1});
  CHECK(p.size() == 8);
  CHECK(p.multiplicity(2) == 2);
  CHECK(p.multiplicity(5) == 0);
  CHECK(pt({3, 2, 2, 1}).conjugate().parts() == std::vector<int>{4, 3, 1});
  CHECK(Partition().empty());
  CHECK_THROWS_AS(pt({0}), std::invalid_argument);
}

TEST_CASE("min_pairing examples") {
  CHECK(min_pairing(pt({1}), pt({1})) == 1);
  CHECK(min_pairing(pt({2, 1}), pt({1, 1})) == 4);
  CHECK(min_pairing(pt({3, 2, 2, 1}), pt({3, 2, 2, 1})) == 26);
  CHECK(min_pairing(pt({3, 1}), Partition()) == 0);
}

TEST_CASE("min_pairing agrees with the conjugate formula") {
  auto all = partitions_up_to(6);
  for (const auto& a : all)
    for (const auto& b : all)
      CHECK(min_pairing(a, b) == min_pairing_via_conjugates(a, b));
}

TEST_CASE("u_pairing examples and positivity") {
  CHECK(u_pairing(pt({2}), pt({2})) == 1);
  CHECK(u_pairing(pt({1}), pt({1})) == 0);
  CHECK(u_pairing(pt({2, 1}), Partition()) == 0);

  auto all = partitions_up_to(6);
  for (const auto& a : all)
    for (const auto& b : all) {
      CHECK(u_pairing(a, b) >= 0);
      CHECK(u_pairing(a, b) == u_pairing(b, a));
    }
}

TEST_CASE("b_poly examples") {
  QPolynomial one_minus_q(std::vector<BigRational>{BigRational(1), BigRational(-1)});
  QPolynomial one_minus_q2(std::vector<BigRational>{BigRational(1), BigRational(0), BigRational(-1)});
  CHECK(b_poly(pt({1})) == one_minus_q);
  CHECK(b_poly(pt({1, 1})) == one_minus_q * one_minus_q2);
  CHECK(b_poly(pt({2, 1})) == one_minus_q * one_minus_q);
  CHECK(b_poly(Partition()) == QPolynomial::one());
  CHECK(b_poly(pt({3, 2, 1})).coeff(0) == BigRational(1));
}

TEST_CASE("centralizer_order examples") {
  CHECK(centralizer_order(pt({1})) ==
        RatFunc(QPolynomial(std::vector<BigRational>{BigRational(-1), BigRational(1)})));
  CHECK(centralizer_order(pt({2})) ==
        RatFunc(QPolynomial(std::vector<BigRational>{BigRational(0), BigRational(-1), BigRational(1)})));
  CHECK(centralizer_order(pt({1, 1})) == RatFunc(gl_order(dv({2}))));
  CHECK(centralizer_order(Partition()) == RatFunc(BigRational(1)));
}

TEST_CASE("centralizer_order matches brute-force commutant counts") {
  // |lambda| <= 3 over F_2 and F_3.
  for (int q0 : {2, 3}) {
    const SmallField& f = SmallField::of_order(q0);
    for (int m = 0; m <= 3; ++m) {
      for (const auto& lambda : partitions_of(m)) {
        BigRational predicted = eval_prime_power(centralizer_order(lambda), q0);
        CHECK(predicted == BigRational(static_cast<long>(commuting_group_order(lambda, f))));
      }
    }
  }
}

TEST_CASE("Burnside consistency over unipotent classes") {
  // Sum over |lambda| = m of |GL_m| / centralizer(lambda) at q = 2 equals the
  // number of unipotent elements of GL_m(F_2).
  const SmallField& f = SmallField::of_order(2);
  for (int m = 1; m <= 3; ++m) {
    BigRational total(0);
    QPolynomial gl = gl_order(dv({m}));
    for (const auto& lambda : partitions_of(m))
      total += eval_prime_power(RatFunc(gl) / centralizer_order(lambda), 2);

    long long unipotent = 0;
    const GLGroup& group = general_linear_group(f, m);
    FFMatrix eye = FFMatrix::identity(f, m);
    for (const auto& g : group.elements) {
      FFMatrix nil = g.sub(eye);
      FFMatrix power = FFMatrix::identity(f, m);
      for (int k = 0; k < m; ++k) power = power.mul(nil);
      if (power.is_zero()) ++unipotent;
    }
    CHECK(total == BigRational(static_cast<long>(unipotent)));
  }
}

TEST_CASE("multiplicity_vector examples and sum rule") {
  PartitionTuple tau1(std::vector<Partition>{pt({3, 2, 2, 1})});
  CHECK(multiplicity_vector(tau1, 2) == dv({2}));
  CHECK(multiplicity_vector(tau1, 3) == dv({1}));
  PartitionTuple tau2(std::vector<Partition>{pt({1}), pt({2})});
  CHECK(multiplicity_vector(tau2, 1) == dv({1, 0}));

  for (const auto& tau : enumerate_partition_tuples(dv({3, 2}))) {
    DimVector weighted = DimVector::zeros(2);
    for (int s = 1; s <= tau.largest_part(); ++s)
      weighted = weighted + multiplicity_vector(tau, s).scaled(s);
    CHECK(weighted == tau.size_vector());
  }
}

TEST_CASE("enumerate_partition_tuples counts") {
  CHECK(enumerate_partition_tuples(dv({0, 0})).size() == 1);
  CHECK(enumerate_partition_tuples(dv({2})).size() == 4);
  CHECK(enumerate_partition_tuples(dv({2, 1})).size() == 8);

  // The all-empty tuple is present.
  auto tuples = enumerate_partition_tuples(dv({1, 1}));
  bool has_empty = false;
  for (const auto& t : tuples)
    has_empty |= t.size_vector().is_zero();
  CHECK(has_empty);
}

TEST_CASE("partition JSON") {
  Partition p = pt({3, 1});
  CHECK(partition_to_json(p) == json::parse("[3,1]"));
  CHECK(partition_from_json(partition_to_json(p)) == p);
}
