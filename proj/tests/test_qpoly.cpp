#include <doctest.h>

#include "nesto/linear.hpp"
#include "nesto/qpoly.hpp"

using namespace nesto;

TEST_CASE("qpoly arithmetic is exact and sparse") {
  QPoly p = QPoly(6) + QPoly::q();
  CHECK(p.to_string() == "6 + q");
  CHECK(p.coefficient(0) == 6);
  CHECK(p.coefficient(1) == 1);
  CHECK(p.coefficient(2) == 0);

  QPoly z = p - p;
  CHECK(z.is_zero());
  CHECK(z.to_string() == "0");

  QPoly prod = (QPoly(1) + QPoly::q()) * (QPoly(1) - QPoly::q());
  CHECK(prod == QPoly(1) - QPoly::monomial(2));
  CHECK(prod.to_string() == "1 - q^2");
}

TEST_CASE("qpoly evaluation") {
  QPoly p = QPoly(2) + QPoly::q() * QPoly(3) + QPoly::monomial(2);
  CHECK(p.evaluate(0) == 2);
  CHECK(p.evaluate(1) == 6);
  CHECK(p.evaluate(-1) == 0);
  CHECK(p.evaluate(10) == 132);
}

TEST_CASE("qpoly big integer coefficients") {
  BigInt big = 1;
  for (int i = 0; i < 100; ++i) big *= 2;
  QPoly p = QPoly(big) + QPoly::monomial(1, big);
  CHECK(p.coefficient(0) == big);
  CHECK(p.evaluate(1) == big * 2);
  CHECK((p * p).coefficient(1) == big * big * 2);
}

TEST_CASE("qpoly printing conventions") {
  CHECK(QPoly::q().to_string() == "q");
  CHECK((-QPoly::q()).to_string() == "-q");
  CHECK((QPoly(1) + QPoly::monomial(3, 2)).to_string() == "1 + 2q^3");
  CHECK((QPoly(-1) + QPoly::q()).to_string() == "-1 + q");
}

TEST_CASE("linear constructs prune zero terms") {
  Construct a = Construct::parse("1(2)");
  Construct b = Construct::parse("2(1)");
  LinearConstruct v(a);
  v.add_term(b, QPoly::q());
  CHECK(v.term_count() == 2);
  v.add_term(b, -QPoly::q());
  CHECK(v.term_count() == 1);
  CHECK(v.coefficient(b).is_zero());
  CHECK(v.coefficient(a) == QPoly(1));
  v -= LinearConstruct(a);
  CHECK(v.is_zero());
}

TEST_CASE("linear construct helpers") {
  Construct a = Construct::parse("12");
  Construct b = Construct::parse("1(2)");
  LinearConstruct v(a, QPoly::q());
  v.add_term(b, QPoly(2));
  CHECK(coefficient_sum(v) == QPoly(2) + QPoly::q());
  CHECK(evaluate_q(v, -1).coefficient(a) == QPoly(-1));
  CHECK_FALSE(v.common_root().has_value());
  LinearConstruct w(b, QPoly(3));
  w.add_term(Construct::parse("1(2(3))"), QPoly(5));
  REQUIRE(w.common_root().has_value());
  CHECK(*w.common_root() == VSet{1});
}

TEST_CASE("graft distributes multilinearly") {
  LinearConstruct left(Construct::parse("2"), QPoly(1));
  left.add_term(Construct::parse("3"), QPoly::q());
  LinearConstruct right(Construct::parse("5"));
  LinearConstruct g = graft({1}, {left, right});
  CHECK(g.term_count() == 2);
  CHECK(g.coefficient(Construct::parse("1(2,5)")) == QPoly(1));
  CHECK(g.coefficient(Construct::parse("1(3,5)")) == QPoly::q());
}
