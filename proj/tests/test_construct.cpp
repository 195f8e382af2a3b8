#include <doctest.h>

#include <algorithm>

#include "nesto/construct.hpp"
#include "nesto/universe.hpp"

using namespace nesto;

namespace {

Hypergraph frieze(const VSet& carrier) {
  return *gamma_universe(2)->member(carrier);
}

}  // namespace

TEST_CASE("construct parsing and printing round trip") {
  Construct c = Construct::parse("3(14(2,5))");
  CHECK(c.decoration() == VSet{3});
  REQUIRE(c.children().size() == 1);
  CHECK(c.children()[0].decoration() == VSet{1, 4});
  CHECK(c.support() == VSet{1, 2, 3, 4, 5});
  CHECK(c.node_count() == 4);
  CHECK(c.to_string() == "3(14(2,5))");
  CHECK(Construct::parse(c.to_string()) == c);

  Construct braces = Construct::parse("{10}({11},{12})");
  CHECK(braces.to_string() == "{10}({11},{12})");
  CHECK(braces.support() == VSet{10, 11, 12});
}

TEST_CASE("construct children are canonically ordered") {
  Construct a({3}, {Construct({4, 5}), Construct({1, 2})});
  CHECK(a.to_string() == "3(12,45)");
  CHECK(a == Construct({3}, {Construct({1, 2}), Construct({4, 5})}));
  CHECK_THROWS_AS(Construct({1}, {Construct({1, 2})}), domain_error);
  CHECK_THROWS_AS(Construct::parse("1(2"), domain_error);
}

TEST_CASE("validation against a hypergraph") {
  Hypergraph h = frieze({1, 2, 3, 4, 5});
  CHECK(validate(h, Construct::parse("3(14(2,5))")).ok);
  CHECK(validate(h, Construct::parse("12345")).ok);
  // 1 and 5 are not adjacent in gamma(2), so removing 234 leaves two parts
  CHECK_FALSE(validate(h, Construct::parse("234(15)")).ok);
  // support must cover the carrier
  CHECK_FALSE(validate(h, Construct::parse("3(14(2))")).ok);
}

TEST_CASE("tubing of the running example") {
  Tubing t = tubing(Construct::parse("3(14(2,5))"));
  Tubing expected{{1, 2, 3, 4, 5}, {1, 2, 4, 5}, {2}, {5}};
  CHECK(t == expected);
}

TEST_CASE("restriction of a construct") {
  Hypergraph l = frieze({1, 2, 3, 4, 5});
  Hypergraph h = frieze({1, 3, 5});
  Construct s = Construct::parse("3(14(2,5))");
  CHECK(restrict_construct(s, l, h) == Construct::parse("3(1,5)"));
  // restriction to a participant reproduces the factor of a delegation
  CHECK(restrict_construct(s, l, frieze({2, 4})) == Construct::parse("4(2)"));
}

TEST_CASE("tube to construct") {
  Hypergraph h = frieze({1, 3, 5});
  // the tube contains the whole carrier: single node
  CHECK(tube_to_construct({1, 2, 3, 4, 5}, h) == Construct::parse("135"));
  // root = carrier minus tube, components of the rest as leaf children
  CHECK(tube_to_construct({2}, h) == Construct::parse("135"));
  CHECK(tube_to_construct({5}, h) == Construct::parse("13(5)"));
  CHECK(tube_to_construct({1, 2, 4, 5}, h) == Construct::parse("3(1,5)"));
}

TEST_CASE("enumeration is complete, valid and duplicate free") {
  Hypergraph h = frieze({1, 2, 3, 4});
  auto all = enumerate_constructs(h);
  CHECK(all.size() == 69);
  for (const auto& c : all) CHECK(validate(h, c).ok);
  auto sorted = all;
  std::sort(sorted.begin(), sorted.end());
  CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
}

TEST_CASE("parallel and serial counts agree") {
  for (int n = 1; n <= 6; ++n) {
    VSet carrier;
    for (int v = 1; v <= n; ++v) carrier.push_back(v);
    Hypergraph h = frieze(carrier);
    CHECK(count_by_nodes(h) == count_by_nodes_serial(h));
  }
  Hypergraph p4 = *gamma_universe(0)->member({1, 2, 3, 4});
  CHECK(count_by_nodes(p4) == std::vector<long long>{1, 14, 36, 24});
  CHECK(count_by_nodes(p4) == count_by_nodes_serial(p4));
}
