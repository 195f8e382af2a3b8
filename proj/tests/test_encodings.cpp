#include <doctest.h>

#include <algorithm>

#include "nesto/encodings.hpp"
#include "nesto/shuffle.hpp"

using namespace nesto;

TEST_CASE("standardization of words") {
  CHECK(std_word({1, 4, 3, 4}) == PackedWord{1, 3, 2, 3});
  CHECK(std_word({5, 5, 5}) == PackedWord{1, 1, 1});
  CHECK(is_packed({1, 2, 1}));
  CHECK_FALSE(is_packed({1, 3, 3}));
  CHECK_THROWS_AS(std_word({}), domain_error);
}

TEST_CASE("packed words encode permutohedron chains") {
  // the root holds the maximal letter: (1,2,1) is the chain 2(13)
  CHECK(permutohedron_encode(Construct::parse("2(13)"), {1, 2, 3}) ==
        PackedWord{1, 2, 1});
  CHECK(permutohedron_encode(Construct::parse("13(2)"), {1, 2, 3}) ==
        PackedWord{2, 1, 2});
  CHECK(permutohedron_decode({2, 1}, {4, 5}) == Construct::parse("4(5)"));
  // all 13 faces of the hexagon round trip
  auto p3 = *gamma_universe(0)->member({1, 2, 3});
  auto all = enumerate_constructs(p3);
  CHECK(all.size() == 13);
  for (const auto& c : all) {
    PackedWord w = permutohedron_encode(c, {1, 2, 3});
    CHECK(is_packed(w));
    CHECK(permutohedron_decode(w, {1, 2, 3}) == c);
  }
  CHECK_THROWS_AS(permutohedron_encode(Construct::parse("2(1,3)"), {1, 2, 3}),
                  domain_error);
}

TEST_CASE("the shuffle of (1,2,1) and (2,1) splits 5/3/5") {
  WordTrio t = br_shuffle({1, 2, 1}, {2, 1});
  std::vector<PackedWord> prec{{1, 3, 1, 2, 1},
                               {1, 4, 1, 3, 2},
                               {2, 3, 2, 2, 1},
                               {2, 4, 2, 3, 1},
                               {3, 4, 3, 2, 1}};
  std::vector<PackedWord> dot{{1, 2, 1, 2, 1}, {1, 3, 1, 3, 2}, {2, 3, 2, 3, 1}};
  std::vector<PackedWord> succ{{1, 2, 1, 3, 1},
                               {1, 2, 1, 3, 2},
                               {1, 2, 1, 4, 3},
                               {1, 3, 1, 4, 2},
                               {2, 3, 2, 4, 1}};
  CHECK(t.prec == prec);
  CHECK(t.dot == dot);
  CHECK(t.succ == succ);
}

TEST_CASE("cube words encode hypercube constructs") {
  const VSet x{1, 2, 3, 4};
  CHECK(hypercube_encode(Construct::parse("3(12,4)"), x) == "+.+-");
  CHECK(hypercube_encode(Construct::parse("23(1,4)"), x) == "++.-");
  CHECK(hypercube_encode(Construct::parse("4(1(2,3))"), x) == "+--+");
  CHECK(hypercube_encode(Construct::parse("4(3(2(1)))"), x) == "++++");
  CHECK(hypercube_decode("+.+-", x) == Construct::parse("3(12,4)"));
  CHECK(hypercube_decode("+--+", x) == Construct::parse("4(1(2,3))"));

  // all words of length 3 starting with '+' decode to the 9 distinct faces
  auto cube3 = *hypercube_universe()->member({1, 2, 3});
  auto all = enumerate_constructs(cube3);
  CHECK(all.size() == 9);
  std::vector<Construct> decoded;
  for (char a : {'+', '-', '.'})
    for (char b : {'+', '-', '.'}) {
      CubeWord w{'+', a, b};
      Construct c = hypercube_decode(w, {1, 2, 3});
      CHECK(hypercube_encode(c, {1, 2, 3}) == w);
      decoded.push_back(c);
    }
  std::sort(decoded.begin(), decoded.end());
  std::sort(all.begin(), all.end());
  CHECK(decoded == all);
}

TEST_CASE("hypercube word rules on the smallest case") {
  CubeTrio t = hypercube_trio_words("+", "+");
  CHECK(t.prec == CubeWordSum{{"+-", 1}});
  CHECK(t.dot == CubeWordSum{{"+.", 1}});
  CHECK(t.succ == CubeWordSum{{"++", 1}});
}

TEST_CASE("schroeder tree parsing and shape") {
  SchroederTree t = SchroederTree::parse("(* ((* *) *))");
  CHECK(t.leaf_count() == 4);
  CHECK(t.to_string() == "(* ((* *) *))");
  CHECK(SchroederTree::parse("*").is_leaf());
  CHECK_THROWS_AS(SchroederTree::parse("(*)"), domain_error);
  CHECK_THROWS_AS(SchroederTree::parse("(* *"), domain_error);
}

TEST_CASE("schroeder trees encode associahedron faces") {
  CHECK(associahedron_encode(Construct::parse("1(3(2))"), {1, 2, 3}).to_string() ==
        "(* ((* *) *))");
  CHECK(associahedron_encode(Construct::parse("5(4)"), {4, 5}).to_string() ==
        "((* *) *)");
  auto k3 = *gamma_universe(1)->member({1, 2, 3});
  auto all = enumerate_constructs(k3);
  CHECK(all.size() == 11);  // the pentagon
  for (const auto& c : all) {
    SchroederTree t = associahedron_encode(c, {1, 2, 3});
    CHECK(t.leaf_count() == 4);
    CHECK(associahedron_decode(t, {1, 2, 3}) == c);
    CHECK(SchroederTree::parse(t.to_string()) == t);
  }
  CHECK_THROWS_AS(associahedron_encode(Construct::parse("13(2)"), {1, 3, 5}),
                  domain_error);
}

TEST_CASE("tree rules match the generic trio through the encoding") {
  auto u = gamma_universe(1);
  Team team = make_team(*u, {{1, 2, 3}, {4, 5}}, {1, 2, 3, 4, 5}, TeamMode::Strict);
  Construct ca = Construct::parse("1(3(2))");
  Construct cb = Construct::parse("5(4)");
  TrioResult tr = trio(make_delegation(team, {ca, cb}));
  TreeTrio trees = lr_trio_trees(associahedron_encode(ca, {1, 2, 3}),
                                 associahedron_encode(cb, {4, 5}));
  auto to_trees = [&](const LinearConstruct& v) {
    TreeSum out;
    for (const auto& [c, p] : v.terms())
      out[associahedron_encode(c, {1, 2, 3, 4, 5})] = p;
    return out;
  };
  CHECK(to_trees(tr.prec) == trees.prec);
  CHECK(to_trees(tr.dot) == trees.dot);
  CHECK(to_trees(tr.succ) == trees.succ);
}

TEST_CASE("erosohedron face counts") {
  ErosoCounts c3 = erosohedron_counts(3);
  CHECK(c3.vertices == 6);
  CHECK(c3.faces_by_dim == std::vector<long long>{6, 1});
  CHECK(c3.total == 13);
  CHECK(erosohedron_counts(4).total == 39);

  for (int m = 3; m <= 7; ++m) {
    VSet carrier;
    for (int v = 1; v <= m; ++v) carrier.push_back(v);
    auto e = *erosohedron_universe()->member(carrier);
    auto by_nodes = count_by_nodes(e);
    ErosoCounts want = erosohedron_counts(m);
    REQUIRE(static_cast<int>(by_nodes.size()) == m);
    CHECK(by_nodes[m - 1] == want.vertices);
    long long total = 0;
    for (long long n : by_nodes) total += n;
    CHECK(total == want.total);
    for (int k = 1; k <= m - 1; ++k)
      CHECK(by_nodes[m - k - 1] == want.faces_by_dim[k - 1]);
  }
}
