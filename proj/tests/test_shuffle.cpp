#include <doctest.h>

#include "nesto/checks.hpp"
#include "nesto/shuffle.hpp"

using namespace nesto;

namespace {

Delegation frieze_delegation(const std::vector<std::string>& factors,
                             const VSet& whole) {
  auto u = make_universe("frieze");
  std::vector<VSet> parts;
  std::vector<Construct> cs;
  for (const auto& f : factors) {
    cs.push_back(Construct::parse(f));
    parts.push_back(cs.back().support());
  }
  Team t = make_team(*u, parts, whole, TeamMode::Strict);
  std::vector<Construct> aligned(cs.size());
  for (auto& c : cs) aligned[t.position_of(c.support())] = std::move(c);
  return make_delegation(std::move(t), aligned);
}

LinearConstruct parse_sum(
    const std::vector<std::pair<std::string, QPoly>>& terms) {
  LinearConstruct out;
  for (const auto& [text, coeff] : terms) out.add_term(Construct::parse(text), coeff);
  return out;
}

}  // namespace

TEST_CASE("worked friezohedron product of 2(1) and 3(4)") {
  Delegation d = frieze_delegation({"2(1)", "3(4)"}, {1, 2, 3, 4});
  LinearConstruct got = shuffle_symbolic(d);
  // seven constructs; by homogeneity each coefficient is q^mu
  LinearConstruct expected = parse_sum({
      {"2(1(3(4)))", 1},
      {"2(3(1,4))", 1},
      {"2(13(4))", QPoly::q()},
      {"3(4(2(1)))", 1},
      {"3(2(1,4))", 1},
      {"3(24(1))", QPoly::q()},
      {"23(1,4)", QPoly::q()},
  });
  CHECK(got == expected);
  CHECK(coefficient_sum(got) == QPoly(4) + QPoly::monomial(1, 3));
  for (const auto& [c, p] : got.terms())
    CHECK(p == QPoly::monomial(measure(d.team, c), 1));
  CHECK(got == shuffle_nonrecursive(d));
  CHECK(got == shuffle(d));  // strict mode keeps q symbolic
}

TEST_CASE("eight vertex frieze example, focus at B and B'") {
  Delegation d8 = frieze_delegation({"3(1,5)", "2(4)", "678"}, {1, 2, 3, 4, 5, 6, 7, 8});
  // *_B for B = roots of the first two factors: root 23, children over {1}
  // and {4..8}
  LinearConstruct at_b = shuffle_B_symbolic(d8, {0, 1});
  Delegation d2 = frieze_delegation({"4", "5", "678"}, {4, 5, 6, 7, 8});
  LinearConstruct inner = shuffle_symbolic(d2);
  CHECK(at_b == graft({2, 3}, {LinearConstruct(Construct::parse("1")), inner}));

  // the focused sub-sum at B' = position of 678
  LinearConstruct at_bp = shuffle_B_symbolic(d2, {2});
  LinearConstruct expected = parse_sum({
      {"678(4(5))", 1},
      {"678(5(4))", 1},
      {"678(45)", QPoly::q()},
  });
  CHECK(at_bp == expected);
}

TEST_CASE("measure of the friezohedron example") {
  auto u = make_universe("frieze");
  Team t = make_team(*u, {{1, 3, 5}, {2, 4}}, {1, 2, 3, 4, 5}, TeamMode::Strict);
  CHECK(measure(t, Construct::parse("3(14(2,5))")) == 1);
  // a merge at the top level and one inside a component
  CHECK(measure(t, Construct::parse("34(12,5)")) == 2);
  // no merges: roots appear one at a time
  CHECK(measure(t, Construct::parse("3(1(2(4(5))))")) == 0);
}

TEST_CASE("recursive and non-recursive products agree") {
  Delegation d = frieze_delegation({"3(1,5)", "4(2)"}, {1, 2, 3, 4, 5});
  LinearConstruct got = shuffle_symbolic(d);
  CHECK(got == shuffle_nonrecursive(d));
  CHECK(got.coefficient(Construct::parse("3(14(2,5))")) == QPoly::q());
  // every restriction of every term reproduces the factors
  for (const auto& [c, p] : got.terms()) {
    CHECK(restrict_construct(c, d.team.whole(), d.team.participants()[0]) ==
          Construct::parse("3(1,5)"));
    CHECK(restrict_construct(c, d.team.whole(), d.team.participants()[1]) ==
          Construct::parse("4(2)"));
    CHECK(p == QPoly::monomial(measure(d.team, c), 1));
  }
}

TEST_CASE("trio splits the binary product") {
  Delegation d = frieze_delegation({"2(1)", "3(4)"}, {1, 2, 3, 4});
  TrioResult t = trio(d);
  CHECK(t.prec + t.succ + scale(QPoly::q(), t.dot) == shuffle_symbolic(d));
  CHECK(t.prec.term_count() == 3);
  CHECK(t.dot.term_count() == 1);
  CHECK(t.succ.term_count() == 3);
  // every prec term is rooted at the first root, every succ term at the second
  for (const auto& [c, p] : t.prec.terms()) CHECK(c.decoration() == VSet{2});
  for (const auto& [c, p] : t.succ.terms()) CHECK(c.decoration() == VSet{3});
  for (const auto& [c, p] : t.dot.terms()) CHECK(c.decoration() == VSet{2, 3});

  Delegation ternary = frieze_delegation({"1", "2", "3"}, {1, 2, 3});
  CHECK_THROWS_AS(trio(ternary), domain_error);
}

TEST_CASE("simplex witness for the semi-strict regime") {
  auto s = make_universe("simplex");
  Team inner = make_team(*s, {{3, 4}, {5, 6}}, {3, 4, 5, 6}, TeamMode::SemiStrict);
  LinearConstruct ip =
      shuffle_symbolic(make_delegation(inner, {Construct::parse("34"),
                                               Construct::parse("56")}));
  CHECK(ip == parse_sum({{"34(5,6)", 1}, {"56(3,4)", 1}, {"3456", QPoly::q()}}));

  Team outer = make_team(*s, {{1, 2}, {3, 4, 5, 6}}, {1, 2, 3, 4, 5, 6},
                         TeamMode::SemiStrict);
  Delegation d{outer, {LinearConstruct(Construct::parse("12")), ip}};
  LinearConstruct w = shuffle_B_symbolic(d, {0});
  CHECK(w == LinearConstruct(Construct::parse("12(3,4,5,6)"),
                             QPoly(2) + QPoly::q()));
  // only at q = -1 does this collapse to a single unweighted term
  CHECK(evaluate_q(w, -1) == LinearConstruct(Construct::parse("12(3,4,5,6)")));

  // the public semi-strict product evaluates at q = -1 and sums to 1
  Delegation plain = make_delegation(
      outer, {Construct::parse("12"), Construct::parse("34(5,6)")});
  LinearConstruct prod = shuffle(plain);
  CHECK(coefficient_sum(prod) == QPoly(1));
}

TEST_CASE("unrooted linear factors are rejected at B positions") {
  auto u = make_universe("frieze");
  Team t = make_team(*u, {{1, 2}, {3, 4}}, {1, 2, 3, 4}, TeamMode::Strict);
  LinearConstruct unrooted(Construct::parse("1(2)"));
  unrooted.add_term(Construct::parse("2(1)"), QPoly(1));
  Delegation d{t, {unrooted, LinearConstruct(Construct::parse("3(4)"))}};
  CHECK_THROWS_AS(shuffle_B_symbolic(d, {0}), domain_error);
  // at a non-B position the same factor is fine
  CHECK_NOTHROW(shuffle_B_symbolic(d, {1}));
}

TEST_CASE("associativity and the polydendriform equation on a grafting") {
  auto u = make_universe("frieze");
  Team outer = make_team(*u, {{1, 2, 3}, {4, 5}}, {1, 2, 3, 4, 5}, TeamMode::Strict);
  Team inner = make_team(*u, {{1}, {2, 3}}, {1, 2, 3}, TeamMode::Strict);
  std::vector<Construct> cs{Construct::parse("1"), Construct::parse("2(3)"),
                            Construct::parse("5(4)")};
  CHECK(check_associativity(outer, 0, inner, cs));
  for (int mask = 1; mask < 8; ++mask) {
    std::vector<int> b;
    for (int i = 0; i < 3; ++i)
      if (mask & (1 << i)) b.push_back(i);
    CHECK(check_polydendriform(outer, 0, inner, cs, b));
  }
}

TEST_CASE("check suites pass on small instances") {
  CheckReport r = run_check("strict-assoc", "gamma:2", 5, 7, 25);
  CHECK(r.ok);
  CHECK(r.cases == 25);
  r = run_check("semistrict-assoc", "simplex", 5, 7, 25);
  CHECK(r.ok);
  r = run_check("polydendriform", "gamma:inf", 5, 7, 25);
  CHECK(r.ok);
  r = run_check("tridendriform", "gamma:2", 5, 7, 35);
  CHECK(r.ok);
  r = run_check("coeff-sum", "hypercube", 5, 7, 25);
  CHECK(r.ok);
  r = run_check("oracle-agreement", "simplex", 5, 7, 25);
  CHECK(r.ok);
  r = run_check("strictness-lemma", "frieze", 4, 0);
  CHECK(r.ok);
  CHECK(r.cases > 0);
  r = run_check("tubing-lemma", "gamma:1", 4, 0);
  CHECK(r.ok);
  CHECK_THROWS_AS(run_check("nope", "gamma:1", 4, 0), domain_error);
}
