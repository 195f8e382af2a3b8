#include "nesto/checks.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <random>
#include <sstream>

#include "nesto/encodings.hpp"
#include "nesto/shuffle.hpp"

namespace nesto {

namespace {

using Rng = std::mt19937_64;

VSet interval(int lo, int hi) {
  VSet out;
  for (int v = lo; v <= hi; ++v) out.push_back(v);
  return out;
}

int pick(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// k nonempty blocks; for interval universes, successive intervals
std::vector<VSet> random_blocks(Rng& rng, const VSet& carrier, int k,
                                bool intervals) {
  const int n = static_cast<int>(carrier.size());
  for (;;) {
    std::vector<VSet> blocks(k);
    if (intervals) {
      std::vector<int> cuts;
      for (int i = 1; i < n; ++i) cuts.push_back(i);
      std::shuffle(cuts.begin(), cuts.end(), rng);
      cuts.resize(k - 1);
      cuts.push_back(0);
      cuts.push_back(n);
      std::sort(cuts.begin(), cuts.end());
      for (int b = 0; b < k; ++b)
        blocks[b] = VSet(carrier.begin() + cuts[b], carrier.begin() + cuts[b + 1]);
    } else {
      for (int i = 0; i < n; ++i) blocks[pick(rng, 0, k - 1)].push_back(carrier[i]);
    }
    bool ok = true;
    for (const auto& b : blocks)
      if (b.empty()) ok = false;
    if (ok) return blocks;
  }
}

Construct random_construct(Rng& rng, const Hypergraph& h) {
  auto all = enumerate_constructs(h);
  return all[pick(rng, 0, static_cast<int>(all.size()) - 1)];
}

TeamMode mode_for(const Universe& u) {
  return (u.name() == "simplex" || u.name() == "hypercube" ||
          u.name() == "erosohedron")
             ? TeamMode::SemiStrict
             : TeamMode::Strict;
}

std::optional<Team> try_team(const Universe& u, const std::vector<VSet>& blocks,
                             const VSet& whole, TeamMode mode) {
  try {
    return make_team(u, blocks, whole, mode);
  } catch (const domain_error&) {
    return std::nullopt;
  }
}

// a team of k participants on the interval 1..n for some n <= max_carrier
std::optional<Team> sample_team(Rng& rng, const Universe& u, int max_carrier,
                                int k, TeamMode mode) {
  for (int attempt = 0; attempt < 500; ++attempt) {
    int n = pick(rng, std::max(k, 2), max_carrier);
    if (n < k) continue;
    VSet carrier = interval(1, n);
    auto blocks = random_blocks(rng, carrier, k, u.blocks_must_be_intervals());
    if (auto t = try_team(u, blocks, carrier, mode)) return t;
  }
  return std::nullopt;
}

struct Grafting {
  Team outer;
  int pos;
  Team inner;
  std::vector<Construct> constructs;  // aligned with the grafted team
};

std::optional<Grafting> sample_grafting(Rng& rng, const Universe& u,
                                        int max_carrier, TeamMode mode) {
  for (int attempt = 0; attempt < 500; ++attempt) {
    int k = pick(rng, 2, 3);
    auto outer = sample_team(rng, u, max_carrier, k, mode);
    if (!outer) continue;
    std::vector<int> big;
    for (std::size_t a = 0; a < outer->size(); ++a)
      if (outer->participants()[a].size() >= 2) big.push_back(static_cast<int>(a));
    if (big.empty()) continue;
    int pos = big[pick(rng, 0, static_cast<int>(big.size()) - 1)];
    const Hypergraph& part = outer->participants()[pos];
    auto sub = random_blocks(rng, part.carrier(), 2, u.blocks_must_be_intervals());
    auto inner = try_team(u, sub, part.carrier(), mode);
    if (!inner) continue;
    Team grafted = graft_team(*outer, pos, *inner);
    std::vector<Construct> cs;
    for (const auto& p : grafted.participants())
      cs.push_back(random_construct(rng, p));
    return Grafting{std::move(*outer), pos, std::move(*inner), std::move(cs)};
  }
  return std::nullopt;
}

std::string describe(const Team& t, const std::vector<Construct>& cs) {
  std::ostringstream os;
  os << "whole=" << t.whole().to_string() << " factors=";
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (i) os << ", ";
    os << cs[i].to_string();
  }
  return os.str();
}

std::string describe_grafting(const Grafting& g) {
  Team grafted = graft_team(g.outer, g.pos, g.inner);
  std::ostringstream os;
  os << describe(grafted, g.constructs)
     << " (inner whole=" << g.inner.whole().to_string() << ")";
  return os.str();
}

CheckReport check_assoc(const Universe& u, int max_carrier, std::uint64_t seed,
                        int iterations, TeamMode mode) {
  CheckReport rep;
  Rng rng(seed);
  while (rep.cases < iterations) {
    auto g = sample_grafting(rng, u, max_carrier, mode);
    if (!g) {
      rep.ok = false;
      rep.counterexample = "sampler could not build a grafting";
      return rep;
    }
    ++rep.cases;
    if (!check_associativity(g->outer, g->pos, g->inner, g->constructs)) {
      rep.ok = false;
      rep.counterexample = describe_grafting(*g);
      return rep;
    }
  }
  return rep;
}

CheckReport check_polydend(const Universe& u, int max_carrier, std::uint64_t seed,
                           int iterations) {
  CheckReport rep;
  Rng rng(seed);
  TeamMode mode = mode_for(u);
  while (rep.cases < iterations) {
    auto g = sample_grafting(rng, u, max_carrier, mode);
    if (!g) {
      rep.ok = false;
      rep.counterexample = "sampler could not build a grafting";
      return rep;
    }
    Team grafted = graft_team(g->outer, g->pos, g->inner);
    const int m = static_cast<int>(grafted.size());
    for (int mask = 1; mask < (1 << m); ++mask) {
      std::vector<int> b;
      for (int i = 0; i < m; ++i)
        if (mask & (1 << i)) b.push_back(i);
      ++rep.cases;
      if (!check_polydendriform(g->outer, g->pos, g->inner, g->constructs, b)) {
        rep.ok = false;
        std::ostringstream os;
        os << describe_grafting(*g) << " B''={";
        for (std::size_t i = 0; i < b.size(); ++i) os << (i ? "," : "") << b[i];
        os << "}";
        rep.counterexample = os.str();
        return rep;
      }
    }
  }
  return rep;
}

// the seven tridendriform equations with * = prec + q dot + succ
CheckReport check_tridendriform(const Universe& u, int max_carrier,
                                std::uint64_t seed, int iterations) {
  CheckReport rep;
  Rng rng(seed);
  TeamMode mode = mode_for(u);
  bool semi = mode == TeamMode::SemiStrict;
  auto at_mode = [&](LinearConstruct v) {
    return semi ? evaluate_q(v, -1) : v;
  };
  while (rep.cases < iterations) {
    auto whole3 = sample_team(rng, u, max_carrier, 3, mode);
    if (!whole3) {
      rep.ok = false;
      rep.counterexample = "sampler could not build a ternary team";
      return rep;
    }
    const auto& ha = whole3->participants()[0];
    const auto& hb = whole3->participants()[1];
    const auto& hc = whole3->participants()[2];
    auto h_ab = u.member(vset_union(ha.carrier(), hb.carrier()));
    auto h_bc = u.member(vset_union(hb.carrier(), hc.carrier()));
    if (!h_ab || !h_bc) continue;
    auto t_ab = try_team(u, {ha.carrier(), hb.carrier()}, h_ab->carrier(), mode);
    auto t_bc = try_team(u, {hb.carrier(), hc.carrier()}, h_bc->carrier(), mode);
    auto t_ab_c =
        try_team(u, {h_ab->carrier(), hc.carrier()}, whole3->whole().carrier(), mode);
    auto t_a_bc =
        try_team(u, {ha.carrier(), h_bc->carrier()}, whole3->whole().carrier(), mode);
    if (!t_ab || !t_bc || !t_ab_c || !t_a_bc) continue;

    Construct a = random_construct(rng, ha);
    Construct b = random_construct(rng, hb);
    Construct c = random_construct(rng, hc);

    // position of the factor with the given carrier within a binary team
    auto op = [&](const Team& t, const LinearConstruct& left,
                  const LinearConstruct& right, const VSet& left_carrier,
                  int which /*0 prec, 1 dot, 2 succ*/) {
      int lp = t.position_of(left_carrier);
      int rp = 1 - lp;
      std::vector<LinearConstruct> factors(2);
      factors[lp] = left;
      factors[rp] = right;
      Delegation d{t, std::move(factors)};
      if (which == 0) return shuffle_B_symbolic(d, {lp});
      if (which == 2) return shuffle_B_symbolic(d, {rp});
      return shuffle_B_symbolic(d, {0, 1});
    };
    auto star2 = [&](const Team& t, const LinearConstruct& left,
                     const LinearConstruct& right, const VSet& lc) {
      return op(t, left, right, lc, 0) + op(t, left, right, lc, 2) +
             scale(QPoly::q(), op(t, left, right, lc, 1));
    };

    LinearConstruct la(a), lb(b), lc_(c);
    const VSet& ca = ha.carrier();
    const VSet& cab = h_ab->carrier();
    struct Eq {
      const char* name;
      LinearConstruct lhs, rhs;
    };
    std::vector<Eq> eqs;
    auto L = [&](int w1, int w2) {
      return op(*t_ab_c, op(*t_ab, la, lb, ca, w1), lc_, cab, w2);
    };
    auto R = [&](int w1, int w2) {
      return op(*t_a_bc, la, op(*t_bc, lb, lc_, hb.carrier(), w2), ca, w1);
    };
    eqs.push_back({"(prec*)", op(*t_ab_c, op(*t_ab, la, lb, ca, 0), lc_, cab, 0),
                   op(*t_a_bc, la, star2(*t_bc, lb, lc_, hb.carrier()), ca, 0)});
    eqs.push_back({"(succ prec)", L(2, 0), R(2, 0)});
    eqs.push_back({"(* succ)",
                   op(*t_ab_c, star2(*t_ab, la, lb, ca), lc_, cab, 2), R(2, 2)});
    eqs.push_back({"(dot ass)", L(1, 1), R(1, 1)});
    eqs.push_back({"(succ dot)", L(2, 1), R(2, 1)});
    eqs.push_back({"(prec dot succ)", L(0, 1), R(1, 2)});
    eqs.push_back({"(dot prec)", L(1, 0), R(1, 0)});
    for (const auto& eq : eqs) {
      ++rep.cases;
      if (at_mode(eq.lhs) != at_mode(eq.rhs)) {
        rep.ok = false;
        std::ostringstream os;
        os << eq.name << " fails for a=" << a.to_string()
           << " b=" << b.to_string() << " c=" << c.to_string()
           << " on whole " << whole3->whole().to_string();
        rep.counterexample = os.str();
        return rep;
      }
    }
  }
  return rep;
}

CheckReport check_oracle_agreement(const Universe& u, int max_carrier,
                                   std::uint64_t seed, int iterations);

CheckReport check_coeff_sum(const Universe& u, int max_carrier,
                            std::uint64_t seed, int iterations) {
  CheckReport rep;
  Rng rng(seed);
  while (rep.cases < iterations) {
    int k = pick(rng, 1, 3);
    auto t = sample_team(rng, u, max_carrier, k, TeamMode::SemiStrict);
    if (!t) {
      rep.ok = false;
      rep.counterexample = "sampler could not build a team";
      return rep;
    }
    std::vector<Construct> cs;
    for (const auto& p : t->participants()) cs.push_back(random_construct(rng, p));
    Delegation d = make_delegation(*t, cs);
    ++rep.cases;
    if (coefficient_sum(shuffle(d)) != QPoly(1)) {
      rep.ok = false;
      rep.counterexample = describe(*t, cs);
      return rep;
    }
  }
  return rep;
}

void each_partition(const VSet& carrier,
                    const std::function<void(const std::vector<VSet>&)>& f) {
  std::vector<VSet> blocks;
  std::function<void(std::size_t)> walk = [&](std::size_t i) {
    if (i == carrier.size()) {
      f(blocks);
      return;
    }
    const std::size_t existing = blocks.size();
    for (std::size_t bi = 0; bi < existing; ++bi) {
      blocks[bi].push_back(carrier[i]);
      walk(i + 1);
      blocks[bi].pop_back();
    }
    blocks.push_back({carrier[i]});
    walk(i + 1);
    blocks.pop_back();
  };
  walk(0);
}

CheckReport check_strictness_lemma(const Universe& u, int max_carrier) {
  CheckReport rep;
  int cap = std::min(max_carrier, 5);
  VSet ambient = interval(1, cap);
  // all carriers inside 1..cap, all partitions into universe members
  for (int mask = 1; mask < (1 << cap); ++mask) {
    VSet carrier;
    for (int i = 0; i < cap; ++i)
      if (mask & (1 << i)) carrier.push_back(ambient[i]);
    auto whole = u.member(carrier);
    if (!whole) continue;
    each_partition(carrier, [&](const std::vector<VSet>& blocks) {
      if (!rep.ok) return;
      std::vector<Hypergraph> parts;
      for (const auto& b : blocks) {
        auto h = u.member(b);
        if (!h) return;
        parts.push_back(std::move(*h));
      }
      ++rep.cases;
      if (is_strict(parts, *whole) != brute_force_strict(parts, *whole)) {
        rep.ok = false;
        std::ostringstream os;
        os << "whole=" << whole->to_string() << " blocks=";
        for (const auto& b : blocks) {
          os << "{";
          for (VertexId v : b) os << v << " ";
          os << "}";
        }
        rep.counterexample = os.str();
      }
    });
    if (!rep.ok) return rep;
  }
  return rep;
}

CheckReport check_tubing_lemma(const Universe& u, int max_carrier) {
  CheckReport rep;
  int cap = std::min(max_carrier, 6);
  for (int n = 1; n <= cap; ++n) {
    VSet lc = interval(1, n);
    auto lo = u.member(lc);
    if (!lo) continue;
    const Hypergraph& l = *lo;
    auto constructs = enumerate_constructs(l);
    for (int mask = 1; mask < (1 << n); ++mask) {
      VSet hc;
      for (int i = 0; i < n; ++i)
        if (mask & (1 << i)) hc.push_back(lc[i]);
      auto ho = u.member(hc);
      if (!ho) continue;
      const Hypergraph& h = *ho;
      bool edges_ok = true;
      for (const auto& e : h.hyperedges())
        if (!l.is_connected_subset(e)) edges_ok = false;
      if (!edges_ok) continue;
      for (const Construct& s : constructs) {
        ++rep.cases;
        Construct restricted = restrict_construct(s, l, h);
        Tubing lhs = tubing(restricted);
        Tubing rhs;
        for (const VSet& t : tubing(s)) {
          Construct th = tube_to_construct(t, h);
          for (const VSet& tube : tubing(th)) rhs.insert(tube);
        }
        if (lhs != rhs) {
          rep.ok = false;
          rep.counterexample = "S=" + s.to_string() + " L=" + l.to_string() +
                               " H=" + h.to_string();
          return rep;
        }
      }
    }
  }
  return rep;
}

// singletons for every vertex of carrier outside `used`
std::vector<Construct> filler_singletons(const VSet& carrier, const VSet& used) {
  std::vector<Construct> out;
  for (VertexId v : vset_diff(carrier, used)) out.push_back(Construct::singleton(v));
  return out;
}

CheckReport check_oracle_agreement(const Universe& u, int max_carrier,
                                   std::uint64_t seed, int iterations) {
  CheckReport rep;
  Rng rng(seed);
  const std::string name = u.name();

  auto fail = [&](const std::string& msg) {
    rep.ok = false;
    rep.counterexample = msg;
    return rep;
  };

  if (name == "hypercube") {
    while (rep.cases < iterations) {
      auto t = sample_team(rng, u, std::min(max_carrier, 6), 2,
                           TeamMode::SemiStrict);
      if (!t) return fail("sampler could not build a team");
      const VSet& x1 = t->participants()[0].carrier();
      const VSet& x2 = t->participants()[1].carrier();
      Construct c1 = random_construct(rng, t->participants()[0]);
      Construct c2 = random_construct(rng, t->participants()[1]);
      CubeTrio words = hypercube_trio_words(hypercube_encode(c1, x1),
                                            hypercube_encode(c2, x2));
      TrioResult tr = trio(make_delegation(*t, {c1, c2}));
      VSet whole_c = t->whole().carrier();
      auto to_words = [&](const LinearConstruct& v) {
        CubeWordSum out;
        for (const auto& [c, p] : v.terms())
          out[hypercube_encode(c, whole_c)] =
              static_cast<long long>(p.evaluate(1));
        return out;
      };
      ++rep.cases;
      if (to_words(tr.prec) != words.prec || to_words(tr.dot) != words.dot ||
          to_words(tr.succ) != words.succ)
        return fail(describe(*t, {c1, c2}));
    }
    return rep;
  }

  if (name == "simplex") {
    // closed formula: sum over nonempty J of q^{|J|-1} (union of J-roots)(...)
    while (rep.cases < iterations) {
      int k = pick(rng, 1, 3);
      auto t = sample_team(rng, u, max_carrier, k, TeamMode::SemiStrict);
      if (!t) return fail("sampler could not build a team");
      std::vector<Construct> cs;
      for (const auto& p : t->participants())
        cs.push_back(random_construct(rng, p));
      Delegation d = make_delegation(*t, cs);
      LinearConstruct expected;
      const VSet& whole_c = t->whole().carrier();
      for (int mask = 1; mask < (1 << k); ++mask) {
        VSet root;
        int sz = 0;
        for (int j = 0; j < k; ++j)
          if (mask & (1 << j)) {
            root = vset_union(root, cs[j].decoration());
            ++sz;
          }
        expected.add_term(Construct(root, filler_singletons(whole_c, root)),
                          QPoly::monomial(sz - 1, 1));
      }
      ++rep.cases;
      if (shuffle_symbolic(d) != expected) return fail(describe(*t, cs));
    }
    return rep;
  }

  if (name == "erosohedron") {
    // closed binary rules of the erosohedron clan at q = -1
    while (rep.cases < iterations) {
      auto t = sample_team(rng, u, std::max(4, max_carrier), 2,
                           TeamMode::SemiStrict);
      if (!t) return fail("sampler could not build a team");
      Construct s = random_construct(rng, t->participants()[0]);
      Construct c = random_construct(rng, t->participants()[1]);
      const VSet& whole_c = t->whole().carrier();
      auto root_of = [](const Construct& x) { return x.decoration(); };
      auto one_level = [&](const VSet& y) {
        return LinearConstruct(Construct(y, filler_singletons(whole_c, y)));
      };
      auto two_level = [&](const VSet& x, const VSet& y) {
        VSet used = vset_union(x, y);
        return LinearConstruct(Construct(
            x, {Construct(y, filler_singletons(whole_c, used))}));
      };
      auto side_rule = [&](const Construct& target,
                           const Construct& other) -> LinearConstruct {
        if (target.decoration().size() >= 2)
          return one_level(target.decoration());
        if (target.children().empty())
          return one_level(target.decoration());  // singleton carrier
        VSet x = target.decoration();
        VSet y = target.children()[0].decoration();
        LinearConstruct out = two_level(x, y);
        out += two_level(x, root_of(other));
        out -= two_level(x, vset_union(y, root_of(other)));
        return out;
      };
      Delegation d = make_delegation(*t, {s, c});
      TrioResult tr = trio(d);
      LinearConstruct want_prec = side_rule(s, c);
      LinearConstruct want_succ = side_rule(c, s);
      LinearConstruct want_dot =
          one_level(vset_union(root_of(s), root_of(c)));
      ++rep.cases;
      if (tr.prec != want_prec || tr.succ != want_succ || tr.dot != want_dot)
        return fail(describe(*t, {s, c}));
    }
    return rep;
  }

  // restrictohedra
  const bool is_perm = name == "gamma:inf";
  const bool is_assoc = name == "gamma:1";
  while (rep.cases < iterations) {
    int k = pick(rng, 1, 3);
    auto t = sample_team(rng, u, std::min(max_carrier, 7), k, TeamMode::Strict);
    if (!t) return fail("sampler could not build a team");
    std::vector<Construct> cs;
    for (const auto& p : t->participants()) cs.push_back(random_construct(rng, p));
    Delegation d = make_delegation(*t, cs);
    ++rep.cases;
    if (shuffle(d) != shuffle_nonrecursive(d)) return fail(describe(*t, cs));

    if ((is_perm || is_assoc) && k == 2) {
      // interval blocks make the classical encodings applicable
      const VSet& x1 = t->participants()[0].carrier();
      const VSet& x2 = t->participants()[1].carrier();
      if (x1.back() > x2.front()) continue;
      if (is_assoc) {
        bool contiguous = true;
        for (const VSet& x : {x1, x2, t->whole().carrier()})
          for (std::size_t i = 0; i + 1 < x.size(); ++i)
            if (x[i + 1] != x[i] + 1) contiguous = false;
        if (!contiguous) continue;
        SchroederTree s1 = associahedron_encode(cs[0], x1);
        SchroederTree s2 = associahedron_encode(cs[1], x2);
        TreeTrio trees = lr_trio_trees(s1, s2);
        TrioResult tr = trio(d);
        auto to_trees = [&](const LinearConstruct& v) {
          TreeSum out;
          for (const auto& [c, p] : v.terms())
            out[associahedron_encode(c, t->whole().carrier())] = p;
          return out;
        };
        ++rep.cases;
        if (to_trees(tr.prec) != trees.prec || to_trees(tr.dot) != trees.dot ||
            to_trees(tr.succ) != trees.succ)
          return fail(describe(*t, cs));
      } else {
        PackedWord f = permutohedron_encode(cs[0], x1);
        PackedWord g = permutohedron_encode(cs[1], x2);
        WordTrio words = br_shuffle(f, g);
        TrioResult tr = trio(d);
        // a word of length n with m distinct letters has merge defect n-m;
        // the product coefficient is q^(defect of the result minus defects of
        // the factors), and the dot piece has one more q factored out as the
        // q^(|B|-1) prefactor of the shuffle sum
        auto defect = [](const PackedWord& w) {
          return static_cast<int>(w.size()) -
                 *std::max_element(w.begin(), w.end());
        };
        const int base = defect(f) + defect(g);
        auto to_words = [&](const LinearConstruct& v, int factored_out) {
          std::vector<PackedWord> out;
          for (const auto& [c, p] : v.terms()) {
            PackedWord w = permutohedron_encode(c, t->whole().carrier());
            if (p != QPoly::monomial(defect(w) - base - factored_out))
              return std::optional<std::vector<PackedWord>>();
            out.push_back(std::move(w));
          }
          std::sort(out.begin(), out.end());
          return std::optional<std::vector<PackedWord>>(std::move(out));
        };
        ++rep.cases;
        auto wp = to_words(tr.prec, 0), wd = to_words(tr.dot, 1),
             ws = to_words(tr.succ, 0);
        if (!wp || !wd || !ws || *wp != words.prec || *wd != words.dot ||
            *ws != words.succ)
          return fail(describe(*t, cs));
      }
    }
  }
  return rep;
}

}  // namespace

CheckReport run_check(const std::string& suite, const std::string& universe_tag,
                      int max_carrier, std::uint64_t seed, int iterations) {
  UniversePtr u = make_universe(universe_tag);
  if (suite == "strict-assoc")
    return check_assoc(*u, max_carrier, seed, iterations, TeamMode::Strict);
  if (suite == "semistrict-assoc")
    return check_assoc(*u, max_carrier, seed, iterations, TeamMode::SemiStrict);
  if (suite == "tridendriform")
    return check_tridendriform(*u, max_carrier, seed, iterations);
  if (suite == "polydendriform")
    return check_polydend(*u, max_carrier, seed, iterations);
  if (suite == "oracle-agreement")
    return check_oracle_agreement(*u, max_carrier, seed, iterations);
  if (suite == "coeff-sum")
    return check_coeff_sum(*u, max_carrier, seed, iterations);
  if (suite == "strictness-lemma") return check_strictness_lemma(*u, max_carrier);
  if (suite == "tubing-lemma") return check_tubing_lemma(*u, max_carrier);
  throw domain_error("BadSuite", "unknown check suite: " + suite);
}

}  // namespace nesto
