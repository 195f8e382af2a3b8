#include "nesto/shuffle.hpp"

#include <algorithm>
#include <functional>

namespace nesto {

namespace {

LinearConstruct shuffle_plain(const Team& t, const std::vector<Construct>& cs);

LinearConstruct shuffle_B_plain(const Team& t, const std::vector<Construct>& cs,
                                const std::vector<int>& b_set) {
  std::map<int, VSet> x_sets;
  VSet x_b;
  for (int b : b_set) {
    x_sets[b] = cs[b].decoration();
    x_b = vset_union(x_b, cs[b].decoration());
  }
  Decomposition dec = decompose(t, b_set, x_sets);

  std::vector<LinearConstruct> children;
  for (std::size_t i = 0; i < dec.subteams.size(); ++i) {
    std::vector<Construct> sub;
    for (const SlotOrigin& o : dec.slots[i]) {
      if (o.refined < 0) {
        sub.push_back(Construct::singleton(o.dissolved_vertex));
        continue;
      }
      const RefinedParticipant& rp = dec.refined[o.refined];
      if (rp.comp < 0) {
        sub.push_back(cs[rp.parent]);
      } else {
        const Construct* match = nullptr;
        for (const Construct& ch : cs[rp.parent].children())
          if (ch.support() == rp.h.carrier()) {
            match = &ch;
            break;
          }
        if (!match)
          throw domain_error("InvalidConstruct",
                             "factor children do not match the decomposition");
        sub.push_back(*match);
      }
    }
    children.push_back(shuffle_plain(dec.subteams[i], sub));
  }
  return graft(x_b, children);
}

LinearConstruct shuffle_plain(const Team& t, const std::vector<Construct>& cs) {
  const int n = static_cast<int>(t.size());
  LinearConstruct acc;
  // lexicographic subset order over positions
  std::vector<int> b_set;
  std::function<void(int)> walk = [&](int from) {
    if (!b_set.empty()) {
      QPoly weight = QPoly(1);
      for (std::size_t i = 1; i < b_set.size(); ++i) weight = weight * QPoly::q();
      acc += scale(weight, shuffle_B_plain(t, cs, b_set));
    }
    for (int a = from; a < n; ++a) {
      b_set.push_back(a);
      walk(a + 1);
      b_set.pop_back();
    }
  };
  walk(0);
  return acc;
}

/// Distributes linear factors into plain construct tuples with their
/// accumulated coefficient.
void expand(const std::vector<LinearConstruct>& factors,
            const std::function<void(const std::vector<Construct>&, const QPoly&)>& f) {
  std::vector<Construct> picked;
  std::function<void(std::size_t, QPoly)> walk = [&](std::size_t idx, QPoly coeff) {
    if (idx == factors.size()) {
      f(picked, coeff);
      return;
    }
    for (const auto& [c, p] : factors[idx].terms()) {
      picked.push_back(c);
      walk(idx + 1, coeff * p);
      picked.pop_back();
    }
  };
  walk(0, QPoly(1));
}

LinearConstruct mode_eval(const Team& t, LinearConstruct v) {
  return t.mode() == TeamMode::SemiStrict ? evaluate_q(v, -1) : v;
}

}  // namespace

Delegation make_delegation(Team team, const std::vector<Construct>& constructs) {
  if (constructs.size() != team.size())
    throw domain_error("Arity", "one construct per participant expected");
  std::vector<LinearConstruct> factors;
  for (std::size_t a = 0; a < constructs.size(); ++a) {
    auto v = validate(team.participants()[a], constructs[a]);
    if (!v) throw domain_error("InvalidConstruct", v.diagnostic);
    factors.emplace_back(constructs[a]);
  }
  return Delegation{std::move(team), std::move(factors)};
}

LinearConstruct shuffle_symbolic(const Delegation& d) {
  LinearConstruct acc;
  expand(d.factors, [&](const std::vector<Construct>& cs, const QPoly& coeff) {
    acc += scale(coeff, shuffle_plain(d.team, cs));
  });
  return acc;
}

LinearConstruct shuffle_B_symbolic(const Delegation& d,
                                   const std::vector<int>& b_set) {
  if (b_set.empty())
    throw domain_error("EmptyB", "the position set must be nonempty");
  for (int b : b_set) {
    if (b < 0 || b >= static_cast<int>(d.team.size()))
      throw domain_error("Arity", "position out of range");
    if (!d.factors[b].common_root())
      throw domain_error("UnrootedAtB",
                         "linear factor at a B position has no common root");
  }
  std::vector<int> sorted_b = b_set;
  std::sort(sorted_b.begin(), sorted_b.end());
  LinearConstruct acc;
  expand(d.factors, [&](const std::vector<Construct>& cs, const QPoly& coeff) {
    acc += scale(coeff, shuffle_B_plain(d.team, cs, sorted_b));
  });
  return acc;
}

LinearConstruct shuffle(const Delegation& d) {
  return mode_eval(d.team, shuffle_symbolic(d));
}

LinearConstruct shuffle_B(const Delegation& d, const std::vector<int>& b_set) {
  return mode_eval(d.team, shuffle_B_symbolic(d, b_set));
}

TrioResult trio(const Delegation& d) {
  if (d.team.size() != 2)
    throw domain_error("Arity", "trio needs exactly two participants");
  return TrioResult{shuffle_B(d, {0}), shuffle_B(d, {0, 1}), shuffle_B(d, {1})};
}

namespace {

int measure_rec(const Team& t, const Construct& u) {
  std::vector<int> b_set;
  std::map<int, VSet> x_sets;
  for (std::size_t a = 0; a < t.size(); ++a) {
    VSet x = vset_intersect(u.decoration(), t.participants()[a].carrier());
    if (!x.empty()) {
      b_set.push_back(static_cast<int>(a));
      x_sets[static_cast<int>(a)] = std::move(x);
    }
  }
  Decomposition dec = decompose(t, b_set, x_sets);
  int total = static_cast<int>(b_set.size()) - 1;
  for (std::size_t i = 0; i < dec.subteams.size(); ++i) {
    const Construct* match = nullptr;
    for (const Construct& ch : u.children())
      if (ch.support() == dec.subteams[i].whole().carrier()) {
        match = &ch;
        break;
      }
    if (!match)
      throw domain_error("InvalidConstruct",
                         "construct children do not match the decomposition");
    total += measure_rec(dec.subteams[i], *match);
  }
  return total;
}

}  // namespace

int measure(const Team& team, const Construct& u) {
  auto v = validate(team.whole(), u);
  if (!v) throw domain_error("InvalidConstruct", v.diagnostic);
  return measure_rec(team, u);
}

LinearConstruct shuffle_nonrecursive(const Delegation& d) {
  if (d.team.whole().size() > 10)
    throw domain_error("TooLarge",
                       "non-recursive product is capped at 10 vertices");
  if (!is_strict(d.team))
    throw domain_error("NotStrict", "non-recursive product needs a strict team");
  std::vector<Construct> all = enumerate_constructs(d.team.whole());
  LinearConstruct acc;
  expand(d.factors, [&](const std::vector<Construct>& cs, const QPoly& coeff) {
    for (const Construct& u : all) {
      bool match = true;
      for (std::size_t a = 0; a < d.team.size(); ++a)
        if (restrict_construct(u, d.team.whole(), d.team.participants()[a]) !=
            cs[a]) {
          match = false;
          break;
        }
      if (match)
        acc.add_term(u, coeff * QPoly::monomial(measure_rec(d.team, u), 1));
    }
  });
  return acc;
}

namespace {

// positions of the outer (minus pos) and inner participants inside the graft
struct GraftMap {
  Team grafted;
  std::vector<int> outer_at;  // outer position -> grafted position (-1 at pos)
  std::vector<int> inner_at;  // inner position -> grafted position
};

GraftMap map_graft(const Team& outer, int pos, const Team& inner) {
  GraftMap m{graft_team(outer, pos, inner), {}, {}};
  for (std::size_t a = 0; a < outer.size(); ++a)
    m.outer_at.push_back(static_cast<int>(a) == pos
                             ? -1
                             : m.grafted.position_of(
                                   outer.participants()[a].carrier()));
  for (const auto& p : inner.participants())
    m.inner_at.push_back(m.grafted.position_of(p.carrier()));
  return m;
}

}  // namespace

bool check_polydendriform(const Team& outer, int pos, const Team& inner,
                          const std::vector<Construct>& constructs,
                          const std::vector<int>& b_double_prime) {
  GraftMap m = map_graft(outer, pos, inner);
  bool semi = m.grafted.mode() == TeamMode::SemiStrict;
  Delegation grafted = make_delegation(m.grafted, constructs);
  LinearConstruct lhs = shuffle_B_symbolic(grafted, b_double_prime);

  std::vector<Construct> inner_cs;
  for (int g : m.inner_at) inner_cs.push_back(constructs[g]);
  Delegation inner_d = make_delegation(inner, inner_cs);

  std::vector<int> b_inner;
  for (std::size_t a = 0; a < inner.size(); ++a)
    if (std::find(b_double_prime.begin(), b_double_prime.end(), m.inner_at[a]) !=
        b_double_prime.end())
      b_inner.push_back(static_cast<int>(a));

  std::vector<LinearConstruct> outer_factors(outer.size());
  std::vector<int> b_outer;
  for (std::size_t a = 0; a < outer.size(); ++a) {
    if (static_cast<int>(a) == pos) continue;
    outer_factors[a] = LinearConstruct(constructs[m.outer_at[a]]);
    if (std::find(b_double_prime.begin(), b_double_prime.end(), m.outer_at[a]) !=
        b_double_prime.end())
      b_outer.push_back(static_cast<int>(a));
  }

  if (b_inner.empty()) {
    outer_factors[pos] = shuffle_symbolic(inner_d);
  } else {
    outer_factors[pos] = shuffle_B_symbolic(inner_d, b_inner);
    b_outer.push_back(pos);
    std::sort(b_outer.begin(), b_outer.end());
  }
  Delegation outer_d{outer, std::move(outer_factors)};
  LinearConstruct rhs = shuffle_B_symbolic(outer_d, b_outer);
  if (semi) {
    lhs = evaluate_q(lhs, -1);
    rhs = evaluate_q(rhs, -1);
  }
  return lhs == rhs;
}

bool check_associativity(const Team& outer, int pos, const Team& inner,
                         const std::vector<Construct>& constructs) {
  GraftMap m = map_graft(outer, pos, inner);
  bool semi = m.grafted.mode() == TeamMode::SemiStrict;
  Delegation grafted = make_delegation(m.grafted, constructs);
  LinearConstruct lhs = shuffle_symbolic(grafted);

  std::vector<Construct> inner_cs;
  for (int g : m.inner_at) inner_cs.push_back(constructs[g]);
  Delegation inner_d = make_delegation(inner, inner_cs);

  std::vector<LinearConstruct> outer_factors(outer.size());
  for (std::size_t a = 0; a < outer.size(); ++a)
    if (static_cast<int>(a) != pos)
      outer_factors[a] = LinearConstruct(constructs[m.outer_at[a]]);
  outer_factors[pos] = shuffle_symbolic(inner_d);
  Delegation outer_d{outer, std::move(outer_factors)};
  LinearConstruct rhs = shuffle_symbolic(outer_d);
  if (semi) {
    lhs = evaluate_q(lhs, -1);
    rhs = evaluate_q(rhs, -1);
  }
  return lhs == rhs;
}

}  // namespace nesto
