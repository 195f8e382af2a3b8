#ifndef NESTO_SHUFFLE_HPP
#define NESTO_SHUFFLE_HPP

#include <vector>

#include "nesto/linear.hpp"
#include "nesto/universe.hpp"

namespace nesto {

/// A team together with one factor per participant. Factors are linear
/// constructs; a plain delegation has single-term factors with coefficient 1.
struct Delegation {
  Team team;
  std::vector<LinearConstruct> factors;  // aligned with team.participants()
};

/// Validates each construct against its participant and pairs it up.
Delegation make_delegation(Team team, const std::vector<Construct>& constructs);

/// The shuffle product: sum over nonempty position sets B of the B-summand,
/// weighted q^{|B|-1}. Respects the team mode: SemiStrict evaluates at q=-1.
LinearConstruct shuffle(const Delegation& d);

/// One B-summand, without the q^{|B|-1} weight. Every term is rooted at the
/// union of the roots of the B factors. Linear factors at positions in b_set
/// must have a common root (UnrootedAtB otherwise).
LinearConstruct shuffle_B(const Delegation& d, const std::vector<int>& b_set);

/// Same products with q kept symbolic regardless of team mode.
LinearConstruct shuffle_symbolic(const Delegation& d);
LinearConstruct shuffle_B_symbolic(const Delegation& d, const std::vector<int>& b_set);

struct TrioResult {
  LinearConstruct prec, dot, succ;
};

/// The binary splitting of shuffle: prec = left summand, succ = right,
/// dot = both. shuffle = prec + succ + q*dot by construction.
TrioResult trio(const Delegation& d);

/// mu: the merge count of u relative to a strict team; the q-exponent of u
/// in the product.
int measure(const Team& team, const Construct& u);

/// Sum over all constructs U of the whole whose restriction to every
/// participant reproduces the corresponding factor, each weighted
/// q^{measure}. Strict teams only; carrier capped at 10 vertices.
LinearConstruct shuffle_nonrecursive(const Delegation& d);

/// Both sides of the polydendriform equation for the grafting of inner at
/// position pos of outer. constructs are aligned with the grafted team;
/// b_double_prime is a nonempty position set of the grafted team.
bool check_polydendriform(const Team& outer, int pos, const Team& inner,
                          const std::vector<Construct>& constructs,
                          const std::vector<int>& b_double_prime);

/// Product of the grafted delegation vs. the nested product; symbolic q in
/// Strict mode, q=-1 when either team is SemiStrict.
bool check_associativity(const Team& outer, int pos, const Team& inner,
                         const std::vector<Construct>& constructs);

}  // namespace nesto

#endif
