#include "nesto/universe.hpp"

#include <algorithm>
#include <functional>

namespace nesto {

namespace {

class GammaUniverse : public Universe {
public:
  explicit GammaUniverse(int k, std::string name) : k_(k), name_(std::move(name)) {}
  std::string name() const override { return name_; }
  bool ordered() const override { return true; }
  std::optional<Hypergraph> member(const VSet& carrier) const override {
    std::vector<VSet> edges;
    for (std::size_t i = 0; i < carrier.size(); ++i)
      for (std::size_t j = i + 1; j < carrier.size(); ++j) {
        long long gap = static_cast<long long>(carrier[j]) - carrier[i];
        if (k_ == 0 || gap <= k_) edges.push_back({carrier[i], carrier[j]});
      }
    Hypergraph h(carrier, std::move(edges));
    if (!h.is_connected()) return std::nullopt;
    return h;
  }

private:
  int k_;  // 0 = infinity
  std::string name_;
};

class SimplexUniverse : public Universe {
public:
  std::string name() const override { return "simplex"; }
  std::optional<Hypergraph> member(const VSet& carrier) const override {
    std::vector<VSet> edges;
    if (carrier.size() >= 2) edges.push_back(carrier);
    return Hypergraph(carrier, std::move(edges));
  }
};

class HypercubeUniverse : public Universe {
public:
  std::string name() const override { return "hypercube"; }
  bool ordered() const override { return true; }
  bool blocks_must_be_intervals() const override { return true; }
  std::optional<Hypergraph> member(const VSet& carrier) const override {
    std::vector<VSet> edges;
    for (std::size_t i = 2; i <= carrier.size(); ++i)
      edges.emplace_back(carrier.begin(), carrier.begin() + i);
    return Hypergraph(carrier, std::move(edges));
  }
};

// Erosohedra together with simplices. Both families live on the same
// carriers for size >= 3; this oracle answers with the erosohedron there,
// and with the simplex below that size (E^X is disconnected or undefined
// for fewer than 3 vertices). Simplex participants are reachable through
// the simplex universe tag.
class ErosohedronUniverse : public Universe {
public:
  std::string name() const override { return "erosohedron"; }
  std::optional<Hypergraph> member(const VSet& carrier) const override {
    if (carrier.size() < 3) return *SimplexUniverse().member(carrier);
    std::vector<VSet> edges;
    for (VertexId x : carrier) edges.push_back(vset_diff(carrier, {x}));
    return Hypergraph(carrier, std::move(edges));
  }
};

class ExplicitUniverse : public Universe {
public:
  ExplicitUniverse(std::string name, std::vector<Hypergraph> members)
      : name_(std::move(name)), members_(std::move(members)) {}
  std::string name() const override { return name_; }
  std::optional<Hypergraph> member(const VSet& carrier) const override {
    for (const auto& h : members_)
      if (h.carrier() == carrier) return h;
    return std::nullopt;
  }

private:
  std::string name_;
  std::vector<Hypergraph> members_;
};

}  // namespace

UniversePtr gamma_universe(int k) {
  std::string name = k == 0 ? "gamma:inf" : "gamma:" + std::to_string(k);
  return std::make_shared<GammaUniverse>(k, std::move(name));
}
UniversePtr simplex_universe() { return std::make_shared<SimplexUniverse>(); }
UniversePtr hypercube_universe() { return std::make_shared<HypercubeUniverse>(); }
UniversePtr erosohedron_universe() { return std::make_shared<ErosohedronUniverse>(); }
UniversePtr explicit_universe(std::string name, std::vector<Hypergraph> members) {
  return std::make_shared<ExplicitUniverse>(std::move(name), std::move(members));
}

UniversePtr make_universe(const std::string& tag) {
  if (tag == "simplex") return simplex_universe();
  if (tag == "hypercube") return hypercube_universe();
  if (tag == "erosohedron") return erosohedron_universe();
  if (tag == "frieze") return gamma_universe(2);
  if (tag.rfind("gamma:", 0) == 0) {
    std::string arg = tag.substr(6);
    if (arg == "inf") return gamma_universe(0);
    int k = std::stoi(arg);
    if (k < 1) throw domain_error("BadUniverse", "gamma parameter must be >= 1");
    return gamma_universe(k);
  }
  throw domain_error("BadUniverse", "unknown universe tag: " + tag);
}

Team::Team(std::vector<Hypergraph> participants, Hypergraph whole, TeamMode mode)
    : participants_(std::move(participants)), whole_(std::move(whole)), mode_(mode) {
  if (participants_.empty())
    throw domain_error("NotPartition", "team needs at least one participant");
  std::sort(participants_.begin(), participants_.end(),
            [](const Hypergraph& a, const Hypergraph& b) {
              return a.min_vertex() < b.min_vertex();
            });
  VSet seen;
  for (const auto& p : participants_) {
    if (!vset_disjoint(seen, p.carrier()))
      throw domain_error("NotPartition", "participant carriers overlap");
    seen = vset_union(seen, p.carrier());
  }
  if (seen != whole_.carrier())
    throw domain_error("NotPartition",
                       "participant carriers do not cover the whole carrier");
}

int Team::position_of(const VSet& carrier) const {
  for (std::size_t i = 0; i < participants_.size(); ++i)
    if (participants_[i].carrier() == carrier) return static_cast<int>(i);
  throw domain_error("NoSuchParticipant", "no participant with that carrier");
}

Team make_team(const Universe& u, const std::vector<VSet>& parts, const VSet& whole,
               TeamMode mode) {
  auto whole_h = u.member(make_vset(whole));
  if (!whole_h)
    throw domain_error("NotInUniverse",
                       "whole carrier is not a member of universe " + u.name());
  std::vector<Hypergraph> participants;
  for (const auto& p : parts) {
    auto h = u.member(make_vset(p));
    if (!h)
      throw domain_error("NotInUniverse",
                         "participant carrier is not a member of universe " +
                             u.name());
    participants.push_back(std::move(*h));
  }
  Team t(std::move(participants), std::move(*whole_h), mode);
  if (u.blocks_must_be_intervals()) {
    for (std::size_t i = 0; i + 1 < t.participants().size(); ++i)
      if (t.participants()[i].carrier().back() >
          t.participants()[i + 1].carrier().front())
        throw domain_error("NotOrdered",
                           "participant blocks must form successive intervals");
  }
  if (mode == TeamMode::Strict && !is_strict(t))
    throw domain_error("NotStrict",
                       "a participant hyperedge is disconnected in the whole");
  return t;
}

bool is_strict(const std::vector<Hypergraph>& participants,
               const Hypergraph& whole) {
  for (const auto& p : participants)
    for (const auto& e : p.hyperedges())
      if (!whole.is_connected_subset(e)) return false;
  return true;
}

bool is_strict(const Team& t) { return is_strict(t.participants(), t.whole()); }

namespace {

// Enumerate nonempty subsets of a sorted set.
void each_nonempty_subset(const VSet& v, const std::function<bool(const VSet&)>& f) {
  const int n = static_cast<int>(v.size());
  for (long long mask = 1; mask < (1LL << n); ++mask) {
    VSet s;
    for (int i = 0; i < n; ++i)
      if (mask & (1LL << i)) s.push_back(v[i]);
    if (!f(s)) return;
  }
}

bool check_choice(const std::vector<Hypergraph>& participants,
                  const Hypergraph& whole, const std::vector<int>& b,
                  const std::vector<VSet>& x) {
  VSet removed;
  for (const auto& xs : x) removed = vset_union(removed, xs);
  auto rest = whole.remove(removed);
  std::vector<VSet> comps = rest ? rest->component_carriers() : std::vector<VSet>{};
  auto fits = [&](const VSet& carrier) {
    for (const auto& c : comps)
      if (vset_subset(carrier, c)) return true;
    return false;
  };
  std::size_t bi = 0;
  for (std::size_t a = 0; a < participants.size(); ++a) {
    bool in_b = bi < b.size() && b[bi] == static_cast<int>(a);
    if (in_b) {
      auto prest = participants[a].remove(x[bi]);
      if (prest)
        for (const auto& c : prest->component_carriers())
          if (!fits(c)) return false;
      ++bi;
    } else {
      if (!fits(participants[a].carrier())) return false;
    }
  }
  return true;
}

bool brute_force_rec(const std::vector<Hypergraph>& participants,
                     const Hypergraph& whole, std::size_t a, std::vector<int>& b,
                     std::vector<VSet>& x) {
  if (a == participants.size()) {
    if (b.empty()) return true;  // B must be nonempty
    return check_choice(participants, whole, b, x);
  }
  // a not in B
  if (!brute_force_rec(participants, whole, a + 1, b, x)) return false;
  // a in B, with each nonempty X_a
  bool ok = true;
  each_nonempty_subset(participants[a].carrier(), [&](const VSet& xs) {
    b.push_back(static_cast<int>(a));
    x.push_back(xs);
    ok = brute_force_rec(participants, whole, a + 1, b, x);
    b.pop_back();
    x.pop_back();
    return ok;
  });
  return ok;
}

}  // namespace

bool brute_force_strict(const std::vector<Hypergraph>& participants,
                        const Hypergraph& whole) {
  if (whole.size() > 8)
    throw domain_error("TooLarge", "brute-force strictness is capped at 8 vertices");
  std::vector<int> b;
  std::vector<VSet> x;
  return brute_force_rec(participants, whole, 0, b, x);
}

Decomposition decompose(const Team& t, const std::vector<int>& b_set,
                        const std::map<int, VSet>& x_sets) {
  if (b_set.empty())
    throw domain_error("EmptyB", "decomposition needs a nonempty position set");
  VSet removed;
  for (int b : b_set) {
    auto it = x_sets.find(b);
    if (it == x_sets.end() || it->second.empty())
      throw domain_error("BadXSet", "each b position needs a nonempty removal set");
    if (!vset_subset(it->second, t.participants()[b].carrier()))
      throw domain_error("BadXSet", "removal set not inside its participant");
    removed = vset_union(removed, it->second);
  }

  auto rest = t.whole().remove(removed);
  std::vector<VSet> comps = rest ? rest->component_carriers() : std::vector<VSet>{};
  auto singleton_comp = [&](VertexId v) {
    for (const auto& c : comps)
      if (c.size() == 1 && c[0] == v) return true;
    return false;
  };

  Decomposition out;
  for (std::size_t a = 0; a < t.size(); ++a) {
    bool in_b = std::find(b_set.begin(), b_set.end(), static_cast<int>(a)) !=
                b_set.end();
    std::vector<Hypergraph> pieces;
    if (in_b) {
      auto prest = t.participants()[a].remove(x_sets.at(static_cast<int>(a)));
      if (prest) pieces = prest->connected_components();
    } else {
      pieces = {t.participants()[a]};
    }
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      RefinedParticipant rp{static_cast<int>(a),
                            in_b ? static_cast<int>(i) : -1, pieces[i]};
      int found = -1;
      for (std::size_t c = 0; c < comps.size(); ++c)
        if (vset_subset(rp.h.carrier(), comps[c])) {
          found = static_cast<int>(c);
          break;
        }
      if (found >= 0) {
        rp.subteam = found;
      } else if (t.mode() == TeamMode::SemiStrict && rp.h.size() >= 2 &&
                 std::all_of(rp.h.carrier().begin(), rp.h.carrier().end(),
                             singleton_comp)) {
        rp.dissolved = true;
        out.any_dissolved = true;
      } else {
        throw domain_error(
            t.mode() == TeamMode::Strict ? "NotStrict" : "NotSemiStrict",
            "refined participant neither fits in one component nor dissolves");
      }
      out.refined.push_back(std::move(rp));
    }
  }

  // assemble subteams with forced singletons for dissolved vertices
  std::vector<std::vector<std::pair<Hypergraph, SlotOrigin>>> buckets(comps.size());
  for (std::size_t r = 0; r < out.refined.size(); ++r) {
    const auto& rp = out.refined[r];
    if (rp.dissolved) {
      for (VertexId v : rp.h.carrier()) {
        // each vertex is its own component
        for (std::size_t c = 0; c < comps.size(); ++c)
          if (comps[c].size() == 1 && comps[c][0] == v)
            buckets[c].push_back({Hypergraph({v}, {}),
                                  SlotOrigin{-1, v}});
      }
    } else {
      buckets[rp.subteam].push_back({rp.h, SlotOrigin{static_cast<int>(r), 0}});
    }
  }
  for (std::size_t c = 0; c < comps.size(); ++c) {
    std::sort(buckets[c].begin(), buckets[c].end(),
              [](const auto& a, const auto& b) {
                return a.first.min_vertex() < b.first.min_vertex();
              });
    std::vector<Hypergraph> parts;
    std::vector<SlotOrigin> slots;
    for (auto& [h, o] : buckets[c]) {
      parts.push_back(std::move(h));
      slots.push_back(o);
    }
    out.subteams.emplace_back(std::move(parts), t.whole().restrict_to(comps[c]),
                              t.mode());
    out.slots.push_back(std::move(slots));
  }
  return out;
}

Team graft_team(const Team& outer, int pos, const Team& inner) {
  if (pos < 0 || pos >= static_cast<int>(outer.size()))
    throw domain_error("Mismatch", "graft position out of range");
  if (!(inner.whole() == outer.participants()[pos]))
    throw domain_error("Mismatch",
                       "inner whole does not equal the grafted participant");
  std::vector<Hypergraph> parts;
  for (std::size_t i = 0; i < outer.size(); ++i) {
    if (static_cast<int>(i) == pos) {
      for (const auto& p : inner.participants()) parts.push_back(p);
    } else {
      parts.push_back(outer.participants()[i]);
    }
  }
  TeamMode mode = (outer.mode() == TeamMode::SemiStrict ||
                   inner.mode() == TeamMode::SemiStrict)
                      ? TeamMode::SemiStrict
                      : TeamMode::Strict;
  return Team(std::move(parts), outer.whole(), mode);
}

}  // namespace nesto
