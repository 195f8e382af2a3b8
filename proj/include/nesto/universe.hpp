#ifndef NESTO_UNIVERSE_HPP
#define NESTO_UNIVERSE_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nesto/hypergraph.hpp"

namespace nesto {

/// A family of connected hypergraphs, given by a membership oracle: the
/// unique member on a finite carrier, or nothing. Families built from an
/// infinite ambient hypergraph (gamma^k) materialize restrictions on demand.
class Universe {
public:
  virtual ~Universe() = default;
  virtual std::string name() const = 0;
  virtual std::optional<Hypergraph> member(const VSet& carrier) const = 0;
  virtual bool ordered() const { return false; }
  /// Ordered universes may constrain how team blocks sit relative to each
  /// other (the hypercube needs successive intervals).
  virtual bool blocks_must_be_intervals() const { return false; }
};

using UniversePtr = std::shared_ptr<const Universe>;

/// Tags: "gamma:K" (K positive integer or "inf"), "simplex", "hypercube",
/// "erosohedron", "frieze" (= gamma:2).
UniversePtr make_universe(const std::string& tag);

UniversePtr gamma_universe(int k);  // k = 0 means infinity
UniversePtr simplex_universe();
UniversePtr hypercube_universe();
UniversePtr erosohedron_universe();
/// Convenience universe from an explicit list; no clan-closure guarantees.
UniversePtr explicit_universe(std::string name, std::vector<Hypergraph> members);

enum class TeamMode { Strict, SemiStrict };

/// Participating hypergraphs partitioning the carrier of a coordinating one.
/// Participants are kept sorted ascending by minimum carrier vertex.
class Team {
public:
  Team(std::vector<Hypergraph> participants, Hypergraph whole, TeamMode mode);

  const std::vector<Hypergraph>& participants() const { return participants_; }
  const Hypergraph& whole() const { return whole_; }
  TeamMode mode() const { return mode_; }
  std::size_t size() const { return participants_.size(); }

  /// Position of the participant whose carrier is exactly `carrier`.
  int position_of(const VSet& carrier) const;

private:
  std::vector<Hypergraph> participants_;
  Hypergraph whole_;
  TeamMode mode_;
};

/// Builds hypergraphs via the universe oracle and checks the partition
/// condition; Strict mode additionally checks the strictness criterion.
Team make_team(const Universe& u, const std::vector<VSet>& parts, const VSet& whole,
               TeamMode mode);

/// Strictness via the hyperedge criterion: every hyperedge of every
/// participant is connected in the whole.
bool is_strict(const std::vector<Hypergraph>& participants, const Hypergraph& whole);
bool is_strict(const Team& t);

/// Strictness straight from the quantified definition; test oracle only.
/// Guards against carriers above 8 vertices.
bool brute_force_strict(const std::vector<Hypergraph>& participants,
                        const Hypergraph& whole);

/// Where a slot of a subteam came from: a refined participant, or a forced
/// singleton left by a dissolved participant.
struct SlotOrigin {
  int refined = -1;           // index into Decomposition::refined, or -1
  VertexId dissolved_vertex = 0;
};

struct RefinedParticipant {
  int parent;  // position in the source team
  int comp;    // component index within participant-minus-root; -1 if parent not in B
  Hypergraph h;
  bool dissolved = false;
  int subteam = -1;  // set when not dissolved
};

struct Decomposition {
  std::vector<RefinedParticipant> refined;
  std::vector<Team> subteams;                  // ordered by min carrier vertex
  std::vector<std::vector<SlotOrigin>> slots;  // per subteam, aligned with its participants
  bool any_dissolved = false;
};

/// The decomposition induced by removing x_sets[b] from each participant
/// b in b_set. Throws NotStrict / NotSemiStrict when a refined participant
/// neither fits in one component nor dissolves.
Decomposition decompose(const Team& t, const std::vector<int>& b_set,
                        const std::map<int, VSet>& x_sets);

/// Replaces participant `pos` of outer by all participants of inner;
/// inner.whole must equal that participant.
Team graft_team(const Team& outer, int pos, const Team& inner);

}  // namespace nesto

#endif
