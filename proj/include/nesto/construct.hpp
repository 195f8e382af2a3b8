#ifndef NESTO_CONSTRUCT_HPP
#define NESTO_CONSTRUCT_HPP

#include <set>
#include <string>
#include <vector>

#include "nesto/hypergraph.hpp"

namespace nesto {

/// A construct: rooted tree whose nodes are decorated by pairwise disjoint
/// nonempty vertex sets. Canonical form: decorations sorted, children ordered
/// ascending by the minimum vertex of their subtree support.
class Construct {
public:
  Construct() = default;
  Construct(VSet decoration, std::vector<Construct> children = {});

  static Construct leaf(VSet decoration) { return Construct(std::move(decoration)); }
  static Construct singleton(VertexId x) { return Construct({x}); }

  const VSet& decoration() const { return decoration_; }
  const std::vector<Construct>& children() const { return children_; }
  /// Union of all decorations in the subtree.
  const VSet& support() const { return support_; }
  std::size_t node_count() const;

  bool operator==(const Construct& o) const {
    return decoration_ == o.decoration_ && children_ == o.children_;
  }
  bool operator!=(const Construct& o) const { return !(*this == o); }
  bool operator<(const Construct& o) const;

  /// Paper-style nested notation, e.g. "3(14(2,5))".
  std::string to_string() const;
  static Construct parse(const std::string& text);

private:
  VSet decoration_;
  std::vector<Construct> children_;
  VSet support_;
};

struct ValidationResult {
  bool ok = true;
  std::string diagnostic;  // names the first failing node when !ok
  explicit operator bool() const { return ok; }
};

/// Checks the recursive construct condition against h.
ValidationResult validate(const Hypergraph& h, const Construct& t);

using Tubing = std::set<VSet>;

/// The tube set of t: for every node, its decoration united with all
/// descendant decorations.
Tubing tubing(const Construct& t);

/// Restriction of a construct of l to the sub-hypergraph h. Requires every
/// hyperedge of h to be connected in l.
Construct restrict_construct(const Construct& s, const Hypergraph& l,
                             const Hypergraph& h);

/// Construct of h associated with a tube t of the ambient hypergraph.
Construct tube_to_construct(const VSet& t, const Hypergraph& h);

/// All constructs of a connected hypergraph, deterministic order (root
/// subsets in lexicographic order of their sorted vertex lists, then
/// recursively).
std::vector<Construct> enumerate_constructs(const Hypergraph& h);

/// Entry k-1 = number of constructs with exactly k nodes. Serial reference:
/// materializes the enumeration.
std::vector<long long> count_by_nodes_serial(const Hypergraph& h);

/// Same counts without materializing constructs; the top-level loop over
/// root subsets runs in parallel when OpenMP is enabled.
std::vector<long long> count_by_nodes(const Hypergraph& h);

}  // namespace nesto

#endif
