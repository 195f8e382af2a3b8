#ifndef NESTO_HYPERGRAPH_HPP
#define NESTO_HYPERGRAPH_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace nesto {

using VertexId = int;
// Sorted, duplicate-free vertex list. All set-valued data in this library
// is kept in this normal form so that equality is structural.
using VSet = std::vector<VertexId>;

VSet make_vset(std::vector<VertexId> xs);
bool vset_contains(const VSet& a, VertexId x);
bool vset_subset(const VSet& a, const VSet& b);  // a subseteq b
VSet vset_union(const VSet& a, const VSet& b);
VSet vset_intersect(const VSet& a, const VSet& b);
VSet vset_diff(const VSet& a, const VSet& b);
bool vset_disjoint(const VSet& a, const VSet& b);

class domain_error : public std::runtime_error {
public:
  domain_error(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

private:
  std::string code_;
};

/// Finite atomic hypergraph: nonempty carrier plus hyperedges, each a
/// nonempty subset of the carrier. Singletons are always present.
/// Immutable after construction.
class Hypergraph {
public:
  // Adds missing singletons; sorts and dedupes everything.
  Hypergraph(VSet carrier, std::vector<VSet> hyperedges);

  const VSet& carrier() const { return carrier_; }
  const std::vector<VSet>& hyperedges() const { return edges_; }
  std::size_t size() const { return carrier_.size(); }
  VertexId min_vertex() const { return carrier_.front(); }

  bool operator==(const Hypergraph& o) const {
    return carrier_ == o.carrier_ && edges_ == o.edges_;
  }
  bool operator!=(const Hypergraph& o) const { return !(*this == o); }

  // H_X: keep exactly the hyperedges contained in x_set.
  Hypergraph restrict_to(const VSet& x_set) const;
  // H \ X = H_{carrier minus x_set}; nullopt when x_set is the whole carrier.
  std::optional<Hypergraph> remove(const VSet& x_set) const;

  bool is_connected() const;
  bool is_connected_subset(const VSet& x_set) const;
  // Restrictions to the component carriers, ascending by min vertex.
  std::vector<Hypergraph> connected_components() const;
  std::vector<VSet> component_carriers() const;

  std::string to_string() const;

private:
  VSet carrier_;
  std::vector<VSet> edges_;
};

}  // namespace nesto

#endif
