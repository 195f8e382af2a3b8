#include "nesto/hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace nesto {

VSet make_vset(std::vector<VertexId> xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

bool vset_contains(const VSet& a, VertexId x) {
  return std::binary_search(a.begin(), a.end(), x);
}

bool vset_subset(const VSet& a, const VSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

VSet vset_union(const VSet& a, const VSet& b) {
  VSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VSet vset_intersect(const VSet& a, const VSet& b) {
  VSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

VSet vset_diff(const VSet& a, const VSet& b) {
  VSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

bool vset_disjoint(const VSet& a, const VSet& b) {
  return vset_intersect(a, b).empty();
}

Hypergraph::Hypergraph(VSet carrier, std::vector<VSet> hyperedges)
    : carrier_(make_vset(std::move(carrier))) {
  if (carrier_.empty())
    throw domain_error("EmptyCarrier", "hypergraph carrier must be nonempty");
  for (auto& e : hyperedges) {
    e = make_vset(std::move(e));
    if (e.empty())
      throw domain_error("EmptyHyperedge", "hyperedges must be nonempty");
    if (!vset_subset(e, carrier_))
      throw domain_error("NotSubset", "hyperedge not contained in carrier");
  }
  for (VertexId x : carrier_) hyperedges.push_back({x});
  std::sort(hyperedges.begin(), hyperedges.end());
  hyperedges.erase(std::unique(hyperedges.begin(), hyperedges.end()),
                   hyperedges.end());
  edges_ = std::move(hyperedges);
}

Hypergraph Hypergraph::restrict_to(const VSet& x_set) const {
  if (x_set.empty())
    throw domain_error("EmptyRestriction", "cannot restrict to the empty set");
  if (!vset_subset(x_set, carrier_))
    throw domain_error("NotSubset", "restriction set not contained in carrier");
  std::vector<VSet> kept;
  for (const auto& e : edges_)
    if (vset_subset(e, x_set)) kept.push_back(e);
  return Hypergraph(x_set, std::move(kept));
}

std::optional<Hypergraph> Hypergraph::remove(const VSet& x_set) const {
  if (!vset_subset(x_set, carrier_))
    throw domain_error("NotSubset", "removed set not contained in carrier");
  VSet rest = vset_diff(carrier_, x_set);
  if (rest.empty()) return std::nullopt;
  return restrict_to(rest);
}

namespace {

// Union-find over carrier positions.
struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int i) { return parent[i] == i ? i : parent[i] = find(parent[i]); }
  void merge(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

std::vector<VSet> Hypergraph::component_carriers() const {
  const int n = static_cast<int>(carrier_.size());
  Dsu dsu(n);
  auto pos = [&](VertexId x) {
    return static_cast<int>(std::lower_bound(carrier_.begin(), carrier_.end(), x) -
                            carrier_.begin());
  };
  for (const auto& e : edges_)
    for (std::size_t i = 1; i < e.size(); ++i) dsu.merge(pos(e[0]), pos(e[i]));
  std::vector<VSet> by_root(n);
  for (int i = 0; i < n; ++i) by_root[dsu.find(i)].push_back(carrier_[i]);
  std::vector<VSet> comps;
  for (auto& c : by_root)
    if (!c.empty()) comps.push_back(std::move(c));
  std::sort(comps.begin(), comps.end(),
            [](const VSet& a, const VSet& b) { return a.front() < b.front(); });
  return comps;
}

std::vector<Hypergraph> Hypergraph::connected_components() const {
  std::vector<Hypergraph> out;
  for (const auto& c : component_carriers()) out.push_back(restrict_to(c));
  return out;
}

bool Hypergraph::is_connected() const { return component_carriers().size() == 1; }

bool Hypergraph::is_connected_subset(const VSet& x_set) const {
  return restrict_to(x_set).is_connected();
}

std::string Hypergraph::to_string() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& e : edges_) {
    if (e.size() < 2) continue;  // singletons implied
    if (!first) os << ",";
    first = false;
    os << "{";
    for (std::size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
    os << "}";
  }
  os << "} on {";
  for (std::size_t i = 0; i < carrier_.size(); ++i)
    os << (i ? "," : "") << carrier_[i];
  os << "}";
  return os.str();
}

}  // namespace nesto
