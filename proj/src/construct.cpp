#include "nesto/construct.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace nesto {

Construct::Construct(VSet decoration, std::vector<Construct> children)
    : decoration_(make_vset(std::move(decoration))), children_(std::move(children)) {
  if (decoration_.empty())
    throw domain_error("EmptyDecoration", "construct decorations must be nonempty");
  std::sort(children_.begin(), children_.end(),
            [](const Construct& a, const Construct& b) {
              return a.support().front() < b.support().front();
            });
  support_ = decoration_;
  for (const auto& c : children_) {
    if (!vset_disjoint(support_, c.support()))
      throw domain_error("OverlapError", "construct decorations overlap");
    support_ = vset_union(support_, c.support());
  }
}

std::size_t Construct::node_count() const {
  std::size_t n = 1;
  for (const auto& c : children_) n += c.node_count();
  return n;
}

bool Construct::operator<(const Construct& o) const {
  if (decoration_ != o.decoration_) return decoration_ < o.decoration_;
  return children_ < o.children_;
}

namespace {

bool all_single_digit(const Construct& t) {
  for (VertexId x : t.decoration())
    if (x < 0 || x > 9) return false;
  for (const auto& c : t.children())
    if (!all_single_digit(c)) return false;
  return true;
}

void print_construct(std::ostringstream& os, const Construct& t, bool compact) {
  if (compact) {
    for (VertexId x : t.decoration()) os << x;
  } else {
    os << "{";
    for (std::size_t i = 0; i < t.decoration().size(); ++i)
      os << (i ? "," : "") << t.decoration()[i];
    os << "}";
  }
  if (!t.children().empty()) {
    os << "(";
    for (std::size_t i = 0; i < t.children().size(); ++i) {
      if (i) os << ",";
      print_construct(os, t.children()[i], compact);
    }
    os << ")";
  }
}

struct Parser {
  const std::string& s;
  std::size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  [[noreturn]] void fail(const std::string& why) {
    throw domain_error("ParseError", "construct parse error at offset " +
                                         std::to_string(i) + ": " + why);
  }
  VSet decoration() {
    skip_ws();
    VSet d;
    if (i < s.size() && s[i] == '{') {
      ++i;
      for (;;) {
        skip_ws();
        std::size_t j = i;
        if (j < s.size() && (s[j] == '-' || s[j] == '+')) ++j;
        std::size_t k = j;
        while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
        if (k == j) fail("expected integer");
        d.push_back(std::stoi(s.substr(i, k - i)));
        i = k;
        skip_ws();
        if (i < s.size() && s[i] == ',') {
          ++i;
          continue;
        }
        if (i < s.size() && s[i] == '}') {
          ++i;
          break;
        }
        fail("expected ',' or '}'");
      }
    } else {
      // compact digit run: each character is one vertex
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        d.push_back(s[i] - '0');
        ++i;
      }
      if (d.empty()) fail("expected decoration");
    }
    return d;
  }
  Construct construct() {
    VSet d = decoration();
    std::vector<Construct> children;
    skip_ws();
    if (i < s.size() && s[i] == '(') {
      ++i;
      skip_ws();
      if (i < s.size() && s[i] == ')') {
        ++i;
      } else {
        for (;;) {
          children.push_back(construct());
          skip_ws();
          if (i < s.size() && s[i] == ',') {
            ++i;
            continue;
          }
          if (i < s.size() && s[i] == ')') {
            ++i;
            break;
          }
          fail("expected ',' or ')'");
        }
      }
    }
    return Construct(std::move(d), std::move(children));
  }
};

}  // namespace

std::string Construct::to_string() const {
  std::ostringstream os;
  print_construct(os, *this, all_single_digit(*this));
  return os.str();
}

Construct Construct::parse(const std::string& text) {
  Parser p{text};
  Construct c = p.construct();
  p.skip_ws();
  if (p.i != text.size()) p.fail("trailing input");
  return c;
}

namespace {

ValidationResult validate_node(const Hypergraph& h, const Construct& t) {
  const VSet& y = t.decoration();
  if (!vset_subset(y, h.carrier()))
    return {false, "decoration " + Construct(y).to_string() +
                       " not contained in carrier"};
  auto rest = h.remove(y);
  if (!rest) {
    if (!t.children().empty())
      return {false, "node " + Construct(y).to_string() +
                         " exhausts the carrier but has children"};
    return {};
  }
  auto comps = rest->connected_components();
  if (comps.size() != t.children().size())
    return {false, "node " + Construct(y).to_string() + " has " +
                       std::to_string(t.children().size()) + " children, expected " +
                       std::to_string(comps.size())};
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (t.children()[i].support() != comps[i].carrier())
      return {false, "child of " + Construct(y).to_string() +
                         " does not match a connected component"};
    auto r = validate_node(comps[i], t.children()[i]);
    if (!r.ok) return r;
  }
  return {};
}

}  // namespace

ValidationResult validate(const Hypergraph& h, const Construct& t) {
  if (t.support() != h.carrier())
    return {false, "decorations do not partition the carrier"};
  return validate_node(h, t);
}

namespace {

void collect_tubes(const Construct& t, Tubing& out) {
  out.insert(t.support());
  for (const auto& c : t.children()) collect_tubes(c, out);
}

}  // namespace

Tubing tubing(const Construct& t) {
  Tubing out;
  collect_tubes(t, out);
  return out;
}

namespace {

Construct restrict_impl(const Construct& s, const Hypergraph& l,
                        const Hypergraph& h) {
  VSet x = vset_intersect(s.decoration(), h.carrier());
  if (x.empty()) {
    for (const auto& child : s.children()) {
      if (vset_subset(h.carrier(), child.support()))
        return restrict_impl(child, l.restrict_to(child.support()), h);
    }
    throw domain_error("Internal", "no child contains the sub-carrier");
  }
  auto rest = h.remove(x);
  if (!rest) return Construct(x);
  std::vector<Construct> children;
  for (const auto& comp : rest->connected_components()) {
    const Construct* match = nullptr;
    for (const auto& child : s.children())
      if (vset_subset(comp.carrier(), child.support())) {
        match = &child;
        break;
      }
    if (!match) throw domain_error("Internal", "component not matched by a child");
    children.push_back(
        restrict_impl(*match, l.restrict_to(match->support()), comp));
  }
  return Construct(std::move(x), std::move(children));
}

}  // namespace

Construct restrict_construct(const Construct& s, const Hypergraph& l,
                             const Hypergraph& h) {
  if (!vset_subset(h.carrier(), l.carrier()))
    throw domain_error("NotSubset", "sub-carrier not contained in ambient carrier");
  for (const auto& e : h.hyperedges())
    if (!l.is_connected_subset(e))
      throw domain_error("PreconditionViolated",
                         "a hyperedge of the sub-hypergraph is disconnected in "
                         "the ambient hypergraph");
  return restrict_impl(s, l, h);
}

Construct tube_to_construct(const VSet& t, const Hypergraph& h) {
  if (vset_subset(h.carrier(), t)) return Construct(h.carrier());
  VSet root = vset_diff(h.carrier(), t);
  std::vector<Construct> children;
  auto rest = h.remove(root);
  if (rest)
    for (const auto& comp : rest->connected_components())
      children.push_back(Construct(comp.carrier()));
  return Construct(std::move(root), std::move(children));
}

namespace {

// Nonempty subsets of v in lexicographic order of their sorted vertex lists.
void lex_subsets(const VSet& v, std::size_t start, VSet& cur,
                 const std::function<void(const VSet&)>& visit) {
  for (std::size_t i = start; i < v.size(); ++i) {
    cur.push_back(v[i]);
    visit(cur);
    lex_subsets(v, i + 1, cur, visit);
    cur.pop_back();
  }
}

void enumerate_into(const Hypergraph& h, std::vector<Construct>& out);

// All tuples of child constructs over the components, cartesian product.
void child_products(const std::vector<std::vector<Construct>>& per_comp,
                    std::size_t idx, std::vector<Construct>& cur, const VSet& root,
                    std::vector<Construct>& out) {
  if (idx == per_comp.size()) {
    out.push_back(Construct(root, cur));
    return;
  }
  for (const auto& c : per_comp[idx]) {
    cur.push_back(c);
    child_products(per_comp, idx + 1, cur, root, out);
    cur.pop_back();
  }
}

void enumerate_into(const Hypergraph& h, std::vector<Construct>& out) {
  VSet cur;
  lex_subsets(h.carrier(), 0, cur, [&](const VSet& root) {
    auto rest = h.remove(root);
    if (!rest) {
      out.push_back(Construct(root));
      return;
    }
    std::vector<std::vector<Construct>> per_comp;
    for (const auto& comp : rest->connected_components()) {
      per_comp.emplace_back();
      enumerate_into(comp, per_comp.back());
    }
    std::vector<Construct> tmp;
    child_products(per_comp, 0, tmp, root, out);
  });
}

}  // namespace

std::vector<Construct> enumerate_constructs(const Hypergraph& h) {
  if (!h.is_connected())
    throw domain_error("Disconnected", "can only enumerate constructs of a "
                                       "connected hypergraph");
  std::vector<Construct> out;
  enumerate_into(h, out);
  return out;
}

std::vector<long long> count_by_nodes_serial(const Hypergraph& h) {
  auto all = enumerate_constructs(h);
  std::vector<long long> counts(h.size(), 0);
  for (const auto& c : all) counts[c.node_count() - 1]++;
  while (!counts.empty() && counts.back() == 0) counts.pop_back();
  return counts;
}

namespace {

using Counts = std::vector<long long>;  // index k-1 = constructs with k nodes

Counts convolve(const Counts& a, const Counts& b) {
  if (a.empty() || b.empty()) return {};
  Counts out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

using Memo = std::map<VSet, Counts>;

// Counts for one connected hypergraph; component products handled by caller.
Counts count_connected(const Hypergraph& h, Memo& memo);

Counts count_forest(const std::vector<Hypergraph>& comps, Memo& memo) {
  Counts shifted{1};  // index = total node count; empty forest has zero nodes
  for (const auto& comp : comps) {
    Counts c = count_connected(comp, memo);
    // shift c from (k-1)-indexed to k-indexed
    Counts ck(c.size() + 1, 0);
    for (std::size_t i = 0; i < c.size(); ++i) ck[i + 1] = c[i];
    shifted = convolve(shifted, ck);
  }
  return shifted;  // index = total node count
}

Counts count_connected(const Hypergraph& h, Memo& memo) {
  auto it = memo.find(h.carrier());
  if (it != memo.end()) return it->second;
  Counts counts;
  VSet cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    for (std::size_t i = start; i < h.carrier().size(); ++i) {
      cur.push_back(h.carrier()[i]);
      auto rest = h.remove(cur);
      Counts sub;
      if (!rest) {
        sub = {1};  // zero further nodes
      } else {
        sub = count_forest(rest->connected_components(), memo);
      }
      for (std::size_t j = 0; j < sub.size(); ++j) {
        if (counts.size() < j + 1) counts.resize(j + 1, 0);
        counts[j] += sub[j];
      }
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  memo.emplace(h.carrier(), counts);
  return counts;
}

}  // namespace

std::vector<long long> count_by_nodes(const Hypergraph& h) {
  if (!h.is_connected())
    throw domain_error("Disconnected", "can only count constructs of a "
                                       "connected hypergraph");
  const VSet& v = h.carrier();
  const int n = static_cast<int>(v.size());
  std::vector<long long> totals(n, 0);
  const long long nmasks = (1LL << n) - 1;
#pragma omp parallel
  {
    std::vector<long long> local(n, 0);
    Memo memo;
#pragma omp for schedule(dynamic, 16)
    for (long long mask = 1; mask <= nmasks; ++mask) {
      VSet root;
      for (int i = 0; i < n; ++i)
        if (mask & (1LL << i)) root.push_back(v[i]);
      auto rest = h.remove(root);
      Counts sub = rest ? count_forest(rest->connected_components(), memo)
                        : Counts{1};
      for (std::size_t j = 0; j < sub.size(); ++j) local[j] += sub[j];
    }
#pragma omp critical
    for (int j = 0; j < n; ++j) totals[j] += local[j];
  }
  while (!totals.empty() && totals.back() == 0) totals.pop_back();
  return totals;
}

}  // namespace nesto
