#include "nesto/encodings.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace nesto {

PackedWord std_word(const std::vector<int>& w) {
  if (w.empty()) throw domain_error("EmptyWord", "std of an empty sequence");
  std::map<int, int> rank;
  for (int v : w) {
    if (v <= 0) throw domain_error("BadWord", "letters must be positive");
    rank[v] = 0;
  }
  int next = 1;
  for (auto& [v, r] : rank) r = next++;
  PackedWord out;
  for (int v : w) out.push_back(rank[v]);
  return out;
}

bool is_packed(const PackedWord& w) {
  if (w.empty()) return false;
  return std_word(w) == w;
}

PackedWord permutohedron_encode(const Construct& c, const VSet& x) {
  if (c.support() != x)
    throw domain_error("Mismatch", "construct support differs from the carrier");
  int levels = 1;
  for (const Construct* node = &c; !node->children().empty();
       node = &node->children()[0]) {
    if (node->children().size() != 1)
      throw domain_error("NotAChain", "permutohedron constructs are chains");
    ++levels;
  }
  // the root holds the maximal letter, the deepest node the letter 1
  PackedWord w(x.size(), 0);
  const Construct* node = &c;
  for (int letter = levels;; --letter) {
    for (VertexId v : node->decoration()) {
      auto it = std::lower_bound(x.begin(), x.end(), v);
      w[it - x.begin()] = letter;
    }
    if (node->children().empty()) break;
    node = &node->children()[0];
  }
  return w;
}

Construct permutohedron_decode(const PackedWord& w, const VSet& x) {
  if (w.size() != x.size())
    throw domain_error("Mismatch", "word length differs from the carrier size");
  if (!is_packed(w)) throw domain_error("BadWord", "the word is not packed");
  int depth = *std::max_element(w.begin(), w.end());
  std::vector<VSet> levels(depth);
  for (std::size_t i = 0; i < w.size(); ++i) levels[w[i] - 1].push_back(x[i]);
  Construct node(levels[0]);
  for (int d = 1; d < depth; ++d) node = Construct(levels[d], {std::move(node)});
  return node;
}

namespace {

// strictly increasing maps [k] -> [n], as value vectors
void each_increasing(int k, int n, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> psi;
  std::function<void(int)> walk = [&](int from) {
    if (static_cast<int>(psi.size()) == k) {
      f(psi);
      return;
    }
    for (int v = from; v <= n; ++v) {
      psi.push_back(v);
      walk(v + 1);
      psi.pop_back();
    }
  };
  walk(1);
}

}  // namespace

WordTrio br_shuffle(const PackedWord& f, const PackedWord& g) {
  if (!is_packed(f) || !is_packed(g))
    throw domain_error("BadWord", "both arguments must be packed");
  int n1 = *std::max_element(f.begin(), f.end());
  int n2 = *std::max_element(g.begin(), g.end());
  WordTrio out;
  for (int n = std::max(n1, n2); n <= n1 + n2; ++n) {
    each_increasing(n1, n, [&](const std::vector<int>& psi1) {
      each_increasing(n2, n, [&](const std::vector<int>& psi2) {
        std::vector<bool> hit(n + 1, false);
        for (int v : psi1) hit[v] = true;
        for (int v : psi2) hit[v] = true;
        for (int v = 1; v <= n; ++v)
          if (!hit[v]) return;
        PackedWord word;
        for (int v : f) word.push_back(psi1[v - 1]);
        for (int v : g) word.push_back(psi2[v - 1]);
        int max_h = psi1[n1 - 1], max_k = psi2[n2 - 1];
        auto& bucket = max_h > max_k ? out.prec : max_h < max_k ? out.succ : out.dot;
        bucket.push_back(std::move(word));
      });
    });
  }
  std::sort(out.prec.begin(), out.prec.end());
  std::sort(out.dot.begin(), out.dot.end());
  std::sort(out.succ.begin(), out.succ.end());
  return out;
}

CubeWord hypercube_encode(const Construct& c, const VSet& x) {
  if (c.support() != x)
    throw domain_error("Mismatch", "construct support differs from the carrier");
  CubeWord w(x.size(), '-');
  std::function<void(const Construct&, int)> walk = [&](const Construct& node,
                                                        int hi) {
    // node lives on positions 1..hi of x
    int p = hi + 1;
    for (VertexId v : node.decoration()) {
      auto it = std::lower_bound(x.begin(), x.end(), v);
      p = std::min(p, static_cast<int>(it - x.begin()) + 1);
    }
    w[p - 1] = '+';
    for (VertexId v : node.decoration()) {
      auto it = std::lower_bound(x.begin(), x.end(), v);
      int pos = static_cast<int>(it - x.begin()) + 1;
      if (pos != p) w[pos - 1] = '.';
    }
    const Construct* prefix_child = nullptr;
    for (const Construct& ch : node.children()) {
      if (ch.children().empty() && ch.support().size() == 1) {
        auto it = std::lower_bound(x.begin(), x.end(), ch.support()[0]);
        if (static_cast<int>(it - x.begin()) + 1 > p)
          continue;  // a minus position, already the default
      }
      if (prefix_child)
        throw domain_error("Mismatch", "not a hypercube-shaped construct");
      prefix_child = &ch;
    }
    if (prefix_child) walk(*prefix_child, p - 1);
  };
  walk(c, static_cast<int>(x.size()));
  if (w[0] != '+') throw domain_error("Mismatch", "not a hypercube-shaped construct");
  return w;
}

Construct hypercube_decode(const CubeWord& w, const VSet& x) {
  if (w.size() != x.size())
    throw domain_error("Mismatch", "word length differs from the carrier size");
  if (w.empty() || w[0] != '+')
    throw domain_error("BadWord", "cube words start with '+'");
  for (char ch : w)
    if (ch != '+' && ch != '-' && ch != '.')
      throw domain_error("BadWord", "cube words use the alphabet +-.");
  std::function<Construct(int)> walk = [&](int hi) -> Construct {
    int p = hi;
    while (w[p - 1] != '+') --p;
    VSet root{x[p - 1]};
    std::vector<Construct> children;
    for (int pos = p + 1; pos <= hi; ++pos) {
      if (w[pos - 1] == '.')
        root.push_back(x[pos - 1]);
      else
        children.push_back(Construct::singleton(x[pos - 1]));
    }
    if (p > 1) children.push_back(walk(p - 1));
    return Construct(make_vset(std::move(root)), std::move(children));
  };
  return walk(static_cast<int>(w.size()));
}

namespace {

void add_word(CubeWordSum& sum, const CubeWord& w, long long c) {
  auto& slot = sum[w];
  slot += c;
  if (slot == 0) sum.erase(w);
}

// split at the last '+': v = v1 + "+" + v2, '+' not occurring in v2
std::pair<CubeWord, CubeWord> split_last_plus(const CubeWord& v) {
  std::size_t p = v.rfind('+');
  return {v.substr(0, p), v.substr(p + 1)};
}

CubeWordSum star_words(const CubeWord& u, const CubeWord& v);

CubeWordSum prec_words(const CubeWord& u, const CubeWord& v) {
  return {{u + CubeWord(v.size(), '-'), 1}};
}

CubeWordSum dot_words(const CubeWord& u, const CubeWord& v) {
  auto [v1, v2] = split_last_plus(v);
  return {{u + CubeWord(v1.size(), '-') + "." + v2, 1}};
}

CubeWordSum succ_words(const CubeWord& u, const CubeWord& v) {
  auto [v1, v2] = split_last_plus(v);
  if (v1.empty()) return {{u + "+" + v2, 1}};
  CubeWordSum out;
  for (const auto& [w, c] : star_words(u, v1)) add_word(out, w + "+" + v2, c);
  return out;
}

// q = -1: star = prec - dot + succ
CubeWordSum star_words(const CubeWord& u, const CubeWord& v) {
  CubeWordSum out = prec_words(u, v);
  for (const auto& [w, c] : dot_words(u, v)) add_word(out, w, -c);
  for (const auto& [w, c] : succ_words(u, v)) add_word(out, w, c);
  return out;
}

}  // namespace

CubeTrio hypercube_trio_words(const CubeWord& u, const CubeWord& v) {
  return CubeTrio{prec_words(u, v), dot_words(u, v), succ_words(u, v)};
}

SchroederTree::SchroederTree(std::vector<SchroederTree> children)
    : children_(std::move(children)) {
  if (children_.size() == 1)
    throw domain_error("UnaryNode", "Schroeder trees have no unary nodes");
}

int SchroederTree::leaf_count() const {
  if (is_leaf()) return 1;
  int n = 0;
  for (const auto& ch : children_) n += ch.leaf_count();
  return n;
}

bool SchroederTree::operator<(const SchroederTree& o) const {
  return children_ < o.children_;
}

std::string SchroederTree::to_string() const {
  if (is_leaf()) return "*";
  std::string out = "(";
  for (std::size_t i = 0; i < children_.size(); ++i) {
    if (i) out += " ";
    out += children_[i].to_string();
  }
  return out + ")";
}

SchroederTree SchroederTree::parse(const std::string& text) {
  std::size_t pos = 0;
  std::function<SchroederTree()> walk = [&]() -> SchroederTree {
    while (pos < text.size() && text[pos] == ' ') ++pos;
    if (pos >= text.size())
      throw domain_error("ParseError", "unexpected end of tree text");
    if (text[pos] == '*') {
      ++pos;
      return SchroederTree::leaf();
    }
    if (text[pos] != '(')
      throw domain_error("ParseError", "expected '*' or '(' in tree text");
    ++pos;
    std::vector<SchroederTree> children;
    for (;;) {
      while (pos < text.size() && text[pos] == ' ') ++pos;
      if (pos >= text.size())
        throw domain_error("ParseError", "unbalanced tree text");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      children.push_back(walk());
    }
    return SchroederTree(std::move(children));
  };
  SchroederTree t = walk();
  while (pos < text.size() && text[pos] == ' ') ++pos;
  if (pos != text.size()) throw domain_error("ParseError", "trailing tree text");
  return t;
}

SchroederTree associahedron_encode(const Construct& c, const VSet& x) {
  if (c.support() != x)
    throw domain_error("Mismatch", "construct support differs from the carrier");
  for (std::size_t i = 0; i + 1 < x.size(); ++i)
    if (x[i + 1] != x[i] + 1)
      throw domain_error("NotInterval", "the carrier must be an integer interval");
  std::function<SchroederTree(const Construct&, VertexId, VertexId)> walk =
      [&](const Construct& node, VertexId lo, VertexId hi) -> SchroederTree {
    std::vector<SchroederTree> subtrees;
    auto piece = [&](VertexId a, VertexId b) -> SchroederTree {
      if (a > b) return SchroederTree::leaf();
      VSet want;
      for (VertexId v = a; v <= b; ++v) want.push_back(v);
      for (const Construct& ch : node.children())
        if (ch.support() == want) return walk(ch, a, b);
      throw domain_error("Mismatch", "children do not interleave the root");
    };
    VertexId next = lo;
    for (VertexId label : node.decoration()) {
      subtrees.push_back(piece(next, label - 1));
      next = label + 1;
    }
    subtrees.push_back(piece(next, hi));
    return SchroederTree(std::move(subtrees));
  };
  return walk(c, x.front(), x.back());
}

Construct associahedron_decode(const SchroederTree& t, const VSet& x) {
  for (std::size_t i = 0; i + 1 < x.size(); ++i)
    if (x[i + 1] != x[i] + 1)
      throw domain_error("NotInterval", "the carrier must be an integer interval");
  if (t.leaf_count() != static_cast<int>(x.size()) + 1)
    throw domain_error("Mismatch", "leaf count must be carrier size plus one");
  std::function<Construct(const SchroederTree&, VertexId)> walk =
      [&](const SchroederTree& node, VertexId lo) -> Construct {
    VSet root;
    std::vector<Construct> children;
    VertexId next = lo;
    for (std::size_t i = 0; i < node.children().size(); ++i) {
      const SchroederTree& sub = node.children()[i];
      if (!sub.is_leaf()) {
        children.push_back(walk(sub, next));
        next += sub.leaf_count() - 1;
      }
      if (i + 1 < node.children().size()) root.push_back(next++);
    }
    return Construct(std::move(root), std::move(children));
  };
  return walk(t, x.front());
}

namespace {

void add_tree(TreeSum& sum, const SchroederTree& t, const QPoly& c) {
  auto& slot = sum[t];
  slot += c;
  if (slot.is_zero()) sum.erase(t);
}

TreeSum scale_trees(const QPoly& c, const TreeSum& s) {
  TreeSum out;
  for (const auto& [t, p] : s) add_tree(out, t, c * p);
  return out;
}

TreeSum prec_trees(const SchroederTree& s, const SchroederTree& t) {
  if (s.is_leaf())
    throw domain_error("Arity", "prec is undefined on the one-leaf tree");
  TreeSum out;
  for (const auto& [last, c] : star_trees(s.children().back(), t)) {
    std::vector<SchroederTree> kids(s.children().begin(), s.children().end() - 1);
    kids.push_back(last);
    add_tree(out, SchroederTree(std::move(kids)), c);
  }
  return out;
}

TreeSum succ_trees(const SchroederTree& s, const SchroederTree& t) {
  if (t.is_leaf())
    throw domain_error("Arity", "succ is undefined on the one-leaf tree");
  TreeSum out;
  for (const auto& [first, c] : star_trees(s, t.children().front())) {
    std::vector<SchroederTree> kids{first};
    kids.insert(kids.end(), t.children().begin() + 1, t.children().end());
    add_tree(out, SchroederTree(std::move(kids)), c);
  }
  return out;
}

TreeSum dot_trees(const SchroederTree& s, const SchroederTree& t) {
  if (s.is_leaf() || t.is_leaf())
    throw domain_error("Arity", "dot is undefined on one-leaf trees");
  TreeSum out;
  for (const auto& [mid, c] : star_trees(s.children().back(), t.children().front())) {
    std::vector<SchroederTree> kids(s.children().begin(), s.children().end() - 1);
    kids.push_back(mid);
    kids.insert(kids.end(), t.children().begin() + 1, t.children().end());
    add_tree(out, SchroederTree(std::move(kids)), c);
  }
  return out;
}

}  // namespace

TreeSum star_trees(const SchroederTree& s, const SchroederTree& t) {
  if (s.is_leaf()) return {{t, QPoly(1)}};
  if (t.is_leaf()) return {{s, QPoly(1)}};
  TreeSum out = prec_trees(s, t);
  for (const auto& [tr, c] : scale_trees(QPoly::q(), dot_trees(s, t)))
    add_tree(out, tr, c);
  for (const auto& [tr, c] : succ_trees(s, t)) add_tree(out, tr, c);
  return out;
}

TreeTrio lr_trio_trees(const SchroederTree& s, const SchroederTree& t) {
  return TreeTrio{prec_trees(s, t), dot_trees(s, t), succ_trees(s, t)};
}

namespace {

long long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

ErosoCounts erosohedron_counts(int m) {
  if (m < 2) throw domain_error("TooSmall", "erosohedron counts need m >= 2");
  ErosoCounts out;
  out.vertices = static_cast<long long>(m - 1) * m;
  for (int k = 1; k <= m - 1; ++k)
    out.faces_by_dim.push_back((m - k) * binom(m, k + 1));
  out.total = (1LL << (m - 1)) * (m + 2) - 2 * m - 1;
  return out;
}

}  // namespace nesto
