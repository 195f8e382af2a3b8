#ifndef NESTO_ENCODINGS_HPP
#define NESTO_ENCODINGS_HPP

#include <map>
#include <string>
#include <vector>

#include "nesto/construct.hpp"
#include "nesto/qpoly.hpp"

namespace nesto {

/// Surjection onto an initial segment {1..n}, written as its value sequence.
using PackedWord = std::vector<int>;

/// Composes with the unique increasing bijection from the image onto an
/// initial segment, e.g. std(1,4,3,4) = (1,3,2,3).
PackedWord std_word(const std::vector<int>& w);

bool is_packed(const PackedWord& w);

/// Chain constructs of the permutohedron on x correspond to packed words:
/// letter at position i = level of the node holding the i-th smallest vertex,
/// counting the deepest node as 1 so that the root holds the maximal letter.
PackedWord permutohedron_encode(const Construct& c, const VSet& x);
Construct permutohedron_decode(const PackedWord& w, const VSet& x);

struct WordTrio {
  std::vector<PackedWord> prec, dot, succ;  // each sorted lexicographically
};

/// All concatenated surjection pairs (h,k) with std(h)=f, std(k)=g and joint
/// image an initial segment, split by comparing max(h) against max(k).
WordTrio br_shuffle(const PackedWord& f, const PackedWord& g);

/// Word over "+-." starting with '+'; position i refers to the i-th smallest
/// vertex of the carrier.
using CubeWord = std::string;

CubeWord hypercube_encode(const Construct& c, const VSet& x);
Construct hypercube_decode(const CubeWord& w, const VSet& x);

using CubeWordSum = std::map<CubeWord, long long>;

struct CubeTrio {
  CubeWordSum prec, dot, succ;
};

/// The word-level tridendriform rules of the hypercube clan (valid at q=-1):
/// u prec v appends |v| minuses; u dot v turns the last '+' of v into '.';
/// u succ v recurses into the prefix of v before its last '+'.
CubeTrio hypercube_trio_words(const CubeWord& u, const CubeWord& v);

/// Planar tree without unary nodes; children empty means a single leaf.
class SchroederTree {
public:
  SchroederTree() = default;
  explicit SchroederTree(std::vector<SchroederTree> children);

  static SchroederTree leaf() { return SchroederTree(); }
  const std::vector<SchroederTree>& children() const { return children_; }
  bool is_leaf() const { return children_.empty(); }
  int leaf_count() const;

  bool operator==(const SchroederTree& o) const { return children_ == o.children_; }
  bool operator!=(const SchroederTree& o) const { return !(*this == o); }
  bool operator<(const SchroederTree& o) const;

  /// "*" for a leaf, "(T1 T2 ...)" otherwise.
  std::string to_string() const;
  static SchroederTree parse(const std::string& text);

private:
  std::vector<SchroederTree> children_;
};

/// Constructs of gamma(1) on an integer interval correspond to Schroeder
/// trees by the search-tree labeling: a root decoration of size p
/// interleaves its p+1 subtrees.
SchroederTree associahedron_encode(const Construct& c, const VSet& x);
Construct associahedron_decode(const SchroederTree& t, const VSet& x);

using TreeSum = std::map<SchroederTree, QPoly>;

struct TreeTrio {
  TreeSum prec, dot, succ;
};

/// The Loday-Ronco rules on Schroeder trees, with the recursive * expanded
/// as prec + q*dot + succ; each dot application contributes one factor q.
TreeTrio lr_trio_trees(const SchroederTree& s, const SchroederTree& t);
TreeSum star_trees(const SchroederTree& s, const SchroederTree& t);

struct ErosoCounts {
  long long vertices;
  std::vector<long long> faces_by_dim;  // entry k-1 = number of k-faces, k >= 1
  long long total;
};

/// Face counts of the erosohedron on m vertices: (m-1)m vertices,
/// (m-k)*binom(m,k+1) faces in dimension k, 2^{m-1}(m+2)-2m-1 in total.
ErosoCounts erosohedron_counts(int m);

}  // namespace nesto

#endif
