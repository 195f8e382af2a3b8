#ifndef NESTO_LINEAR_HPP
#define NESTO_LINEAR_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nesto/construct.hpp"
#include "nesto/qpoly.hpp"

namespace nesto {

/// Formal sum of constructs of one common hypergraph with QPoly coefficients.
/// Terms with zero coefficient are pruned eagerly.
class LinearConstruct {
public:
  LinearConstruct() = default;
  explicit LinearConstruct(const Construct& c, QPoly coeff = 1) {
    if (!coeff.is_zero()) terms_[c] = std::move(coeff);
  }

  const std::map<Construct, QPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  QPoly coefficient(const Construct& c) const {
    auto it = terms_.find(c);
    return it == terms_.end() ? QPoly() : it->second;
  }

  void add_term(const Construct& c, const QPoly& coeff) {
    auto& slot = terms_[c];
    slot += coeff;
    if (slot.is_zero()) terms_.erase(c);
  }

  LinearConstruct& operator+=(const LinearConstruct& o) {
    for (const auto& [c, p] : o.terms_) add_term(c, p);
    return *this;
  }
  friend LinearConstruct operator+(LinearConstruct a, const LinearConstruct& b) {
    return a += b;
  }
  LinearConstruct& operator-=(const LinearConstruct& o) {
    for (const auto& [c, p] : o.terms_) add_term(c, -p);
    return *this;
  }
  friend LinearConstruct operator-(LinearConstruct a, const LinearConstruct& b) {
    return a -= b;
  }

  bool operator==(const LinearConstruct& o) const { return terms_ == o.terms_; }
  bool operator!=(const LinearConstruct& o) const { return !(*this == o); }

  std::string to_string() const;

  /// If every term has the same root decoration, that root.
  std::optional<VSet> common_root() const;

private:
  std::map<Construct, QPoly> terms_;
};

LinearConstruct scale(const QPoly& p, const LinearConstruct& a);

/// Substitute q := v in every coefficient.
LinearConstruct evaluate_q(const LinearConstruct& a, const BigInt& v);

QPoly coefficient_sum(const LinearConstruct& a);

/// Multilinear grafting: root decoration x over one linear construct per
/// child slot, expanded by distributing over all children simultaneously.
LinearConstruct graft(const VSet& x, const std::vector<LinearConstruct>& children);

}  // namespace nesto

#endif
