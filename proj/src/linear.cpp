#include "nesto/linear.hpp"

#include <sstream>

namespace nesto {

std::string LinearConstruct::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [c, p] : terms_) {
    if (!first) os << " + ";
    first = false;
    const auto& coef = p.coefficients();
    bool simple = coef.size() == 1;
    if (p == QPoly(1)) {
      os << c.to_string();
    } else if (simple) {
      os << p.to_string() << "*" << c.to_string();
    } else {
      os << "(" << p.to_string() << ")*" << c.to_string();
    }
  }
  return os.str();
}

std::optional<VSet> LinearConstruct::common_root() const {
  std::optional<VSet> root;
  for (const auto& [c, p] : terms_) {
    if (!root)
      root = c.decoration();
    else if (*root != c.decoration())
      return std::nullopt;
  }
  return root;
}

LinearConstruct scale(const QPoly& p, const LinearConstruct& a) {
  LinearConstruct out;
  if (p.is_zero()) return out;
  for (const auto& [c, coeff] : a.terms()) out.add_term(c, p * coeff);
  return out;
}

LinearConstruct evaluate_q(const LinearConstruct& a, const BigInt& v) {
  LinearConstruct out;
  for (const auto& [c, coeff] : a.terms())
    out.add_term(c, QPoly(coeff.evaluate(v)));
  return out;
}

QPoly coefficient_sum(const LinearConstruct& a) {
  QPoly acc;
  for (const auto& [c, coeff] : a.terms()) acc += coeff;
  return acc;
}

namespace {

void graft_rec(const VSet& x, const std::vector<LinearConstruct>& children,
               std::size_t idx, std::vector<Construct>& picked, const QPoly& coeff,
               LinearConstruct& out) {
  if (idx == children.size()) {
    out.add_term(Construct(x, picked), coeff);
    return;
  }
  for (const auto& [c, p] : children[idx].terms()) {
    picked.push_back(c);
    graft_rec(x, children, idx + 1, picked, coeff * p, out);
    picked.pop_back();
  }
}

}  // namespace

LinearConstruct graft(const VSet& x, const std::vector<LinearConstruct>& children) {
  // carrier overlap surfaces as OverlapError from the Construct constructor
  LinearConstruct out;
  std::vector<Construct> picked;
  graft_rec(x, children, 0, picked, QPoly(1), out);
  return out;
}

}  // namespace nesto
