#ifndef NESTO_QPOLY_HPP
#define NESTO_QPOLY_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <sstream>
#include <string>

namespace nesto {

using BigInt = boost::multiprecision::cpp_int;

/// Integer-coefficient polynomial in the formal variable q, stored sparsely.
/// Zero coefficients are never kept, so equality is map equality.
class QPoly {
public:
  QPoly() = default;
  QPoly(long long c) {  // NOLINT: implicit by design
    if (c != 0) coef_[0] = c;
  }
  explicit QPoly(const BigInt& c) {
    if (c != 0) coef_[0] = c;
  }

  static QPoly monomial(int exp, BigInt c = 1) {
    QPoly p;
    if (c != 0) p.coef_[exp] = std::move(c);
    return p;
  }
  static QPoly q() { return monomial(1); }

  bool is_zero() const { return coef_.empty(); }
  const std::map<int, BigInt>& coefficients() const { return coef_; }

  BigInt coefficient(int exp) const {
    auto it = coef_.find(exp);
    return it == coef_.end() ? BigInt(0) : it->second;
  }

  QPoly& operator+=(const QPoly& o) {
    for (const auto& [e, c] : o.coef_) {
      auto& slot = coef_[e];
      slot += c;
      if (slot == 0) coef_.erase(e);
    }
    return *this;
  }
  QPoly& operator-=(const QPoly& o) {
    for (const auto& [e, c] : o.coef_) {
      auto& slot = coef_[e];
      slot -= c;
      if (slot == 0) coef_.erase(e);
    }
    return *this;
  }
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b) {
    QPoly out;
    for (const auto& [ea, ca] : a.coef_)
      for (const auto& [eb, cb] : b.coef_) {
        auto& slot = out.coef_[ea + eb];
        slot += ca * cb;
        if (slot == 0) out.coef_.erase(ea + eb);
      }
    return out;
  }
  QPoly operator-() const { return QPoly() - *this; }

  bool operator==(const QPoly& o) const { return coef_ == o.coef_; }
  bool operator!=(const QPoly& o) const { return !(*this == o); }
  bool operator<(const QPoly& o) const { return coef_ < o.coef_; }

  /// Substitute q := v.
  BigInt evaluate(const BigInt& v) const {
    BigInt acc = 0;
    for (const auto& [e, c] : coef_) {
      BigInt p = 1;
      for (int i = 0; i < e; ++i) p *= v;
      acc += c * p;
    }
    return acc;
  }

  std::string to_string() const {
    if (coef_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : coef_) {
      BigInt a = c;
      if (first) {
        if (a < 0) {
          os << "-";
          a = -a;
        }
      } else {
        os << (a < 0 ? " - " : " + ");
        if (a < 0) a = -a;
      }
      first = false;
      if (e == 0 || a != 1) os << a;
      if (e >= 1) {
        os << "q";
        if (e > 1) os << "^" << e;
      }
    }
    return os.str();
  }

private:
  std::map<int, BigInt> coef_;
};

}  // namespace nesto

#endif
