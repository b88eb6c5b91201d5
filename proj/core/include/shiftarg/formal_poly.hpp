#pragma once

#include <map>

#include "shiftarg/rational.hpp"

namespace shiftarg {

/// Polynomial in one central formal variable (u or z^-1) with coefficients
/// in an arbitrary ring A. A needs +, *, scaled(Rational) and is_zero().
/// No zero coefficients are stored.
template <typename A>
class FormalPoly {
 public:
  FormalPoly() = default;
  FormalPoly(int power, A value) {
    if (!value.is_zero()) coeffs_.emplace(power, std::move(value));
  }

  const std::map<int, A>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  void add(int power, const A& value) {
    if (value.is_zero()) return;
    auto [it, fresh] = coeffs_.emplace(power, value);
    if (!fresh) {
      it->second = it->second + value;
      if (it->second.is_zero()) coeffs_.erase(it);
    }
  }

  A coefficient(int power, const A& zero) const {
    auto it = coeffs_.find(power);
    return it == coeffs_.end() ? zero : it->second;
  }

  /// (lowest coefficient, its power); input must be nonzero.
  std::pair<A, int> lowest() const {
    if (coeffs_.empty())
      throw std::invalid_argument("formal_poly: zero input");
    const auto& [p, a] = *coeffs_.begin();
    return {a, p};
  }

  FormalPoly operator+(const FormalPoly& o) const {
    FormalPoly r = *this;
    for (const auto& [p, a] : o.coeffs_) r.add(p, a);
    return r;
  }

  FormalPoly operator*(const FormalPoly& o) const {
    FormalPoly r;
    for (const auto& [pa, a] : coeffs_)
      for (const auto& [pb, b] : o.coeffs_) r.add(pa + pb, a * b);
    return r;
  }

  FormalPoly scaled(const Rational& c) const {
    FormalPoly r;
    for (const auto& [p, a] : coeffs_) r.add(p, a.scaled(c));
    return r;
  }

  bool operator==(const FormalPoly& o) const { return coeffs_ == o.coeffs_; }

 private:
  std::map<int, A> coeffs_;
};

}  // namespace shiftarg
