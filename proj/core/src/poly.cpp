#include "shiftarg/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace shiftarg {

namespace {

void require_same_context(const CPoly& a, const CPoly& b) {
  if (!same_context(a.context(), b.context()))
    throw std::invalid_argument("poly: context mismatch");
}

}  // namespace

Monomial::Monomial(std::vector<std::pair<uint32_t, uint32_t>> exps)
    : exps_(std::move(exps)) {
  std::sort(exps_.begin(), exps_.end());
  std::size_t out = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i].second == 0) continue;
    if (out > 0 && exps_[out - 1].first == exps_[i].first)
      exps_[out - 1].second += exps_[i].second;
    else
      exps_[out++] = exps_[i];
  }
  exps_.resize(out);
}

Monomial Monomial::variable(uint32_t index, uint32_t power) {
  Monomial m;
  if (power > 0) m.exps_.emplace_back(index, power);
  return m;
}

uint32_t Monomial::exponent(uint32_t index) const {
  for (const auto& [i, e] : exps_)
    if (i == index) return e;
  return 0;
}

uint64_t Monomial::degree() const {
  uint64_t d = 0;
  for (const auto& [i, e] : exps_) d += e;
  return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  r.exps_.reserve(exps_.size() + o.exps_.size());
  std::size_t a = 0, b = 0;
  while (a < exps_.size() || b < o.exps_.size()) {
    if (b == o.exps_.size() ||
        (a < exps_.size() && exps_[a].first < o.exps_[b].first)) {
      r.exps_.push_back(exps_[a++]);
    } else if (a == exps_.size() || o.exps_[b].first < exps_[a].first) {
      r.exps_.push_back(o.exps_[b++]);
    } else {
      r.exps_.emplace_back(exps_[a].first, exps_[a].second + o.exps_[b].second);
      ++a, ++b;
    }
  }
  return r;
}

Monomial Monomial::without(uint32_t index, uint32_t power) const {
  Monomial r;
  for (const auto& [i, e] : exps_) {
    if (i == index) {
      if (e < power) throw std::invalid_argument("monomial: power underflow");
      if (e > power) r.exps_.emplace_back(i, e - power);
    } else {
      r.exps_.emplace_back(i, e);
    }
  }
  return r;
}

bool Monomial::operator<(const Monomial& o) const {
  const uint64_t da = degree(), db = o.degree();
  if (da != db) return da < db;
  // Same degree: lexicographic with earlier variables dominating.
  std::size_t a = 0, b = 0;
  while (a < exps_.size() && b < o.exps_.size()) {
    if (exps_[a].first != o.exps_[b].first)
      return exps_[a].first > o.exps_[b].first;
    if (exps_[a].second != o.exps_[b].second)
      return exps_[a].second < o.exps_[b].second;
    ++a, ++b;
  }
  return false;  // identical (equal degrees force a == b exhausted together)
}

CPoly::CPoly(ContextPtr ctx, const Rational& constant) : ctx_(std::move(ctx)) {
  if (!shiftarg::is_zero(constant)) terms_.emplace(Monomial{}, constant);
}

CPoly CPoly::variable(ContextPtr ctx, uint32_t index) {
  if (index >= ctx->size())
    throw std::invalid_argument("poly: variable index out of range");
  CPoly p(std::move(ctx));
  p.terms_.emplace(Monomial::variable(index), Rational(1));
  return p;
}

CPoly CPoly::monomial(ContextPtr ctx, Monomial m, const Rational& coeff) {
  CPoly p(std::move(ctx));
  if (!shiftarg::is_zero(coeff)) p.terms_.emplace(std::move(m), coeff);
  return p;
}

int64_t CPoly::degree() const {
  int64_t d = -1;
  for (const auto& [m, c] : terms_)
    d = std::max<int64_t>(d, static_cast<int64_t>(m.degree()));
  return d;
}

bool CPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const uint64_t d = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_)
    if (m.degree() != d) return false;
  return true;
}

bool CPoly::lie_only() const {
  for (const auto& [m, c] : terms_)
    for (const auto& [i, e] : m.exps())
      if (ctx_->is_formal(i)) return false;
  return true;
}

Rational CPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational CPoly::constant_term() const { return coefficient(Monomial{}); }

void CPoly::add_term(const Monomial& m, const Rational& c) {
  if (shiftarg::is_zero(c)) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (shiftarg::is_zero(it->second)) terms_.erase(it);
  }
}

CPoly CPoly::operator+(const CPoly& o) const {
  require_same_context(*this, o);
  CPoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

CPoly CPoly::operator-(const CPoly& o) const {
  require_same_context(*this, o);
  CPoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

CPoly CPoly::operator-() const { return scaled(Rational(-1)); }

CPoly CPoly::operator*(const CPoly& o) const {
  require_same_context(*this, o);
  CPoly r(ctx_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

CPoly CPoly::scaled(const Rational& c) const {
  CPoly r(ctx_);
  if (shiftarg::is_zero(c)) return r;
  for (const auto& [m, x] : terms_) r.terms_.emplace(m, x * c);
  return r;
}

bool CPoly::operator==(const CPoly& o) const {
  return same_context(ctx_, o.ctx_) && terms_ == o.terms_;
}

CPoly CPoly::partial(uint32_t index) const {
  if (index >= ctx_->size())
    throw std::invalid_argument("poly: variable index out of range");
  CPoly r(ctx_);
  for (const auto& [m, c] : terms_) {
    const uint32_t e = m.exponent(index);
    if (e == 0) continue;
    r.add_term(m.without(index, 1), c * static_cast<long>(e));
  }
  return r;
}

Rational CPoly::eval(const std::map<uint32_t, Rational>& point) const {
  Rational total = 0;
  for (const auto& [m, c] : terms_) {
    Rational v = c;
    for (const auto& [i, e] : m.exps()) {
      auto it = point.find(i);
      if (it == point.end())
        throw std::invalid_argument("poly: unassigned variable " +
                                    ctx_->name(i));
      for (uint32_t k = 0; k < e; ++k) v *= it->second;
    }
    total += v;
  }
  return total;
}

Rational CPoly::eval(const std::vector<Rational>& point) const {
  Rational total = 0;
  for (const auto& [m, c] : terms_) {
    Rational v = c;
    for (const auto& [i, e] : m.exps()) {
      if (i >= point.size())
        throw std::invalid_argument("poly: unassigned variable " +
                                    ctx_->name(i));
      for (uint32_t k = 0; k < e; ++k) v *= point[i];
    }
    total += v;
  }
  return total;
}

CPoly CPoly::substitute(const std::map<uint32_t, CPoly>& subs) const {
  CPoly r(ctx_);
  for (const auto& [m, c] : terms_) {
    CPoly term(ctx_, c);
    for (const auto& [i, e] : m.exps()) {
      auto it = subs.find(i);
      const CPoly factor =
          it != subs.end() ? it->second : CPoly::variable(ctx_, i);
      for (uint32_t k = 0; k < e; ++k) term = term * factor;
    }
    r = r + term;
  }
  return r;
}

CPoly CPoly::directional_derivative(const std::vector<Rational>& gamma) const {
  if (gamma.size() != ctx_->lie_count())
    throw std::invalid_argument("poly: direction dimension mismatch");
  CPoly r(ctx_);
  for (uint32_t i = 0; i < gamma.size(); ++i) {
    if (shiftarg::is_zero(gamma[i])) continue;
    r = r + partial(i).scaled(gamma[i]);
  }
  return r;
}

CPoly CPoly::extract_coeff(uint32_t index, uint32_t power) const {
  CPoly r(ctx_);
  for (const auto& [m, c] : terms_)
    if (m.exponent(index) == power) r.add_term(m.without(index, power), c);
  return r;
}

uint32_t CPoly::max_power(uint32_t index) const {
  uint32_t p = 0;
  for (const auto& [m, c] : terms_) p = std::max(p, m.exponent(index));
  return p;
}

std::string CPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Print leading terms last-to-first so the highest-degree term comes first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    if (!first) os << " + ";
    first = false;
    os << rat_str(c);
    for (const auto& [i, e] : m.exps()) {
      os << "*" << ctx_->name(i);
      if (e > 1) os << "^" << e;
    }
  }
  return os.str();
}

std::vector<CPoly> shift_expand(const CPoly& p,
                                const std::vector<Rational>& gamma) {
  if (!p.is_homogeneous())
    throw std::invalid_argument("shift_expand: non-homogeneous input");
  if (!p.lie_only())
    throw std::invalid_argument("shift_expand: formal variables present");
  const int64_t m = std::max<int64_t>(p.degree(), 0);
  std::vector<CPoly> out;
  out.reserve(static_cast<std::size_t>(m) + 1);
  CPoly d = p;
  Rational kfact = 1;
  for (int64_t k = 0; k <= m; ++k) {
    if (k > 0) {
      d = d.directional_derivative(gamma);
      kfact *= static_cast<long>(k);
    }
    out.push_back(d.scaled(1 / kfact));
  }
  return out;
}

CPoly substitute_cross(const CPoly& p, const ContextPtr& target,
                       const std::vector<CPoly>& images) {
  if (images.size() != p.context()->size())
    throw std::invalid_argument("substitute_cross: image count mismatch");
  CPoly r(target);
  for (const auto& [m, c] : p.terms()) {
    CPoly term(target, c);
    for (const auto& [i, e] : m.exps())
      for (uint32_t k = 0; k < e; ++k) term = term * images[i];
    r = r + term;
  }
  return r;
}

}  // namespace shiftarg
