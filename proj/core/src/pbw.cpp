#include "shiftarg/pbw.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace shiftarg {

namespace {

void require_same_algebra(const PBWElement& a, const PBWElement& b) {
  if (a.algebra() != b.algebra() &&
      !(a.algebra() && b.algebra() &&
        a.algebra()->labels() == b.algebra()->labels() &&
        same_context(a.algebra()->context(), b.algebra()->context())))
    throw std::invalid_argument("pbw: algebra mismatch");
}

using MemoValue = LieAlgebra::MemoValue;

// Normal form of (nondecreasing word) * xi_g. The recursion
//   w g = (u g) h + u [h, g]   for w = u h with h > g
// terminates because the first summand only appends h to words dominated
// by h, and bracket terms are strictly shorter. Results are memoized on
// (word, generator) keys per algebra; this is the main performance lever
// of the symmetrised-determinant expansions.
const MemoValue* word_times_gen(const LieAlgebra& g, const Word& w,
                                uint32_t gen) {
  LieAlgebra::WordGenKey key{w, gen};
  if (const MemoValue* hit = g.memo_find(key)) return hit;
  MemoValue out;
  if (w.empty() || w.back() <= gen) {
    Word r = w;
    r.push_back(gen);
    out.emplace_back(std::move(r), Rational(1));
    return g.memo_store(std::move(key), std::move(out));
  }
  const uint32_t h = w.back();
  Word u(w.begin(), w.end() - 1);
  std::map<Word, Rational> acc;
  for (const auto& [v, c] : *word_times_gen(g, u, gen)) {
    for (const auto& [v2, c2] : *word_times_gen(g, v, h)) {
      auto [it, fresh] = acc.emplace(v2, c * c2);
      if (!fresh) it->second += c * c2;
    }
  }
  for (const auto& [k, ck] : g.bracket(h, gen)) {
    for (const auto& [v2, c2] : *word_times_gen(g, u, k)) {
      auto [it, fresh] = acc.emplace(v2, ck * c2);
      if (!fresh) it->second += ck * c2;
    }
  }
  for (auto& [word, c] : acc)
    if (!is_zero(c)) out.emplace_back(word, c);
  return g.memo_store(std::move(key), std::move(out));
}

}  // namespace

PBWElement PBWElement::constant(AlgebraPtr g, const Rational& c) {
  PBWElement e(std::move(g));
  if (!shiftarg::is_zero(c)) e.terms_.emplace(Word{}, c);
  return e;
}

PBWElement PBWElement::generator(AlgebraPtr g, uint32_t k) {
  if (k >= g->dim())
    throw std::invalid_argument("pbw: generator index out of range");
  PBWElement e(std::move(g));
  e.terms_.emplace(Word{k}, Rational(1));
  return e;
}

int64_t PBWElement::degree() const {
  int64_t d = -1;
  for (const auto& [w, c] : terms_)
    d = std::max<int64_t>(d, static_cast<int64_t>(w.size()));
  return d;
}

void PBWElement::add_term(const Word& w, const Rational& c) {
  if (shiftarg::is_zero(c)) return;
  if (!std::is_sorted(w.begin(), w.end()))
    throw std::invalid_argument("pbw: word not nondecreasing");
  auto [it, fresh] = terms_.emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (shiftarg::is_zero(it->second)) terms_.erase(it);
  }
}

PBWElement PBWElement::operator+(const PBWElement& o) const {
  require_same_algebra(*this, o);
  PBWElement r = *this;
  for (const auto& [w, c] : o.terms_) {
    auto [it, fresh] = r.terms_.emplace(w, c);
    if (!fresh) {
      it->second += c;
      if (shiftarg::is_zero(it->second)) r.terms_.erase(it);
    }
  }
  return r;
}

PBWElement PBWElement::operator-(const PBWElement& o) const {
  return *this + o.scaled(Rational(-1));
}

PBWElement PBWElement::operator-() const { return scaled(Rational(-1)); }

PBWElement PBWElement::scaled(const Rational& c) const {
  PBWElement r(algebra_);
  if (shiftarg::is_zero(c)) return r;
  for (const auto& [w, x] : terms_) r.terms_.emplace(w, x * c);
  return r;
}

PBWElement PBWElement::operator*(const PBWElement& o) const {
  require_same_algebra(*this, o);
  const LieAlgebra& g = *algebra_;
  PBWElement result(algebra_);
  for (const auto& [wb, cb] : o.terms_) {
    // Fold the letters of wb into every term of *this.
    std::map<Word, Rational> cur;
    for (const auto& [wa, ca] : terms_) cur.emplace(wa, ca * cb);
    for (const uint32_t letter : wb) {
      std::map<Word, Rational> next;
      for (const auto& [w, c] : cur) {
        for (const auto& [v, cv] : *word_times_gen(g, w, letter)) {
          auto [it, fresh] = next.emplace(v, c * cv);
          if (!fresh) it->second += c * cv;
        }
      }
      cur = std::move(next);
    }
    for (const auto& [w, c] : cur) result.add_term(w, c);
  }
  return result;
}

bool PBWElement::operator==(const PBWElement& o) const {
  return terms_ == o.terms_;
}

std::string PBWElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << rat_str(it->second);
    for (auto k : it->first) os << "*" << algebra_->labels()[k];
  }
  return os.str();
}

PBWElement u_commutator(const PBWElement& a, const PBWElement& b) {
  return a * b - b * a;
}

PBWElement symmetrise(const AlgebraPtr& g, const CPoly& p) {
  if (!same_context(p.context(), g->context()))
    throw std::invalid_argument("symmetrise: context mismatch");
  if (!p.lie_only())
    throw std::invalid_argument("symmetrise: formal variables present");
  PBWElement out(g);
  for (const auto& [m, c] : p.terms()) {
    Word letters;
    Rational weight = c;
    for (const auto& [i, e] : m.exps()) {
      for (uint32_t t = 0; t < e; ++t) letters.push_back(i);
      weight *= factorial(e);
    }
    weight /= factorial(static_cast<unsigned>(letters.size()));
    // letters is sorted; next_permutation enumerates each distinct
    // ordering of the multiset exactly once.
    Word perm = letters;
    do {
      std::map<Word, Rational> cur;
      cur.emplace(Word{}, weight);
      for (const uint32_t letter : perm) {
        std::map<Word, Rational> next;
        for (const auto& [w, cw] : cur) {
          for (const auto& [v, cv] : *word_times_gen(*g, w, letter)) {
            auto [it, fresh] = next.emplace(v, cw * cv);
            if (!fresh) it->second += cw * cv;
          }
        }
        cur = std::move(next);
      }
      for (const auto& [w, cw] : cur) out.add_term(w, cw);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return out;
}

CPoly symbol(const PBWElement& a) {
  if (a.is_zero()) throw std::invalid_argument("symbol: zero input");
  const int64_t d = a.degree();
  CPoly p(a.algebra()->context());
  for (const auto& [w, c] : a.terms()) {
    if (static_cast<int64_t>(w.size()) != d) continue;
    Monomial m;
    for (auto k : w) m = m * Monomial::variable(k);
    p.add_term(m, c);
  }
  return p;
}

CentreReport centre_check(const LieAlgebra& g,
                          const std::vector<PBWElement>& elems) {
  CentreReport rep;
  for (std::size_t e = 0; e < elems.size(); ++e) {
    for (uint32_t k = 0; k < g.dim(); ++k) {
      const PBWElement xi = PBWElement::generator(elems[e].algebra(), k);
      if (!u_commutator(xi, elems[e]).is_zero()) rep.failures.emplace_back(e, k);
    }
  }
  return rep;
}

PBWElement straighten_reference(const AlgebraPtr& g, const Word& w,
                                bool first_descent) {
  // Locate a descent.
  std::size_t pos = w.size();
  if (first_descent) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if (w[i] > w[i + 1]) {
        pos = i;
        break;
      }
  } else {
    for (std::size_t i = w.size(); i-- > 1;)
      if (w[i - 1] > w[i]) {
        pos = i - 1;
        break;
      }
  }
  if (pos == w.size()) {
    PBWElement e(g);
    e.add_term(w, Rational(1));
    return e;
  }
  Word swapped = w;
  std::swap(swapped[pos], swapped[pos + 1]);
  PBWElement out = straighten_reference(g, swapped, first_descent);
  for (const auto& [k, c] : g->bracket(w[pos], w[pos + 1])) {
    Word shorter;
    shorter.insert(shorter.end(), w.begin(), w.begin() + pos);
    shorter.push_back(k);
    shorter.insert(shorter.end(), w.begin() + pos + 2, w.end());
    out = out + straighten_reference(g, shorter, first_descent).scaled(c);
  }
  return out;
}

}  // namespace shiftarg
