#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

namespace shiftarg {

/// Ordered list of variable labels for a polynomial ring. The first
/// `lie_count` variables are Lie-algebra coordinates; any trailing ones
/// ("u", "zinv", ...) are formal parameters that directional derivatives
/// and Poisson brackets skip. Index order is the canonical term-order
/// tiebreak.
class VariableContext {
 public:
  VariableContext(std::vector<std::string> names, std::size_t lie_count)
      : names_(std::move(names)), lie_count_(lie_count) {
    if (lie_count_ > names_.size())
      throw std::invalid_argument("context: lie_count exceeds variable count");
    std::unordered_set<std::string> seen;
    for (const auto& n : names_)
      if (!seen.insert(n).second)
        throw std::invalid_argument("context: duplicate variable '" + n + "'");
  }

  std::size_t size() const { return names_.size(); }
  std::size_t lie_count() const { return lie_count_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  bool is_formal(std::size_t i) const { return i >= lie_count_; }

  /// 0-based index of a named variable; throws if absent.
  std::size_t index_of(const std::string& n) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == n) return i;
    throw std::invalid_argument("context: unknown variable '" + n + "'");
  }

  bool operator==(const VariableContext& o) const {
    return lie_count_ == o.lie_count_ && names_ == o.names_;
  }

 private:
  std::vector<std::string> names_;
  std::size_t lie_count_;
};

using ContextPtr = std::shared_ptr<const VariableContext>;

inline ContextPtr make_context(std::vector<std::string> names,
                               std::size_t lie_count) {
  return std::make_shared<const VariableContext>(std::move(names), lie_count);
}

inline bool same_context(const ContextPtr& a, const ContextPtr& b) {
  return a == b || (a && b && *a == *b);
}

}  // namespace shiftarg
