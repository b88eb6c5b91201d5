#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "shiftarg/lie_algebra.hpp"

namespace shiftarg {

/// Weakly decreasing sequence of positive integers.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<std::size_t> rows);

  const std::vector<std::size_t>& rows() const { return rows_; }
  std::size_t total() const;
  bool empty() const { return rows_.empty(); }

  bool operator==(const Partition& o) const { return rows_ == o.rows_; }
  bool operator!=(const Partition& o) const { return !(*this == o); }

  std::string str() const;

 private:
  std::vector<std::size_t> rows_;
};

/// Row-wise sum of Young diagrams (missing rows count 0): the induced
/// nilpotent partition in type A.
Partition induced_partition_A(const std::vector<Partition>& blocks);

/// True iff every odd row length occurs an even number of times.
bool symplectically_admissible(const Partition& pi);

/// Box-moving procedure that turns a row-sum partition into a
/// symplectically admissible one: scan from the top of the current
/// diagram, take the first odd row length of odd multiplicity, move one
/// box from its last occurrence to the next row, restart. Throws when the
/// procedure gets stuck (inadmissible input).
Partition kempken_modify(const Partition& pi);

/// Row number r(m) of the box m in the row-tableau: the unique r with
/// sum_{i<r} beta_i < m <= sum_{i<=r} beta_i. 1-based.
std::size_t row_index(const Partition& pi, std::size_t m);

/// Free-generator cells of the staircase Gamma with the top-left corner
/// sigma removed, labelled (m, k) for the k-th shift of the m-th invariant.
struct SkewGeneratorSet {
  std::vector<std::size_t> gamma_shape;
  std::vector<std::size_t> sigma_shape;  // may contain zeros
  std::vector<std::pair<std::size_t, std::size_t>> cells;     // kept
  std::vector<std::pair<std::size_t, std::size_t>> excluded;  // removed
};

/// Type A: Gamma = (N, N-1, ..., 1); cells (m, k) with 0 <= k <= m - r(m).
SkewGeneratorSet generator_set_A(std::size_t N, const Partition& pi);
/// Type C: Gamma = (2n, 2n-2, ..., 2); cells (2m, k) with
/// 0 <= k <= 2m - r(2m), computed from the admissible partition.
SkewGeneratorSet generator_set_C(std::size_t n, const Partition& pi_gamma);

/// (dim g - dim stabiliser(gamma)) / 2 + rk g.
std::size_t expected_generator_count(const LieAlgebra& g,
                                     const Functional& gamma);

/// All partitions of n, largest-first rows, in a deterministic order.
std::vector<Partition> all_partitions(std::size_t n);
/// Partitions of 2n that correspond to nilpotent orbits of sp_2n.
std::vector<Partition> symplectic_partitions(std::size_t total);

/// Jordan-data record with an opaque eigenvalue label; "-x" denotes the
/// eigenvalue opposite to "x".
struct LabelledJordanBlock {
  std::string eigenvalue;
  Partition sizes;
};

struct DiagramReport {
  Partition pi;        // row-sum partition
  Partition pi_gamma;  // admissible modification (type C); = pi in type A
  std::map<std::size_t, std::size_t> r;  // r(m); even m only in type C
  std::vector<std::size_t> sigma;
  SkewGeneratorSet cells;
};

/// Full induced-orbit combinatorics for a Jordan datum. `type` is 'A' or
/// 'C'; type C validates the symplectic conditions on the datum.
DiagramReport diagram_from_jordan(char type,
                                  const std::vector<LabelledJordanBlock>& blocks);

}  // namespace shiftarg
