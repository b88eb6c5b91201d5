#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "shiftarg/linalg.hpp"
#include "shiftarg/poly.hpp"

namespace shiftarg {

enum class AlgebraFamily { GL, O, SP, Subalgebra };

/// Sparse vector over the basis: (basis index, coefficient) pairs.
using SparseVec = std::vector<std::pair<uint32_t, Rational>>;

class LieAlgebra;
using AlgebraPtr = std::shared_ptr<const LieAlgebra>;

/// Linear subspace of a Lie algebra, rows in reduced echelon form.
struct Subspace {
  QMatrix basis;
  std::size_t dim() const { return basis.size(); }
};

/// Element of the dual space. `values[k] = mu(xi_k)` on the chosen basis.
/// For the matrix families a representative matrix A with
/// mu(X) = tr(A * X) may be attached; the Jordan builders always attach it.
struct Functional {
  QVector values;
  std::optional<QMatrix> matrix;
};

/// Finite-dimensional Lie algebra given by basis labels and sparse
/// structure constants. Antisymmetry holds by construction; the Jacobi
/// identity is checked at build time (exhaustively up to dim 50, on random
/// triples above). Immutable after construction apart from the PBW
/// straightening memo, which lives here so that it is shared per algebra.
class LieAlgebra {
 public:
  LieAlgebra(AlgebraFamily family, std::vector<std::string> labels,
             std::vector<QMatrix> basis_matrices, std::size_t matrix_size,
             int rank);

  std::size_t dim() const { return labels_.size(); }
  AlgebraFamily family() const { return family_; }
  int rank() const { return rank_; }
  /// N for the defining matrix realisation; 0 for abstract subalgebras.
  std::size_t matrix_size() const { return matrix_size_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const ContextPtr& context() const { return ctx_; }

  SparseVec bracket(uint32_t i, uint32_t j) const;
  /// Bilinear extension of the bracket to coordinate vectors.
  QVector bracket_vectors(const QVector& u, const QVector& v) const;
  /// [xi_i, xi_j] as a degree <= 1 polynomial in the coordinate context.
  CPoly bracket_poly(uint32_t i, uint32_t j) const;

  /// Defining matrix of a basis element (GL/O/SP only).
  const QMatrix& basis_matrix(uint32_t k) const;
  /// Matrix of a coordinate vector (GL/O/SP only).
  QMatrix element_matrix(const QVector& coords) const;

  /// For subalgebras produced by restrict(): the parent and the embedding
  /// rows (basis expressed in parent coordinates).
  const AlgebraPtr& parent() const { return parent_; }
  const QMatrix& embedding() const { return embedding_; }

  bool jacobi_holds(uint32_t i, uint32_t j, uint32_t k) const;
  /// Exhaustive for dim <= 50, sampled above; throws on failure.
  void validate_jacobi() const;

  // PBW straightening memo, keyed by (nondecreasing word, generator).
  using Word = std::vector<uint32_t>;
  struct WordGenKey {
    Word word;
    uint32_t gen;
    bool operator==(const WordGenKey& o) const {
      return gen == o.gen && word == o.word;
    }
  };
  struct WordGenHash {
    std::size_t operator()(const WordGenKey& k) const;
  };
  using MemoValue = std::vector<std::pair<Word, Rational>>;
  const MemoValue* memo_find(const WordGenKey& k) const;
  const MemoValue* memo_store(const WordGenKey& k, MemoValue v) const;

 private:
  friend AlgebraPtr restrict_to(const AlgebraPtr&, const Subspace&);
  friend AlgebraPtr build_from_table(std::vector<std::string>,
                                     std::vector<SparseVec>, int);

  AlgebraFamily family_;
  std::vector<std::string> labels_;
  std::vector<QMatrix> basis_matrices_;
  std::size_t matrix_size_ = 0;
  int rank_ = -1;
  ContextPtr ctx_;
  std::vector<SparseVec> table_;  // flat (i * dim + j), i < j stored
  AlgebraPtr parent_;
  QMatrix embedding_;

  mutable std::unordered_map<WordGenKey, MemoValue, WordGenHash> memo_;
  mutable std::shared_mutex memo_mutex_;

  void build_table_from_matrices();
  void set_table(std::vector<SparseVec> table) { table_ = std::move(table); }
};

enum class ClassicalType { B, C, D };

/// gl_N with basis E_ij in row-major order, [E_ij, E_kl] = d_jk E_il - d_li E_kj.
AlgebraPtr build_gl(std::size_t N);

/// o_{2n+1} (B), sp_{2n} (C), o_{2n} (D). Basis: the spanning elements
/// F_ij = E_ij - E_{j'i'} (orthogonal) or F_ij = E_ij - eps_i eps_j E_{j'i'}
/// (symplectic) with i + j <= N, plus the anti-diagonal F_{i,i'} in the
/// symplectic case; i' = N - i + 1.
AlgebraPtr build_classical(ClassicalType type, std::size_t n);

/// Index (row-major position) of E_ij / F_ij in the basis; 1-based i, j.
/// Returns (basis index, coefficient) of the spanning element at (i, j),
/// or an empty optional when that entry is zero (orthogonal anti-diagonal).
std::optional<std::pair<uint32_t, Rational>> span_entry(const LieAlgebra& g,
                                                        std::size_t i,
                                                        std::size_t j);

/// Abstract algebra from an explicit structure-constant table; the table
/// stores [xi_i, xi_j] for i < j and must pass the Jacobi validation.
AlgebraPtr build_from_table(std::vector<std::string> labels,
                            std::vector<SparseVec> table, int rank);

/// Stabiliser q_gamma = kernel of the skew form gamma([.,.]).
Subspace stabiliser(const LieAlgebra& g, const Functional& gamma);

/// Restriction to a bracket-closed subspace; throws if not a subalgebra.
AlgebraPtr restrict_to(const AlgebraPtr& g, const Subspace& s);

/// Minimum stabiliser dimension over seeded random integer functionals;
/// an upper bound for ind q, exact with probability 1 for reductive inputs.
std::size_t index_estimate(const LieAlgebra& g, std::size_t trials,
                           uint64_t seed);

/// b(q) = (ind q + dim q) / 2.
Rational b_of(std::size_t dimension, std::size_t index);

Functional functional_from_values(const LieAlgebra& g, QVector values);
/// Functional mu(X) = tr(A X) from a matrix A in the algebra (GL/O/SP).
Functional functional_from_matrix(const LieAlgebra& g, QMatrix a);
/// mu as the N x N matrix [mu(E_ij)] (GL) or [mu(F_ij)] (O/SP): the matrix
/// whose z^-1-shift polynomials reproduce the directional derivatives.
QMatrix mu_matrix(const LieAlgebra& g, const Functional& f);
/// Representative matrix A with mu = tr(A .): stored one if present,
/// otherwise solved from the trace-form Gram system.
QMatrix functional_matrix(const LieAlgebra& g, const Functional& f);
bool is_nilpotent(const LieAlgebra& g, const Functional& f);

/// Restriction of a functional to a subspace basis (values on its rows).
QVector restrict_values(const Functional& f, const Subspace& s);

struct JordanBlockData {
  Rational eigenvalue;
  std::vector<std::size_t> sizes;  // weakly decreasing
};

/// Functional with the prescribed Jordan canonical form, via the trace
/// pairing. For SP the blocks must satisfy the symplectic admissibility
/// conditions (odd rows at eigenvalue zero occur an even number of times;
/// nonzero eigenvalues come in +/- pairs with equal diagrams); the element
/// is realised inside sp_2n by the slot embedding described in the
/// implementation.
Functional jordan_to_functional(const LieAlgebra& g,
                                const std::vector<JordanBlockData>& blocks);

/// Rewrites p (in parent coordinates) as a polynomial in the coordinates
/// of the subalgebra `sub` of `parent`; empty optional when p does not lie
/// in the subring generated by sub's basis.
std::optional<CPoly> to_subalgebra_coords(const LieAlgebra& parent,
                                          const AlgebraPtr& sub,
                                          const CPoly& p);
/// Inverse direction: substitutes the embedding linear forms.
CPoly from_subalgebra_coords(const LieAlgebra& parent, const LieAlgebra& sub,
                             const CPoly& p);

}  // namespace shiftarg
