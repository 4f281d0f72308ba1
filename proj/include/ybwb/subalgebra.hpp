#ifndef YBWB_SUBALGEBRA_HPP
#define YBWB_SUBALGEBRA_HPP

#include <optional>
#include <vector>

#include "ybwb/linsolve.hpp"
#include "ybwb/matrix.hpp"

namespace ybwb {

/// A subspace of n x n matrices kept in reduced row echelon form over
/// the row-major flattening of matrix coordinates. The fixed ordering
/// makes every derived basis reproducible across runs.
class MatSpan {
 public:
  explicit MatSpan(int n = 0) : n_(n) {}

  int n() const { return n_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<QMatrix>& basis() const { return basis_; }
  const std::vector<int>& pivots() const { return pivots_; }

  /// Inserts a matrix, keeping RREF. Returns true if the span grew.
  bool insert(const QMatrix& m);

  bool contains(const QMatrix& m) const;

  /// Coordinates of a member in the echelon basis (pivot reads).
  /// Throws if m is not in the span.
  Vec coordinates(const QMatrix& m) const;

  QMatrix from_coordinates(const Vec& c) const;

  friend bool operator==(const MatSpan& a, const MatSpan& b);

  MatSpan intersect(const MatSpan& other) const;

  static MatSpan span_of(int n, const std::vector<QMatrix>& mats);

 private:
  QMatrix reduce(const QMatrix& m) const;

  int n_;
  std::vector<QMatrix> basis_;  // ordered by pivot coordinate
  std::vector<int> pivots_;     // flattened (i-1)*n + (j-1)
};

/// A bracket-closed span with its closure property verified at
/// construction.
struct Subalgebra {
  MatSpan span;

  int n() const { return span.n(); }
  int dim() const { return span.dim(); }
  const std::vector<QMatrix>& basis() const { return span.basis(); }

  bool is_abelian() const;
  bool check_closed() const;
};

/// Smallest bracket-closed span containing the generators.
Subalgebra subalgebra_closure(int n, const std::vector<QMatrix>& gens);

/// Wraps an already-closed span, verifying closure.
Subalgebra make_subalgebra(MatSpan span);

/// Derived subspace [S,S] (always an ideal of S).
MatSpan derived_subspace(const Subalgebra& s);

/// Killing form k(a,b) = tr(ad a . ad b) of S in its echelon basis.
Mat killing_form(const Subalgebra& s);

bool is_solvable(const Subalgebra& s);

/// Is [s, ideal] contained in ideal?
bool is_ideal(const Subalgebra& s, const MatSpan& ideal);

/// Largest solvable ideal, computed as the orthogonal complement of
/// [S,S] under the Killing form of S (valid in characteristic zero).
/// The result is verified solvable and an ideal.
Subalgebra solvable_radical(const Subalgebra& s);

}  // namespace ybwb

#endif
