#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "jonq/groebner.hpp"

namespace jonq {

/// Graded ranks of a free complex: shifts[i] lists the degree shifts of the
/// basis of F_i in ascending order (a multiset).
class BettiTable {
 public:
  BettiTable() = default;
  explicit BettiTable(std::vector<std::vector<int>> shifts);

  std::size_t length() const { return shifts_.empty() ? 0 : shifts_.size() - 1; }
  std::size_t positions() const { return shifts_.size(); }
  std::size_t rank(std::size_t i) const { return i < shifts_.size() ? shifts_[i].size() : 0; }
  std::size_t count(std::size_t i, int shift) const;
  const std::vector<int>& shifts(std::size_t i) const { return shifts_.at(i); }
  const std::vector<std::vector<int>>& all_shifts() const { return shifts_; }

  /// sum_i (-1)^i sum_j beta_ij t^j, the numerator of the Hilbert series of
  /// the resolved module.
  HilbertNumerator alternating_numerator() const;

  /// `1 | 3 | 2`
  std::string ranks_string() const;
  /// `0 | 2,2,2 | 3,3`
  std::string shifts_string() const;

  bool operator==(const BettiTable& o) const { return shifts_ == o.shifts_; }

 private:
  std::vector<std::vector<int>> shifts_;
};

template <class K>
class PolyMatrix {
 public:
  PolyMatrix(RingPtr<K> ring, std::size_t rows, std::size_t cols);

  const RingPtr<K>& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Polynomial<K>& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Polynomial<K>& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  std::vector<Polynomial<K>> column(std::size_t c) const;

  bool is_zero() const;
  PolyMatrix operator*(const PolyMatrix& o) const;
  bool operator==(const PolyMatrix& o) const;

 private:
  RingPtr<K> ring_;
  std::size_t rows_, cols_;
  std::vector<Polynomial<K>> entries_;
};

/// F_0 <- F_1 <- ... <- F_len. maps[i] is the matrix of F_{i+1} -> F_i with
/// rank(F_i) rows and rank(F_{i+1}) columns.
template <class K>
struct FreeComplex {
  RingPtr<K> ring;
  std::vector<std::vector<int>> shifts;
  std::vector<PolyMatrix<K>> maps;

  std::size_t length() const { return maps.size(); }
  BettiTable betti() const;
  /// Every consecutive product is zero.
  bool is_complex() const;
  /// Each nonzero entry (r, c) of maps[i] is homogeneous of degree
  /// shifts[i+1][c] - shifts[i][r].
  bool is_graded() const;
  /// True when no map has a nonzero constant entry.
  bool is_minimal() const;
};

/// Generators of the syzygy module of `gens`, as the columns of a matrix with
/// gens.size() rows.
template <class K>
PolyMatrix<K> syzygies(const std::vector<Polynomial<K>>& gens);

/// Schreyer resolution of R/I starting from a Gröbner basis of I. Not minimal.
/// Stops after `max_length` maps; `complete` is false when syzygies remained.
template <class K>
struct SchreyerResult {
  FreeComplex<K> complex;
  bool complete = true;
};

template <class K>
SchreyerResult<K> schreyer_resolution(const Ideal<K>& ideal, std::size_t max_length = kMaxVars + 1);

/// Minimal Betti numbers of a graded free complex, from the ranks of the
/// constant blocks of its maps.
template <class K>
BettiTable minimal_betti(const FreeComplex<K>& c);

/// Prunes a graded free complex to a minimal one by repeatedly eliminating a
/// unit entry (first in row-major order of the first map that has one).
template <class K>
FreeComplex<K> prune(FreeComplex<K> c);

template <class K>
struct MinimalResolution {
  BettiTable betti;
  FreeComplex<K> complex;
  bool complete = true;
};

/// Minimal graded free resolution of R/I. With `explicit_pruning` false only
/// the Betti table is minimalized; `complex` is then the Schreyer complex.
template <class K>
MinimalResolution<K> minimal_free_resolution(const Ideal<K>& ideal, std::size_t max_length = kMaxVars + 1,
                                             bool explicit_pruning = true);

/// Rank of a matrix over the field.
template <class K>
std::size_t matrix_rank(const K& field, std::vector<std::vector<typename K::Elem>> rows);

}  // namespace jonq
