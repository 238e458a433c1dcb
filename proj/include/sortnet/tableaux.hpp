#pragma once

#include "sortnet/bigint.hpp"

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

namespace sortnet {

/// A cell (row, column) of a Young diagram, one-based with (1,1) top-left.
struct Cell {
  int row = 1;
  int col = 1;
  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// A partition (weakly decreasing positive parts) identified with its Young
/// diagram. The empty partition is a regular value.
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);

  std::span<const int> parts() const { return parts_; }
  /// Number of nonzero rows.
  int rows() const { return static_cast<int>(parts_.size()); }
  /// lambda_i, zero beyond the last row.
  int row_length(int i) const {
    return i >= 1 && i <= rows() ? parts_[static_cast<std::size_t>(i - 1)] : 0;
  }
  /// lambda'_j, the length of column j.
  int column_length(int j) const;
  /// |lambda|.
  std::size_t size() const { return size_; }
  bool empty() const { return parts_.empty(); }

  bool contains(Cell c) const { return c.row >= 1 && c.col >= 1 && c.col <= row_length(c.row); }
  /// Corner cells (removable without breaking the partition property), top to bottom.
  std::vector<Cell> corners() const;
  /// Cells that can be added, top to bottom.
  std::vector<Cell> addable_cells() const;

  /// Throws std::invalid_argument unless `c` is a corner.
  Partition without(Cell c) const;
  /// Throws std::invalid_argument unless `c` is addable.
  Partition with(Cell c) const;

  /// All cells in row-major order.
  std::vector<Cell> cells() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  std::size_t size_ = 0;
};

Partition conjugate(const Partition& p);

/// lambda_i - j + lambda'_j - i + 1. Throws std::out_of_range for cells outside the diagram.
int hook_number(const Partition& p, Cell c);

/// d(lambda) = |lambda|! / prod of hook numbers, exact.
BigCount dimension(const Partition& p);

/// (n-1, n-2, ..., 1); empty for n = 1.
Partition staircase(int n);
/// (n, ..., n) with n rows.
Partition square(int n);

/// lambda_i <= mu_i for every i.
bool is_contained(const Partition& inner, const Partition& outer);

/// Every partition of m, in reverse lexicographic order ((m) first).
std::vector<Partition> partitions_of(int m);

/// A filling with row- and column-strictly-increasing positive entries (not
/// necessarily 1..N). Rows are ragged; row i holds lambda_i entries.
class YoungTableau {
 public:
  YoungTableau() = default;
  /// Throws std::invalid_argument unless the rows form a Young tableau.
  explicit YoungTableau(std::vector<std::vector<int>> rows);

  const std::vector<std::vector<int>>& rows() const { return rows_; }
  Partition shape() const;
  std::size_t size() const;
  int at(Cell c) const {
    return rows_[static_cast<std::size_t>(c.row - 1)][static_cast<std::size_t>(c.col - 1)];
  }

  friend bool operator==(const YoungTableau&, const YoungTableau&) = default;

 private:
  std::vector<std::vector<int>> rows_;
};

/// A standard Young tableau: rows and columns strictly increase and the
/// entries are exactly {1, ..., |shape|}.
class StandardYoungTableau {
 public:
  StandardYoungTableau() = default;
  /// Throws std::invalid_argument unless the rows form a standard Young tableau.
  explicit StandardYoungTableau(std::vector<std::vector<int>> rows);

  const std::vector<std::vector<int>>& rows() const { return rows_; }
  const Partition& shape() const { return shape_; }
  std::size_t size() const { return shape_.size(); }
  int at(Cell c) const {
    return rows_[static_cast<std::size_t>(c.row - 1)][static_cast<std::size_t>(c.col - 1)];
  }
  /// The cell holding the entry |shape| (the empty tableau has none).
  Cell max_cell() const;

  friend bool operator==(const StandardYoungTableau&, const StandardYoungTableau&) = default;
  friend auto operator<=>(const StandardYoungTableau& a, const StandardYoungTableau& b) {
    return a.rows_ <=> b.rows_;
  }

 private:
  struct Unchecked {};
  StandardYoungTableau(Unchecked, Partition shape, std::vector<std::vector<int>> rows)
      : shape_(std::move(shape)), rows_(std::move(rows)) {}

  Partition shape_;
  std::vector<std::vector<int>> rows_;

  friend StandardYoungTableau make_tableau_unchecked(Partition shape, std::vector<std::vector<int>> rows);
};

/// For samplers and bijections whose output is valid by construction.
StandardYoungTableau make_tableau_unchecked(Partition shape, std::vector<std::vector<int>> rows);

/// True iff the rows form a standard Young tableau.
bool is_standard_young_tableau(const std::vector<std::vector<int>>& rows);

/// The tableau with t_{i,j} = the step at which (i,j) appeared along
/// chain[0] = empty, chain[1], ..., chain[N]. Throws std::invalid_argument if
/// the chain does not start empty or some step is not a single-cell addition.
StandardYoungTableau recording_tableau(std::span<const Partition> chain);

/// Every SYT of the given shape, in lexicographic order of their row
/// vectors. Intended for small shapes (exhaustive oracles).
std::vector<StandardYoungTableau> enumerate_syt(const Partition& shape);

}  // namespace sortnet
