#pragma once

#include "sortnet/bigint.hpp"
#include "sortnet/core_perm.hpp"
#include "sortnet/random_stream.hpp"
#include "sortnet/tableaux.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace sortnet {

/// A Young diagram that loses one corner at a time, with O(1) hook queries
/// and O(log rows) uniform cell selection (Fenwick tree over row lengths).
class ShrinkingDiagram {
 public:
  explicit ShrinkingDiagram(const Partition& shape);

  std::size_t size() const { return size_; }
  int row_length(int i) const { return i >= 1 && i <= rows_ ? row_len_[static_cast<std::size_t>(i)] : 0; }
  int column_length(int j) const {
    return j >= 1 && j <= cols_ ? col_len_[static_cast<std::size_t>(j)] : 0;
  }
  bool contains(Cell c) const { return c.row >= 1 && c.col >= 1 && c.col <= row_length(c.row); }

  /// #H_c: the cell, its arm to the right and its leg below.
  int hook_size(Cell c) const { return row_length(c.row) - c.col + column_length(c.col) - c.row + 1; }

  /// The index-th cell of H_c in the fixed order: c itself, then the arm
  /// left to right, then the leg top to bottom.
  Cell hook_cell(Cell c, int index) const {
    const int arm = row_length(c.row) - c.col;
    if (index == 0) return c;
    if (index <= arm) return {c.row, c.col + index};
    return {c.row + index - arm, c.col};
  }

  /// The index-th cell in row-major order, 0 <= index < size().
  Cell cell_at(std::size_t index) const;

  /// Removes a corner cell. Precondition: hook_size(c) == 1.
  void remove_corner(Cell c);

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::size_t size_ = 0;
  int log_rows_ = 0;
  std::vector<int> row_len_;      // 1-based
  std::vector<int> col_len_;      // 1-based
  std::vector<std::int64_t> fenwick_;  // 1-based, over row lengths
};

/// Cells c_0, ..., c_r visited by one hook walk.
struct HookWalkTrace {
  std::vector<Cell> cells;
};

/// One hook walk on `shape`; returns the terminal corner. The terminal cell
/// has the law of the maximum entry's cell in a uniform SYT of that shape.
/// Throws std::invalid_argument for the empty shape.
Cell hook_walk(const Partition& shape, RandomStream& rng);

/// As hook_walk, but returns every visited cell.
HookWalkTrace hook_walk_trace(const Partition& shape, RandomStream& rng);

/// c_0 in shape, c_k in H_{c_{k-1}}, and only the last cell has a trivial hook.
bool is_valid_hook_walk(const Partition& shape, const HookWalkTrace& trace);

/// corner c -> d(shape \ c) / d(shape). Sums to exactly 1.
std::map<Cell, ExactRational> exact_corner_distribution(const Partition& shape);

/// Uniform SYT of `shape`: places |shape|, |shape|-1, ..., 1 at the endpoints
/// of successive hook walks on the shrinking diagram.
StandardYoungTableau sample_syt(const Partition& shape, RandomStream& rng);

StandardYoungTableau sample_staircase_tableau(int n, RandomStream& rng);

/// A pair (inner, outer) of uniform SYTs of shapes lambda ⊆ mu with
/// outer(c) <= inner(c) + |mu \ lambda| for every cell c of lambda.
struct CoupledTableaux {
  StandardYoungTableau inner;
  StandardYoungTableau outer;
};

/// Runs the hook walk in mu and lets the walk in lambda copy it while mu's walk
/// stays inside lambda; once it leaves, lambda's walk continues with fresh
/// draws. Throws std::invalid_argument unless inner ⊆ outer.
CoupledTableaux coupled_sample(const Partition& inner, const Partition& outer, RandomStream& rng);

/// Exactly uniform n-element sorting network: EG applied to a uniform
/// staircase tableau.
SortingNetwork sample_usn(int n, RandomStream& rng);

}  // namespace sortnet
