#include "sortnet/tableaux.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace sortnet {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
    size_ += static_cast<std::size_t>(parts_[i]);
  }
}

int Partition::column_length(int j) const {
  if (j < 1) return 0;
  // Rows are weakly decreasing, so the rows reaching column j form a prefix.
  auto it = std::partition_point(parts_.begin(), parts_.end(), [j](int len) { return len >= j; });
  return static_cast<int>(it - parts_.begin());
}

std::vector<Cell> Partition::corners() const {
  std::vector<Cell> out;
  for (int i = 1; i <= rows(); ++i) {
    if (row_length(i) > row_length(i + 1)) out.push_back({i, row_length(i)});
  }
  return out;
}

std::vector<Cell> Partition::addable_cells() const {
  std::vector<Cell> out;
  for (int i = 1; i <= rows() + 1; ++i) {
    if (i == 1 || row_length(i) < row_length(i - 1)) out.push_back({i, row_length(i) + 1});
  }
  return out;
}

Partition Partition::without(Cell c) const {
  if (!contains(c) || c.col != row_length(c.row) || row_length(c.row + 1) >= c.col) {
    throw std::invalid_argument("cell is not a corner of the partition");
  }
  auto p = parts_;
  if (--p[static_cast<std::size_t>(c.row - 1)] == 0) p.pop_back();
  return Partition(std::move(p));
}

Partition Partition::with(Cell c) const {
  const bool ok = c.row >= 1 && c.row <= rows() + 1 && c.col == row_length(c.row) + 1 &&
                  (c.row == 1 || row_length(c.row - 1) >= c.col);
  if (!ok) throw std::invalid_argument("cell is not addable to the partition");
  auto p = parts_;
  if (c.row == rows() + 1) {
    p.push_back(1);
  } else {
    ++p[static_cast<std::size_t>(c.row - 1)];
  }
  return Partition(std::move(p));
}

std::vector<Cell> Partition::cells() const {
  std::vector<Cell> out;
  out.reserve(size_);
  for (int i = 1; i <= rows(); ++i) {
    for (int j = 1; j <= row_length(i); ++j) out.push_back({i, j});
  }
  return out;
}

Partition conjugate(const Partition& p) {
  std::vector<int> parts;
  for (int j = 1; j <= p.row_length(1); ++j) parts.push_back(p.column_length(j));
  return Partition(std::move(parts));
}

int hook_number(const Partition& p, Cell c) {
  if (!p.contains(c)) throw std::out_of_range("cell outside the diagram");
  return p.row_length(c.row) - c.col + p.column_length(c.col) - c.row + 1;
}

BigCount dimension(const Partition& p) {
  BigCount hooks = 1;
  const Partition conj = conjugate(p);
  for (int i = 1; i <= p.rows(); ++i) {
    for (int j = 1; j <= p.row_length(i); ++j) {
      hooks *= p.row_length(i) - j + conj.row_length(j) - i + 1;
    }
  }
  return factorial(p.size()) / hooks;
}

Partition staircase(int n) {
  if (n < 1) throw std::invalid_argument("staircase order must be positive");
  std::vector<int> parts;
  for (int len = n - 1; len >= 1; --len) parts.push_back(len);
  return Partition(std::move(parts));
}

Partition square(int n) {
  if (n < 1) throw std::invalid_argument("square order must be positive");
  return Partition(std::vector<int>(static_cast<std::size_t>(n), n));
}

bool is_contained(const Partition& inner, const Partition& outer) {
  if (inner.rows() > outer.rows()) return false;
  for (int i = 1; i <= inner.rows(); ++i) {
    if (inner.row_length(i) > outer.row_length(i)) return false;
  }
  return true;
}

std::vector<Partition> partitions_of(int m) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int cap) {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int part = std::min(left, cap); part >= 1; --part) {
      cur.push_back(part);
      rec(left - part, part);
      cur.pop_back();
    }
  };
  rec(m, m);
  return out;
}

namespace {

bool rows_strictly_increase(const std::vector<std::vector<int>>& rows) {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    if (r.empty()) return false;
    if (i > 0 && r.size() > rows[i - 1].size()) return false;
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (j > 0 && r[j] <= r[j - 1]) return false;
      if (i > 0 && r[j] <= rows[i - 1][j]) return false;
    }
  }
  return true;
}

Partition shape_of(const std::vector<std::vector<int>>& rows) {
  std::vector<int> parts;
  for (const auto& r : rows) parts.push_back(static_cast<int>(r.size()));
  return Partition(std::move(parts));
}

}  // namespace

YoungTableau::YoungTableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  if (!rows_strictly_increase(rows_)) throw std::invalid_argument("rows do not form a Young tableau");
  for (const auto& r : rows_) {
    if (!r.empty() && r.front() < 1) throw std::invalid_argument("Young tableau entries must be positive");
  }
}

Partition YoungTableau::shape() const { return shape_of(rows_); }

std::size_t YoungTableau::size() const {
  std::size_t s = 0;
  for (const auto& r : rows_) s += r.size();
  return s;
}

bool is_standard_young_tableau(const std::vector<std::vector<int>>& rows) {
  if (!rows_strictly_increase(rows)) return false;
  std::size_t total = 0;
  for (const auto& r : rows) total += r.size();
  std::vector<char> seen(total + 1, 0);
  for (const auto& r : rows) {
    for (int v : r) {
      if (v < 1 || static_cast<std::size_t>(v) > total || seen[static_cast<std::size_t>(v)]) return false;
      seen[static_cast<std::size_t>(v)] = 1;
    }
  }
  return true;
}

StandardYoungTableau::StandardYoungTableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  if (!is_standard_young_tableau(rows_)) throw std::invalid_argument("rows do not form a standard Young tableau");
  shape_ = shape_of(rows_);
}

Cell StandardYoungTableau::max_cell() const {
  const int top = static_cast<int>(size());
  // The maximum sits at the end of some row.
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i].back() == top) return {static_cast<int>(i + 1), static_cast<int>(rows_[i].size())};
  }
  throw std::logic_error("empty tableau has no maximum cell");
}

StandardYoungTableau make_tableau_unchecked(Partition shape, std::vector<std::vector<int>> rows) {
  return StandardYoungTableau(StandardYoungTableau::Unchecked{}, std::move(shape), std::move(rows));
}

StandardYoungTableau recording_tableau(std::span<const Partition> chain) {
  if (chain.empty() || !chain.front().empty()) {
    throw std::invalid_argument("recording chain must start at the empty partition");
  }
  const Partition& last = chain.back();
  std::vector<std::vector<int>> rows;
  for (int i = 1; i <= last.rows(); ++i) rows.emplace_back(static_cast<std::size_t>(last.row_length(i)), 0);
  for (std::size_t step = 1; step < chain.size(); ++step) {
    const Partition& prev = chain[step - 1];
    const Partition& next = chain[step];
    if (next.size() != prev.size() + 1 || !is_contained(prev, next) || !is_contained(next, last)) {
      throw std::invalid_argument("chain step is not a single-cell addition");
    }
    int grown = 0;
    for (int i = 1; i <= next.rows(); ++i) {
      if (next.row_length(i) != prev.row_length(i)) {
        ++grown;
        rows[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(next.row_length(i) - 1)] =
            static_cast<int>(step);
      }
    }
    if (grown != 1) throw std::invalid_argument("chain step is not a single-cell addition");
  }
  return StandardYoungTableau(std::move(rows));
}

std::vector<StandardYoungTableau> enumerate_syt(const Partition& shape) {
  std::vector<std::vector<int>> rows;
  for (int i = 1; i <= shape.rows(); ++i) rows.emplace_back(static_cast<std::size_t>(shape.row_length(i)), 0);
  std::vector<StandardYoungTableau> out;
  // Place |shape|, |shape|-1, ..., 1 into successive corners of the shrinking shape.
  std::function<void(const Partition&)> rec = [&](const Partition& rest) {
    if (rest.empty()) {
      out.push_back(make_tableau_unchecked(shape, rows));
      return;
    }
    for (Cell c : rest.corners()) {
      rows[static_cast<std::size_t>(c.row - 1)][static_cast<std::size_t>(c.col - 1)] = static_cast<int>(rest.size());
      rec(rest.without(c));
    }
  };
  rec(shape);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace sortnet
