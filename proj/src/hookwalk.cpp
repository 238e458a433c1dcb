#include "sortnet/hookwalk.hpp"

#include "sortnet/eg_bijection.hpp"

#include <stdexcept>

namespace sortnet {

ShrinkingDiagram::ShrinkingDiagram(const Partition& shape)
    : rows_(shape.rows()),
      cols_(shape.row_length(1)),
      size_(shape.size()),
      row_len_(static_cast<std::size_t>(rows_) + 1, 0),
      col_len_(static_cast<std::size_t>(cols_) + 1, 0),
      fenwick_(static_cast<std::size_t>(rows_) + 1, 0) {
  for (int i = 1; i <= rows_; ++i) row_len_[static_cast<std::size_t>(i)] = shape.row_length(i);
  for (int j = 1; j <= cols_; ++j) col_len_[static_cast<std::size_t>(j)] = shape.column_length(j);
  for (int i = 1; i <= rows_; ++i) {
    fenwick_[static_cast<std::size_t>(i)] += row_len_[static_cast<std::size_t>(i)];
    const int parent = i + (i & -i);
    if (parent <= rows_) fenwick_[static_cast<std::size_t>(parent)] += fenwick_[static_cast<std::size_t>(i)];
  }
  while ((1 << (log_rows_ + 1)) <= rows_) ++log_rows_;
}

Cell ShrinkingDiagram::cell_at(std::size_t index) const {
  int pos = 0;
  auto rem = static_cast<std::int64_t>(index);
  for (int step = rows_ > 0 ? 1 << log_rows_ : 0; step > 0; step >>= 1) {
    const int probe = pos + step;
    if (probe <= rows_ && fenwick_[static_cast<std::size_t>(probe)] <= rem) {
      pos = probe;
      rem -= fenwick_[static_cast<std::size_t>(probe)];
    }
  }
  return {pos + 1, static_cast<int>(rem) + 1};
}

void ShrinkingDiagram::remove_corner(Cell c) {
  --row_len_[static_cast<std::size_t>(c.row)];
  --col_len_[static_cast<std::size_t>(c.col)];
  --size_;
  for (int i = c.row; i <= rows_; i += i & -i) --fenwick_[static_cast<std::size_t>(i)];
}

namespace {

Cell continue_walk(const ShrinkingDiagram& d, Cell c, RandomStream& rng, std::vector<Cell>* trace) {
  for (;;) {
    const int h = d.hook_size(c);
    if (h == 1) return c;
    c = d.hook_cell(c, static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(h))));
    if (trace) trace->push_back(c);
  }
}

Cell walk(const ShrinkingDiagram& d, RandomStream& rng, std::vector<Cell>* trace = nullptr) {
  const Cell start = d.cell_at(rng.uniform_below(d.size()));
  if (trace) trace->push_back(start);
  return continue_walk(d, start, rng, trace);
}

struct CoupledEnds {
  Cell inner;
  Cell outer;
};

CoupledEnds coupled_walk(const ShrinkingDiagram& inner, const ShrinkingDiagram& outer, RandomStream& rng) {
  Cell at = outer.cell_at(rng.uniform_below(outer.size()));
  if (!inner.contains(at)) {
    const Cell outer_end = continue_walk(outer, at, rng, nullptr);
    return {walk(inner, rng), outer_end};
  }
  for (;;) {
    if (inner.hook_size(at) == 1) {
      // Inner walk stops here; the outer one can only move on into outer \ inner.
      return {at, continue_walk(outer, at, rng, nullptr)};
    }
    const int h = outer.hook_size(at);
    const Cell next = outer.hook_cell(at, static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(h))));
    if (inner.contains(next)) {
      at = next;
      continue;
    }
    const Cell outer_end = continue_walk(outer, next, rng, nullptr);
    // The inner walk takes its own step out of `at` with fresh randomness.
    const Cell inner_step =
        inner.hook_cell(at, static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(inner.hook_size(at)))));
    return {continue_walk(inner, inner_step, rng, nullptr), outer_end};
  }
}

std::vector<std::vector<int>> blank_rows(const Partition& shape) {
  std::vector<std::vector<int>> rows;
  rows.reserve(static_cast<std::size_t>(shape.rows()));
  for (int i = 1; i <= shape.rows(); ++i) rows.emplace_back(static_cast<std::size_t>(shape.row_length(i)), 0);
  return rows;
}

void put(std::vector<std::vector<int>>& rows, Cell c, std::size_t value) {
  rows[static_cast<std::size_t>(c.row - 1)][static_cast<std::size_t>(c.col - 1)] = static_cast<int>(value);
}

}  // namespace

Cell hook_walk(const Partition& shape, RandomStream& rng) {
  if (shape.empty()) throw std::invalid_argument("hook walk on the empty diagram");
  ShrinkingDiagram d(shape);
  return walk(d, rng);
}

HookWalkTrace hook_walk_trace(const Partition& shape, RandomStream& rng) {
  if (shape.empty()) throw std::invalid_argument("hook walk on the empty diagram");
  ShrinkingDiagram d(shape);
  HookWalkTrace t;
  walk(d, rng, &t.cells);
  return t;
}

bool is_valid_hook_walk(const Partition& shape, const HookWalkTrace& trace) {
  if (trace.cells.empty() || !shape.contains(trace.cells.front())) return false;
  for (std::size_t k = 1; k < trace.cells.size(); ++k) {
    const Cell a = trace.cells[k - 1];
    const Cell b = trace.cells[k];
    const bool in_arm = b.row == a.row && b.col >= a.col;
    const bool in_leg = b.col == a.col && b.row >= a.row;
    if (!shape.contains(b) || !(in_arm || in_leg)) return false;
    if (hook_number(shape, a) == 1) return false;
  }
  return hook_number(shape, trace.cells.back()) == 1;
}

std::map<Cell, ExactRational> exact_corner_distribution(const Partition& shape) {
  std::map<Cell, ExactRational> out;
  const BigCount total = dimension(shape);
  for (Cell c : shape.corners()) out.emplace(c, ExactRational(dimension(shape.without(c)), total));
  return out;
}

StandardYoungTableau sample_syt(const Partition& shape, RandomStream& rng) {
  auto rows = blank_rows(shape);
  ShrinkingDiagram d(shape);
  while (d.size() > 0) {
    const Cell c = walk(d, rng);
    put(rows, c, d.size());
    d.remove_corner(c);
  }
  return make_tableau_unchecked(shape, std::move(rows));
}

StandardYoungTableau sample_staircase_tableau(int n, RandomStream& rng) { return sample_syt(staircase(n), rng); }

CoupledTableaux coupled_sample(const Partition& inner, const Partition& outer, RandomStream& rng) {
  if (!is_contained(inner, outer)) throw std::invalid_argument("coupled_sample needs inner ⊆ outer");
  auto inner_rows = blank_rows(inner);
  auto outer_rows = blank_rows(outer);
  ShrinkingDiagram lam(inner);
  ShrinkingDiagram mu(outer);
  while (lam.size() > 0) {
    const auto ends = coupled_walk(lam, mu, rng);
    put(inner_rows, ends.inner, lam.size());
    put(outer_rows, ends.outer, mu.size());
    lam.remove_corner(ends.inner);
    mu.remove_corner(ends.outer);
  }
  while (mu.size() > 0) {
    const Cell c = walk(mu, rng);
    put(outer_rows, c, mu.size());
    mu.remove_corner(c);
  }
  return {make_tableau_unchecked(inner, std::move(inner_rows)), make_tableau_unchecked(outer, std::move(outer_rows))};
}

SortingNetwork sample_usn(int n, RandomStream& rng) {
  if (n < 1) throw std::invalid_argument("network size must be positive");
  if (n == 1) return make_network_unchecked(1, {});
  return eg_forward(sample_staircase_tableau(n, rng));
}

}  // namespace sortnet
