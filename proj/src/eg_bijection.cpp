#include "sortnet/eg_bijection.hpp"

#include <algorithm>
#include <climits>
#include <cstdint>
#include <stdexcept>

namespace sortnet {

namespace {

int staircase_order(const Partition& shape) {
  const int n = shape.rows() + 1;
  if (shape != staircase(n)) throw std::invalid_argument("tableau does not have staircase shape");
  return n;
}

}  // namespace

std::vector<Cell> sliding_sequence(const StandardYoungTableau& t) {
  std::vector<Cell> path;
  if (t.size() == 0) return path;
  Cell c = t.max_cell();
  path.push_back(c);
  while (c != Cell{1, 1}) {
    const int up = c.row > 1 ? t.at({c.row - 1, c.col}) : INT_MIN;
    const int left = c.col > 1 ? t.at({c.row, c.col - 1}) : INT_MIN;
    if (up > left) {
      --c.row;
    } else {
      --c.col;
    }
    path.push_back(c);
  }
  return path;
}

StandardYoungTableau promote(const StandardYoungTableau& t) {
  if (t.size() == 0) return t;
  const auto path = sliding_sequence(t);
  auto rows = t.rows();
  for (auto& r : rows) {
    for (int& v : r) ++v;
  }
  auto at = [&rows](Cell c) -> int& {
    return rows[static_cast<std::size_t>(c.row - 1)][static_cast<std::size_t>(c.col - 1)];
  };
  for (std::size_t r = 0; r + 1 < path.size(); ++r) at(path[r]) = t.at(path[r + 1]) + 1;
  at({1, 1}) = 1;
  return make_tableau_unchecked(t.shape(), std::move(rows));
}

namespace {

/// The last `letters` entries EG(T)_{N-letters+1}, ..., EG(T)_N.
std::vector<int> eg_tail(const StandardYoungTableau& t, std::int64_t letters) {
  const int n = staircase_order(t.shape());
  const auto big_n = static_cast<std::int64_t>(network_length(n));
  letters = std::clamp<std::int64_t>(letters, 0, big_n);
  if (letters == 0) return {};

  // Ragged row-major storage of the staircase; stored + applied == true entry.
  // Row r has n - r cells, so the cell above flat index id (row r) is id - (n - r + 1).
  std::vector<std::int64_t> row_start(static_cast<std::size_t>(n), 0);
  for (int r = 2; r <= n - 1; ++r) {
    row_start[static_cast<std::size_t>(r)] = row_start[static_cast<std::size_t>(r - 1)] + (n - (r - 1));
  }
  std::vector<std::int32_t> stored(static_cast<std::size_t>(big_n));
  for (int r = 1; r <= n - 1; ++r) {
    for (int c = 1; c <= n - r; ++c) {
      stored[static_cast<std::size_t>(row_start[static_cast<std::size_t>(r)] + c - 1)] = t.at({r, c});
    }
  }

  // The maximum always sits at one of the corners (r, n - r), and a slide
  // only ever changes the corner it starts from. A max segment tree over the
  // corner values therefore locates every maximum in O(log n).
  const int corners = n - 1;
  int leaves = 1;
  while (leaves < corners) leaves <<= 1;
  std::vector<std::int32_t> tree(static_cast<std::size_t>(2 * leaves), INT32_MIN);
  auto corner_id = [&](int r) { return static_cast<std::size_t>(row_start[static_cast<std::size_t>(r)] + (n - r) - 1); };
  for (int r = 1; r <= corners; ++r) tree[static_cast<std::size_t>(leaves + r - 1)] = stored[corner_id(r)];
  for (int k = leaves - 1; k >= 1; --k) {
    tree[static_cast<std::size_t>(k)] = std::max(tree[static_cast<std::size_t>(2 * k)], tree[static_cast<std::size_t>(2 * k + 1)]);
  }
  auto max_corner = [&] {
    std::size_t k = 1;
    while (k < static_cast<std::size_t>(leaves)) k = tree[2 * k] >= tree[2 * k + 1] ? 2 * k : 2 * k + 1;
    return static_cast<int>(k) - leaves + 1;
  };
  auto update = [&](int r, std::int32_t v) {
    std::size_t k = static_cast<std::size_t>(leaves + r - 1);
    tree[k] = v;
    for (k >>= 1; k >= 1; k >>= 1) tree[k] = std::max(tree[2 * k], tree[2 * k + 1]);
  };

  // swaps[letters - 1 - j] = EG(T)_{N - j}.
  std::vector<int> swaps(static_cast<std::size_t>(letters));
  int max_row = max_corner();
  swaps[static_cast<std::size_t>(letters - 1)] = n - max_row;
  // Letter N - j is read off after j slides, so only letters - 1 slides are needed.
  const std::int64_t slides = letters - 1;
  if (slides == 0) return swaps;

  // Every slide descends one antidiagonal per step, from i + j = n to (1,1).
  // Slide a + 1 only reads cells that slide a has already finished with, as
  // long as it stays one antidiagonal behind, and its starting corner is known
  // once slide a has made its first step (the only corner a slide changes).
  // So all slides run as a wavefront: in each tick every active slide takes
  // one step, oldest first. The independent chains hide memory latency.
  struct Slide {
    std::int64_t id;
    int r;
    int c;
  };
  const int steps = n - 2;
  std::vector<Slide> ring(static_cast<std::size_t>(steps));
  std::int32_t* s = stored.data();
  auto step = [&](Slide& sl) {
    const bool has_up = sl.r > 1;
    const bool has_left = sl.c > 1;
    const std::int64_t up_id = has_up ? sl.id - (n - sl.r + 1) : 0;
    const std::int64_t left_id = has_left ? sl.id - 1 : 0;
    const std::int32_t up = has_up ? s[up_id] : INT32_MIN;
    const std::int32_t left = has_left ? s[left_id] : INT32_MIN;
    const bool go_up = up > left;
    s[sl.id] = go_up ? up : left;
    sl.id = go_up ? up_id : left_id;
    sl.r -= go_up;
    sl.c -= !go_up;
  };

  std::int64_t oldest = 1;  // slides are numbered 1..slides in start order
  std::int64_t started = 0;
  auto retire_finished = [&] {
    while (oldest <= started) {
      const Slide& sl = ring[static_cast<std::size_t>(oldest % steps)];
      if (sl.r != 1 || sl.c != 1) break;
      s[0] = static_cast<std::int32_t>(1 - oldest);
      ++oldest;
    }
  };
  // Slides still in flight once the last letter is known do not affect it.
  while (started < slides) {
    if (started >= oldest) {
      const auto first = static_cast<std::size_t>(oldest % steps);
      const auto count = static_cast<std::size_t>(started - oldest + 1);
      const std::size_t head = std::min(count, ring.size() - first);
      Slide* base = ring.data();
      for (std::size_t i = first; i < first + head; ++i) step(base[i]);
      for (std::size_t i = 0; i < count - head; ++i) step(base[i]);
    }
    retire_finished();
    {
      ++started;
      Slide& sl = ring[static_cast<std::size_t>(started % steps)];
      sl = {static_cast<std::int64_t>(corner_id(max_row)), max_row, n - max_row};
      const auto corner = static_cast<std::size_t>(sl.id);
      step(sl);
      update(max_row, s[corner]);
      max_row = max_corner();
      swaps[static_cast<std::size_t>(letters - 1 - started)] = n - max_row;
      retire_finished();
    }
  }
  return swaps;
}

}  // namespace

SortingNetwork eg_forward(const StandardYoungTableau& t) {
  const int n = staircase_order(t.shape());
  return make_network_unchecked(n, eg_tail(t, static_cast<std::int64_t>(network_length(n))));
}

std::vector<int> eg_forward_suffix(const StandardYoungTableau& t, std::size_t letters) {
  return eg_tail(t, static_cast<std::int64_t>(std::min<std::size_t>(letters, t.size())));
}

SortingNetwork eg_forward_reference(const StandardYoungTableau& t) {
  const int n = staircase_order(t.shape());
  const std::size_t big_n = network_length(n);
  std::vector<int> swaps(big_n);
  StandardYoungTableau cur = t;
  for (std::size_t k = big_n; k >= 1; --k) {
    swaps[k - 1] = cur.max_cell().col;
    if (k > 1) cur = promote(cur);
  }
  return make_network_unchecked(n, std::move(swaps));
}

namespace {

/// In-place insertion; returns the row (one-based) that grew.
int insert_rows(std::vector<std::vector<int>>& rows, int u) {
  int q = u;
  for (std::size_t k = 0;; ++k) {
    if (k == rows.size()) {
      rows.push_back({q});
      return static_cast<int>(k + 1);
    }
    auto& row = rows[k];
    auto it = std::lower_bound(row.begin(), row.end(), q);
    if (it == row.end()) {
      row.push_back(q);
      return static_cast<int>(k + 1);
    }
    const int old = *it;
    *it = q;
    q = old == q ? q + 1 : old;
  }
}

}  // namespace

YoungTableau insert(const YoungTableau& t, int u) {
  if (u < 1) throw std::invalid_argument("inserted value must be positive");
  auto rows = t.rows();
  insert_rows(rows, u);
  return YoungTableau(std::move(rows));
}

EgInverseResult eg_inverse(const SortingNetwork& w) {
  const int n = w.n();
  const Partition shape = staircase(n);
  std::vector<std::vector<int>> insertion;
  std::vector<std::vector<int>> recording;
  std::vector<int> first_row;
  first_row.reserve(w.length());
  for (std::size_t k = 1; k <= w.length(); ++k) {
    const int row = insert_rows(insertion, w.swap(k));
    if (static_cast<std::size_t>(row) > recording.size()) recording.emplace_back();
    recording[static_cast<std::size_t>(row - 1)].push_back(static_cast<int>(k));
    first_row.push_back(static_cast<int>(insertion.front().size()));
  }
  StandardYoungTableau rec(std::move(recording));
  if (rec.shape() != shape) throw std::logic_error("insertion did not produce a staircase");
  return {std::move(rec), std::move(first_row)};
}

bool check_first_row_bound(const SortingNetwork& w) {
  const auto inv = eg_inverse(w);
  ConfigurationCursor cur(w);
  // Displacements of untouched particles do not change and R_k never
  // decreases, so each step only needs the two particles that moved.
  for (std::size_t k = 1; k <= w.length(); ++k) {
    cur.advance();
    const int s = w.swap(k);
    const int bound = inv.first_row_lengths[k - 1];
    for (int pos : {s, s + 1}) {
      const int particle = cur.particle_at(pos);
      if (pos - particle > bound) return false;
    }
  }
  return true;
}

std::vector<int> first_row_counts(const StandardYoungTableau& t) {
  std::vector<int> counts(t.size() + 1, 0);
  if (t.size() == 0) return counts;
  for (int v : t.rows().front()) ++counts[static_cast<std::size_t>(v)];
  for (std::size_t k = 1; k < counts.size(); ++k) counts[k] += counts[k - 1];
  return counts;
}

}  // namespace sortnet
