#include "sortnet/counting.hpp"
#include "sortnet/eg_bijection.hpp"
#include "sortnet/hookwalk.hpp"
#include "sortnet/stats.hpp"

#include <doctest.h>

#include <map>
#include <set>

using namespace sortnet;

namespace {

/// Chi-square p-value of sampled SYTs against the uniform law on enumerate_syt(shape).
double uniformity_p(const Partition& shape, int draws, std::uint64_t seed) {
  const auto all = enumerate_syt(shape);
  std::map<StandardYoungTableau, std::size_t> index;
  for (std::size_t i = 0; i < all.size(); ++i) index.emplace(all[i], i);
  std::vector<std::int64_t> counts(all.size(), 0);
  RandomStream rng(seed, 0);
  for (int k = 0; k < draws; ++k) ++counts[index.at(sample_syt(shape, rng))];
  return stats::chi_square(counts, std::vector<double>(all.size(), 1.0 / static_cast<double>(all.size()))).p_value;
}

}  // namespace

TEST_CASE("random stream determinism and ranges") {
  RandomStream a(42, 7), b(42, 7), c(42, 8);
  bool differs = false;
  for (int k = 0; k < 100; ++k) {
    const auto x = a.next();
    CHECK(x == b.next());
    differs |= x != c.next();
  }
  CHECK(differs);
  RandomStream r(1, 0);
  std::vector<std::int64_t> counts(7, 0);
  for (int k = 0; k < 70000; ++k) {
    const auto v = r.uniform_below(7);
    REQUIRE(v < 7);
    ++counts[v];
    const double u = r.uniform01();
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
  }
  CHECK(stats::chi_square(counts, std::vector<double>(7, 1.0 / 7)).p_value > 1e-4);
}

TEST_CASE("shrinking diagram") {
  const Partition p({4, 2, 2, 1});
  ShrinkingDiagram d(p);
  const auto cells = p.cells();
  for (std::size_t i = 0; i < cells.size(); ++i) CHECK(d.cell_at(i) == cells[i]);
  for (Cell c : cells) CHECK(d.hook_size(c) == hook_number(p, c));
  CHECK(d.hook_cell({1, 1}, 0) == Cell{1, 1});
  CHECK(d.hook_cell({1, 1}, 1) == Cell{1, 2});
  CHECK(d.hook_cell({1, 1}, 3) == Cell{1, 4});
  CHECK(d.hook_cell({1, 1}, 4) == Cell{2, 1});
  CHECK(d.hook_cell({1, 1}, 6) == Cell{4, 1});
  d.remove_corner({1, 4});
  d.remove_corner({4, 1});
  const Partition q({3, 2, 2});
  const auto qcells = q.cells();
  CHECK(d.size() == qcells.size());
  for (std::size_t i = 0; i < qcells.size(); ++i) CHECK(d.cell_at(i) == qcells[i]);
  for (Cell c : qcells) CHECK(d.hook_size(c) == hook_number(q, c));
}

TEST_CASE("exact corner distribution") {
  const auto one = exact_corner_distribution(Partition({1}));
  CHECK(one.size() == 1);
  CHECK(one.at({1, 1}) == 1);
  const auto a = exact_corner_distribution(Partition({2, 1}));
  CHECK(a.at({1, 2}) == ExactRational(1, 2));
  const auto b = exact_corner_distribution(Partition({3, 2}));
  CHECK(b.at({1, 3}) == ExactRational(2, 5));
  CHECK(b.at({2, 2}) == ExactRational(3, 5));
  for (int m = 1; m <= 9; ++m) {
    for (const auto& p : partitions_of(m)) {
      ExactRational sum = 0;
      for (const auto& [c, q] : exact_corner_distribution(p)) sum += q;
      CHECK(sum == 1);
    }
  }
}

TEST_CASE("hook walk traces are valid and corners match the exact law") {
  RandomStream rng(2024, 0);
  CHECK(hook_walk(Partition({1}), rng) == Cell{1, 1});
  CHECK_THROWS_AS(hook_walk(Partition(), rng), std::invalid_argument);
  for (const auto& shape : {Partition({2, 1}), Partition({3, 2}), staircase(4), Partition({5, 3, 3, 1})}) {
    for (int k = 0; k < 200; ++k) CHECK(is_valid_hook_walk(shape, hook_walk_trace(shape, rng)));
    const auto exact = exact_corner_distribution(shape);
    std::map<Cell, std::int64_t> freq;
    const int draws = 100000;
    for (int k = 0; k < draws; ++k) ++freq[hook_walk(shape, rng)];
    for (const auto& [c, q] : exact) {
      CHECK(std::abs(stats::binomial_z(freq[c], draws, to_double(q))) < 4.0);
    }
    CHECK(freq.size() == exact.size());
  }
}

TEST_CASE("invalid traces are rejected") {
  const Partition p({2, 1});
  CHECK_FALSE(is_valid_hook_walk(p, HookWalkTrace{{{1, 1}}}));
  CHECK_FALSE(is_valid_hook_walk(p, HookWalkTrace{{{1, 1}, {2, 2}}}));
  CHECK(is_valid_hook_walk(p, HookWalkTrace{{{1, 1}, {2, 1}}}));
  CHECK_FALSE(is_valid_hook_walk(p, HookWalkTrace{{{1, 2}, {1, 2}}}));
}

TEST_CASE("sample_syt is uniform") {
  RandomStream rng(5, 0);
  CHECK(sample_syt(Partition({1, 1}), rng).rows() == std::vector<std::vector<int>>{{1}, {2}});
  for (int k = 0; k < 500; ++k) CHECK(is_standard_young_tableau(sample_syt(Partition({6, 4, 4, 2, 1}), rng).rows()));
  CHECK(uniformity_p(square(2), 100000, 11) > 1e-3);
  CHECK(uniformity_p(staircase(4), 100000, 12) > 1e-3);
  CHECK(uniformity_p(Partition({3, 2, 1, 1}), 100000, 13) > 1e-3);
}

TEST_CASE("sampling is deterministic") {
  RandomStream a(99, 3), b(99, 3);
  CHECK(sample_syt(staircase(30), a) == sample_syt(staircase(30), b));
  RandomStream c(99, 3), d(99, 3);
  CHECK(sample_usn(40, c) == sample_usn(40, d));
}

TEST_CASE("coupled sampler") {
  RandomStream rng(77, 0);
  {
    const Partition lam({3, 2, 1});
    for (int k = 0; k < 100; ++k) {
      const auto pair = coupled_sample(lam, lam, rng);
      CHECK(pair.inner == pair.outer);
    }
  }
  CHECK_THROWS_AS(coupled_sample(Partition({2, 2}), Partition({3, 1}), rng), std::invalid_argument);

  const Partition lam({2, 1});
  const Partition mu({3, 2});
  const int slack = static_cast<int>(mu.size() - lam.size());
  const auto inner_all = enumerate_syt(lam);
  const auto outer_all = enumerate_syt(mu);
  std::map<StandardYoungTableau, std::int64_t> fi, fo;
  int violations = 0;
  const int draws = 10000;
  for (int k = 0; k < draws; ++k) {
    const auto pair = coupled_sample(lam, mu, rng);
    for (Cell c : lam.cells()) violations += pair.outer.at(c) > pair.inner.at(c) + slack;
    ++fi[pair.inner];
    ++fo[pair.outer];
  }
  CHECK(violations == 0);
  std::vector<std::int64_t> ci, co;
  for (const auto& t : inner_all) ci.push_back(fi[t]);
  for (const auto& t : outer_all) co.push_back(fo[t]);
  CHECK(stats::chi_square(ci, std::vector<double>(ci.size(), 1.0 / static_cast<double>(ci.size()))).p_value > 1e-3);
  CHECK(stats::chi_square(co, std::vector<double>(co.size(), 1.0 / static_cast<double>(co.size()))).p_value > 1e-3);

  // A larger nested pair: bound only.
  const Partition big_in({5, 3, 2});
  const Partition big_out({6, 5, 3, 2, 1});
  const int big_slack = static_cast<int>(big_out.size() - big_in.size());
  for (int k = 0; k < 2000; ++k) {
    const auto pair = coupled_sample(big_in, big_out, rng);
    CHECK(is_standard_young_tableau(pair.inner.rows()));
    CHECK(is_standard_young_tableau(pair.outer.rows()));
    for (Cell c : big_in.cells()) REQUIRE(pair.outer.at(c) <= pair.inner.at(c) + big_slack);
  }
}

TEST_CASE("uniform sorting networks") {
  RandomStream rng(3, 0);
  CHECK(sample_usn(1, rng).length() == 0);
  for (int k = 0; k < 20; ++k) CHECK(sample_usn(2, rng).swaps()[0] == 1);
  {
    std::int64_t first = 0;
    const int draws = 100000;
    for (int k = 0; k < draws; ++k) first += sample_usn(3, rng).swaps()[0] == 1;
    CHECK(std::abs(stats::binomial_z(first, draws, 0.5)) < 4.0);
  }
  {
    const auto all = enumerate_networks(4);
    REQUIRE(all.size() == 16);
    std::map<SortingNetwork, std::size_t> index;
    for (std::size_t i = 0; i < all.size(); ++i) index.emplace(all[i], i);
    std::vector<std::int64_t> counts(16, 0);
    for (int k = 0; k < 160000; ++k) ++counts[index.at(sample_usn(4, rng))];
    CHECK(stats::chi_square(counts, std::vector<double>(16, 1.0 / 16)).p_value > 1e-3);
  }
  for (int k = 0; k < 5; ++k) CHECK(is_sorting_network(60, sample_usn(60, rng).swaps()));
}
