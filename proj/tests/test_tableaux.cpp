#include "oracles.hpp"
#include "sortnet/tableaux.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace sortnet;

TEST_CASE("partition validation and queries") {
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
  const Partition p({4, 4, 1});
  CHECK(p.size() == 9);
  CHECK(p.column_length(1) == 3);
  CHECK(p.column_length(2) == 2);
  CHECK(p.column_length(5) == 0);
  CHECK(p.corners() == std::vector<Cell>{{2, 4}, {3, 1}});
  CHECK(p.addable_cells() == std::vector<Cell>{{1, 5}, {3, 2}, {4, 1}});
  CHECK(p.without({2, 4}) == Partition({4, 3, 1}));
  CHECK_THROWS_AS(p.without({1, 4}), std::invalid_argument);
  CHECK(p.with({4, 1}) == Partition({4, 4, 1, 1}));
  CHECK(p.cells().size() == 9);
  CHECK(Partition().empty());
}

TEST_CASE("conjugate") {
  CHECK(conjugate(Partition({4, 4, 1})) == Partition({3, 2, 2, 2}));
  CHECK(conjugate(Partition({1})) == Partition({1}));
  for (int m = 0; m <= 10; ++m) {
    for (const auto& p : partitions_of(m)) CHECK(conjugate(conjugate(p)) == p);
  }
}

TEST_CASE("hook numbers") {
  CHECK(hook_number(Partition({4, 4, 1}), {1, 1}) == 6);
  CHECK(hook_number(square(2), {1, 1}) == 3);
  for (Cell c : Partition({5, 3, 3, 1}).corners()) CHECK(hook_number(Partition({5, 3, 3, 1}), c) == 1);
  CHECK_THROWS_AS(hook_number(square(2), {3, 1}), std::out_of_range);
}

TEST_CASE("dimension against brute force") {
  CHECK(dimension(Partition({4, 4, 1})) == 84);
  CHECK(oracle::count_syt_by_permutations({4, 4, 1}) == 84);
  CHECK(dimension(square(2)) == 2);
  CHECK(dimension(staircase(5)) == 768);
  CHECK(dimension(staircase(5)) == factorial(10) / (27 * 25 * 7));
  for (int m = 1; m <= 8; ++m) {
    for (const auto& p : partitions_of(m)) {
      std::vector<int> parts(p.parts().begin(), p.parts().end());
      CHECK(dimension(p) == oracle::count_syt_by_permutations(parts));
    }
  }
}

TEST_CASE("dimension identities") {
  for (int m = 1; m <= 12; ++m) {
    for (const auto& p : partitions_of(m)) {
      CHECK(dimension(p) == dimension(conjugate(p)));
      BigCount branch = 0;
      for (Cell c : p.corners()) branch += dimension(p.without(c));
      CHECK(branch == dimension(p));
    }
  }
  CHECK(dimension(Partition()) == 1);
}

TEST_CASE("partitions of m") {
  const std::size_t expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int m = 0; m <= 10; ++m) CHECK(partitions_of(m).size() == expected[m]);
  CHECK(partitions_of(4).front() == Partition({4}));
}

TEST_CASE("named shapes") {
  CHECK(staircase(4) == Partition({3, 2, 1}));
  CHECK(staircase(1).empty());
  CHECK(square(1) == Partition({1}));
  for (int n = 1; n <= 10; ++n) CHECK(staircase(n).size() == static_cast<std::size_t>(n * (n - 1) / 2));
  CHECK(is_contained(staircase(3), staircase(4)));
  CHECK_FALSE(is_contained(Partition({2, 2}), Partition({3, 1})));
  CHECK(is_contained(square(3), square(3)));
}

TEST_CASE("tableau validation") {
  CHECK(is_standard_young_tableau({{1, 2}, {3}}));
  CHECK_FALSE(is_standard_young_tableau({{1, 4}, {2, 3}}));
  CHECK_FALSE(is_standard_young_tableau({{2, 1}}));
  CHECK_FALSE(is_standard_young_tableau({{1}, {2, 3}}));
  CHECK_THROWS_AS(StandardYoungTableau({{1, 3}}), std::invalid_argument);
  const StandardYoungTableau t({{1, 2, 4}, {3, 5}});
  CHECK(t.max_cell() == Cell{2, 2});
  CHECK(t.shape() == Partition({3, 2}));
  CHECK_NOTHROW(YoungTableau({{1, 2}, {2, 4}}));
  CHECK_THROWS_AS(YoungTableau({{1, 2}, {1}}), std::invalid_argument);
}

TEST_CASE("recording tableau") {
  const std::vector<Partition> one = {Partition(), Partition({1})};
  CHECK(recording_tableau(one).rows() == std::vector<std::vector<int>>{{1}});
  const std::vector<Partition> chain = {Partition(), Partition({1}), Partition({1, 1}), Partition({2, 1})};
  CHECK(recording_tableau(chain).rows() == std::vector<std::vector<int>>{{1, 3}, {2}});
  const std::vector<Partition> bad = {Partition(), Partition({2})};
  CHECK_THROWS_AS(recording_tableau(bad), std::invalid_argument);
}

TEST_CASE("enumerate syt") {
  const auto all = enumerate_syt(staircase(4));
  CHECK(all.size() == 16);
  CHECK(std::is_sorted(all.begin(), all.end()));
  for (const auto& t : all) CHECK(is_standard_young_tableau(t.rows()));
  for (const auto& p : partitions_of(7)) CHECK(enumerate_syt(p).size() == dimension(p));
}
