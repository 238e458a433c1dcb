#pragma once

#include "sortnet/core_perm.hpp"
#include "sortnet/tableaux.hpp"

#include <vector>

namespace sortnet {

/// Cells c_0 = position of the maximum, ..., c_d = (1,1); each step moves to
/// whichever of the cells above and to the left holds the larger entry
/// (cells off the diagram count as -infinity).
std::vector<Cell> sliding_sequence(const StandardYoungTableau& t);

/// The Schützenberger operator: slide the maximum out along the sliding
/// sequence, put 1 at (1,1) and add 1 to everything else.
StandardYoungTableau promote(const StandardYoungTableau& t);

/// EG(T)_k = j_max(Phi^{N-k}(T)). Runs in O(N n) using entries stored
/// relative to the number of applications made so far. Throws
/// std::invalid_argument unless T has staircase shape (the empty tableau is
/// the staircase of order 1).
SortingNetwork eg_forward(const StandardYoungTableau& t);

/// The last `letters` letters (EG(T)_{N-letters+1}, ..., EG(T)_N), at a cost of
/// about letters/N of the full map; `letters` is capped at N.
std::vector<int> eg_forward_suffix(const StandardYoungTableau& t, std::size_t letters);

/// Same map, computed by literally iterating promote(). O(N^2); an
/// independent route used to check eg_forward.
SortingNetwork eg_forward_reference(const StandardYoungTableau& t);

/// Edelman–Greene insertion of u into a (non-standard) Young tableau. The
/// result has exactly one more cell.
YoungTableau insert(const YoungTableau& t, int u);

struct EgInverseResult {
  StandardYoungTableau recording;
  /// R_k = length of the insertion tableau's first row after k letters, k = 1..N.
  std::vector<int> first_row_lengths;
};

/// Recording tableau of the insertion shapes for s_1, ..., s_N.
EgInverseResult eg_inverse(const SortingNetwork& w);

/// sigma_k^{-1}(i) - i <= R_k for every particle i and time k.
bool check_first_row_bound(const SortingNetwork& w);

/// R_k(T) = number of first-row entries <= k, for k = 0..|T|.
std::vector<int> first_row_counts(const StandardYoungTableau& t);

}  // namespace sortnet
