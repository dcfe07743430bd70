#pragma once

#include <cstddef>
#include <vector>

#include "lvlp/rational.hpp"

namespace lvlp {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Row echelon form by fraction-free (Bareiss) elimination. Each row is first
/// scaled to integers, which leaves the solution set unchanged.
struct EchelonForm {
  std::vector<std::vector<Integer>> rows;  ///< the first `pivots.size()` rows are nonzero
  std::vector<std::size_t> pivots;         ///< pivot column of each nonzero row
  std::size_t columns = 0;
};

EchelonForm bareiss_echelon(const RationalMatrix& a);

std::size_t rank(const RationalMatrix& a);

/// Unique solution of the square system A x = b; SingularSystemError otherwise.
std::vector<Rational> solve_exact(const RationalMatrix& a, const std::vector<Rational>& b);

/// Spanning vector of a one-dimensional null space. The first nonzero entry
/// is normalized to 1. RankDeficiencyError when the null space is larger
/// (or trivial).
std::vector<Rational> null_vector(const RationalMatrix& a);

}  // namespace lvlp
