#include "lvlp/exact_linalg.hpp"

#include <string>

#include "lvlp/error.hpp"

namespace lvlp {

EchelonForm bareiss_echelon(const RationalMatrix& a) {
  EchelonForm e;
  e.columns = a.empty() ? 0 : a.front().size();
  e.rows.reserve(a.size());
  for (const auto& row : a) {
    if (row.size() != e.columns) throw std::invalid_argument("ragged matrix");
    Integer den = common_denominator(row);
    std::vector<Integer> r(row.size());
    for (std::size_t j = 0; j < row.size(); ++j) r[j] = row[j].get_num() * (den / row[j].get_den());
    e.rows.push_back(std::move(r));
  }

  auto& m = e.rows;
  const std::size_t nrows = m.size();
  Integer prev = 1;
  std::size_t row = 0;
  for (std::size_t col = 0; col < e.columns && row < nrows; ++col) {
    std::size_t piv = row;
    while (piv < nrows && m[piv][col] == 0) ++piv;
    if (piv == nrows) continue;
    std::swap(m[row], m[piv]);
    for (std::size_t i = row + 1; i < nrows; ++i) {
      for (std::size_t j = col + 1; j < e.columns; ++j) {
        Integer t = m[row][col] * m[i][j] - m[i][col] * m[row][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][col] = 0;
    }
    prev = m[row][col];
    e.pivots.push_back(col);
    ++row;
  }
  return e;
}

std::size_t rank(const RationalMatrix& a) { return bareiss_echelon(a).pivots.size(); }

namespace {

// Back substitution for the variables at pivot columns, given values of the rest.
void back_substitute(const EchelonForm& e, std::vector<Rational>& x, std::size_t value_columns) {
  for (std::size_t k = e.pivots.size(); k-- > 0;) {
    const auto& r = e.rows[k];
    const std::size_t p = e.pivots[k];
    Rational acc = value_columns < e.columns ? Rational(r[value_columns]) : Rational(0);
    for (std::size_t j = p + 1; j < value_columns; ++j)
      if (r[j] != 0) acc -= Rational(r[j]) * x[j];
    x[p] = acc / Rational(r[p]);
  }
}

}  // namespace

std::vector<Rational> solve_exact(const RationalMatrix& a, const std::vector<Rational>& b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw std::invalid_argument("right-hand side size mismatch");
  RationalMatrix aug = a;
  for (std::size_t i = 0; i < n; ++i) {
    if (aug[i].size() != n) throw std::invalid_argument("solve_exact needs a square matrix");
    aug[i].push_back(b[i]);
  }
  EchelonForm e = bareiss_echelon(aug);
  if (e.pivots.size() != n || (n > 0 && e.pivots.back() != n - 1))
    throw SingularSystemError("singular " + std::to_string(n) + "x" + std::to_string(n) + " system");
  std::vector<Rational> x(n);
  back_substitute(e, x, n);
  return x;
}

std::vector<Rational> null_vector(const RationalMatrix& a) {
  EchelonForm e = bareiss_echelon(a);
  const std::size_t nullity = e.columns - e.pivots.size();
  if (nullity != 1)
    throw RankDeficiencyError("null space has dimension " + std::to_string(nullity) + ", expected 1");
  std::vector<bool> is_pivot(e.columns, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::size_t free_col = 0;
  while (is_pivot[free_col]) ++free_col;

  std::vector<Rational> x(e.columns);
  x[free_col] = 1;
  // Homogeneous back substitution: pivot variables from the free one.
  for (std::size_t k = e.pivots.size(); k-- > 0;) {
    const auto& r = e.rows[k];
    const std::size_t p = e.pivots[k];
    Rational acc = 0;
    for (std::size_t j = p + 1; j < e.columns; ++j)
      if (r[j] != 0) acc -= Rational(r[j]) * x[j];
    x[p] = acc / Rational(r[p]);
  }
  for (const auto& v : x)
    if (v != 0) {
      Rational scale = 1 / v;
      for (auto& w : x) w *= scale;
      break;
    }
  return x;
}

}  // namespace lvlp
