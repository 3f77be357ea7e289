#include "negder/linalg.hpp"

#include <algorithm>

namespace negder {

bool RowEchelon::reduce(QVector& v) const {
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const Rational& c = v[lead[r]];
    if (c != 0) {
      Rational f = c;  // rows have leading one
      for (std::size_t j = lead[r]; j < ncols; ++j) v[j] -= f * rows[r][j];
    }
  }
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

bool RowEchelon::insert(QVector v) {
  if (reduce(v)) return false;
  std::size_t piv = 0;
  while (v[piv] == 0) ++piv;
  Rational inv = 1 / v[piv];
  for (std::size_t j = piv; j < ncols; ++j) v[j] *= inv;
  // Back-substitute into existing rows to keep the form fully reduced.
  for (std::size_t r = 0; r < rows.size(); ++r) {
    Rational f = rows[r][piv];
    if (f != 0)
      for (std::size_t j = piv; j < ncols; ++j) rows[r][j] -= f * v[j];
  }
  std::size_t at = 0;
  while (at < lead.size() && lead[at] < piv) ++at;
  rows.insert(rows.begin() + static_cast<std::ptrdiff_t>(at), std::move(v));
  lead.insert(lead.begin() + static_cast<std::ptrdiff_t>(at), piv);
  return true;
}

RowEchelon row_echelon(QMatrix m, std::size_t ncols) {
  RowEchelon e;
  e.ncols = ncols;
  for (QVector& row : m) e.insert(std::move(row));
  return e;
}

QMatrix nullspace(const QMatrix& m, std::size_t ncols) {
  RowEchelon e = row_echelon(m, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (std::size_t p : e.lead) is_pivot[p] = true;
  QMatrix basis;
  for (std::size_t free_col = 0; free_col < ncols; ++free_col) {
    if (is_pivot[free_col]) continue;
    QVector v(ncols, Rational(0));
    v[free_col] = 1;
    for (std::size_t r = 0; r < e.rows.size(); ++r)
      if (e.lead[r] < free_col) v[e.lead[r]] = -e.rows[r][free_col];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace negder
