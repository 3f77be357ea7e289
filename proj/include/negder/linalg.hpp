#ifndef NEGDER_LINALG_HPP
#define NEGDER_LINALG_HPP

#include <cstddef>
#include <vector>

#include "negder/rational.hpp"

namespace negder {

using QVector = std::vector<Rational>;
using QMatrix = std::vector<QVector>;  // row major

// Reduced row echelon form over the rationals.
struct RowEchelon {
  QMatrix rows;                    // non-zero rows only, leading ones
  std::vector<std::size_t> lead;   // pivot column per row, strictly increasing
  std::size_t ncols = 0;

  std::size_t rank() const { return rows.size(); }

  // Reduces v against the echelon rows in place; returns true if it vanished,
  // i.e. v was in the row span.
  bool reduce(QVector& v) const;

  // Inserts a new vector, keeping echelon form; returns false if it was
  // already in the span.
  bool insert(QVector v);
};

RowEchelon row_echelon(QMatrix m, std::size_t ncols);

// Basis of the right kernel {x : m x = 0}, as rows of length ncols.
QMatrix nullspace(const QMatrix& m, std::size_t ncols);

}  // namespace negder

#endif
