#include "starci/linear_algebra.hpp"

#include <algorithm>

#include "starci/errors.hpp"

namespace starci {

std::vector<Row> row_reduce(std::vector<Row> rows) {
  if (rows.empty()) return rows;
  const std::size_t cols = rows.front().size();
  for (const Row& r : rows) {
    if (r.size() != cols) throw UsageError("row_reduce: ragged matrix");
  }
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols && pivot_row < rows.size(); ++col) {
    auto pivot = std::find_if(rows.begin() + pivot_row, rows.end(),
                              [&](const Row& r) { return !r[col].is_zero(); });
    if (pivot == rows.end()) continue;
    std::swap(*pivot, rows[pivot_row]);
    Row& p = rows[pivot_row];
    const Scalar inv = p[col].inverse();
    for (Scalar& s : p) s *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == pivot_row || rows[r][col].is_zero()) continue;
      const Scalar factor = rows[r][col];
      for (std::size_t c = col; c < cols; ++c) rows[r][c] -= factor * p[c];
    }
    ++pivot_row;
  }
  rows.resize(pivot_row);
  return rows;
}

std::size_t matrix_rank(std::vector<Row> rows) { return row_reduce(std::move(rows)).size(); }

bool in_row_space(std::span<const Row> rref, std::span<const Scalar> v) {
  Row residual(v.begin(), v.end());
  for (const Row& r : rref) {
    auto pivot = std::find_if(r.begin(), r.end(), [](const Scalar& s) { return !s.is_zero(); });
    const std::size_t col = static_cast<std::size_t>(pivot - r.begin());
    if (residual[col].is_zero()) continue;
    const Scalar factor = residual[col];
    for (std::size_t c = col; c < residual.size(); ++c) residual[c] -= factor * r[c];
  }
  return std::all_of(residual.begin(), residual.end(), [](const Scalar& s) { return s.is_zero(); });
}

std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t r) {
  std::vector<std::vector<std::size_t>> out;
  if (r > n) return out;
  std::vector<std::size_t> current(r);
  for (std::size_t i = 0; i < r; ++i) current[i] = i;
  for (;;) {
    out.push_back(current);
    std::size_t i = r;
    while (i > 0 && current[i - 1] == n - r + (i - 1)) --i;
    if (i == 0) break;
    ++current[i - 1];
    for (std::size_t k = i; k < r; ++k) current[k] = current[k - 1] + 1;
  }
  return out;
}

std::size_t binomial(std::size_t n, std::size_t r) {
  if (r > n) return 0;
  std::size_t result = 1;
  for (std::size_t i = 1; i <= r; ++i) result = result * (n - r + i) / i;
  return result;
}

}  // namespace starci
