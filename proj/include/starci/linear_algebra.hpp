#ifndef STARCI_LINEAR_ALGEBRA_HPP
#define STARCI_LINEAR_ALGEBRA_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "starci/scalar.hpp"

namespace starci {

using Row = std::vector<Scalar>;

/// Reduced row-echelon form over the rows' field; zero rows are dropped.
std::vector<Row> row_reduce(std::vector<Row> rows);

std::size_t matrix_rank(std::vector<Row> rows);

/// Whether v lies in the row space of a matrix already in reduced row-echelon form.
bool in_row_space(std::span<const Row> rref, std::span<const Scalar> v);

/// All r-element subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t r);

std::size_t binomial(std::size_t n, std::size_t r);

}  // namespace starci

#endif  // STARCI_LINEAR_ALGEBRA_HPP
