#pragma once

#include <optional>
#include <vector>

#include "coeff/field.hpp"

namespace qloop::coeff {

/// Dense matrix over the field, row-major.
using Matrix = std::vector<std::vector<Field>>;

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> row_reduce(Matrix& a);

std::size_t rank(Matrix a);

/// Basis of {x : a x = 0}; `cols` is the number of columns (a may be empty).
std::vector<std::vector<Field>> nullspace(Matrix a, std::size_t cols);

/// Some solution of a x = b, or nullopt when the system is inconsistent.
/// Free variables are set to zero.
std::optional<std::vector<Field>> solve(Matrix a, const std::vector<Field>& b);

}  // namespace qloop::coeff
