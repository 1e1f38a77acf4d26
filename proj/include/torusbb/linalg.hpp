#pragma once

#include <cstddef>
#include <vector>

#include "torusbb/integer.hpp"

// Exact linear algebra over Z and Q used by the cone and lattice code.
namespace torusbb::linalg {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Rank over Q. Rows may have any common length.
std::size_t rank(const IntMatrix& rows);
std::size_t rank(RationalMatrix rows);

/// Reduced row echelon form with zero rows removed. Canonical for the row space.
RationalMatrix reduced_row_echelon(RationalMatrix rows);

/// Lattice basis of {x in Z^cols : A x = 0}. The returned basis spans a
/// saturated sublattice; it is not normalized.
IntMatrix integer_kernel(const IntMatrix& a, std::size_t cols);

/// Row Hermite normal form of an integer matrix: echelon, positive pivots,
/// entries above each pivot reduced into [0, pivot). Zero rows are dropped.
/// Unique for a given row lattice.
IntMatrix hermite_normal_form(IntMatrix rows);

/// Orthogonal projection of v onto the complement of span(rows), scaled to a
/// primitive integer vector.
IntVector project_out(const IntVector& v, const IntMatrix& rows);

}  // namespace torusbb::linalg
