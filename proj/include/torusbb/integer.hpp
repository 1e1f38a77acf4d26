#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace torusbb {

using Integer = mpz_class;
using Rational = mpq_class;

/// A point of the character lattice Z^n.
using IntVector = std::vector<Integer>;
using IntMatrix = std::vector<IntVector>;

IntVector make_vector(std::initializer_list<long> entries);

Integer dot(const IntVector& a, const IntVector& b);
bool is_zero(const IntVector& v);
IntVector negated(const IntVector& v);

/// Content (nonnegative gcd of the entries); zero for the zero vector.
Integer content(const IntVector& v);

/// Divides out the content. The zero vector is returned unchanged.
IntVector primitive(IntVector v);

/// Primitive and with the first nonzero entry positive.
IntVector primitive_signed(IntVector v);

/// Clears denominators of a rational vector and returns the primitive
/// integer vector pointing in the same direction.
IntVector clear_denominators(const std::vector<Rational>& v);

std::string to_string(const IntVector& v);

}  // namespace torusbb
