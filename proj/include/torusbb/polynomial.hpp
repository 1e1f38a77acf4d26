#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "torusbb/errors.hpp"
#include "torusbb/integer.hpp"

namespace torusbb {

struct Variable {
  std::string name;
  IntVector weight;

  friend bool operator==(const Variable&, const Variable&) = default;
};

/// Polynomial ring variables with their Z^n torus weights.
class VariableWeighting {
public:
  VariableWeighting() = default;
  /// Throws InvalidInput on a bad or duplicate name, DimensionMismatch on a
  /// weight of the wrong length.
  VariableWeighting(std::size_t torus_rank, std::vector<Variable> variables);

  std::size_t torus_rank() const { return torus_rank_; }
  std::size_t size() const { return variables_.size(); }
  const std::vector<Variable>& variables() const { return variables_; }
  const Variable& operator[](std::size_t i) const { return variables_[i]; }
  std::optional<std::size_t> index_of(const std::string& name) const;

  /// Subset of variables (order kept) for which keep[i] is true.
  VariableWeighting restricted(const std::vector<bool>& keep) const;

  friend bool operator==(const VariableWeighting&, const VariableWeighting&) = default;

private:
  std::size_t torus_rank_ = 0;
  std::vector<Variable> variables_;
};

bool is_identifier(const std::string& s);

using Exponent = std::uint32_t;
inline constexpr Exponent kMaxExponent = 0x7fffffff;

struct Monomial {
  std::vector<Exponent> exponents;

  std::uint64_t total_degree() const;
  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// sum_i exponents[i] * weight(x_i). Throws DimensionMismatch.
IntVector weight_of(const Monomial& m, const VariableWeighting& w);

struct Term {
  Rational coefficient;
  Monomial monomial;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Polynomial with rational coefficients in canonical form: like terms merged,
/// zero terms removed, terms in descending lexicographic order of exponents.
class GradedPolynomial {
public:
  GradedPolynomial() = default;
  explicit GradedPolynomial(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Scaled so that the leading coefficient is 1. Zero stays zero.
  GradedPolynomial monic() const;

  /// Sets the variables with kill[i] true to zero and drops them from every
  /// exponent vector.
  GradedPolynomial substitute_zero(const std::vector<bool>& kill) const;

  friend bool operator==(const GradedPolynomial&, const GradedPolynomial&) = default;
  friend bool operator<(const GradedPolynomial& a, const GradedPolynomial& b);

private:
  std::vector<Term> terms_;
};

/// Raised when two terms of one polynomial carry different weights.
class InhomogeneousError : public Error {
public:
  InhomogeneousError(IntVector first, IntVector second);
  const IntVector& first() const { return first_; }
  const IntVector& second() const { return second_; }

private:
  IntVector first_;
  IntVector second_;
};

/// Common weight of all terms; the zero vector for constants and for 0.
IntVector check_homogeneous(const GradedPolynomial& p, const VariableWeighting& w);

}  // namespace torusbb
