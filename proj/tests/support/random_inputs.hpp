#pragma once

#include <random>
#include <string>
#include <vector>

#include "torusbb/graded_algebra.hpp"
#include "torusbb/lattice_monoid.hpp"

namespace testing_support {

using torusbb::IntMatrix;
using torusbb::IntVector;

inline long uniform(std::mt19937& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline IntVector random_vector(std::mt19937& rng, std::size_t rank, long spread) {
  IntVector v;
  for (std::size_t i = 0; i < rank; ++i) v.emplace_back(uniform(rng, -spread, spread));
  return v;
}

inline IntMatrix random_generators(std::mt19937& rng, std::size_t rank, std::size_t count, long spread) {
  IntMatrix gens;
  for (std::size_t i = 0; i < count; ++i) gens.push_back(random_vector(rng, rank, spread));
  return gens;
}

/// Random monoid of rank 1..max_rank with 1..5 generators in [-3, 3].
inline torusbb::AffineMonoid random_monoid(std::mt19937& rng, std::size_t max_rank = 3) {
  const std::size_t rank = uniform(rng, 1, static_cast<long>(max_rank));
  const std::size_t count = uniform(rng, 1, 5);
  return torusbb::cone_from_generators(random_generators(rng, rank, count, 3), rank);
}

/// Random monoid with zero and at least one nonzero generator.
inline torusbb::AffineMonoid random_monoid_with_zero(std::mt19937& rng, std::size_t rank) {
  for (;;) {
    const std::size_t count = uniform(rng, 1, 4);
    auto gens = random_generators(rng, rank, count, 3);
    bool nonzero = false;
    for (const auto& g : gens) nonzero = nonzero || !torusbb::is_zero(g);
    if (!nonzero) continue;
    auto s = torusbb::cone_from_generators(gens, rank);
    if (torusbb::has_zero(s)) return s;
  }
}

inline torusbb::VariableWeighting random_weighting(std::mt19937& rng, std::size_t rank,
                                                   std::size_t count, long spread) {
  std::vector<torusbb::Variable> vars;
  for (std::size_t i = 0; i < count; ++i)
    vars.push_back({"x" + std::to_string(i), random_vector(rng, rank, spread)});
  return torusbb::VariableWeighting(rank, std::move(vars));
}

/// A random element of the monoid: nonnegative combination of generators.
inline IntVector random_element(std::mt19937& rng, const torusbb::AffineMonoid& s, long max_coeff) {
  IntVector v(s.rank(), 0);
  for (const auto& g : s.generators()) {
    const long c = uniform(rng, 0, max_coeff);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += c * g[i];
  }
  return v;
}

/// Random homogeneous polynomial: a random monomial plus other monomials of
/// the same weight found by scanning small exponents.
inline torusbb::GradedPolynomial random_homogeneous(std::mt19937& rng,
                                                    const torusbb::VariableWeighting& w,
                                                    unsigned max_exp) {
  const std::size_t k = w.size();
  torusbb::Monomial seed{std::vector<torusbb::Exponent>(k)};
  for (auto& e : seed.exponents) e = static_cast<torusbb::Exponent>(uniform(rng, 0, max_exp));
  const IntVector target = torusbb::weight_of(seed, w);
  std::vector<torusbb::Term> terms{{torusbb::Rational(uniform(rng, 1, 5)), seed}};
  torusbb::Monomial m{std::vector<torusbb::Exponent>(k, 0)};
  for (;;) {
    if (m != seed && torusbb::weight_of(m, w) == target && uniform(rng, 0, 2) == 0)
      terms.push_back({torusbb::Rational(uniform(rng, -4, 4)), m});
    std::size_t i = 0;
    while (i < k && m.exponents[i] == max_exp) m.exponents[i++] = 0;
    if (i == k) break;
    ++m.exponents[i];
  }
  return torusbb::GradedPolynomial(std::move(terms));
}

inline torusbb::GradedPresentation random_presentation(std::mt19937& rng, std::size_t rank) {
  const std::size_t k = uniform(rng, 1, 4);
  auto w = random_weighting(rng, rank, k, 2);
  std::vector<torusbb::GradedPolynomial> relations;
  const long count = uniform(rng, 0, 3);
  for (long i = 0; i < count; ++i) relations.push_back(random_homogeneous(rng, w, 2));
  return torusbb::GradedPresentation(std::move(w), std::move(relations));
}

/// Monomial quotient in 1..4 variables whose weights are nonzero elements of S.
inline torusbb::MonomialQuotient random_positive_quotient(std::mt19937& rng,
                                                          const torusbb::AffineMonoid& s) {
  const std::size_t k = uniform(rng, 1, 4);
  std::vector<torusbb::Variable> vars;
  for (std::size_t i = 0; i < k; ++i) {
    IntVector wt;
    do wt = random_element(rng, s, 2);
    while (torusbb::is_zero(wt));
    vars.push_back({"x" + std::to_string(i), wt});
  }
  torusbb::VariableWeighting w(s.rank(), std::move(vars));
  std::vector<torusbb::Monomial> gens;
  const long count = uniform(rng, 0, 3);
  for (long i = 0; i < count; ++i) {
    torusbb::Monomial m{std::vector<torusbb::Exponent>(k)};
    for (auto& e : m.exponents) e = static_cast<torusbb::Exponent>(uniform(rng, 0, 3));
    if (m.total_degree() > 0) gens.push_back(m);
  }
  return torusbb::MonomialQuotient(std::move(w), std::move(gens));
}

}  // namespace testing_support
