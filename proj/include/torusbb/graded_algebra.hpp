#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "torusbb/lattice_monoid.hpp"
#include "torusbb/polynomial.hpp"

namespace torusbb {

/// A Z^n-graded algebra k[x_1..x_k] / (relations).
///
/// Relations are stored canonically: nonzero, homogeneous, monic, sorted and
/// without duplicates. Two presentations of the same data therefore compare
/// equal with operator==.
class GradedPresentation {
public:
  GradedPresentation() = default;
  /// Throws InhomogeneousError if a relation is not homogeneous and
  /// DimensionMismatch if a relation was built over a different ring.
  GradedPresentation(VariableWeighting weighting, std::vector<GradedPolynomial> relations);

  const VariableWeighting& weighting() const { return weighting_; }
  const std::vector<GradedPolynomial>& relations() const { return relations_; }

  friend bool operator==(const GradedPresentation&, const GradedPresentation&) = default;

private:
  VariableWeighting weighting_;
  std::vector<GradedPolynomial> relations_;
};

/// Names of the variables whose weight is not in the (saturated) monoid.
std::vector<std::string> outsider_variables(const GradedPresentation& p, const AffineMonoid& s);

/// Presentation of the BB-plus scheme: outsider variables set to zero.
/// Throws MonoidHasUnits or DimensionMismatch.
GradedPresentation bb_plus(const GradedPresentation& p, const AffineMonoid& s);

/// Presentation of the fixed locus: variables of nonzero weight set to zero.
GradedPresentation fixed_locus(const GradedPresentation& p);

/// Whether the BB-plus scheme is open around the origin, i.e. whether the
/// cotangent space there has no outsider weights. Requires relations with
/// every term of degree >= 2 (NotMinimalPresentation otherwise).
bool open_immersion_check(const GradedPresentation& p, const AffineMonoid& s);

/// k[x_1..x_k] / (monomials).
class MonomialQuotient {
public:
  MonomialQuotient() = default;
  /// Non-minimal generators are discarded; the rest are sorted.
  MonomialQuotient(VariableWeighting weighting, std::vector<Monomial> generators);

  const VariableWeighting& weighting() const { return weighting_; }
  const std::vector<Monomial>& minimal_generators() const { return generators_; }
  bool is_standard(const Monomial& m) const;

private:
  VariableWeighting weighting_;
  std::vector<Monomial> generators_;
};

/// dim (A / J^(n+1))_λ for n = 0..max_level, J the ideal of nonzero-weight
/// variables. Rows absent from the map have dimension zero.
struct TruncationTable {
  KempfVector kempf;
  /// Kempf degree of each variable, <w, weight(x_i)>.
  std::vector<Integer> variable_degrees;
  std::uint64_t max_level = 0;
  std::map<std::pair<std::uint64_t, IntVector>, std::uint64_t> rows;

  std::uint64_t dimension(std::uint64_t level, const IntVector& weight) const;
};

/// Graded dimensions of A / (M + J^(n+1)) at a single level n, keyed by weight.
/// Requires has_zero(S) and every variable weight in S (WeightOutsideMonoid);
/// weight-zero variables must be nilpotent modulo M (InfiniteComponent).
std::map<IntVector, std::uint64_t> truncate(const MonomialQuotient& q, const AffineMonoid& s,
                                            std::uint64_t level);

TruncationTable truncation_table(const MonomialQuotient& q, const AffineMonoid& s,
                                 std::uint64_t max_level);

/// dim A_λ, counted directly by Kempf degree without truncating.
std::uint64_t graded_dimension(const MonomialQuotient& q, const AffineMonoid& s,
                               const IntVector& weight);

struct StabilizationReport {
  IntVector weight;
  /// <kempf, λ>, clamped at zero.
  std::uint64_t stable_level = 0;
  /// dim(A_n)_λ for n = 0..n_max.
  std::vector<std::uint64_t> dimensions;
  std::uint64_t limit_dimension = 0;
  bool monotone = true;
  /// Constant from stable_level on within the computed range.
  bool stable = true;
  /// Stable value equals dim A_λ (vacuous when n_max < stable_level).
  bool matches_limit = true;
};

StabilizationReport stabilization_check(const MonomialQuotient& q, const AffineMonoid& s,
                                        const IntVector& weight, std::uint64_t max_level);

struct AlgebraizationEntry {
  IntVector weight;
  std::uint64_t stable_level = 0;
  std::uint64_t truncated_dimension = 0;
  std::uint64_t limit_dimension = 0;
};

/// One entry per weight of Kempf degree <= bound with a nonzero component,
/// sorted by weight.
std::vector<AlgebraizationEntry> algebraize_report(const MonomialQuotient& q,
                                                   const AffineMonoid& s, std::uint64_t bound);
bool algebraize_check(const MonomialQuotient& q, const AffineMonoid& s, std::uint64_t bound);

}  // namespace torusbb
