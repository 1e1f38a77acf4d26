#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace torusbb::hilb {

/// Young diagram; parts weakly decreasing and positive. Row b (0-based) holds
/// the monomials x^a y^b with a < parts[b].
class Partition {
public:
  Partition() = default;
  /// Throws InvalidArgument unless the parts are weakly decreasing and positive.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  Partition transpose() const;
  /// Boxes in row b and in column a respectively (0 past the edge).
  int row_length(int b) const;
  int column_length(int a) const;

  friend auto operator<=>(const Partition&, const Partition&) = default;

private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// All partitions of d in reverse lexicographic order. d = 0 gives the empty
/// partition; negative d throws InvalidArgument.
std::vector<Partition> partitions(int d);

using Exponents2 = std::array<int, 2>;

/// Monomial ideal of k[x, y] with finite colength.
struct MonomialIdealPlane {
  Partition partition;
  /// Staircase corners (a, b) for x^a y^b, a increasing and b decreasing.
  std::vector<Exponents2> minimal_generators;
};

MonomialIdealPlane ideal_from_partition(const Partition& p);

using Weight2 = std::array<std::int64_t, 2>;

/// Finite multiset of Z^2 weights.
class BigradedCharacter {
public:
  void add(const Weight2& w, std::uint64_t multiplicity = 1);
  const std::map<Weight2, std::uint64_t>& entries() const { return entries_; }
  std::uint64_t total() const;
  BigradedCharacter swapped() const;

  friend bool operator==(const BigradedCharacter&, const BigradedCharacter&) = default;

private:
  std::map<Weight2, std::uint64_t> entries_;
};

/// Nonzero weight vector in Z^2 (a one-parameter subgroup of the 2-torus).
class WeightVector2 {
public:
  /// Throws InvalidArgument for (0, 0).
  WeightVector2(std::int64_t w1, std::int64_t w2);
  const Weight2& value() const { return w_; }
  std::int64_t pair(const Weight2& d) const { return w_[0] * d[0] + w_[1] * d[1]; }

private:
  Weight2 w_;
};

// Tangent weights at [M] follow the convention that a homomorphism sending a
// generator m to the standard monomial n has weight deg(m) - deg(n). With this
// convention the single point ideal (x, y) has character {(1,0), (0,1)}.

/// Character of Hom(M, S/M) by exact linear algebra over the syzygies of
/// consecutive generators.
BigradedCharacter tangent_character_linalg(const MonomialIdealPlane& m);

/// Character from arms and legs: (a+1, -l) and (-a, l+1) for each box.
BigradedCharacter tangent_character_armleg(const MonomialIdealPlane& m);

/// Whether no weight of the character pairs to zero with w.
bool is_generic(const BigradedCharacter& c, const WeightVector2& w);

/// Number of tangent weights (with multiplicity) pairing >= 0 with w.
std::uint64_t cell_dimension(const BigradedCharacter& c, const WeightVector2& w);
std::uint64_t cell_dimension(const MonomialIdealPlane& m, const WeightVector2& w);

/// Weights pairing >= 0 with both w1 and w2.
std::uint64_t intersection_dimension(const BigradedCharacter& c, const WeightVector2& w1,
                                     const WeightVector2& w2);
std::uint64_t intersection_dimension(const MonomialIdealPlane& m, const WeightVector2& w1,
                                     const WeightVector2& w2);

/// (1, d + 1): no tangent weight at a colength-d ideal pairs to zero with it.
WeightVector2 default_generic_weight(int d);

/// Histogram dimension -> number of cells, ascending. Throws NonGenericWeight.
std::vector<std::pair<std::uint64_t, std::uint64_t>> poincare_polynomial(int d,
                                                                         const WeightVector2& w);

}  // namespace torusbb::hilb
