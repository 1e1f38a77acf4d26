#pragma once

#include <cstddef>
#include <vector>

#include "torusbb/integer.hpp"

namespace torusbb {

class AffineMonoid;
class LatticeProjection;
LatticeProjection reduce_to_zero(const AffineMonoid& s);

/// A finitely generated submonoid S of Z^n together with the inequality
/// description of its rational cone and the lattice of units.
///
/// Membership is always taken in the saturation (cone ∩ Z^n). When the
/// generators do not span Q^n the implicit equations appear among the facet
/// normals as opposite pairs ±u.
class AffineMonoid {
public:
  /// Builds the cone by double description over exact integers.
  /// Throws EmptyGenerators or DimensionMismatch.
  static AffineMonoid from_generators(IntMatrix generators, std::size_t rank);

  std::size_t rank() const { return rank_; }
  const IntMatrix& generators() const { return generators_; }
  /// Primitive, sorted lexicographically; every generator pairs >= 0 with each.
  const IntMatrix& facet_normals() const { return facet_normals_; }
  /// Hermite-normal basis of the unit lattice S ∩ (-S) (saturated).
  const IntMatrix& lineality_basis() const { return lineality_basis_; }

  friend bool operator==(const AffineMonoid&, const AffineMonoid&) = default;

private:
  friend class LatticeProjection;
  friend LatticeProjection reduce_to_zero(const AffineMonoid&);

  // Accepts an empty generator list (the trivial monoid); used for images
  // of groups under reduction.
  static AffineMonoid build(IntMatrix generators, std::size_t rank);

  std::size_t rank_ = 0;
  IntMatrix generators_;
  IntMatrix facet_normals_;
  IntMatrix lineality_basis_;
};

/// One-parameter subgroup pairing to at least 1 with every nonzero generator.
struct KempfVector {
  IntVector w;

  Integer degree(const IntVector& m) const { return dot(w, m); }
  friend bool operator==(const KempfVector&, const KempfVector&) = default;
};

/// Quotient map Z^n -> Z^n / L by the unit lattice of a monoid.
class LatticeProjection {
public:
  std::size_t source_rank() const { return source_rank_; }
  std::size_t target_rank() const { return target_rank_; }
  /// target_rank rows of length source_rank, in Hermite normal form.
  const IntMatrix& matrix() const { return matrix_; }
  const AffineMonoid& image_monoid() const { return image_monoid_; }

  IntVector apply(const IntVector& m) const;

private:
  friend LatticeProjection reduce_to_zero(const AffineMonoid&);

  std::size_t source_rank_ = 0;
  std::size_t target_rank_ = 0;
  IntMatrix matrix_;
  AffineMonoid image_monoid_;
};

AffineMonoid cone_from_generators(const IntMatrix& generators, std::size_t rank);

/// Membership of m in the saturation of S. Throws DimensionMismatch.
bool contains(const AffineMonoid& s, const IntVector& m);

IntMatrix units(const AffineMonoid& s);
bool has_zero(const AffineMonoid& s);

/// Minimal max-norm solution of <w, g> >= 1 over the nonzero generators,
/// lexicographically smallest among ties. Throws MonoidHasUnits.
KempfVector kempf_vector(const AffineMonoid& s);

/// Projection killing the unit lattice; identity when S already has a zero.
LatticeProjection reduce_to_zero(const AffineMonoid& s);

}  // namespace torusbb
